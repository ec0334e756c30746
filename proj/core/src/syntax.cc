#include "atm/syntax.h"

#include <string>
#include <utility>

namespace atm {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

MissingConstant::MissingConstant(std::uint32_t index)
    : Error("no sentence for liar constant L" + std::to_string(index)),
      index_(index) {}

// ---------------------------------------------------------------------------
// Term

struct Term::Node {
  TermKind kind;
  std::uint32_t index;
  Term left;   // binary left, or predicate argument
  Term right;  // binary right
  std::size_t hash;
  std::size_t size;
};

Term Term::Make(TermKind kind, std::uint32_t index, Term left, Term right) {
  std::size_t h = mix(static_cast<std::size_t>(kind) + 1, index);
  std::size_t size = 1;
  if (left.node_) {
    h = mix(h, left.hash());
    size += left.size();
  }
  if (right.node_) {
    h = mix(h, right.hash());
    size += right.size();
  }
  return Term(std::make_shared<const Node>(
      Node{kind, index, std::move(left), std::move(right), h, size}));
}

Term Term::Bot() {
  static const Term bot = Make(TermKind::kBot, 0, Term(), Term());
  return bot;
}
Term Term::Liar(std::uint32_t index) {
  return Make(TermKind::kLiar, index, Term(), Term());
}
Term Term::Conj(Term left, Term right) {
  return Make(TermKind::kConj, 0, std::move(left), std::move(right));
}
Term Term::Disj(Term left, Term right) {
  return Make(TermKind::kDisj, 0, std::move(left), std::move(right));
}
Term Term::Impl(Term left, Term right) {
  return Make(TermKind::kImpl, 0, std::move(left), std::move(right));
}
Term Term::A(Term arg) { return Make(TermKind::kA, 0, std::move(arg), Term()); }
Term Term::T(Term arg) { return Make(TermKind::kT, 0, std::move(arg), Term()); }
Term Term::M(Term arg) { return Make(TermKind::kM, 0, std::move(arg), Term()); }
Term Term::Not(Term arg) { return Impl(std::move(arg), Bot()); }
Term Term::Iff(Term left, Term right) {
  return Conj(Impl(left, right), Impl(right, left));
}

TermKind Term::kind() const { return node_->kind; }
std::uint32_t Term::liar_index() const { return node_->index; }
const Term& Term::left() const { return node_->left; }
const Term& Term::right() const { return node_->right; }
const Term& Term::arg() const { return node_->left; }
bool Term::is_binary() const {
  switch (kind()) {
    case TermKind::kConj:
    case TermKind::kDisj:
    case TermKind::kImpl:
      return true;
    default:
      return false;
  }
}
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::size() const { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind ||
      a.node_->index != b.node_->index || a.node_->size != b.node_->size) {
    return false;
  }
  return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (auto c = a.node_->index <=> b.node_->index; c != 0) return c;
  if (auto c = a.node_->left <=> b.node_->left; c != 0) return c;
  return a.node_->right <=> b.node_->right;
}

// ---------------------------------------------------------------------------
// Sentence

struct Sentence::Node {
  SentenceKind kind;
  Term arg;
  Sentence left;
  Sentence right;
  std::size_t hash;
  std::size_t size;
};

Sentence Sentence::Make(SentenceKind kind, Term arg, Sentence left,
                        Sentence right) {
  std::size_t h = mix(static_cast<std::size_t>(kind) + 101, 0);
  std::size_t size = 1;
  if (arg.node_) {
    h = mix(h, arg.hash());
    size += arg.size();
  }
  if (left.node_) {
    h = mix(h, left.hash());
    size += left.size();
  }
  if (right.node_) {
    h = mix(h, right.hash());
    size += right.size();
  }
  return Sentence(std::make_shared<const Node>(Node{
      kind, std::move(arg), std::move(left), std::move(right), h, size}));
}

Sentence Sentence::Falsum() {
  static const Sentence bot =
      Make(SentenceKind::kFalsum, Term(), Sentence(), Sentence());
  return bot;
}
Sentence Sentence::A(Term arg) {
  return Make(SentenceKind::kA, std::move(arg), Sentence(), Sentence());
}
Sentence Sentence::T(Term arg) {
  return Make(SentenceKind::kT, std::move(arg), Sentence(), Sentence());
}
Sentence Sentence::M(Term arg) {
  return Make(SentenceKind::kM, std::move(arg), Sentence(), Sentence());
}
Sentence Sentence::Conj(Sentence left, Sentence right) {
  return Make(SentenceKind::kConj, Term(), std::move(left), std::move(right));
}
Sentence Sentence::Disj(Sentence left, Sentence right) {
  return Make(SentenceKind::kDisj, Term(), std::move(left), std::move(right));
}
Sentence Sentence::Impl(Sentence left, Sentence right) {
  return Make(SentenceKind::kImpl, Term(), std::move(left), std::move(right));
}
Sentence Sentence::Not(Sentence arg) { return Impl(std::move(arg), Falsum()); }
Sentence Sentence::Iff(Sentence left, Sentence right) {
  return Conj(Impl(left, right), Impl(right, left));
}

SentenceKind Sentence::kind() const { return node_->kind; }
bool Sentence::is_atom() const {
  switch (kind()) {
    case SentenceKind::kA:
    case SentenceKind::kT:
    case SentenceKind::kM:
      return true;
    default:
      return false;
  }
}
bool Sentence::is_binary() const {
  switch (kind()) {
    case SentenceKind::kConj:
    case SentenceKind::kDisj:
    case SentenceKind::kImpl:
      return true;
    default:
      return false;
  }
}
const Term& Sentence::arg() const { return node_->arg; }
const Sentence& Sentence::left() const { return node_->left; }
const Sentence& Sentence::right() const { return node_->right; }
std::size_t Sentence::hash() const { return node_->hash; }
std::size_t Sentence::size() const { return node_->size; }

bool operator==(const Sentence& a, const Sentence& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind ||
      a.node_->size != b.node_->size) {
    return false;
  }
  return a.node_->arg == b.node_->arg && a.node_->left == b.node_->left &&
         a.node_->right == b.node_->right;
}

std::strong_ordering operator<=>(const Sentence& a, const Sentence& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (auto c = a.node_->arg <=> b.node_->arg; c != 0) return c;
  if (auto c = a.node_->left <=> b.node_->left; c != 0) return c;
  return a.node_->right <=> b.node_->right;
}

// ---------------------------------------------------------------------------
// ConstantTable

ConstantTable ConstantTable::Default() {
  ConstantTable table;
  table.set(1, Sentence::Not(Sentence::T(Term::Liar(1))));
  table.set(2, Sentence::Not(Sentence::A(Term::Liar(2))));
  table.set_fallback(Sentence::Falsum());
  return table;
}

void ConstantTable::set(std::uint32_t index, Sentence theta) {
  entries_.insert_or_assign(index, std::move(theta));
}

void ConstantTable::set_fallback(std::optional<Sentence> fallback) {
  fallback_ = std::move(fallback);
}

const Sentence& ConstantTable::lookup(std::uint32_t index) const {
  if (auto it = entries_.find(index); it != entries_.end()) return it->second;
  if (fallback_) return *fallback_;
  throw MissingConstant(index);
}

bool ConstantTable::contains(std::uint32_t index) const {
  return fallback_.has_value() || entries_.count(index) > 0;
}

// ---------------------------------------------------------------------------
// Quotation and evaluation

Term dot(const Sentence& phi) {
  switch (phi.kind()) {
    case SentenceKind::kFalsum:
      return Term::Bot();
    case SentenceKind::kA:
      return Term::A(phi.arg());
    case SentenceKind::kT:
      return Term::T(phi.arg());
    case SentenceKind::kM:
      return Term::M(phi.arg());
    case SentenceKind::kConj:
      return Term::Conj(dot(phi.left()), dot(phi.right()));
    case SentenceKind::kDisj:
      return Term::Disj(dot(phi.left()), dot(phi.right()));
    case SentenceKind::kImpl:
      return Term::Impl(dot(phi.left()), dot(phi.right()));
  }
  throw Error("dot: corrupt sentence");
}

Sentence eval(const Term& t, const ConstantTable& table) {
  switch (t.kind()) {
    case TermKind::kBot:
      return Sentence::Falsum();
    case TermKind::kLiar:
      return table.lookup(t.liar_index());
    case TermKind::kA:
      return Sentence::A(t.arg());
    case TermKind::kT:
      return Sentence::T(t.arg());
    case TermKind::kM:
      return Sentence::M(t.arg());
    case TermKind::kConj:
      return Sentence::Conj(eval(t.left(), table), eval(t.right(), table));
    case TermKind::kDisj:
      return Sentence::Disj(eval(t.left(), table), eval(t.right(), table));
    case TermKind::kImpl:
      return Sentence::Impl(eval(t.left(), table), eval(t.right(), table));
  }
  throw Error("eval: corrupt term");
}

bool is_dot_image(const Term& t) {
  switch (t.kind()) {
    case TermKind::kLiar:
      return false;
    case TermKind::kConj:
    case TermKind::kDisj:
    case TermKind::kImpl:
      return is_dot_image(t.left()) && is_dot_image(t.right());
    default:
      return true;
  }
}

Sentence undot(const Term& t) {
  if (t.kind() == TermKind::kLiar) {
    throw Error("undot: liar constant L" + std::to_string(t.liar_index()) +
                " is not a quotation");
  }
  // With no table, eval fails exactly on the liar constants.
  try {
    return eval(t, ConstantTable());
  } catch (const MissingConstant& e) {
    throw Error("undot: liar constant L" + std::to_string(e.index()) +
                " is not a quotation");
  }
}

}  // namespace atm
