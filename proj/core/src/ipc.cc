#include "atm/ipc.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "atm/text.h"

namespace atm {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Prop

struct Prop::Node {
  PropKind kind;
  std::uint32_t var;
  Prop left;
  Prop right;
  std::size_t hash;
  std::uint32_t var_bound;
};

Prop Prop::Make(PropKind kind, std::uint32_t var, Prop left, Prop right) {
  std::size_t h = mix(static_cast<std::size_t>(kind) + 211, var);
  std::uint32_t bound = kind == PropKind::kVar ? var + 1 : 0;
  if (left.node_) {
    h = mix(h, left.hash());
    bound = std::max(bound, left.var_bound());
  }
  if (right.node_) {
    h = mix(h, right.hash());
    bound = std::max(bound, right.var_bound());
  }
  return Prop(std::make_shared<const Node>(
      Node{kind, var, std::move(left), std::move(right), h, bound}));
}

Prop Prop::Var(std::uint32_t index) {
  return Make(PropKind::kVar, index, Prop(), Prop());
}
Prop Prop::Bot() {
  static const Prop bot = Make(PropKind::kBot, 0, Prop(), Prop());
  return bot;
}
Prop Prop::Conj(Prop left, Prop right) {
  return Make(PropKind::kConj, 0, std::move(left), std::move(right));
}
Prop Prop::Disj(Prop left, Prop right) {
  return Make(PropKind::kDisj, 0, std::move(left), std::move(right));
}
Prop Prop::Impl(Prop left, Prop right) {
  return Make(PropKind::kImpl, 0, std::move(left), std::move(right));
}

PropKind Prop::kind() const { return node_->kind; }
std::uint32_t Prop::var() const { return node_->var; }
const Prop& Prop::left() const { return node_->left; }
const Prop& Prop::right() const { return node_->right; }
bool Prop::is_binary() const {
  return kind() == PropKind::kConj || kind() == PropKind::kDisj ||
         kind() == PropKind::kImpl;
}
std::size_t Prop::hash() const { return node_->hash; }
std::uint32_t Prop::var_bound() const { return node_->var_bound; }

bool operator==(const Prop& a, const Prop& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind ||
      a.node_->var != b.node_->var) {
    return false;
  }
  return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

// ---------------------------------------------------------------------------
// Names, parsing, printing

std::string VarNames::name(std::uint32_t index) const {
  if (index < names_.size()) return names_[index];
  static const char* const kDefault[] = {"p", "q", "r"};
  if (index < 3) return kDefault[index];
  return "p" + std::to_string(index + 1);
}

std::uint32_t VarNames::intern(const std::string& name) {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it != names_.end()) return static_cast<std::uint32_t>(it - names_.begin());
  names_.push_back(name);
  return static_cast<std::uint32_t>(names_.size() - 1);
}

namespace {

class PropParser {
 public:
  PropParser(std::string_view text, std::size_t pos, VarNames& names)
      : text_(text), pos_(pos), names_(names) {}

  std::size_t pos() const { return pos_; }

  Prop formula() {
    Prop left = implication();
    if (accept("<->")) return Prop::Iff(std::move(left), implication());
    return left;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
  }

 private:
  Prop implication() {
    Prop left = disjunction();
    if (accept("->")) return Prop::Impl(std::move(left), implication());
    return left;
  }
  Prop disjunction() {
    Prop left = conjunction();
    while (accept("|")) left = Prop::Disj(std::move(left), conjunction());
    return left;
  }
  Prop conjunction() {
    Prop left = unary();
    while (accept("&")) left = Prop::Conj(std::move(left), unary());
    return left;
  }
  Prop unary() {
    if (accept("~")) return Prop::Not(unary());
    if (accept("(")) {
      Prop inner = formula();
      if (!accept(")")) throw ParseError("expected ')'", pos_);
      return inner;
    }
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    std::string word(text_.substr(start, pos_ - start));
    if (word == "bot") return Prop::Bot();
    if (word.empty() || !std::islower(static_cast<unsigned char>(word[0]))) {
      pos_ = start;
      throw ParseError("expected a formula", pos_);
    }
    return Prop::Var(names_.intern(word));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view op) {
    skip_ws();
    if (text_.substr(pos_, op.size()) != op) return false;
    pos_ += op.size();
    return true;
  }

  std::string_view text_;
  std::size_t pos_;
  VarNames& names_;
};

int precedence(const Prop& p) {
  switch (p.kind()) {
    case PropKind::kImpl:
      return 1;
    case PropKind::kDisj:
      return 2;
    case PropKind::kConj:
      return 3;
    default:
      return 4;
  }
}

void print(std::ostream& os, const Prop& p, const VarNames& names) {
  switch (p.kind()) {
    case PropKind::kVar:
      os << names.name(p.var());
      return;
    case PropKind::kBot:
      os << "bot";
      return;
    default:
      break;
  }
  int prec = precedence(p);
  bool right_assoc = p.kind() == PropKind::kImpl;
  int lp = precedence(p.left());
  int rp = precedence(p.right());
  bool lparen = lp < prec || (right_assoc && lp == prec);
  bool rparen = rp < prec || (!right_assoc && rp == prec);
  const char* op = p.kind() == PropKind::kImpl   ? "->"
                   : p.kind() == PropKind::kDisj ? "|"
                                                 : "&";
  if (lparen) os << '(';
  print(os, p.left(), names);
  if (lparen) os << ')';
  os << ' ' << op << ' ';
  if (rparen) os << '(';
  print(os, p.right(), names);
  if (rparen) os << ')';
}

}  // namespace

Prop parse_prop(std::string_view text, VarNames& names) {
  PropParser parser(text, 0, names);
  Prop p = parser.formula();
  parser.expect_end();
  return p;
}

Prop parse_prop_prefix(std::string_view text, std::size_t& pos,
                       VarNames& names) {
  PropParser parser(text, pos, names);
  Prop p = parser.formula();
  pos = parser.pos();
  return p;
}

std::string to_string(const Prop& p, const VarNames& names) {
  std::ostringstream os;
  print(os, p, names);
  return os.str();
}

// ---------------------------------------------------------------------------
// Hilbert basis

namespace {

std::vector<Prop> make_schemas() {
  const Prop s = Prop::Var(0), t = Prop::Var(1), u = Prop::Var(2);
  using P = Prop;
  return {
      P::Impl(s, P::Impl(t, s)),
      P::Impl(P::Impl(s, P::Impl(t, u)),
              P::Impl(P::Impl(s, t), P::Impl(s, u))),
      P::Impl(P::Conj(s, t), s),
      P::Impl(P::Conj(s, t), t),
      P::Impl(s, P::Impl(t, P::Conj(s, t))),
      P::Impl(s, P::Disj(s, t)),
      P::Impl(s, P::Disj(t, s)),
      P::Impl(P::Impl(s, t), P::Impl(P::Impl(u, t), P::Impl(P::Disj(s, u), t))),
      P::Impl(P::Bot(), s),
  };
}

template <typename Out, typename Ops>
Out instantiate_with(const Prop& schema, std::span<const Out> args,
                     const Ops& ops) {
  switch (schema.kind()) {
    case PropKind::kVar:
      if (schema.var() >= args.size()) {
        throw Error("instantiate: no argument for variable " +
                    std::to_string(schema.var()));
      }
      return args[schema.var()];
    case PropKind::kBot:
      return ops.bot();
    case PropKind::kConj:
      return ops.conj(instantiate_with(schema.left(), args, ops),
                      instantiate_with(schema.right(), args, ops));
    case PropKind::kDisj:
      return ops.disj(instantiate_with(schema.left(), args, ops),
                      instantiate_with(schema.right(), args, ops));
    case PropKind::kImpl:
      return ops.impl(instantiate_with(schema.left(), args, ops),
                      instantiate_with(schema.right(), args, ops));
  }
  throw Error("instantiate: corrupt formula");
}

template <typename T>
struct FactoryOps {
  T bot() const { return T::Bot(); }
  T conj(T a, T b) const { return T::Conj(std::move(a), std::move(b)); }
  T disj(T a, T b) const { return T::Disj(std::move(a), std::move(b)); }
  T impl(T a, T b) const { return T::Impl(std::move(a), std::move(b)); }
};

struct SentenceOps : FactoryOps<Sentence> {
  Sentence bot() const { return Sentence::Falsum(); }
};

}  // namespace

const Prop& axiom_schema(HilbertAxiom axiom) {
  static const std::vector<Prop> schemas = make_schemas();
  return schemas.at(static_cast<std::size_t>(axiom) - 1);
}

std::size_t axiom_arity(HilbertAxiom axiom) {
  return axiom_schema(axiom).var_bound();
}

std::string to_string(HilbertAxiom axiom) {
  return "A" + std::to_string(static_cast<int>(axiom));
}

std::optional<HilbertAxiom> parse_hilbert_axiom(std::string_view name) {
  if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '9') {
    return static_cast<HilbertAxiom>(name[1] - '0');
  }
  return std::nullopt;
}

Prop instantiate(const Prop& schema, std::span<const Prop> args) {
  return instantiate_with(schema, args, FactoryOps<Prop>());
}

Sentence instantiate(const Prop& schema, std::span<const Sentence> args) {
  return instantiate_with(schema, args, SentenceOps());
}

Term instantiate(const Prop& schema, std::span<const Term> args) {
  return instantiate_with(schema, args, FactoryOps<Term>());
}

// ---------------------------------------------------------------------------
// Proof checking and text format

IpcError::IpcError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<Prop> check_ipc(const IpcProof& proof) {
  std::vector<Prop> proved;
  proved.reserve(proof.lines.size());
  for (std::size_t k = 0; k < proof.lines.size(); ++k) {
    const std::size_t number = k + 1;
    const IpcLine& line = proof.lines[k];
    if (const auto* ax = std::get_if<IpcAxiomLine>(&line)) {
      if (ax->args.size() != axiom_arity(ax->axiom)) {
        throw IpcError(number, to_string(ax->axiom) + " takes " +
                                   std::to_string(axiom_arity(ax->axiom)) +
                                   " arguments");
      }
      proved.push_back(instantiate(axiom_schema(ax->axiom),
                                   std::span<const Prop>(ax->args)));
    } else if (const auto* pr = std::get_if<IpcPremiseLine>(&line)) {
      if (pr->premise == 0 || pr->premise > proof.premises.size()) {
        throw IpcError(number, "no premise " + std::to_string(pr->premise));
      }
      proved.push_back(proof.premises[pr->premise - 1]);
    } else {
      const auto& mp = std::get<IpcMpLine>(line);
      if (mp.minor == 0 || mp.minor >= number || mp.major == 0 ||
          mp.major >= number) {
        throw IpcError(number, "premise lines must precede the line");
      }
      const Prop& minor = proved[mp.minor - 1];
      const Prop& major = proved[mp.major - 1];
      if (major.kind() != PropKind::kImpl || !(major.left() == minor)) {
        throw IpcError(number, "line " + std::to_string(mp.major) +
                                   " is not an implication from line " +
                                   std::to_string(mp.minor));
      }
      proved.push_back(major.right());
    }
  }
  if (proved.empty()) throw IpcError(0, "empty proof");
  if (proof.claim && !(proved.back() == *proof.claim)) {
    throw IpcError(proved.size(),
                   "last line proves " + to_string(proved.back(), proof.vars) +
                       ", not the claim " + to_string(*proof.claim, proof.vars));
  }
  return proved;
}

namespace {

std::string_view trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_number(std::string_view word, std::size_t line) {
  if (word.empty() ||
      word.find_first_not_of("0123456789") != std::string_view::npos) {
    throw IpcError(line, "expected a line number, got '" + std::string(word) +
                             "'");
  }
  return std::stoul(std::string(word));
}

}  // namespace

IpcProof parse_ipc_proof(std::string_view text) {
  IpcProof proof;
  std::optional<std::string> claim_text;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.rfind("name:", 0) == 0) {
        proof.name = std::string(trim(body.substr(5)));
      } else if (body.rfind("vars:", 0) == 0) {
        std::istringstream names{std::string(body.substr(5))};
        std::string name;
        while (names >> name) proof.vars.intern(name);
      } else if (body.rfind("claim:", 0) == 0) {
        claim_text = std::string(trim(body.substr(6)));
      }
      continue;
    }
    const std::size_t number = proof.lines.size() + 1;
    std::size_t dot = line.find('.');
    if (dot == std::string_view::npos ||
        parse_number(trim(line.substr(0, dot)), number) != number) {
      throw IpcError(number, "expected line number " + std::to_string(number));
    }
    std::string rest(trim(line.substr(dot + 1)));
    std::istringstream words(rest);
    std::string op;
    words >> op;
    if (op == "mp") {
      std::string a, b, extra;
      words >> a >> b;
      if (words >> extra) throw IpcError(number, "unexpected '" + extra + "'");
      proof.lines.push_back(
          IpcMpLine{parse_number(a, number), parse_number(b, number)});
    } else if (op == "ax") {
      std::string name;
      words >> name;
      auto axiom = parse_hilbert_axiom(name);
      if (!axiom) throw IpcError(number, "unknown axiom '" + name + "'");
      std::size_t pos = rest.find(name) + name.size();
      std::vector<std::optional<Prop>> args(3);
      while (true) {
        while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
        if (pos >= rest.size()) break;
        std::size_t eq = rest.find('=', pos);
        if (eq == std::string::npos) throw IpcError(number, "expected key=formula");
        std::string key(trim(std::string_view(rest).substr(pos, eq - pos)));
        int slot = key == "s" ? 0 : key == "t" ? 1 : key == "u" ? 2 : -1;
        if (slot < 0) throw IpcError(number, "unknown binding '" + key + "'");
        if (args[slot]) throw IpcError(number, "duplicate binding '" + key + "'");
        pos = eq + 1;
        try {
          args[slot] = parse_prop_prefix(rest, pos, proof.vars);
        } catch (const ParseError& e) {
          throw IpcError(number, e.detail());
        }
      }
      IpcAxiomLine ax{*axiom, {}};
      for (std::size_t i = 0; i < axiom_arity(*axiom); ++i) {
        if (!args[i]) {
          throw IpcError(number, to_string(*axiom) + " needs binding " +
                                     std::string(1, "stu"[i]));
        }
        ax.args.push_back(*args[i]);
      }
      for (std::size_t i = axiom_arity(*axiom); i < 3; ++i) {
        if (args[i]) throw IpcError(number, "too many bindings");
      }
      proof.lines.push_back(std::move(ax));
    } else {
      throw IpcError(number, "unknown rule '" + op + "'");
    }
  }
  if (claim_text) {
    try {
      proof.claim = parse_prop(*claim_text, proof.vars);
    } catch (const ParseError& e) {
      throw IpcError(0, "claim: " + e.detail());
    }
  }
  return proof;
}

std::string to_text(const IpcProof& proof) {
  std::ostringstream os;
  if (!proof.name.empty()) os << "# name: " << proof.name << '\n';
  if (proof.vars.size() > 0) {
    os << "# vars:";
    for (const auto& n : proof.vars.names()) os << ' ' << n;
    os << '\n';
  }
  if (proof.claim) os << "# claim: " << to_string(*proof.claim, proof.vars) << '\n';
  std::size_t number = 0;
  for (const IpcLine& line : proof.lines) {
    os << ++number << ". ";
    if (const auto* ax = std::get_if<IpcAxiomLine>(&line)) {
      os << "ax " << to_string(ax->axiom);
      for (std::size_t i = 0; i < ax->args.size(); ++i) {
        os << ' ' << "stu"[i] << '=' << to_string(ax->args[i], proof.vars);
      }
    } else if (const auto* pr = std::get_if<IpcPremiseLine>(&line)) {
      os << "premise " << pr->premise;
    } else {
      const auto& mp = std::get<IpcMpLine>(line);
      os << "mp " << mp.minor << ' ' << mp.major;
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Derivation

Derivation::Ref Derivation::add(Node node) {
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

Derivation::Ref Derivation::axiom(HilbertAxiom axiom, std::vector<Prop> args) {
  if (args.size() != axiom_arity(axiom)) {
    throw Error("Derivation::axiom: " + to_string(axiom) + " takes " +
                std::to_string(axiom_arity(axiom)) + " arguments");
  }
  Prop formula =
      instantiate(axiom_schema(axiom), std::span<const Prop>(args));
  Node node{Kind::kAxiom, std::move(formula)};
  node.axiom = axiom;
  node.args = std::move(args);
  return add(std::move(node));
}

Derivation::Ref Derivation::premise(Prop formula) {
  premises_.push_back(formula);
  Node node{Kind::kPremise, std::move(formula)};
  node.index = premises_.size();
  return add(std::move(node));
}

Derivation::Ref Derivation::assume(Prop formula) {
  Node node{Kind::kHyp, std::move(formula)};
  node.index = next_hyp_++;
  node.hyps = {node.index};
  return add(std::move(node));
}

Derivation::Ref Derivation::mp(Ref minor, Ref major) {
  const Prop& maj = nodes_.at(major).formula;
  if (maj.kind() != PropKind::kImpl || !(maj.left() == nodes_.at(minor).formula)) {
    throw Error("Derivation::mp: " + to_string(maj) +
                " is not an implication from " +
                to_string(nodes_[minor].formula));
  }
  Node node{Kind::kMp, maj.right()};
  node.minor = minor;
  node.major = major;
  std::set_union(nodes_[minor].hyps.begin(), nodes_[minor].hyps.end(),
                 nodes_[major].hyps.begin(), nodes_[major].hyps.end(),
                 std::back_inserter(node.hyps));
  return add(std::move(node));
}

Derivation::Ref Derivation::identity(const Prop& p) {
  // A1: p -> ((p -> p) -> p); A2 instance; two modus ponens; A1: p -> (p -> p).
  Prop pp = Prop::Impl(p, p);
  Ref a1 = axiom(HilbertAxiom::A1, {p, pp});
  Ref a2 = axiom(HilbertAxiom::A2, {p, pp, p});
  Ref step = mp(a1, a2);
  Ref a1b = axiom(HilbertAxiom::A1, {p, p});
  return mp(a1b, step);
}

Derivation::Ref Derivation::weaken(Ref ref, const Prop& hyp) {
  Ref ax = axiom(HilbertAxiom::A1, {nodes_[ref].formula, hyp});
  return mp(ref, ax);
}

Derivation::Ref Derivation::discharge(Ref hyp, Ref body) {
  if (nodes_.at(hyp).kind != Kind::kHyp) {
    throw Error("Derivation::discharge: not a hypothesis");
  }
  const std::size_t id = nodes_[hyp].index;
  const Prop h = nodes_[hyp].formula;
  std::unordered_map<Ref, Ref> memo;
  std::function<Ref(Ref)> lift = [&](Ref n) -> Ref {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    const auto& hyps = nodes_[n].hyps;
    Ref result;
    if (!std::binary_search(hyps.begin(), hyps.end(), id)) {
      result = weaken(n, h);
    } else if (nodes_[n].kind == Kind::kHyp) {
      result = identity(h);
    } else if (nodes_[nodes_[n].minor].kind == Kind::kHyp &&
               nodes_[nodes_[n].minor].index == id &&
               !std::binary_search(nodes_[nodes_[n].major].hyps.begin(),
                                   nodes_[nodes_[n].major].hyps.end(), id)) {
      // h, h -> psi |- psi: the major premise is already h -> psi.
      result = nodes_[n].major;
    } else {
      // n is modus ponens with the hypothesis somewhere above it.
      Ref minor = nodes_[n].minor, major = nodes_[n].major;
      Prop phi = nodes_[minor].formula;
      Prop psi = nodes_[n].formula;
      Ref h_minor = lift(minor);
      Ref h_major = lift(major);
      Ref a2 = axiom(HilbertAxiom::A2, {h, phi, psi});
      result = mp(h_minor, mp(h_major, a2));
    }
    memo.emplace(n, result);
    return result;
  };
  return lift(body);
}

Derivation::Ref Derivation::conj(Ref l, Ref r) {
  Ref ax = axiom(HilbertAxiom::A5, {formula(l), formula(r)});
  return mp(r, mp(l, ax));
}

Derivation::Ref Derivation::left(Ref c) {
  const Prop& f = formula(c);
  if (f.kind() != PropKind::kConj) throw Error("Derivation::left: not a conjunction");
  return mp(c, axiom(HilbertAxiom::A3, {f.left(), f.right()}));
}

Derivation::Ref Derivation::right(Ref c) {
  const Prop& f = formula(c);
  if (f.kind() != PropKind::kConj) throw Error("Derivation::right: not a conjunction");
  return mp(c, axiom(HilbertAxiom::A4, {f.left(), f.right()}));
}

Derivation::Ref Derivation::chain(Ref ab, Ref bc) {
  const Prop& f = formula(ab);
  if (f.kind() != PropKind::kImpl) throw Error("Derivation::chain: not an implication");
  Ref a = assume(f.left());
  return discharge(a, mp(mp(a, ab), bc));
}

Derivation::Ref Derivation::absurd(Ref bot, Prop target) {
  return mp(bot, axiom(HilbertAxiom::A9, {std::move(target)}));
}

IpcProof Derivation::linearize(Ref goal, VarNames vars) const {
  if (!nodes_.at(goal).hyps.empty()) {
    throw Error("Derivation::linearize: goal depends on open hypotheses");
  }
  IpcProof proof;
  proof.vars = std::move(vars);
  proof.premises = premises_;
  proof.claim = nodes_[goal].formula;

  std::unordered_map<Ref, std::size_t> line_of;
  std::unordered_map<Prop, std::size_t> line_of_formula;
  // Iterative post-order: MP chains can be long.
  std::vector<std::pair<Ref, bool>> stack{{goal, false}};
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if (line_of.count(n)) continue;
    const Node& node = nodes_[n];
    if (auto it = line_of_formula.find(node.formula);
        it != line_of_formula.end()) {
      line_of.emplace(n, it->second);
      continue;
    }
    if (node.kind == Kind::kMp && !expanded) {
      stack.push_back({n, true});
      stack.push_back({node.major, false});
      stack.push_back({node.minor, false});
      continue;
    }
    switch (node.kind) {
      case Kind::kAxiom:
        proof.lines.push_back(IpcAxiomLine{node.axiom, node.args});
        break;
      case Kind::kPremise:
        proof.lines.push_back(IpcPremiseLine{node.index});
        break;
      case Kind::kMp:
        proof.lines.push_back(
            IpcMpLine{line_of.at(node.minor), line_of.at(node.major)});
        break;
      case Kind::kHyp:
        throw Error("Derivation::linearize: open hypothesis");
    }
    line_of.emplace(n, proof.lines.size());
    line_of_formula.emplace(node.formula, proof.lines.size());
  }
  // The goal formula may have been proved earlier in the order; repeat that
  // line so the proof ends with it.
  if (std::size_t at = line_of.at(goal); at != proof.lines.size()) {
    IpcLine again = proof.lines[at - 1];
    proof.lines.push_back(std::move(again));
  }
  return proof;
}

}  // namespace atm
