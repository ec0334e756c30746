#include "oracles.h"

#include <algorithm>
#include <utility>

namespace atm::testing {
namespace {

using TermsBySize = std::vector<std::vector<Term>>;

void extend_terms(TermsBySize& by_size, std::size_t n,
                  std::span<const Term> atoms) {
  while (by_size.size() <= n) {
    std::size_t k = by_size.size();
    std::vector<Term> out;
    if (k == 1) {
      out.push_back(Term::Bot());
      out.insert(out.end(), atoms.begin(), atoms.end());
    } else if (k >= 2) {
      for (const Term& a : by_size[k - 1]) {
        out.push_back(Term::A(a));
        out.push_back(Term::T(a));
        out.push_back(Term::M(a));
      }
      for (std::size_t l = 1; l + 1 < k; ++l) {
        for (const Term& a : by_size[l]) {
          for (const Term& b : by_size[k - 1 - l]) {
            out.push_back(Term::Conj(a, b));
            out.push_back(Term::Disj(a, b));
            out.push_back(Term::Impl(a, b));
          }
        }
      }
    }
    by_size.push_back(std::move(out));
  }
}

}  // namespace

std::vector<Sentence> enumerate_sentences(std::size_t max_size,
                                          std::span<const Term> atoms) {
  TermsBySize terms;
  if (max_size >= 2) extend_terms(terms, max_size - 1, atoms);
  std::vector<std::vector<Sentence>> by_size(1);
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<Sentence> out;
    if (k == 1) {
      out.push_back(Sentence::Falsum());
    } else {
      for (const Term& t : terms[k - 1]) {
        out.push_back(Sentence::A(t));
        out.push_back(Sentence::T(t));
        out.push_back(Sentence::M(t));
      }
      for (std::size_t l = 1; l + 1 < k; ++l) {
        for (const Sentence& a : by_size[l]) {
          for (const Sentence& b : by_size[k - 1 - l]) {
            out.push_back(Sentence::Conj(a, b));
            out.push_back(Sentence::Disj(a, b));
            out.push_back(Sentence::Impl(a, b));
          }
        }
      }
    }
    by_size.push_back(std::move(out));
  }
  std::vector<Sentence> all;
  for (auto& bucket : by_size) {
    all.insert(all.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  return all;
}

std::size_t FixpointOracle::intern(const Sentence& phi) {
  if (auto it = index_.find(phi); it != index_.end()) return it->second;
  std::size_t id = nodes_.size();
  index_.emplace(phi, id);
  nodes_.push_back(Node{phi, {}, std::nullopt});
  std::vector<Sentence> parts;
  switch (phi.kind()) {
    case SentenceKind::kConj:
    case SentenceKind::kDisj:
    case SentenceKind::kImpl:
      parts = {phi.left(), phi.right()};
      break;
    case SentenceKind::kT:
      parts = {eval(phi.arg(), *table_)};
      break;
    default:
      break;
  }
  std::vector<std::size_t> deps;
  for (const Sentence& p : parts) deps.push_back(intern(p));
  nodes_[id].deps = std::move(deps);
  return id;
}

void FixpointOracle::add(const Sentence& phi) { intern(phi); }

void FixpointOracle::solve() {
  for (bool changed = true; changed;) {
    changed = false;
    for (Node& node : nodes_) {
      if (node.value) continue;
      std::optional<std::uint32_t> v;
      switch (node.phi.kind()) {
        case SentenceKind::kFalsum:
        case SentenceKind::kA:
        case SentenceKind::kM:
          v = 0;
          break;
        case SentenceKind::kT:
          if (auto inner = nodes_[node.deps[0]].value) v = *inner + 1;
          break;
        default: {
          auto l = nodes_[node.deps[0]].value;
          auto r = nodes_[node.deps[1]].value;
          if (l && r) v = std::max(*l, *r);
        }
      }
      if (v) {
        node.value = v;
        changed = true;
      }
    }
  }
}

std::optional<std::uint32_t> FixpointOracle::nesting(
    const Sentence& phi) const {
  return nodes_.at(index_.at(phi)).value;
}

namespace {

bool contains(const std::vector<Prop>& gamma, const Prop& p) {
  return std::find(gamma.begin(), gamma.end(), p) != gamma.end();
}

void push(std::vector<Prop>& gamma, Prop p) {
  if (!contains(gamma, p)) gamma.push_back(std::move(p));
}

std::vector<Prop> without(const std::vector<Prop>& gamma, std::size_t k) {
  std::vector<Prop> out;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i != k) out.push_back(gamma[i]);
  }
  return out;
}

bool prove(std::vector<Prop> gamma, const Prop& goal) {
  if (goal.kind() == PropKind::kConj) {
    return prove(gamma, goal.left()) && prove(gamma, goal.right());
  }
  if (goal.kind() == PropKind::kImpl) {
    push(gamma, goal.left());
    return prove(std::move(gamma), goal.right());
  }
  if (contains(gamma, goal)) return true;

  for (std::size_t k = 0; k < gamma.size(); ++k) {
    const Prop f = gamma[k];
    switch (f.kind()) {
      case PropKind::kBot:
        return true;
      case PropKind::kConj: {
        auto rest = without(gamma, k);
        push(rest, f.left());
        push(rest, f.right());
        return prove(std::move(rest), goal);
      }
      case PropKind::kDisj: {
        auto a = without(gamma, k);
        auto b = a;
        push(a, f.left());
        push(b, f.right());
        return prove(std::move(a), goal) && prove(std::move(b), goal);
      }
      case PropKind::kImpl: {
        const Prop& a = f.left();
        const Prop& c = f.right();
        if (a.kind() == PropKind::kVar && contains(gamma, a)) {
          auto rest = without(gamma, k);
          push(rest, c);
          return prove(std::move(rest), goal);
        }
        if (a.kind() == PropKind::kBot) {
          return prove(without(gamma, k), goal);
        }
        if (a.kind() == PropKind::kConj) {
          auto rest = without(gamma, k);
          push(rest, Prop::Impl(a.left(), Prop::Impl(a.right(), c)));
          return prove(std::move(rest), goal);
        }
        if (a.kind() == PropKind::kDisj) {
          auto rest = without(gamma, k);
          push(rest, Prop::Impl(a.left(), c));
          push(rest, Prop::Impl(a.right(), c));
          return prove(std::move(rest), goal);
        }
        break;
      }
      default:
        break;
    }
  }

  if (goal.kind() == PropKind::kDisj) {
    if (prove(gamma, goal.left()) || prove(gamma, goal.right())) return true;
  }
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    const Prop& f = gamma[k];
    if (f.kind() != PropKind::kImpl || f.left().kind() != PropKind::kImpl) {
      continue;
    }
    const Prop& a = f.left().left();
    const Prop& b = f.left().right();
    const Prop& c = f.right();
    auto first = without(gamma, k);
    push(first, Prop::Impl(b, c));
    push(first, a);
    if (!prove(std::move(first), b)) continue;
    auto second = without(gamma, k);
    push(second, c);
    if (prove(std::move(second), goal)) return true;
  }
  return false;
}

}  // namespace

bool intuitionistically_valid(const Prop& goal) { return prove({}, goal); }

Term random_term(std::mt19937_64& rng, std::size_t budget,
                 std::span<const Term> atoms) {
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  if (budget <= 1 || pick(5) == 0) {
    std::size_t k = pick(atoms.size() + 1);
    return k == atoms.size() ? Term::Bot() : atoms[k];
  }
  switch (pick(6)) {
    case 0:
      return Term::A(random_term(rng, budget - 1, atoms));
    case 1:
      return Term::T(random_term(rng, budget - 1, atoms));
    case 2:
      return Term::M(random_term(rng, budget - 1, atoms));
    default: {
      std::size_t l = 1 + pick(budget - 1);
      Term a = random_term(rng, l, atoms);
      Term b = random_term(rng, budget - l, atoms);
      switch (pick(3)) {
        case 0:
          return Term::Conj(a, b);
        case 1:
          return Term::Disj(a, b);
        default:
          return Term::Impl(a, b);
      }
    }
  }
}

Sentence random_sentence(std::mt19937_64& rng, std::size_t budget,
                         std::span<const Term> atoms) {
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  if (budget <= 1) return Sentence::Falsum();
  switch (pick(budget <= 3 ? 4 : 7)) {
    case 0:
      return Sentence::Falsum();
    case 1:
      return Sentence::A(random_term(rng, budget - 1, atoms));
    case 2:
      return Sentence::T(random_term(rng, budget - 1, atoms));
    case 3:
      return Sentence::M(random_term(rng, budget - 1, atoms));
    default: {
      std::size_t l = 1 + pick(budget - 1);
      Sentence a = random_sentence(rng, l, atoms);
      Sentence b = random_sentence(rng, budget - l, atoms);
      switch (pick(3)) {
        case 0:
          return Sentence::Conj(a, b);
        case 1:
          return Sentence::Disj(a, b);
        default:
          return Sentence::Impl(a, b);
      }
    }
  }
}

}  // namespace atm::testing
