#include "theorems.h"

#include <functional>
#include <string>
#include <utility>

namespace atm::testing {
namespace {

using Ref = Derivation::Ref;
using H = HilbertAxiom;

const Prop p = Prop::Var(0);
const Prop q = Prop::Var(1);
const Prop r = Prop::Var(2);
const Prop bot = Prop::Bot();

// From a | b, a -> c and b -> c, c.
Ref cases(Derivation& d, Ref disj, Ref ac, Ref bc) {
  const Prop& a = d.formula(disj).left();
  const Prop& b = d.formula(disj).right();
  const Prop& c = d.formula(ac).right();
  Ref ax = d.axiom(H::A8, {a, c, b});
  return d.mp(disj, d.mp(bc, d.mp(ac, ax)));
}

Ref inl(Derivation& d, Ref a, const Prop& b) {
  return d.mp(a, d.axiom(H::A6, {d.formula(a), b}));
}
Ref inr(Derivation& d, const Prop& a, Ref b) {
  return d.mp(b, d.axiom(H::A7, {d.formula(b), a}));
}

IpcProof make(std::string name, std::size_t vars,
              const std::function<Ref(Derivation&)>& body) {
  Derivation d;
  Ref goal = body(d);
  std::vector<std::string> names = {"p", "q", "r"};
  names.resize(vars);
  IpcProof proof = d.linearize(goal, VarNames(names));
  proof.name = std::move(name);
  return proof;
}

}  // namespace

std::vector<IpcProof> ipc_theorem_suite() {
  std::vector<IpcProof> out;
  out.push_back(make("identity", 1, [](Derivation& d) {
    Ref h = d.assume(p);
    return d.discharge(h, h);
  }));
  out.push_back(make("conj-commutes", 2, [](Derivation& d) {
    Ref h = d.assume(Prop::Conj(p, q));
    return d.discharge(h, d.conj(d.right(h), d.left(h)));
  }));
  out.push_back(make("bot-implies-bot", 0, [](Derivation& d) {
    return d.axiom(H::A9, {bot});
  }));
  out.push_back(make("conj-left", 2, [](Derivation& d) {
    return d.axiom(H::A3, {p, q});
  }));
  out.push_back(make("weakening", 2, [](Derivation& d) {
    return d.axiom(H::A1, {p, q});
  }));
  out.push_back(make("disj-intro", 2, [](Derivation& d) {
    Ref h = d.assume(p);
    return d.discharge(h, inl(d, h, q));
  }));
  out.push_back(make("syllogism", 3, [](Derivation& d) {
    Ref pq = d.assume(Prop::Impl(p, q));
    Ref qr = d.assume(Prop::Impl(q, r));
    Ref pr = d.chain(pq, qr);
    return d.discharge(pq, d.discharge(qr, pr));
  }));
  out.push_back(make("double-negation-intro", 1, [](Derivation& d) {
    Ref h = d.assume(p);
    Ref n = d.assume(Prop::Not(p));
    return d.discharge(h, d.discharge(n, d.mp(h, n)));
  }));
  out.push_back(make("triple-negation", 1, [](Derivation& d) {
    Ref nnn = d.assume(Prop::Not(Prop::Not(Prop::Not(p))));
    Ref h = d.assume(p);
    Ref n = d.assume(Prop::Not(p));
    Ref nn = d.discharge(n, d.mp(h, n));
    return d.discharge(nnn, d.discharge(h, d.mp(nn, nnn)));
  }));
  out.push_back(make("disj-commutes", 2, [](Derivation& d) {
    Ref h = d.assume(Prop::Disj(p, q));
    Ref a = d.assume(p);
    Ref b = d.assume(q);
    Ref ac = d.discharge(a, inr(d, q, a));
    Ref bc = d.discharge(b, inl(d, b, p));
    return d.discharge(h, cases(d, h, ac, bc));
  }));
  out.push_back(make("contraposition", 2, [](Derivation& d) {
    Ref pq = d.assume(Prop::Impl(p, q));
    Ref nq = d.assume(Prop::Not(q));
    return d.discharge(pq, d.discharge(nq, d.chain(pq, nq)));
  }));
  out.push_back(make("distribution", 3, [](Derivation& d) {
    Prop pq = Prop::Conj(p, q), pr = Prop::Conj(p, r);
    Ref h = d.assume(Prop::Conj(p, Prop::Disj(q, r)));
    Ref hp = d.left(h);
    Ref a = d.assume(q);
    Ref b = d.assume(r);
    Ref ac = d.discharge(a, inl(d, d.conj(hp, a), pr));
    Ref bc = d.discharge(b, inr(d, pq, d.conj(hp, b)));
    return d.discharge(h, cases(d, d.right(h), ac, bc));
  }));
  out.push_back(make("uncurry", 3, [](Derivation& d) {
    Ref f = d.assume(Prop::Impl(p, Prop::Impl(q, r)));
    Ref h = d.assume(Prop::Conj(p, q));
    Ref v = d.mp(d.right(h), d.mp(d.left(h), f));
    return d.discharge(f, d.discharge(h, v));
  }));
  out.push_back(make("curry", 3, [](Derivation& d) {
    Ref f = d.assume(Prop::Impl(Prop::Conj(p, q), r));
    Ref a = d.assume(p);
    Ref b = d.assume(q);
    Ref v = d.mp(d.conj(a, b), f);
    return d.discharge(f, d.discharge(a, d.discharge(b, v)));
  }));
  out.push_back(make("de-morgan-disj", 2, [](Derivation& d) {
    Ref h = d.assume(Prop::Not(Prop::Disj(p, q)));
    Ref a = d.assume(p);
    Ref b = d.assume(q);
    Ref na = d.discharge(a, d.mp(inl(d, a, q), h));
    Ref nb = d.discharge(b, d.mp(inr(d, p, b), h));
    return d.discharge(h, d.conj(na, nb));
  }));
  out.push_back(make("de-morgan-conj", 2, [](Derivation& d) {
    Ref h = d.assume(Prop::Conj(Prop::Not(p), Prop::Not(q)));
    Ref x = d.assume(Prop::Disj(p, q));
    return d.discharge(h, d.discharge(x, cases(d, x, d.left(h), d.right(h))));
  }));
  out.push_back(make("excluded-middle-irrefutable", 1, [](Derivation& d) {
    Prop em = Prop::Disj(p, Prop::Not(p));
    Ref n = d.assume(Prop::Not(em));
    Ref a = d.assume(p);
    Ref na = d.discharge(a, d.mp(inl(d, a, Prop::Not(p)), n));
    return d.discharge(n, d.mp(inr(d, p, na), n));
  }));
  out.push_back(make("conj-of-implications", 3, [](Derivation& d) {
    Ref h = d.assume(Prop::Conj(Prop::Impl(p, q), Prop::Impl(p, r)));
    Ref a = d.assume(p);
    Ref v = d.conj(d.mp(a, d.left(h)), d.mp(a, d.right(h)));
    return d.discharge(h, d.discharge(a, v));
  }));
  out.push_back(make("ex-falso", 1, [](Derivation& d) {
    return d.axiom(H::A9, {p});
  }));
  out.push_back(make("disj-idempotent", 1, [](Derivation& d) {
    Ref h = d.assume(Prop::Disj(p, p));
    Ref a = d.assume(p);
    Ref id = d.discharge(a, a);
    return d.discharge(h, cases(d, h, id, id));
  }));
  out.push_back(make("disjunctive-syllogism", 2, [](Derivation& d) {
    Ref h = d.assume(Prop::Conj(Prop::Disj(p, q), Prop::Not(p)));
    Ref a = d.assume(p);
    Ref b = d.assume(q);
    Ref ac = d.discharge(a, d.absurd(d.mp(a, d.right(h)), q));
    return d.discharge(h, cases(d, d.left(h), ac, d.discharge(b, b)));
  }));
  out.push_back(make("non-contradiction", 2, [](Derivation& d) {
    Ref h = d.assume(Prop::Conj(p, Prop::Not(p)));
    return d.discharge(h, d.absurd(d.mp(d.left(h), d.right(h)), q));
  }));
  out.push_back(make("iff-symmetric", 2, [](Derivation& d) {
    Ref h = d.assume(Prop::Iff(p, q));
    return d.discharge(h, d.conj(d.right(h), d.left(h)));
  }));
  out.push_back(make("no-fixed-negation", 1, [](Derivation& d) {
    Ref h = d.assume(Prop::Iff(p, Prop::Not(p)));
    Ref a = d.assume(p);
    Ref np = d.discharge(a, d.mp(a, d.mp(a, d.left(h))));
    return d.discharge(h, d.mp(d.mp(np, d.right(h)), np));
  }));
  out.push_back(make("closed-conj", 0, [](Derivation& d) {
    Ref h = d.assume(Prop::Conj(bot, Prop::Impl(bot, bot)));
    return d.discharge(h, d.left(h));
  }));
  return out;
}

}  // namespace atm::testing
