#include "atm/axioms.h"

#include "atm/analysis.h"
#include "atm/text.h"

namespace atm {

Sentence meaningfulness_guard(std::span<const Term> terms) {
  if (terms.empty()) throw SchemeError("empty meaningfulness guard");
  Sentence guard = Sentence::M(terms[0]);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    guard = Sentence::Conj(std::move(guard), Sentence::M(terms[i]));
  }
  return guard;
}

Sentence logical_axiom_instance(HilbertAxiom axiom,
                                std::span<const Term> terms) {
  if (terms.size() != axiom_arity(axiom)) {
    throw SchemeError(to_string(axiom) + " takes " +
                      std::to_string(axiom_arity(axiom)) + " terms, got " +
                      std::to_string(terms.size()));
  }
  Term body = instantiate(axiom_schema(axiom), terms);
  return Sentence::Impl(meaningfulness_guard(terms),
                        Sentence::A(std::move(body)));
}

namespace {

const Term& require(const std::optional<Term>& term, int scheme,
                    const char* name) {
  if (!term) {
    throw SchemeError("scheme " + std::to_string(scheme) + " needs binding " +
                      name);
  }
  return *term;
}

void forbid(const std::optional<Term>& term, int scheme, const char* name) {
  if (term) {
    throw SchemeError("scheme " + std::to_string(scheme) +
                      " takes no binding " + name);
  }
}

}  // namespace

Sentence nonlogical_axiom_instance(int scheme, const SchemeBindings& b,
                                   const ConstantTable& table) {
  using S = Sentence;
  switch (scheme) {
    case 1: {
      forbid(b.s, 1, "s");
      forbid(b.t_prime, 1, "t'");
      const Term& t = require(b.t, 1, "t");
      if (!grounded(eval(t, table), table)) {
        throw SchemeError("scheme 1 side condition: eval(" + to_string(t) +
                          ") = " + to_string(eval(t, table)) +
                          " is ungrounded");
      }
      return S::M(t);
    }
    case 2: {
      forbid(b.t_prime, 2, "t'");
      const Term& s = require(b.s, 2, "s");
      const Term& t = require(b.t, 2, "t");
      S parts = S::Conj(S::M(s), S::M(t));
      return S::Conj(S::Conj(S::Iff(parts, S::M(Term::Conj(s, t))),
                             S::Iff(parts, S::M(Term::Disj(s, t)))),
                     S::Iff(parts, S::M(Term::Impl(s, t))));
    }
    case 4:
    case 5: {
      forbid(b.t_prime, scheme, "t'");
      const Term& s = require(b.s, scheme, "s");
      const Term& t = require(b.t, scheme, "t");
      if (scheme == 4) {
        return S::Impl(S::Conj(S::A(s), S::A(t)), S::A(Term::Conj(s, t)));
      }
      return S::Impl(S::Conj(S::A(s), S::A(Term::Impl(s, t))), S::A(t));
    }
    case 3:
    case 6:
    case 7:
    case 8: {
      forbid(b.s, scheme, "s");
      forbid(b.t_prime, scheme, "t'");
      const Term& t = require(b.t, scheme, "t");
      switch (scheme) {
        case 3:
          return S::Impl(S::A(t), S::M(t));
        case 6:
          return S::Impl(S::M(t), S::A(Term::Impl(t, Term::A(t))));
        case 7:
          return S::Impl(S::M(t), S::A(Term::Iff(t, Term::T(t))));
        default:
          return S::Impl(S::Not(S::M(t)), S::A(Term::Not(Term::T(t))));
      }
    }
    case 9: {
      forbid(b.s, 9, "s");
      const Term& t = require(b.t, 9, "t");
      const Term& tp = require(b.t_prime, 9, "t'");
      if (!(eval(t, table) == eval(tp, table))) {
        throw SchemeError("scheme 9 side condition: eval(" + to_string(t) +
                          ") = " + to_string(eval(t, table)) +
                          " differs from eval(" + to_string(tp) +
                          ") = " + to_string(eval(tp, table)));
      }
      return S::Impl(S::M(t), S::A(Term::Iff(t, tp)));
    }
    default:
      throw SchemeError("no nonlogical scheme " + std::to_string(scheme));
  }
}

}  // namespace atm
