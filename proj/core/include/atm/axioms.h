#ifndef ATM_AXIOMS_H_
#define ATM_AXIOMS_H_

#include <optional>
#include <span>
#include <string>

#include "atm/ipc.h"
#include "atm/syntax.h"

namespace atm {

// Raised when an axiom instance is requested with the wrong number of terms or
// with terms that violate a scheme's side condition.
class SchemeError : public Error {
 public:
  using Error::Error;
};

// M[t1] & ... & M[tk], left associated. A single term gives the bare M[t1].
// Throws SchemeError for an empty list.
Sentence meaningfulness_guard(std::span<const Term> terms);

// (M[t1] & ... & M[tk]) -> A[body], where body is the Hilbert schema with
// dotted connectives and term i in place of metavariable i.
Sentence logical_axiom_instance(HilbertAxiom axiom,
                                std::span<const Term> terms);

// Terms bound by a nonlogical scheme. Scheme 9 uses t and t_prime, schemes
// 2, 4 and 5 use s and t, every other scheme uses t only.
struct SchemeBindings {
  std::optional<Term> s;
  std::optional<Term> t;
  std::optional<Term> t_prime;
};

inline constexpr int kFirstScheme = 1;
inline constexpr int kLastScheme = 9;

// Instance of nonlogical scheme 1..9:
//   1  M[t]                                   eval(t) grounded
//   2  ((M[s] & M[t]) <-> M[s /\. t]) & ((M[s] & M[t]) <-> M[s \/. t])
//        & ((M[s] & M[t]) <-> M[s ->. t])
//   3  A[t] -> M[t]
//   4  A[s] & A[t] -> A[s /\. t]
//   5  A[s] & A[s ->. t] -> A[t]
//   6  M[t] -> A[t ->. A.[t]]
//   7  M[t] -> A[t <->. T.[t]]
//   8  ~M[t] -> A[~.T.[t]]
//   9  M[t] -> A[t <->. t']                   eval(t) = eval(t')
// Throws SchemeError on a missing, superfluous or side-condition-violating
// binding.
Sentence nonlogical_axiom_instance(int scheme, const SchemeBindings& bindings,
                                   const ConstantTable& table);

}  // namespace atm

#endif  // ATM_AXIOMS_H_
