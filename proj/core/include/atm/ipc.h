#ifndef ATM_IPC_H_
#define ATM_IPC_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "atm/syntax.h"

namespace atm {

enum class PropKind : std::uint8_t { kVar, kBot, kConj, kDisj, kImpl };

// A formula of the intuitionistic propositional calculus over variables
// numbered from 0.
class Prop {
 public:
  static Prop Var(std::uint32_t index);
  static Prop Bot();
  static Prop Conj(Prop left, Prop right);
  static Prop Disj(Prop left, Prop right);
  static Prop Impl(Prop left, Prop right);
  static Prop Not(Prop arg) { return Impl(std::move(arg), Bot()); }
  static Prop Iff(Prop left, Prop right) {
    return Conj(Impl(left, right), Impl(right, left));
  }

  PropKind kind() const;
  std::uint32_t var() const;
  const Prop& left() const;
  const Prop& right() const;
  bool is_binary() const;

  std::size_t hash() const;
  // One more than the largest variable index, 0 for closed formulas.
  std::uint32_t var_bound() const;

  friend bool operator==(const Prop& a, const Prop& b);

 private:
  struct Node;
  Prop() = default;
  explicit Prop(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Prop Make(PropKind kind, std::uint32_t var, Prop left, Prop right);

  std::shared_ptr<const Node> node_;
};

// Variable names used when reading and writing Props. Index i is named
// names[i]; the default names are p, q, r, p4, p5, ...
class VarNames {
 public:
  VarNames() = default;
  explicit VarNames(std::vector<std::string> names)
      : names_(std::move(names)) {}

  std::string name(std::uint32_t index) const;
  // Index of `name`, appending it when unknown.
  std::uint32_t intern(const std::string& name);
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

// Same operators as sentences; variables are lowercase identifiers other
// than `bot`.
Prop parse_prop(std::string_view text, VarNames& names);
Prop parse_prop_prefix(std::string_view text, std::size_t& pos,
                       VarNames& names);
std::string to_string(const Prop& p, const VarNames& names = VarNames());

// The fixed Hilbert basis. Metavariables are numbered in order of first
// occurrence, which is also the order of the guard conjuncts:
//   A1  s -> (t -> s)
//   A2  (s -> (t -> u)) -> ((s -> t) -> (s -> u))
//   A3  s & t -> s
//   A4  s & t -> t
//   A5  s -> (t -> s & t)
//   A6  s -> s | t
//   A7  s -> t | s
//   A8  (s -> t) -> ((u -> t) -> (s | u -> t))
//   A9  bot -> s
enum class HilbertAxiom : std::uint8_t { A1 = 1, A2, A3, A4, A5, A6, A7, A8, A9 };

inline constexpr HilbertAxiom kAllHilbertAxioms[] = {
    HilbertAxiom::A1, HilbertAxiom::A2, HilbertAxiom::A3,
    HilbertAxiom::A4, HilbertAxiom::A5, HilbertAxiom::A6,
    HilbertAxiom::A7, HilbertAxiom::A8, HilbertAxiom::A9};

const Prop& axiom_schema(HilbertAxiom axiom);
std::size_t axiom_arity(HilbertAxiom axiom);
std::string to_string(HilbertAxiom axiom);
// Accepts "A1" .. "A9".
std::optional<HilbertAxiom> parse_hilbert_axiom(std::string_view name);

// Replaces variable i by args[i]. Throws Error when a variable has no
// argument. The Term overload builds the dotted image of the formula.
Prop instantiate(const Prop& schema, std::span<const Prop> args);
Sentence instantiate(const Prop& schema, std::span<const Sentence> args);
Term instantiate(const Prop& schema, std::span<const Term> args);

// A Hilbert-style proof: axiom instances, premises and modus ponens. Line
// references are 1-based.
struct IpcAxiomLine {
  HilbertAxiom axiom;
  std::vector<Prop> args;
};
struct IpcPremiseLine {
  std::size_t premise;  // 1-based index into IpcProof::premises
};
struct IpcMpLine {
  std::size_t minor;  // phi
  std::size_t major;  // phi -> psi
};
using IpcLine = std::variant<IpcAxiomLine, IpcPremiseLine, IpcMpLine>;

struct IpcProof {
  std::string name;
  VarNames vars;
  std::vector<Prop> premises;
  std::vector<IpcLine> lines;
  std::optional<Prop> claim;
};

class IpcError : public Error {
 public:
  IpcError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Formula proved by every line. Throws IpcError on the first bad line, or
// when the last line differs from the claim.
std::vector<Prop> check_ipc(const IpcProof& proof);

// Text format:
//   # name: <id>
//   # vars: p q
//   # claim: <formula>
//   1. ax A1 s=<formula> t=<formula>
//   2. mp <minor> <major>
// Premise lines are not part of the format.
IpcProof parse_ipc_proof(std::string_view text);
std::string to_text(const IpcProof& proof);

// Builds Hilbert proofs from natural-deduction style steps. Hypotheses are
// opened with assume() and eliminated by discharge(), which applies the
// deduction theorem (A1, A2 and modus ponens only).
class Derivation {
 public:
  using Ref = std::size_t;

  Ref axiom(HilbertAxiom axiom, std::vector<Prop> args);
  // An externally justified formula; premises are numbered in call order.
  Ref premise(Prop formula);
  Ref assume(Prop formula);
  Ref mp(Ref minor, Ref major);
  // hyp -> body, no longer depending on hyp.
  Ref discharge(Ref hyp, Ref body);

  Ref conj(Ref left, Ref right);
  Ref left(Ref conj);
  Ref right(Ref conj);
  // From a -> b and b -> c, a -> c.
  Ref chain(Ref ab, Ref bc);
  // From bot, any formula.
  Ref absurd(Ref bot, Prop target);

  const Prop& formula(Ref ref) const { return nodes_[ref].formula; }
  bool depends_on_hypothesis(Ref ref) const {
    return !nodes_[ref].hyps.empty();
  }

  // Lines proving `goal`, which must not depend on open hypotheses.
  IpcProof linearize(Ref goal, VarNames vars = VarNames()) const;

 private:
  enum class Kind { kAxiom, kPremise, kHyp, kMp };
  struct Node {
    Node(Kind k, Prop f) : kind(k), formula(std::move(f)) {}
    Kind kind;
    Prop formula;
    HilbertAxiom axiom = HilbertAxiom::A1;
    std::vector<Prop> args;
    std::size_t index = 0;  // premise number or hypothesis id
    Ref minor = 0;
    Ref major = 0;
    std::vector<std::size_t> hyps;  // sorted ids of open hypotheses
  };

  Ref add(Node node);
  Ref identity(const Prop& p);
  Ref weaken(Ref ref, const Prop& hyp);

  std::vector<Node> nodes_;
  std::vector<Prop> premises_;
  std::size_t next_hyp_ = 0;
};

}  // namespace atm

template <>
struct std::hash<atm::Prop> {
  std::size_t operator()(const atm::Prop& p) const noexcept {
    return p.hash();
  }
};

#endif  // ATM_IPC_H_
