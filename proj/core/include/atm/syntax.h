#ifndef ATM_SYNTAX_H_
#define ATM_SYNTAX_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace atm {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingConstant : public Error {
 public:
  explicit MissingConstant(std::uint32_t index);
  std::uint32_t index() const { return index_; }

 private:
  std::uint32_t index_;
};

enum class TermKind : std::uint8_t {
  kBot,    // dotted falsum
  kLiar,   // L_i
  kConj,
  kDisj,
  kImpl,
  kA,
  kT,
  kM,
};

enum class SentenceKind : std::uint8_t {
  kFalsum,
  kA,
  kT,
  kM,
  kConj,
  kDisj,
  kImpl,
};

// A quoted syntax object: the argument of A[.], T[.] and M[.].
//
// Terms are immutable trees with shared structure; copying a Term copies a
// pointer. Equality and ordering are structural.
class Term {
 public:
  static Term Bot();
  static Term Liar(std::uint32_t index);
  static Term Conj(Term left, Term right);
  static Term Disj(Term left, Term right);
  static Term Impl(Term left, Term right);
  static Term A(Term arg);
  static Term T(Term arg);
  static Term M(Term arg);
  // t ->. bot
  static Term Not(Term arg);
  // (s ->. t) /\. (t ->. s)
  static Term Iff(Term left, Term right);

  TermKind kind() const;
  // Valid for kLiar only.
  std::uint32_t liar_index() const;
  // Valid for the binary kinds.
  const Term& left() const;
  const Term& right() const;
  // Valid for kA, kT, kM.
  const Term& arg() const;

  bool is_binary() const;
  std::size_t hash() const;
  // Number of constructors in the tree.
  std::size_t size() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  friend class Sentence;
  struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term Make(TermKind kind, std::uint32_t index, Term left, Term right);

  std::shared_ptr<const Node> node_;
};

// A formula of the propositional language with A, T and M predicates.
class Sentence {
 public:
  static Sentence Falsum();
  static Sentence A(Term arg);
  static Sentence T(Term arg);
  static Sentence M(Term arg);
  static Sentence Conj(Sentence left, Sentence right);
  static Sentence Disj(Sentence left, Sentence right);
  static Sentence Impl(Sentence left, Sentence right);
  // phi -> bot
  static Sentence Not(Sentence arg);
  // (phi -> psi) & (psi -> phi)
  static Sentence Iff(Sentence left, Sentence right);

  SentenceKind kind() const;
  bool is_atom() const;
  bool is_binary() const;
  // Valid for kA, kT, kM.
  const Term& arg() const;
  // Valid for the binary kinds.
  const Sentence& left() const;
  const Sentence& right() const;

  std::size_t hash() const;
  std::size_t size() const;

  friend bool operator==(const Sentence& a, const Sentence& b);
  friend std::strong_ordering operator<=>(const Sentence& a,
                                          const Sentence& b);

 private:
  struct Node;
  Sentence() = default;
  explicit Sentence(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  static Sentence Make(SentenceKind kind, Term arg, Sentence left,
                       Sentence right);

  std::shared_ptr<const Node> node_;
};

// The sentences theta_i that the liar constants L_i evaluate to.
class ConstantTable {
 public:
  // Empty table with no fallback: every lookup fails.
  ConstantTable() = default;

  // L1 := ~T[L1], L2 := ~A[L2], every other index evaluates to bot.
  static ConstantTable Default();

  void set(std::uint32_t index, Sentence theta);
  // Sentence used for indices without an explicit entry.
  void set_fallback(std::optional<Sentence> fallback);

  // Throws MissingConstant when there is neither an entry nor a fallback.
  const Sentence& lookup(std::uint32_t index) const;
  bool contains(std::uint32_t index) const;

  const std::map<std::uint32_t, Sentence>& entries() const {
    return entries_;
  }
  const std::optional<Sentence>& fallback() const { return fallback_; }

 private:
  std::map<std::uint32_t, Sentence> entries_;
  std::optional<Sentence> fallback_;
};

// The quotation of a sentence: the same tree with every connective, predicate
// and falsum dotted.
Term dot(const Sentence& phi);

// Reads a term back as a sentence. Arguments of dotted predicates are left
// unchanged and a liar constant is replaced by its table entry, without
// evaluating that entry any further.
Sentence eval(const Term& t, const ConstantTable& table);

// True when t = dot(phi) for some phi; such a t has no liar constant outside
// predicate arguments.
bool is_dot_image(const Term& t);

// Inverse of dot on dot images. Throws Error for any other term.
Sentence undot(const Term& t);

}  // namespace atm

template <>
struct std::hash<atm::Term> {
  std::size_t operator()(const atm::Term& t) const noexcept {
    return t.hash();
  }
};

template <>
struct std::hash<atm::Sentence> {
  std::size_t operator()(const atm::Sentence& s) const noexcept {
    return s.hash();
  }
};

#endif  // ATM_SYNTAX_H_
