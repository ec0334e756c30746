#include "atm/text.h"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace atm {

ParseError::ParseError(std::string message, std::size_t position)
    : Error("parse error at offset " + std::to_string(position) + ": " +
            message),
      detail_(std::move(message)),
      position_(position) {}

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

  std::size_t pos() const { return pos_; }

  Sentence sentence() {
    Sentence left = implication();
    if (accept_op("<->", false)) {
      Sentence right = implication();
      return Sentence::Iff(std::move(left), std::move(right));
    }
    return left;
  }

  Term term() {
    Term left = term_implication();
    if (accept_op("<->", true)) {
      Term right = term_implication();
      return Term::Iff(std::move(left), std::move(right));
    }
    return left;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

 private:
  Sentence implication() {
    Sentence left = disjunction();
    if (accept_op("->", false)) {
      return Sentence::Impl(std::move(left), implication());
    }
    return left;
  }

  Sentence disjunction() {
    Sentence left = conjunction();
    while (accept_op("|", false)) {
      left = Sentence::Disj(std::move(left), conjunction());
    }
    return left;
  }

  Sentence conjunction() {
    Sentence left = unary();
    while (accept_op("&", false)) {
      left = Sentence::Conj(std::move(left), unary());
    }
    return left;
  }

  Sentence unary() {
    skip_ws();
    if (accept_op("~", false)) return Sentence::Not(unary());
    if (accept_char('(')) {
      Sentence inner = sentence();
      expect_char(')');
      return inner;
    }
    std::size_t start = pos_;
    std::string word = identifier();
    if (word == "bot") return Sentence::Falsum();
    if (word == "A" || word == "T" || word == "M") {
      expect_char('[');
      Term arg = term();
      expect_char(']');
      if (word == "A") return Sentence::A(std::move(arg));
      if (word == "T") return Sentence::T(std::move(arg));
      return Sentence::M(std::move(arg));
    }
    pos_ = start;
    fail(word.empty() ? "expected a sentence"
                      : "unknown sentence symbol '" + word + "'");
  }

  Term term_implication() {
    Term left = term_disjunction();
    if (accept_op("->", true)) {
      return Term::Impl(std::move(left), term_implication());
    }
    return left;
  }

  Term term_disjunction() {
    Term left = term_conjunction();
    while (accept_op("\\/", true)) {
      left = Term::Disj(std::move(left), term_conjunction());
    }
    return left;
  }

  Term term_conjunction() {
    Term left = term_unary();
    while (accept_op("/\\", true)) {
      left = Term::Conj(std::move(left), term_unary());
    }
    return left;
  }

  Term term_unary() {
    skip_ws();
    if (accept_op("~", true)) return Term::Not(term_unary());
    if (accept_char('(')) {
      Term inner = term();
      expect_char(')');
      return inner;
    }
    if (accept_char('\'')) {
      Sentence quoted = sentence();
      expect_char('\'');
      return dot(quoted);
    }
    std::size_t start = pos_;
    std::string word = identifier();
    if (word.size() > 1 && word[0] == 'L' &&
        word.find_first_not_of("0123456789", 1) == std::string::npos) {
      if (word[1] == '0') {
        pos_ = start;
        fail("liar constant indices start at 1 without leading zeros");
      }
      unsigned long index = 0;
      try {
        index = std::stoul(word.substr(1));
      } catch (const std::out_of_range&) {
        index = 0;
      }
      if (index == 0 || index > 0xffffffffUL) {
        pos_ = start;
        fail("liar constant index out of range");
      }
      return Term::Liar(static_cast<std::uint32_t>(index));
    }
    if ((word == "bot" || word == "A" || word == "T" || word == "M") &&
        pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      if (word == "bot") return Term::Bot();
      expect_char('[');
      Term arg = term();
      expect_char(']');
      if (word == "A") return Term::A(std::move(arg));
      if (word == "T") return Term::T(std::move(arg));
      return Term::M(std::move(arg));
    }
    pos_ = start;
    fail(word.empty() ? "expected a term"
                      : "unknown term symbol '" + word + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  // Matches `op` (dotted: `op.`). An undotted match must not be followed by
  // '.', so `->` never swallows the first half of `->.`.
  bool accept_op(std::string_view op, bool dotted) {
    skip_ws();
    if (text_.substr(pos_, op.size()) != op) return false;
    std::size_t end = pos_ + op.size();
    bool has_dot = end < text_.size() && text_[end] == '.';
    if (has_dot != dotted) return false;
    pos_ = end + (dotted ? 1 : 0);
    return true;
  }

  bool accept_char(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_char(char c) {
    if (!accept_char(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, pos_);
  }

  std::string_view text_;
  std::size_t pos_;
};

enum Precedence { kImplPrec = 1, kDisjPrec = 2, kConjPrec = 3, kAtomPrec = 4 };

int precedence(const Sentence& s) {
  switch (s.kind()) {
    case SentenceKind::kImpl:
      return kImplPrec;
    case SentenceKind::kDisj:
      return kDisjPrec;
    case SentenceKind::kConj:
      return kConjPrec;
    default:
      return kAtomPrec;
  }
}

// Terms that print as a quotation are atomic.
int precedence(const Term& t) {
  if (is_dot_image(t)) return kAtomPrec;
  switch (t.kind()) {
    case TermKind::kImpl:
      return kImplPrec;
    case TermKind::kDisj:
      return kDisjPrec;
    case TermKind::kConj:
      return kConjPrec;
    default:
      return kAtomPrec;
  }
}

void print(std::ostream& os, const Term& t);
void print(std::ostream& os, const Sentence& s);

template <typename Node>
void print_binary(std::ostream& os, const Node& node, const char* op,
                  int prec) {
  const bool right_assoc = prec == kImplPrec;
  int lp = precedence(node.left());
  int rp = precedence(node.right());
  bool left_parens = lp < prec || (right_assoc && lp == prec);
  bool right_parens = rp < prec || (!right_assoc && rp == prec);
  if (left_parens) os << '(';
  print(os, node.left());
  if (left_parens) os << ')';
  os << ' ' << op << ' ';
  if (right_parens) os << '(';
  print(os, node.right());
  if (right_parens) os << ')';
}

void print(std::ostream& os, const Sentence& s) {
  switch (s.kind()) {
    case SentenceKind::kFalsum:
      os << "bot";
      return;
    case SentenceKind::kA:
      os << "A[";
      print(os, s.arg());
      os << ']';
      return;
    case SentenceKind::kT:
      os << "T[";
      print(os, s.arg());
      os << ']';
      return;
    case SentenceKind::kM:
      os << "M[";
      print(os, s.arg());
      os << ']';
      return;
    case SentenceKind::kConj:
      print_binary(os, s, "&", kConjPrec);
      return;
    case SentenceKind::kDisj:
      print_binary(os, s, "|", kDisjPrec);
      return;
    case SentenceKind::kImpl:
      print_binary(os, s, "->", kImplPrec);
      return;
  }
}

void print(std::ostream& os, const Term& t) {
  if (is_dot_image(t)) {
    os << '\'';
    print(os, undot(t));
    os << '\'';
    return;
  }
  switch (t.kind()) {
    case TermKind::kLiar:
      os << 'L' << t.liar_index();
      return;
    case TermKind::kConj:
      print_binary(os, t, "/\\.", kConjPrec);
      return;
    case TermKind::kDisj:
      print_binary(os, t, "\\/.", kDisjPrec);
      return;
    case TermKind::kImpl:
      print_binary(os, t, "->.", kImplPrec);
      return;
    default:
      // Every other kind is a dot image.
      return;
  }
}

}  // namespace

Sentence parse_sentence(std::string_view text) {
  Parser parser(text, 0);
  Sentence s = parser.sentence();
  parser.expect_end();
  return s;
}

Term parse_term(std::string_view text) {
  Parser parser(text, 0);
  Term t = parser.term();
  parser.expect_end();
  return t;
}

Term parse_term_prefix(std::string_view text, std::size_t& pos) {
  Parser parser(text, pos);
  Term t = parser.term();
  pos = parser.pos();
  return t;
}

std::string to_string(const Sentence& phi) {
  std::ostringstream os;
  print(os, phi);
  return os.str();
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Sentence& phi) {
  print(os, phi);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print(os, t);
  return os;
}

ConstantTable parse_constant_table(std::string_view text) {
  ConstantTable table = ConstantTable::Default();
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      std::size_t sep = line.find(":=");
      if (sep == std::string_view::npos) {
        throw ParseError("expected 'L<i> := <sentence>'",
                         line_start + first);
      }
      std::string_view lhs = line.substr(0, sep);
      std::size_t b = lhs.find_first_not_of(" \t"), e = lhs.find_last_not_of(" \t");
      if (b != std::string_view::npos && lhs.substr(b, e - b + 1) == "default") {
        std::string_view rhs = line.substr(sep + 2);
        std::size_t rb = rhs.find_first_not_of(" \t\r");
        std::size_t re = rhs.find_last_not_of(" \t\r");
        if (rb != std::string_view::npos && rhs.substr(rb, re - rb + 1) == "none") {
          table.set_fallback(std::nullopt);
        } else {
          try {
            table.set_fallback(parse_sentence(rhs));
          } catch (const ParseError& e) {
            throw ParseError(e.detail(), line_start + sep + 2 + e.position());
          }
        }
        line_start = line_end + 1;
        continue;
      }
      Term constant = parse_term(lhs);
      if (constant.kind() != TermKind::kLiar) {
        throw ParseError("left side of ':=' must be a liar constant",
                         line_start + first);
      }
      try {
        table.set(constant.liar_index(),
                  parse_sentence(line.substr(sep + 2)));
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), line_start + sep + 2 + e.position());
      }
    }
    line_start = line_end + 1;
  }
  return table;
}

ConstantTable load_constant_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open constant table '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_constant_table(buffer.str());
}

std::string to_string(const ConstantTable& table) {
  std::ostringstream os;
  for (const auto& [index, theta] : table.entries()) {
    os << 'L' << index << " := " << theta << '\n';
  }
  if (table.fallback()) {
    os << "default := " << *table.fallback() << '\n';
  } else {
    os << "default := none\n";
  }
  return os.str();
}

}  // namespace atm
