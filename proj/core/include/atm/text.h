#ifndef ATM_TEXT_H_
#define ATM_TEXT_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "atm/syntax.h"

namespace atm {

// ASCII syntax.
//
//   sentence  bot | A[term] | T[term] | M[term] | ~s | s & s | s | s
//             | s -> s | s <-> s | (s)
//   term      'sentence' | L<n> | bot. | A.[term] | T.[term] | M.[term]
//             | ~.t | t /\. t | t \/. t | t ->. t | t <->. t | (t)
//
// Precedence from tightest: ~, &, |, -> (right associative), <-> (non
// associative); dotted operators follow the same table. ~ and <-> are
// expanded while parsing and never printed. The printer writes every dot
// image as a quotation, so 'A[L1] -> bot' rather than A.[L1] ->. bot.

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position);
  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

// Whole-input parsers: trailing text other than whitespace is an error.
Sentence parse_sentence(std::string_view text);
Term parse_term(std::string_view text);

// Parses the longest term starting at `pos` (after optional whitespace) and
// advances `pos` past it. Used by the line-oriented file formats, where a
// term is followed by more fields.
Term parse_term_prefix(std::string_view text, std::size_t& pos);

std::string to_string(const Sentence& phi);
std::string to_string(const Term& t);

std::ostream& operator<<(std::ostream& os, const Sentence& phi);
std::ostream& operator<<(std::ostream& os, const Term& t);

// Constant table file: one `L<i> := <sentence>` per line; blank lines and
// lines starting with '#' are ignored. The result starts from
// ConstantTable::Default() and the file overrides individual entries.
// `default := <sentence>` sets the value of unlisted constants and
// `default := none` makes them errors.
ConstantTable parse_constant_table(std::string_view text);
ConstantTable load_constant_table(const std::string& path);
std::string to_string(const ConstantTable& table);

}  // namespace atm

#endif  // ATM_TEXT_H_
