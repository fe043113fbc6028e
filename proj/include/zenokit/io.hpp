#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zenokit/generators.hpp"
#include "zenokit/model.hpp"

namespace zenokit {

/// Malformed input; the message starts with "line N: ".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Timed automaton text:
///
///   clocks x y
///   state q0 init
///   state q1
///   trans t1: q0 -> q1 ; x<=2 && y>0 ; reset{x}
///
/// '#' starts a comment. The guard is `true` or atoms joined by `&&` with
/// <, <=, ==, >=, >. Guard and reset clauses may be omitted. The result is
/// validated (ValidationError on failure).
TimedAutomaton parse_ta(std::string_view text);

/// Inverse of parse_ta, in declaration order.
std::string serialize_ta(const TimedAutomaton& ta);

/// DIMACS CNF with exactly three literals per clause.
Formula parse_cnf(std::string_view text);

/// LBA description:
///
///   alphabet 3
///   state q0 init
///   state qf accept
///   state q1 plain
///   trans q0 1 -> q1 2 R
///
/// Symbols 1..k-1 are tape symbols; moves are L, R or S.
Lba parse_lba(std::string_view text);

/// "121" (one digit per symbol) or "1,2,1".
std::vector<int> parse_word(std::string_view text);

}  // namespace zenokit
