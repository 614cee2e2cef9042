#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "chevkit/chevalley.hpp"

namespace chevkit {

/// Names available to parse_mixed.
struct ExprNames {
  /// Named Weyl words, e.g. q1.
  std::map<std::string, WeylWord> words;
  /// Named radical elements depending on one polynomial, e.g. v(s).
  std::map<std::string, std::function<PolyUnipotent(const SparsePoly&)>> unipotents;
};

/// Parses products such as "v(a)*q1*v(a)^-1" or "q2*e36(a^2)*e39(a^2)".
///
///   expr  := term ('*' term)*
///   term  := atom ('^' ['-'] digits)?
///   atom  := '1' | '(' expr ')' | 'e' label '(' poly ')' | 'n_' letter
///          | word-name | unipotent-name '(' poly ')'
///
/// Throws ParseError; NotInParabolic for non-Levi reflections.
PolyMixed parse_mixed(std::string_view text, const ContextPtr& ctx, const ExprNames& names = {});

}  // namespace chevkit
