#ifndef TANGENCY_EXPRESSION_HPP
#define TANGENCY_EXPRESSION_HPP

#include "tangency/flag_ring.hpp"

#include <string_view>

namespace tangency {

/// Parses a ring expression into a reduced FlagElt on G(1,n).
///
/// Grammar: sums/differences of products of factors (`*` or juxtaposition),
/// `^` for nonnegative
/// integer powers, parentheses, unary minus. Atoms are integers, `d`,
/// `s[a,b]` / `s[a]`, the digit shorthands `s1`, `s2`, `s11`, `s22`, ... and
/// `H1`, `H2`.
/// The text forms printed by DPoly, SchubertElt and FlagElt parse back to
/// the same element.
FlagElt parse_flag_expression(std::string_view text, int n, int arity);

/// Expression without H factors.
SchubertElt parse_schubert_expression(std::string_view text, int n);

/// Expression in d only.
DPoly parse_dpoly(std::string_view text);

}  // namespace tangency

#endif
