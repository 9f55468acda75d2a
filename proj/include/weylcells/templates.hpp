#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylcells/affine_weyl.hpp"
#include "weylcells/rootdata.hpp"

namespace weylcells {

/// Variable bindings for template evaluation (l, k, n, m, b, np, ...).
using Bindings = std::map<std::string, Int>;

/// Integer expression: + - * / (floor) % == != < <= > >=, parentheses,
/// lowercase identifiers bound in `vars`.
Int eval_expr(const std::string& expr, const Bindings& vars);
/// True when every identifier of the expression is bound.
bool expr_is_closed(const std::string& expr, const Bindings& vars);

/// Expands a word template into a word.
///
///   d            one digit: the simple reflection s_d
///   {e}          s_e for an expression e
///   gd, g{e}     the length-zero element gamma_d (gamma_0 is the identity)
///   [a..b]       s_a s_{a+-1} ... s_b, ascending or descending as needed
///   [a..b]+      ascending only (empty when a > b); "-" for descending only
///   ( ... )^p    repetition, p a digit string or {e}
///   P[i=a..b]( ... )   product over i = a, a+1, ..., b (empty when b < a)
///
/// Whitespace is ignored.
Word expand_word(const std::string& word_template, const Bindings& vars);

/// Label template: comma separated "coef:index" terms, or "0" for the
/// vacuum. Terms with index 0 or coefficient 0 are dropped. Returns the
/// finite weight in fundamental-weight coordinates.
std::vector<Int> expand_label(const std::string& label_template, int rank, const Bindings& vars);

/// Replaces each {e} in `text` by the value of e.
std::string substitute(const std::string& text, const Bindings& vars);

}  // namespace weylcells
