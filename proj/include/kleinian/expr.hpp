#pragma once

#include <string_view>

namespace kleinian {

/// Evaluates a constant expression such as "-4*sin(pi/7)^2" or "(sqrt5-1)/2".
/// Grammar: decimal literals, + - * / ^ (right associative), unary minus,
/// parentheses, sin cos sqrt, and the constants pi and sqrt5.
/// Throws ExpressionError.
double evaluate_expression(std::string_view text);

}  // namespace kleinian
