#pragma once

#include "commop/diffop.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace commop {

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }
    [[nodiscard]] const std::string& message() const { return msg_; }

private:
    std::string msg_;
    int line_;
    int column_;
};

/// Operator text grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | 'x' | 'eps' | 'D' | '(' expr ')'
///
/// '*' is composition (so D*x = x*D + 1); '/' divides every coefficient by
/// an x-monomial or a nonzero rational constant. Juxtaposition is an error.
/// '#' starts a comment running to the end of the line.
XOp parse_op(std::string_view text);

enum class OpFormat { Text, Json, Tex };

/// Canonical text: highest D-power first, each coefficient in parentheses
/// unless it is 1, e.g. "D^3 - (26/x^2)*D - 28/x^3 + x^6/5832".
/// parse_op(print_op(a)) == a, and print_op is the identity on its own output.
std::string print_op(const XOp& a, OpFormat format = OpFormat::Text);

/// Inverse of print_op(a, OpFormat::Json).
XOp parse_op_json(std::string_view json_text);

OpFormat parse_format(std::string_view name);

}  // namespace commop
