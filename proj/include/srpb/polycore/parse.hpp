#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "srpb/errors.hpp"
#include "srpb/polycore/polynomial.hpp"

namespace srpb {

/// Syntax error in a polynomial expression, at a byte offset into the input.
class ParseError : public InputError {
public:
    ParseError(std::size_t offset, const std::string& message);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Grammar: integers, a/b, x0..x63, + - * ^ and parentheses; ^ binds tightest,
/// then *, then + and -; unary minus allowed; whitespace ignored.
/// Exponents above 2^31 are rejected, as are variables outside the context.
Polynomial parse_expression(const ContextPtr& ctx, std::string_view text);

} // namespace srpb
