#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "gocohom/cohomring.hpp"

namespace gocohom {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t pos, const std::string& message)
        : std::runtime_error("offset " + std::to_string(pos) + ": " + message),
          pos_(pos) {}

    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Either a pair-model element (L/a/b/d alphabet) or a plain polynomial in
// C = k[w_1..w_2n] (w alphabet). The two alphabets cannot be mixed.
using Parsed = std::variant<CohomElem, Poly2>;

// Grammar: expr := term { '+' term }; term := factor { '*' factor };
// factor := atom [ '^' uint ]; atom := uint | ident | '(' expr ')'.
// Identifiers: L, a1, a3, ..., b4, b8, ..., d{i,j,...}, w1, w2, ....
Parsed parse_expr(std::string_view text, int n);

}  // namespace gocohom
