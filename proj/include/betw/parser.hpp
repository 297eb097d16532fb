#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "betw/formula.hpp"

namespace betw {

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("syntax error at offset " + std::to_string(pos) + ": " + what),
        position(pos) {}
  std::size_t position;
};

// Accepts the ASCII surface syntax:
//   true false ~ & | -> <-> <B>(a,b) [B](a,b) @i a  E a  A a  C a
// Binary connectives may be written with or without the mandatory outer
// parentheses; precedence is <-> < -> < | < & < unary, with -> right
// associative.  print() always emits the fully parenthesized form, and
// parse(print(f)) == f.
Formula parse_formula(const std::string& text);

}  // namespace betw
