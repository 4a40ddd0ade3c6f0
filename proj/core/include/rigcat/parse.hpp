#pragma once

#include <string>

#include "rigcat/shape.hpp"
#include "rigcat/witness.hpp"

namespace rigcat {

/// Parses a shape expression. Grammar:
///   shape := atom (('+' | '*') atom)?
///   atom  := '0' | 'I' | ident | '(' shape ')'
/// One binary operator per parenthesis level; longer chains need explicit
/// parentheses. 'I' is reserved and not a valid identifier. Throws
/// ParseError with a position on bad input.
ShapeRef parseShape(const std::string& text);

/// Parses a witness term. Grammar:
///   term   := factor (';' factor)*            left-associative
///   factor := atomic (('+' | '*') atomic)?
///   atomic := name '[' shape (',' shape)* ']'
///           | '[' term ',' term ']'
///           | '(' term ')'
/// Parsing is purely syntactic; run typecheck separately.
WitnessRef parseTerm(const std::string& text);

}  // namespace rigcat
