#pragma once

#include <string>
#include <vector>

#include "rigcat/shape.hpp"
#include "rigcat/witness.hpp"

namespace rigcat {

/// Distributive normal form: an ordered list of product monomials over
/// variable names. The empty monomial denotes I, the empty list denotes 0.
/// Re-read as a Shape it is right-nested in both sums and products.
struct NormalForm {
  std::vector<std::vector<std::string>> monomials;

  ShapeRef asShape() const;

  /// "A*B + A*C"; "I" for an empty monomial, "0" for the empty sum.
  std::string render() const;
};

/// A normal form together with a witness from the input shape to it. The
/// witness uses only associators, unitors, distributors and absorptions
/// (never a braiding: normalization does not commute factors), so it
/// compiles to a degree-preserving bijection in every backend.
struct StrictifyResult {
  NormalForm nf;
  WitnessRef witness;
};

/// Leftmost-outermost expansion, left factor major: distributing a product
/// of sums enumerates the left factor's monomials in the outer loop.
/// Monomial order is whatever distribution produces; nothing is sorted.
StrictifyResult normalize(const ShapeRef& s);

/// Right factor major expansion. Same monomial multiset as normalize, in
/// general a different order and witness.
StrictifyResult altNormalize(const ShapeRef& s);

/// Both strategies plus an explicit witness from altNormalize's target to
/// normalize's target, built from adjacent BPlus swaps conjugated by
/// associators. The two strategies agree only up to this witness, never
/// silently: compile(viaLeft.witness) = compile(relating) . compile(viaRight.witness).
struct StrategyComparison {
  StrictifyResult viaLeft;
  StrictifyResult viaRight;
  WitnessRef relating;
};

StrategyComparison compareStrategies(const ShapeRef& s);

}  // namespace rigcat
