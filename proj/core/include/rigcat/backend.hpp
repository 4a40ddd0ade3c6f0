#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rigcat/shape.hpp"
#include "rigcat/witness.hpp"

namespace rigcat {

enum class BackendKind { FinSet, GradedVec };

/// Test-only semantic sabotage knobs. Each one is a deliberately wrong
/// variant used to prove the audits are not vacuous; production paths keep
/// None.
enum class Mutation {
  None,
  FlipSumTags,      // denote(Sum) enumerates the right block first
  DropUnderPhase,   // BTimesUnder compiles with phase exponent 0
  SwapDistLBlocks,  // DistL writes its two output blocks in swapped positions
};

struct BackendConfig {
  BackendKind kind = BackendKind::GradedVec;
  long phaseOrder = 1;  // braiding phase = primitive n-th root of unity
  Mutation mutation = Mutation::None;

  /// FinSet behaves as GradedVec with n = 1.
  long effectivePhaseOrder() const { return kind == BackendKind::FinSet ? 1 : phaseOrder; }
};

/// One enumerated basis element: a path tree mirroring the shape. Sum
/// contributes an L/R tag, Prod an ordered pair, One the unit point, Var an
/// atom (with its position in the binding).
class BasisVector {
 public:
  enum class Kind { Atom, Unit, Left, Right, Pair };

  static BasisVector atom(Atom a, std::size_t pos);
  static BasisVector unit();
  static BasisVector left(BasisVector v);
  static BasisVector right(BasisVector v);
  static BasisVector pair(BasisVector l, BasisVector r);

  Kind kind() const { return kind_; }
  const Atom& atomValue() const;
  std::size_t atomPos() const;
  const BasisVector& inner() const;      // Left/Right
  const BasisVector& leftPart() const;   // Pair
  const BasisVector& rightPart() const;  // Pair

  /// Sum of the degrees of all constituent atoms; tags do not contribute.
  long degree() const;

  /// Ignores atom positions: two vectors are equal when their tag/pair
  /// structure and atom labels+degrees coincide.
  friend bool operator==(const BasisVector& a, const BasisVector& b);

 private:
  struct Node;
  using NodeRef = std::shared_ptr<const Node>;
  BasisVector(Kind k, NodeRef n) : kind_(k), node_(std::move(n)) {}

  Kind kind_;
  NodeRef node_;
};

/// Path string: atoms by label, "I" for the unit point, "L(v)"/"R(v)" for
/// tags, "(u,v)" for pairs.
std::string renderBasis(const BasisVector& v);

/// Exact linear map between enumerated bases: a partial function from
/// source indices (columns) to target indices (rows), each carried entry
/// scaled by a root of unity stored as an exponent mod phaseOrder. Columns
/// are unique by representation; rows may repeat (copairing of overlapping
/// maps folds), but every invertible witness compiles to a permutation.
class ConcreteMorphism {
 public:
  struct Entry {
    std::size_t row;
    long phaseExp;  // canonical representative in [0, phaseOrder)

    friend bool operator==(const Entry& a, const Entry& b) {
      return a.row == b.row && a.phaseExp == b.phaseExp;
    }
  };

  ConcreteMorphism(std::size_t sourceDim, std::size_t targetDim, long phaseOrder);

  static ConcreteMorphism identityMor(std::size_t dim, long phaseOrder);

  std::size_t sourceDim() const { return sourceDim_; }
  std::size_t targetDim() const { return targetDim_; }
  long phaseOrder() const { return phaseOrder_; }

  /// Installs the single entry of a column; the exponent is reduced mod
  /// phaseOrder. Throws BackendError if the column is occupied or an index
  /// is out of range.
  void set(std::size_t col, std::size_t row, long phaseExp);

  const std::optional<Entry>& at(std::size_t col) const;

  bool fullyDefined() const;

  /// Total, square and row-injective: an honest permutation with phases.
  bool isPermutation() const;

 private:
  std::size_t sourceDim_, targetDim_;
  long phaseOrder_;
  std::vector<std::optional<Entry>> entries_;
};

/// g after f. Requires matching middle dimension and equal phase order.
ConcreteMorphism compose(const ConcreteMorphism& g, const ConcreteMorphism& f);

/// Block direct sum: f on the left block, g offset to the right block.
ConcreteMorphism directSum(const ConcreteMorphism& f, const ConcreteMorphism& g);

/// Kronecker-style product, left factor major; phase exponents add.
ConcreteMorphism tensor(const ConcreteMorphism& f, const ConcreteMorphism& g);

/// Exact inverse. Throws BackendError unless m is a permutation.
ConcreteMorphism inverse(const ConcreteMorphism& m);

/// Dimension, phase order and entrywise equality (exponents mod n).
bool morEq(const ConcreteMorphism& a, const ConcreteMorphism& b);

/// Enumerated basis of a shape: Var in binding order, Zero empty, One the
/// unit point, Sum left block then right block (Definition-1 tag order),
/// Prod lexicographic with the left index major.
std::vector<BasisVector> denote(const ShapeRef& s, const Env& e, const BackendConfig& cfg);

/// Position of v in denote(s, e, cfg), computed structurally without
/// enumeration. Throws BackendError if v does not match s.
std::size_t basisIndex(const ShapeRef& s, const BasisVector& v, const Env& e,
                       const BackendConfig& cfg);

/// Compiles a witness term to its exact matrix over the denoted bases.
/// Structural generators rearrange basis vectors with phase exponent 0,
/// except the braidings: BTimesOver multiplies by phase^(+deg*deg),
/// BTimesUnder by phase^(-deg*deg). Inl/Inr include blocks as partial maps;
/// Copair dispatches on the tag of each source vector.
ConcreteMorphism compile(const WitnessRef& t, const Env& e, const BackendConfig& cfg);

/// The unique mediating map h with h . inl = f and h . inr = g, laid out by
/// block concatenation in the Definition-1 order (left block of columns
/// from f, right block from g). Throws BackendError when the targets or
/// phase orders disagree.
ConcreteMorphism copairUniversal(const ConcreteMorphism& f, const ConcreteMorphism& g);

}  // namespace rigcat
