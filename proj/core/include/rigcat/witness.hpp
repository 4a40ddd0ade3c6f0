#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rigcat/shape.hpp"

namespace rigcat {

class WitnessTerm;
using WitnessRef = std::shared_ptr<const WitnessTerm>;

/// A typed term denoting a structural morphism between shapes.
///
/// Generators cover the braided rig structure: associators and unitors for
/// both operations, the symmetric braiding for +, the over/under braidings
/// for *, left/right distributors, absorption into 0, and the coproduct
/// injections with copairing. Inl/Inr/Copair are the only non-invertible
/// constructors; everything else has a syntactic inverse.
class WitnessTerm {
 public:
  enum class Kind {
    Id,
    Comp,   // g after f
    SumM,   // f + g on summands
    ProdM,  // f * g on factors
    Copair,
    APlus,      // (A+B)+C -> A+(B+C)
    APlusInv,
    ATimes,     // (A*B)*C -> A*(B*C)
    ATimesInv,
    BPlus,       // A+B -> B+A, symmetric
    BTimesOver,  // A*B -> B*A, over-crossing
    BTimesUnder, // A*B -> B*A, under-crossing
    LPlus,   // 0+A -> A
    LPlusInv,
    RPlus,   // A+0 -> A
    RPlusInv,
    LTimes,  // I*A -> A
    LTimesInv,
    RTimes,  // A*I -> A
    RTimesInv,
    DistL,   // A*(B+C) -> (A*B)+(A*C)
    DistLInv,
    DistR,   // (A+B)*C -> (A*C)+(B*C)
    DistRInv,
    ZeroL,   // 0*A -> 0
    ZeroLInv,
    ZeroR,   // A*0 -> 0
    ZeroRInv,
    Inl,  // A -> A+B
    Inr,  // B -> A+B
  };

  static WitnessRef id(ShapeRef a);
  static WitnessRef comp(WitnessRef after, WitnessRef before);
  static WitnessRef sumM(WitnessRef f, WitnessRef g);
  static WitnessRef prodM(WitnessRef f, WitnessRef g);
  static WitnessRef copair(WitnessRef f, WitnessRef g);

  /// Generic generator constructor; shape argument count must match the
  /// generator's arity.
  static WitnessRef gen(Kind k, std::vector<ShapeRef> shapes);

  static WitnessRef aPlus(ShapeRef a, ShapeRef b, ShapeRef c);
  static WitnessRef aPlusInv(ShapeRef a, ShapeRef b, ShapeRef c);
  static WitnessRef aTimes(ShapeRef a, ShapeRef b, ShapeRef c);
  static WitnessRef aTimesInv(ShapeRef a, ShapeRef b, ShapeRef c);
  static WitnessRef bPlus(ShapeRef a, ShapeRef b);
  static WitnessRef bTimesOver(ShapeRef a, ShapeRef b);
  static WitnessRef bTimesUnder(ShapeRef a, ShapeRef b);
  static WitnessRef lPlus(ShapeRef a);
  static WitnessRef lPlusInv(ShapeRef a);
  static WitnessRef rPlus(ShapeRef a);
  static WitnessRef rPlusInv(ShapeRef a);
  static WitnessRef lTimes(ShapeRef a);
  static WitnessRef lTimesInv(ShapeRef a);
  static WitnessRef rTimes(ShapeRef a);
  static WitnessRef rTimesInv(ShapeRef a);
  static WitnessRef distL(ShapeRef a, ShapeRef b, ShapeRef c);
  static WitnessRef distLInv(ShapeRef a, ShapeRef b, ShapeRef c);
  static WitnessRef distR(ShapeRef a, ShapeRef b, ShapeRef c);
  static WitnessRef distRInv(ShapeRef a, ShapeRef b, ShapeRef c);
  static WitnessRef zeroL(ShapeRef a);
  static WitnessRef zeroLInv(ShapeRef a);
  static WitnessRef zeroR(ShapeRef a);
  static WitnessRef zeroRInv(ShapeRef a);
  static WitnessRef inl(ShapeRef a, ShapeRef b);
  static WitnessRef inr(ShapeRef a, ShapeRef b);

  Kind kind() const { return kind_; }
  bool isGenerator() const;

  /// Shape arguments of a generator (empty for Id/Comp/SumM/ProdM/Copair;
  /// Id keeps its shape here as the single argument).
  const std::vector<ShapeRef>& shapes() const { return shapes_; }

  /// Children of Comp/SumM/ProdM/Copair. For Comp, first() is the later
  /// morphism ("after") and second() the earlier one ("before").
  const WitnessRef& first() const { return first_; }
  const WitnessRef& second() const { return second_; }

 private:
  WitnessTerm(Kind k, std::vector<ShapeRef> shapes, WitnessRef a, WitnessRef b)
      : kind_(k), shapes_(std::move(shapes)), first_(std::move(a)), second_(std::move(b)) {}

  Kind kind_;
  std::vector<ShapeRef> shapes_;
  WitnessRef first_, second_;
};

/// Source and target of a morphism term.
struct MorType {
  ShapeRef source;
  ShapeRef target;
};

/// Signature of a generator: arity plus source/target shape patterns over
/// slot placeholders. Patterns drive typechecking and naturality squares.
struct GenSig {
  int arity;
  ShapeRef source;  // pattern over slot variables
  ShapeRef target;
  const char* name;  // grammar spelling, e.g. "bT_over"
};

/// Signature lookup for generator kinds (including Inl/Inr).
const GenSig& genSig(WitnessTerm::Kind k);

/// Substitutes slot placeholders of a signature pattern by concrete shapes.
ShapeRef instantiatePattern(const ShapeRef& pattern, const std::vector<ShapeRef>& args);

/// Assigns every term a source and target shape. Throws TypeError on
/// composition mismatch (reporting both offending shapes) and on copairing
/// of morphisms with different targets.
MorType typecheck(const WitnessRef& t);

/// Syntactic inverse. Throws NotInvertibleError when the term contains
/// Inl, Inr or Copair.
WitnessRef invert(const WitnessRef& t);

/// The two composites of the naturality square of a generator, instantiated
/// at the sources/targets of the argument morphisms. For BPlus with f: A->A'
/// and g: B->B' this returns
///   (SumM(g,f) . BPlus(A,B),  BPlus(A',B') . SumM(f,g))
/// both typed A+B -> B'+A'. Throws TypeError on arity mismatch or when an
/// argument fails to typecheck.
std::pair<WitnessRef, WitnessRef> naturalitySquare(WitnessTerm::Kind gen,
                                                   const std::vector<WitnessRef>& args);

/// Structural equality of terms.
bool termEq(const WitnessRef& a, const WitnessRef& b);

/// Printer matching the CLI grammar (diagrammatic ';' for composition).
std::string renderTerm(const WitnessRef& t);

/// Removes identity detours: Comp with an Id side collapses, and SumM/ProdM
/// of two identities becomes the identity of the composite shape. Purely
/// syntactic and type-preserving.
WitnessRef simplifyTerm(const WitnessRef& t);

}  // namespace rigcat
