#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace rigcat {

class Shape;
using ShapeRef = std::shared_ptr<const Shape>;

/// Object expression over the rig signature: variables, 0, I, +, *.
///
/// Shapes are purely syntactic trees. There is no auto-simplification
/// (no silent 0+A -> A): identifications of that kind must be carried by
/// explicit witness terms, never by the representation.
class Shape {
 public:
  enum class Kind { Var, Zero, One, Sum, Prod };

  static ShapeRef var(std::string name);
  static const ShapeRef& zero();
  static const ShapeRef& one();
  static ShapeRef sum(ShapeRef left, ShapeRef right);
  static ShapeRef prod(ShapeRef left, ShapeRef right);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }  // Var only
  const ShapeRef& left() const { return left_; }     // Sum/Prod only
  const ShapeRef& right() const { return right_; }   // Sum/Prod only

  std::size_t nodeCount() const;

 private:
  Shape(Kind k, std::string name, ShapeRef l, ShapeRef r)
      : kind_(k), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {}

  Kind kind_;
  std::string name_;
  ShapeRef left_, right_;
};

/// Structural equality; the only equality on shapes.
bool shapeEq(const ShapeRef& a, const ShapeRef& b);

/// The set of variable names occurring in s.
std::set<std::string> freeVars(const ShapeRef& s);

/// Printer matching the CLI grammar: 0, I, idents, binary + and * with
/// parentheses around every nested binary subterm.
std::string renderShape(const ShapeRef& s);

/// One basis element of a bound object. Labels are unique within a binding;
/// the degree grades the element (0 everywhere gives symmetric behavior,
/// nonzero degrees activate nontrivial braiding in the graded backend).
struct Atom {
  std::string label;
  int degree = 0;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.label == b.label && a.degree == b.degree;
  }
};

/// Binding of shape variables to ordered sequences of atoms.
class Env {
 public:
  Env() = default;

  /// Binds (or rebinds) a variable. Throws EnvError when two atoms in the
  /// sequence share a label.
  void bind(const std::string& var, std::vector<Atom> atoms);

  bool contains(const std::string& var) const;

  /// Lookup that throws EnvError naming the variable when unbound.
  const std::vector<Atom>& at(const std::string& var) const;

  const std::map<std::string, std::vector<Atom>>& bindings() const { return bindings_; }

 private:
  std::map<std::string, std::vector<Atom>> bindings_;
};

/// |denote(s, e)|: Var -> binding length, Zero -> 0, One -> 1,
/// Sum -> sum, Prod -> product. Throws EnvError on unbound variables.
std::size_t cardinality(const ShapeRef& s, const Env& e);

/// Canonical atoms for a variable: labels "a0", "a1", ... are the
/// lowercased variable name plus the position, all with the same degree.
std::vector<Atom> defaultAtoms(const std::string& var, std::size_t dim, int degree = 0);

}  // namespace rigcat
