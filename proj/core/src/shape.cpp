#include "rigcat/shape.hpp"

#include <cctype>
#include <utility>

#include "rigcat/errors.hpp"

namespace rigcat {

ShapeRef Shape::var(std::string name) {
  if (name.empty()) throw EnvError("shape variable name must be nonempty");
  return ShapeRef(new Shape(Kind::Var, std::move(name), nullptr, nullptr));
}

const ShapeRef& Shape::zero() {
  static const ShapeRef z(new Shape(Kind::Zero, {}, nullptr, nullptr));
  return z;
}

const ShapeRef& Shape::one() {
  static const ShapeRef i(new Shape(Kind::One, {}, nullptr, nullptr));
  return i;
}

ShapeRef Shape::sum(ShapeRef left, ShapeRef right) {
  return ShapeRef(new Shape(Kind::Sum, {}, std::move(left), std::move(right)));
}

ShapeRef Shape::prod(ShapeRef left, ShapeRef right) {
  return ShapeRef(new Shape(Kind::Prod, {}, std::move(left), std::move(right)));
}

std::size_t Shape::nodeCount() const {
  switch (kind_) {
    case Kind::Sum:
    case Kind::Prod:
      return 1 + left_->nodeCount() + right_->nodeCount();
    default:
      return 1;
  }
}

bool shapeEq(const ShapeRef& a, const ShapeRef& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Shape::Kind::Var:
      return a->name() == b->name();
    case Shape::Kind::Zero:
    case Shape::Kind::One:
      return true;
    case Shape::Kind::Sum:
    case Shape::Kind::Prod:
      return shapeEq(a->left(), b->left()) && shapeEq(a->right(), b->right());
  }
  return false;
}

namespace {

void collectVars(const ShapeRef& s, std::set<std::string>& out) {
  switch (s->kind()) {
    case Shape::Kind::Var:
      out.insert(s->name());
      break;
    case Shape::Kind::Sum:
    case Shape::Kind::Prod:
      collectVars(s->left(), out);
      collectVars(s->right(), out);
      break;
    default:
      break;
  }
}

void renderInto(const ShapeRef& s, std::string& out, bool nested) {
  switch (s->kind()) {
    case Shape::Kind::Var:
      out += s->name();
      break;
    case Shape::Kind::Zero:
      out += '0';
      break;
    case Shape::Kind::One:
      out += 'I';
      break;
    case Shape::Kind::Sum:
    case Shape::Kind::Prod: {
      if (nested) out += '(';
      renderInto(s->left(), out, true);
      out += (s->kind() == Shape::Kind::Sum) ? '+' : '*';
      renderInto(s->right(), out, true);
      if (nested) out += ')';
      break;
    }
  }
}

}  // namespace

std::set<std::string> freeVars(const ShapeRef& s) {
  std::set<std::string> out;
  collectVars(s, out);
  return out;
}

std::string renderShape(const ShapeRef& s) {
  std::string out;
  renderInto(s, out, false);
  return out;
}

void Env::bind(const std::string& var, std::vector<Atom> atoms) {
  std::set<std::string> seen;
  for (const Atom& a : atoms) {
    if (!seen.insert(a.label).second) {
      throw EnvError("duplicate atom label '" + a.label + "' in binding for '" + var + "'");
    }
  }
  bindings_[var] = std::move(atoms);
}

bool Env::contains(const std::string& var) const { return bindings_.count(var) != 0; }

const std::vector<Atom>& Env::at(const std::string& var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) throw EnvError("unbound shape variable '" + var + "'");
  return it->second;
}

std::vector<Atom> defaultAtoms(const std::string& var, std::size_t dim, int degree) {
  std::string base;
  for (char c : var) base += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::vector<Atom> atoms;
  atoms.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    atoms.push_back(Atom{base + std::to_string(i), degree});
  }
  return atoms;
}

std::size_t cardinality(const ShapeRef& s, const Env& e) {
  switch (s->kind()) {
    case Shape::Kind::Var:
      return e.at(s->name()).size();
    case Shape::Kind::Zero:
      return 0;
    case Shape::Kind::One:
      return 1;
    case Shape::Kind::Sum:
      return cardinality(s->left(), e) + cardinality(s->right(), e);
    case Shape::Kind::Prod:
      return cardinality(s->left(), e) * cardinality(s->right(), e);
  }
  return 0;
}

}  // namespace rigcat
