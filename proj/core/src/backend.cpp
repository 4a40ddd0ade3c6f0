#include "rigcat/backend.hpp"

#include <map>
#include <utility>

#include "rigcat/errors.hpp"

namespace rigcat {

struct BasisVector::Node {
  Atom atom{};
  std::size_t pos = 0;
  std::vector<BasisVector> kids;
  long degree = 0;
};

BasisVector BasisVector::atom(Atom a, std::size_t pos) {
  auto n = std::make_shared<Node>();
  n->degree = a.degree;
  n->atom = std::move(a);
  n->pos = pos;
  return BasisVector(Kind::Atom, std::move(n));
}

BasisVector BasisVector::unit() {
  static const BasisVector u(Kind::Unit, std::make_shared<Node>());
  return u;
}

BasisVector BasisVector::left(BasisVector v) {
  auto n = std::make_shared<Node>();
  n->degree = v.degree();
  n->kids.push_back(std::move(v));
  return BasisVector(Kind::Left, std::move(n));
}

BasisVector BasisVector::right(BasisVector v) {
  auto n = std::make_shared<Node>();
  n->degree = v.degree();
  n->kids.push_back(std::move(v));
  return BasisVector(Kind::Right, std::move(n));
}

BasisVector BasisVector::pair(BasisVector l, BasisVector r) {
  auto n = std::make_shared<Node>();
  n->degree = l.degree() + r.degree();
  n->kids.push_back(std::move(l));
  n->kids.push_back(std::move(r));
  return BasisVector(Kind::Pair, std::move(n));
}

const Atom& BasisVector::atomValue() const { return node_->atom; }
std::size_t BasisVector::atomPos() const { return node_->pos; }
const BasisVector& BasisVector::inner() const { return node_->kids[0]; }
const BasisVector& BasisVector::leftPart() const { return node_->kids[0]; }
const BasisVector& BasisVector::rightPart() const { return node_->kids[1]; }
long BasisVector::degree() const { return node_->degree; }

bool operator==(const BasisVector& a, const BasisVector& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case BasisVector::Kind::Atom:
      return a.atomValue() == b.atomValue();
    case BasisVector::Kind::Unit:
      return true;
    case BasisVector::Kind::Left:
    case BasisVector::Kind::Right:
      return a.inner() == b.inner();
    case BasisVector::Kind::Pair:
      return a.leftPart() == b.leftPart() && a.rightPart() == b.rightPart();
  }
  return false;
}

namespace {

void renderBasisInto(const BasisVector& v, std::string& out) {
  switch (v.kind()) {
    case BasisVector::Kind::Atom:
      out += v.atomValue().label;
      break;
    case BasisVector::Kind::Unit:
      out += 'I';
      break;
    case BasisVector::Kind::Left:
      out += "L(";
      renderBasisInto(v.inner(), out);
      out += ')';
      break;
    case BasisVector::Kind::Right:
      out += "R(";
      renderBasisInto(v.inner(), out);
      out += ')';
      break;
    case BasisVector::Kind::Pair:
      out += '(';
      renderBasisInto(v.leftPart(), out);
      out += ',';
      renderBasisInto(v.rightPart(), out);
      out += ')';
      break;
  }
}

}  // namespace

std::string renderBasis(const BasisVector& v) {
  std::string out;
  renderBasisInto(v, out);
  return out;
}

ConcreteMorphism::ConcreteMorphism(std::size_t sourceDim, std::size_t targetDim, long phaseOrder)
    : sourceDim_(sourceDim), targetDim_(targetDim), phaseOrder_(phaseOrder),
      entries_(sourceDim) {
  if (phaseOrder < 1) throw BackendError("phase order must be at least 1");
}

ConcreteMorphism ConcreteMorphism::identityMor(std::size_t dim, long phaseOrder) {
  ConcreteMorphism m(dim, dim, phaseOrder);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 0);
  return m;
}

void ConcreteMorphism::set(std::size_t col, std::size_t row, long phaseExp) {
  if (col >= sourceDim_ || row >= targetDim_) {
    throw BackendError("morphism entry out of range");
  }
  if (entries_[col].has_value()) throw BackendError("column already has an entry");
  long n = phaseOrder_;
  entries_[col] = Entry{row, ((phaseExp % n) + n) % n};
}

const std::optional<ConcreteMorphism::Entry>& ConcreteMorphism::at(std::size_t col) const {
  if (col >= sourceDim_) throw BackendError("column index out of range");
  return entries_[col];
}

bool ConcreteMorphism::fullyDefined() const {
  for (const auto& e : entries_) {
    if (!e.has_value()) return false;
  }
  return true;
}

bool ConcreteMorphism::isPermutation() const {
  if (sourceDim_ != targetDim_) return false;
  std::vector<char> seen(targetDim_, 0);
  for (const auto& e : entries_) {
    if (!e.has_value()) return false;
    if (seen[e->row]) return false;
    seen[e->row] = 1;
  }
  return true;
}

ConcreteMorphism compose(const ConcreteMorphism& g, const ConcreteMorphism& f) {
  if (f.targetDim() != g.sourceDim()) {
    throw BackendError("composition dimension mismatch: " + std::to_string(f.targetDim()) +
                       " vs " + std::to_string(g.sourceDim()));
  }
  if (f.phaseOrder() != g.phaseOrder()) throw BackendError("phase order mismatch");
  ConcreteMorphism out(f.sourceDim(), g.targetDim(), f.phaseOrder());
  for (std::size_t col = 0; col < f.sourceDim(); ++col) {
    const auto& e1 = f.at(col);
    if (!e1) continue;
    const auto& e2 = g.at(e1->row);
    if (!e2) continue;
    out.set(col, e2->row, e1->phaseExp + e2->phaseExp);
  }
  return out;
}

ConcreteMorphism directSum(const ConcreteMorphism& f, const ConcreteMorphism& g) {
  if (f.phaseOrder() != g.phaseOrder()) throw BackendError("phase order mismatch");
  ConcreteMorphism out(f.sourceDim() + g.sourceDim(), f.targetDim() + g.targetDim(),
                       f.phaseOrder());
  for (std::size_t col = 0; col < f.sourceDim(); ++col) {
    if (const auto& e = f.at(col)) out.set(col, e->row, e->phaseExp);
  }
  for (std::size_t col = 0; col < g.sourceDim(); ++col) {
    if (const auto& e = g.at(col)) {
      out.set(f.sourceDim() + col, f.targetDim() + e->row, e->phaseExp);
    }
  }
  return out;
}

ConcreteMorphism tensor(const ConcreteMorphism& f, const ConcreteMorphism& g) {
  if (f.phaseOrder() != g.phaseOrder()) throw BackendError("phase order mismatch");
  ConcreteMorphism out(f.sourceDim() * g.sourceDim(), f.targetDim() * g.targetDim(),
                       f.phaseOrder());
  for (std::size_t i = 0; i < f.sourceDim(); ++i) {
    const auto& e1 = f.at(i);
    if (!e1) continue;
    for (std::size_t j = 0; j < g.sourceDim(); ++j) {
      const auto& e2 = g.at(j);
      if (!e2) continue;
      out.set(i * g.sourceDim() + j, e1->row * g.targetDim() + e2->row,
              e1->phaseExp + e2->phaseExp);
    }
  }
  return out;
}

ConcreteMorphism inverse(const ConcreteMorphism& m) {
  if (!m.isPermutation()) {
    throw BackendError("not invertible: morphism is not a permutation");
  }
  ConcreteMorphism out(m.targetDim(), m.sourceDim(), m.phaseOrder());
  for (std::size_t col = 0; col < m.sourceDim(); ++col) {
    const auto& e = m.at(col);
    out.set(e->row, col, -e->phaseExp);
  }
  return out;
}

bool morEq(const ConcreteMorphism& a, const ConcreteMorphism& b) {
  if (a.sourceDim() != b.sourceDim() || a.targetDim() != b.targetDim() ||
      a.phaseOrder() != b.phaseOrder()) {
    return false;
  }
  for (std::size_t col = 0; col < a.sourceDim(); ++col) {
    if (a.at(col) != b.at(col)) return false;
  }
  return true;
}

namespace {

void denoteInto(const ShapeRef& s, const Env& e, const BackendConfig& cfg,
                std::vector<BasisVector>& out) {
  switch (s->kind()) {
    case Shape::Kind::Var: {
      const auto& atoms = e.at(s->name());
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        out.push_back(BasisVector::atom(atoms[i], i));
      }
      break;
    }
    case Shape::Kind::Zero:
      break;
    case Shape::Kind::One:
      out.push_back(BasisVector::unit());
      break;
    case Shape::Kind::Sum: {
      std::vector<BasisVector> l, r;
      denoteInto(s->left(), e, cfg, l);
      denoteInto(s->right(), e, cfg, r);
      if (cfg.mutation == Mutation::FlipSumTags) {
        for (auto& v : r) out.push_back(BasisVector::right(std::move(v)));
        for (auto& v : l) out.push_back(BasisVector::left(std::move(v)));
      } else {
        for (auto& v : l) out.push_back(BasisVector::left(std::move(v)));
        for (auto& v : r) out.push_back(BasisVector::right(std::move(v)));
      }
      break;
    }
    case Shape::Kind::Prod: {
      std::vector<BasisVector> l, r;
      denoteInto(s->left(), e, cfg, l);
      denoteInto(s->right(), e, cfg, r);
      for (const auto& u : l) {
        for (const auto& v : r) out.push_back(BasisVector::pair(u, v));
      }
      break;
    }
  }
}

/// Cardinalities of every subshape, for O(depth) index arithmetic.
class Layout {
 public:
  Layout(const ShapeRef& root, const Env& e) { fill(root, e); }

  std::size_t card(const Shape* s) const { return cards_.at(s); }

 private:
  std::size_t fill(const ShapeRef& s, const Env& e) {
    std::size_t c = 0;
    switch (s->kind()) {
      case Shape::Kind::Var:
        c = e.at(s->name()).size();
        break;
      case Shape::Kind::Zero:
        c = 0;
        break;
      case Shape::Kind::One:
        c = 1;
        break;
      case Shape::Kind::Sum:
        c = fill(s->left(), e) + fill(s->right(), e);
        break;
      case Shape::Kind::Prod:
        c = fill(s->left(), e) * fill(s->right(), e);
        break;
    }
    cards_[s.get()] = c;
    return c;
  }

  std::map<const Shape*, std::size_t> cards_;
};

std::size_t indexIn(const ShapeRef& s, const BasisVector& v, const Layout& lay,
                    const BackendConfig& cfg) {
  switch (s->kind()) {
    case Shape::Kind::Var:
      if (v.kind() != BasisVector::Kind::Atom || v.atomPos() >= lay.card(s.get())) {
        throw BackendError("basis vector does not match shape " + renderShape(s));
      }
      return v.atomPos();
    case Shape::Kind::One:
      if (v.kind() != BasisVector::Kind::Unit) {
        throw BackendError("basis vector does not match shape I");
      }
      return 0;
    case Shape::Kind::Zero:
      throw BackendError("shape 0 has no basis vectors");
    case Shape::Kind::Sum: {
      bool flip = cfg.mutation == Mutation::FlipSumTags;
      if (v.kind() == BasisVector::Kind::Left) {
        std::size_t off = flip ? lay.card(s->right().get()) : 0;
        return off + indexIn(s->left(), v.inner(), lay, cfg);
      }
      if (v.kind() == BasisVector::Kind::Right) {
        std::size_t off = flip ? 0 : lay.card(s->left().get());
        return off + indexIn(s->right(), v.inner(), lay, cfg);
      }
      throw BackendError("basis vector does not match shape " + renderShape(s));
    }
    case Shape::Kind::Prod:
      if (v.kind() != BasisVector::Kind::Pair) {
        throw BackendError("basis vector does not match shape " + renderShape(s));
      }
      return indexIn(s->left(), v.leftPart(), lay, cfg) * lay.card(s->right().get()) +
             indexIn(s->right(), v.rightPart(), lay, cfg);
  }
  throw BackendError("unreachable shape kind");
}

using WK = WitnessTerm::Kind;

/// Pointwise action of a generator on one source basis vector, with the
/// phase exponent it contributes. Only the braidings carry phases.
std::pair<BasisVector, long> genVectorAction(WK k, const BasisVector& v,
                                             const BackendConfig& cfg) {
  using BV = BasisVector;
  auto mismatch = [&]() -> std::pair<BasisVector, long> {
    throw BackendError("basis vector shape mismatch in generator action");
  };
  switch (k) {
    case WK::Id:
      return {v, 0};
    case WK::APlus:
      if (v.kind() == BV::Kind::Left) {
        const BV& in = v.inner();
        if (in.kind() == BV::Kind::Left) return {BV::left(in.inner()), 0};
        if (in.kind() == BV::Kind::Right) return {BV::right(BV::left(in.inner())), 0};
        return mismatch();
      }
      if (v.kind() == BV::Kind::Right) return {BV::right(BV::right(v.inner())), 0};
      return mismatch();
    case WK::APlusInv:
      if (v.kind() == BV::Kind::Left) return {BV::left(BV::left(v.inner())), 0};
      if (v.kind() == BV::Kind::Right) {
        const BV& in = v.inner();
        if (in.kind() == BV::Kind::Left) return {BV::left(BV::right(in.inner())), 0};
        if (in.kind() == BV::Kind::Right) return {BV::right(in.inner()), 0};
        return mismatch();
      }
      return mismatch();
    case WK::ATimes: {
      if (v.kind() != BV::Kind::Pair || v.leftPart().kind() != BV::Kind::Pair) {
        return mismatch();
      }
      const BV& l = v.leftPart();
      return {BV::pair(l.leftPart(), BV::pair(l.rightPart(), v.rightPart())), 0};
    }
    case WK::ATimesInv: {
      if (v.kind() != BV::Kind::Pair || v.rightPart().kind() != BV::Kind::Pair) {
        return mismatch();
      }
      const BV& r = v.rightPart();
      return {BV::pair(BV::pair(v.leftPart(), r.leftPart()), r.rightPart()), 0};
    }
    case WK::BPlus:
      if (v.kind() == BV::Kind::Left) return {BV::right(v.inner()), 0};
      if (v.kind() == BV::Kind::Right) return {BV::left(v.inner()), 0};
      return mismatch();
    case WK::BTimesOver:
      if (v.kind() != BV::Kind::Pair) return mismatch();
      return {BV::pair(v.rightPart(), v.leftPart()),
              v.leftPart().degree() * v.rightPart().degree()};
    case WK::BTimesUnder: {
      if (v.kind() != BV::Kind::Pair) return mismatch();
      long exp = cfg.mutation == Mutation::DropUnderPhase
                     ? 0
                     : -(v.leftPart().degree() * v.rightPart().degree());
      return {BV::pair(v.rightPart(), v.leftPart()), exp};
    }
    case WK::LPlus:
      if (v.kind() == BV::Kind::Right) return {v.inner(), 0};
      return mismatch();
    case WK::LPlusInv:
      return {BV::right(v), 0};
    case WK::RPlus:
      if (v.kind() == BV::Kind::Left) return {v.inner(), 0};
      return mismatch();
    case WK::RPlusInv:
      return {BV::left(v), 0};
    case WK::LTimes:
      if (v.kind() != BV::Kind::Pair || v.leftPart().kind() != BV::Kind::Unit) {
        return mismatch();
      }
      return {v.rightPart(), 0};
    case WK::LTimesInv:
      return {BV::pair(BV::unit(), v), 0};
    case WK::RTimes:
      if (v.kind() != BV::Kind::Pair || v.rightPart().kind() != BV::Kind::Unit) {
        return mismatch();
      }
      return {v.leftPart(), 0};
    case WK::RTimesInv:
      return {BV::pair(v, BV::unit()), 0};
    case WK::DistL: {
      if (v.kind() != BV::Kind::Pair) return mismatch();
      const BV& r = v.rightPart();
      if (r.kind() == BV::Kind::Left) return {BV::left(BV::pair(v.leftPart(), r.inner())), 0};
      if (r.kind() == BV::Kind::Right) return {BV::right(BV::pair(v.leftPart(), r.inner())), 0};
      return mismatch();
    }
    case WK::DistLInv: {
      if (v.kind() == BV::Kind::Left && v.inner().kind() == BV::Kind::Pair) {
        const BV& p = v.inner();
        return {BV::pair(p.leftPart(), BV::left(p.rightPart())), 0};
      }
      if (v.kind() == BV::Kind::Right && v.inner().kind() == BV::Kind::Pair) {
        const BV& p = v.inner();
        return {BV::pair(p.leftPart(), BV::right(p.rightPart())), 0};
      }
      return mismatch();
    }
    case WK::DistR: {
      if (v.kind() != BV::Kind::Pair) return mismatch();
      const BV& l = v.leftPart();
      if (l.kind() == BV::Kind::Left) return {BV::left(BV::pair(l.inner(), v.rightPart())), 0};
      if (l.kind() == BV::Kind::Right) return {BV::right(BV::pair(l.inner(), v.rightPart())), 0};
      return mismatch();
    }
    case WK::DistRInv: {
      if (v.kind() == BV::Kind::Left && v.inner().kind() == BV::Kind::Pair) {
        const BV& p = v.inner();
        return {BV::pair(BV::left(p.leftPart()), p.rightPart()), 0};
      }
      if (v.kind() == BV::Kind::Right && v.inner().kind() == BV::Kind::Pair) {
        const BV& p = v.inner();
        return {BV::pair(BV::right(p.leftPart()), p.rightPart()), 0};
      }
      return mismatch();
    }
    case WK::Inl:
      return {BV::left(v), 0};
    case WK::Inr:
      return {BV::right(v), 0};
    default:
      // Zero absorptions act on empty bases; any vector here is a bug.
      return mismatch();
  }
}

/// DistL with its two output blocks written to swapped positions: the
/// left-summand images land where the right block should start and vice
/// versa. Deliberately wrong; exists to prove D-assoc+ has teeth.
ConcreteMorphism mutatedDistL(const WitnessRef& t, const Env& e, const BackendConfig& cfg,
                              const std::vector<BasisVector>& src, std::size_t targetDim,
                              long n) {
  const ShapeRef& a = t->shapes()[0];
  const ShapeRef& b = t->shapes()[1];
  const ShapeRef& c = t->shapes()[2];
  std::size_t cb = cardinality(b, e), cc = cardinality(c, e);
  Layout layA(a, e), layB(b, e), layC(c, e);
  ConcreteMorphism out(src.size(), targetDim, n);
  std::size_t ca = cardinality(a, e);
  for (std::size_t col = 0; col < src.size(); ++col) {
    const BasisVector& v = src[col];
    if (v.kind() != BasisVector::Kind::Pair) throw BackendError("malformed basis vector");
    std::size_t i = indexIn(a, v.leftPart(), layA, cfg);
    const BasisVector& tagged = v.rightPart();
    if (tagged.kind() == BasisVector::Kind::Left) {
      std::size_t j = indexIn(b, tagged.inner(), layB, cfg);
      out.set(col, ca * cc + i * cb + j, 0);
    } else if (tagged.kind() == BasisVector::Kind::Right) {
      std::size_t k = indexIn(c, tagged.inner(), layC, cfg);
      out.set(col, i * cc + k, 0);
    } else {
      throw BackendError("malformed basis vector");
    }
  }
  return out;
}

ConcreteMorphism compileRec(const WitnessRef& t, const Env& e, const BackendConfig& cfg) {
  long n = cfg.effectivePhaseOrder();
  switch (t->kind()) {
    case WK::Comp:
      return compose(compileRec(t->first(), e, cfg), compileRec(t->second(), e, cfg));
    case WK::SumM:
      return directSum(compileRec(t->first(), e, cfg), compileRec(t->second(), e, cfg));
    case WK::ProdM:
      return tensor(compileRec(t->first(), e, cfg), compileRec(t->second(), e, cfg));
    case WK::Copair: {
      ConcreteMorphism f = compileRec(t->first(), e, cfg);
      ConcreteMorphism g = compileRec(t->second(), e, cfg);
      MorType tf = typecheck(t->first());
      MorType tg = typecheck(t->second());
      std::vector<BasisVector> src =
          denote(Shape::sum(tf.source, tg.source), e, cfg);
      ConcreteMorphism out(src.size(), f.targetDim(), n);
      std::size_t leftSeen = 0, rightSeen = 0;
      for (std::size_t col = 0; col < src.size(); ++col) {
        const bool isLeft = src[col].kind() == BasisVector::Kind::Left;
        const auto& entry = isLeft ? f.at(leftSeen++) : g.at(rightSeen++);
        if (entry) out.set(col, entry->row, entry->phaseExp);
      }
      return out;
    }
    default: {
      MorType ty = typecheck(t);
      std::vector<BasisVector> src = denote(ty.source, e, cfg);
      std::size_t targetDim = cardinality(ty.target, e);
      if (t->kind() == WK::DistL && cfg.mutation == Mutation::SwapDistLBlocks) {
        return mutatedDistL(t, e, cfg, src, targetDim, n);
      }
      ConcreteMorphism out(src.size(), targetDim, n);
      Layout lay(ty.target, e);
      for (std::size_t col = 0; col < src.size(); ++col) {
        auto [w, exp] = genVectorAction(t->kind(), src[col], cfg);
        out.set(col, indexIn(ty.target, w, lay, cfg), exp);
      }
      return out;
    }
  }
}

}  // namespace

std::vector<BasisVector> denote(const ShapeRef& s, const Env& e, const BackendConfig& cfg) {
  std::vector<BasisVector> out;
  denoteInto(s, e, cfg, out);
  return out;
}

std::size_t basisIndex(const ShapeRef& s, const BasisVector& v, const Env& e,
                       const BackendConfig& cfg) {
  Layout lay(s, e);
  return indexIn(s, v, lay, cfg);
}

ConcreteMorphism compile(const WitnessRef& t, const Env& e, const BackendConfig& cfg) {
  typecheck(t);
  if (cfg.effectivePhaseOrder() < 1) throw BackendError("phase order must be at least 1");
  return compileRec(t, e, cfg);
}

ConcreteMorphism copairUniversal(const ConcreteMorphism& f, const ConcreteMorphism& g) {
  if (f.targetDim() != g.targetDim()) {
    throw BackendError("copair target mismatch: " + std::to_string(f.targetDim()) + " vs " +
                       std::to_string(g.targetDim()));
  }
  if (f.phaseOrder() != g.phaseOrder()) throw BackendError("phase order mismatch");
  ConcreteMorphism out(f.sourceDim() + g.sourceDim(), f.targetDim(), f.phaseOrder());
  for (std::size_t col = 0; col < f.sourceDim(); ++col) {
    if (const auto& e = f.at(col)) out.set(col, e->row, e->phaseExp);
  }
  for (std::size_t col = 0; col < g.sourceDim(); ++col) {
    if (const auto& e = g.at(col)) out.set(f.sourceDim() + col, e->row, e->phaseExp);
  }
  return out;
}

}  // namespace rigcat
