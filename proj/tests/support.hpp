#pragma once

// Shared generators and independent oracles for the unit and acceptance
// suites. Nothing here may call into the code path it is used to check:
// the expansion oracle in particular derives expected indices from shape
// combinatorics alone, never from witness terms.

#include <cctype>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rigcat/backend.hpp"
#include "rigcat/rng.hpp"
#include "rigcat/shape.hpp"
#include "rigcat/witness.hpp"

namespace rigcat::testsupport {

/// Leaves used by exhaustive shape sweeps: three variables plus both units.
inline const std::vector<ShapeRef>& sweepLeaves() {
  static const std::vector<ShapeRef> leaves = {Shape::var("A"), Shape::var("B"),
                                               Shape::var("C"), Shape::zero(), Shape::one()};
  return leaves;
}

/// All shapes over sweepLeaves() grouped by node count (binary trees have
/// odd counts; even slots stay empty).
inline std::vector<std::vector<ShapeRef>> shapesBySize(std::size_t maxNodes) {
  std::vector<std::vector<ShapeRef>> bySize(maxNodes + 1);
  if (maxNodes >= 1) bySize[1] = sweepLeaves();
  for (std::size_t n = 3; n <= maxNodes; n += 2) {
    for (std::size_t k = 1; k + 2 <= n; k += 2) {
      for (const ShapeRef& l : bySize[k]) {
        for (const ShapeRef& r : bySize[n - 1 - k]) {
          bySize[n].push_back(Shape::sum(l, r));
          bySize[n].push_back(Shape::prod(l, r));
        }
      }
    }
  }
  return bySize;
}

inline std::string lowercased(const std::string& s) {
  std::string out;
  for (char c : s) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

/// Every assignment of dimensions 0..maxDim to the given variables, with
/// deterministic degrees cycling through {-1, 0, 1}.
inline std::vector<Env> envSweep(const std::set<std::string>& vars, std::size_t maxDim) {
  std::vector<std::string> vs(vars.begin(), vars.end());
  std::vector<std::size_t> dims(vs.size(), 0);
  std::vector<Env> out;
  while (true) {
    Env e;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::vector<Atom> atoms;
      std::string base = lowercased(vs[i]);
      for (std::size_t j = 0; j < dims[i]; ++j) {
        atoms.push_back(Atom{base + std::to_string(j), static_cast<int>((i + j) % 3) - 1});
      }
      e.bind(vs[i], std::move(atoms));
    }
    out.push_back(std::move(e));
    std::size_t i = 0;
    for (; i < dims.size(); ++i) {
      if (++dims[i] <= maxDim) break;
      dims[i] = 0;
    }
    if (i == dims.size()) break;
  }
  return out;
}

inline Env randomEnvFor(const std::set<std::string>& vars, SplitMix64& rng, long maxDim,
                        long minDim = 0, int degLo = -2, int degHi = 2) {
  Env e;
  for (const std::string& v : vars) {
    long dim = rng.rangeInt(minDim, maxDim);
    std::vector<Atom> atoms;
    std::string base = lowercased(v);
    for (long i = 0; i < dim; ++i) {
      atoms.push_back(Atom{base + std::to_string(i), static_cast<int>(rng.rangeInt(degLo, degHi))});
    }
    e.bind(v, std::move(atoms));
  }
  return e;
}

inline ShapeRef randomShape(SplitMix64& rng, int maxDepth,
                            const std::vector<std::string>& vars) {
  if (maxDepth == 0 || rng.below(3) == 0) {
    std::size_t pick = rng.below(vars.size() + 2);
    if (pick < vars.size()) return Shape::var(vars[pick]);
    return pick == vars.size() ? Shape::zero() : Shape::one();
  }
  ShapeRef l = randomShape(rng, maxDepth - 1, vars);
  ShapeRef r = randomShape(rng, maxDepth - 1, vars);
  return rng.below(2) == 0 ? Shape::sum(l, r) : Shape::prod(l, r);
}

inline void collectVars(const WitnessRef& t, std::set<std::string>& out) {
  for (const ShapeRef& s : t->shapes()) {
    for (const std::string& v : freeVars(s)) out.insert(v);
  }
  if (t->first()) collectVars(t->first(), out);
  if (t->second()) collectVars(t->second(), out);
}

// ---------------------------------------------------------------------------
// Expansion oracle.
//
// Predicts where a distributing witness must send every basis vector, by
// pure combinatorics: each shape expands to an ordered list of monomial
// blocks (left- or right-factor major), and a basis vector's destination is
// its block's prefix sum plus its offset inside the block. Zero contributes
// no blocks, One a single singleton block, Var one block per binding.
// ---------------------------------------------------------------------------

struct ExpTree {
  std::vector<std::size_t> sizes;  // instance count per monomial block
  std::shared_ptr<const ExpTree> l, r;
};

inline std::shared_ptr<const ExpTree> buildExp(const ShapeRef& s, const Env& e,
                                               bool leftMajor) {
  auto t = std::make_shared<ExpTree>();
  switch (s->kind()) {
    case Shape::Kind::Var:
      t->sizes = {e.at(s->name()).size()};
      break;
    case Shape::Kind::Zero:
      break;
    case Shape::Kind::One:
      t->sizes = {1};
      break;
    case Shape::Kind::Sum:
      t->l = buildExp(s->left(), e, leftMajor);
      t->r = buildExp(s->right(), e, leftMajor);
      t->sizes = t->l->sizes;
      t->sizes.insert(t->sizes.end(), t->r->sizes.begin(), t->r->sizes.end());
      break;
    case Shape::Kind::Prod: {
      t->l = buildExp(s->left(), e, leftMajor);
      t->r = buildExp(s->right(), e, leftMajor);
      std::size_t nl = t->l->sizes.size(), nr = t->r->sizes.size();
      t->sizes.assign(nl * nr, 0);
      for (std::size_t bl = 0; bl < nl; ++bl) {
        for (std::size_t br = 0; br < nr; ++br) {
          std::size_t block = leftMajor ? bl * nr + br : br * nl + bl;
          t->sizes[block] = t->l->sizes[bl] * t->r->sizes[br];
        }
      }
      break;
    }
  }
  return t;
}

/// (block, offset) of a source basis vector inside the expansion. Within a
/// monomial block the left factor's instances are always major, regardless
/// of block-ordering strategy.
inline std::pair<std::size_t, std::size_t> expPos(const ShapeRef& s, const ExpTree& t,
                                                  const BasisVector& v, bool leftMajor) {
  switch (s->kind()) {
    case Shape::Kind::Var:
      return {0, v.atomPos()};
    case Shape::Kind::One:
      return {0, 0};
    case Shape::Kind::Zero:
      throw std::logic_error("basis vector over the empty shape");
    case Shape::Kind::Sum: {
      if (v.kind() == BasisVector::Kind::Left) {
        return expPos(s->left(), *t.l, v.inner(), leftMajor);
      }
      auto p = expPos(s->right(), *t.r, v.inner(), leftMajor);
      return {t.l->sizes.size() + p.first, p.second};
    }
    case Shape::Kind::Prod: {
      auto pl = expPos(s->left(), *t.l, v.leftPart(), leftMajor);
      auto pr = expPos(s->right(), *t.r, v.rightPart(), leftMajor);
      std::size_t nl = t.l->sizes.size(), nr = t.r->sizes.size();
      std::size_t block = leftMajor ? pl.first * nr + pr.first : pr.first * nl + pl.first;
      return {block, pl.second * t.r->sizes[pr.first] + pr.second};
    }
  }
  throw std::logic_error("unreachable");
}

inline std::size_t oracleIndex(const ShapeRef& s, const ExpTree& t, const BasisVector& v,
                               bool leftMajor) {
  auto [block, offset] = expPos(s, t, v, leftMajor);
  std::size_t idx = offset;
  for (std::size_t b = 0; b < block; ++b) idx += t.sizes[b];
  return idx;
}

/// Atoms of a basis vector, left to right, tags and unit points dropped.
inline void flattenAtoms(const BasisVector& v, std::vector<Atom>& out) {
  switch (v.kind()) {
    case BasisVector::Kind::Atom:
      out.push_back(v.atomValue());
      break;
    case BasisVector::Kind::Unit:
      break;
    case BasisVector::Kind::Left:
    case BasisVector::Kind::Right:
      flattenAtoms(v.inner(), out);
      break;
    case BasisVector::Kind::Pair:
      flattenAtoms(v.leftPart(), out);
      flattenAtoms(v.rightPart(), out);
      break;
  }
}

// ---------------------------------------------------------------------------
// Random invertible terms: a walk of structural rewrite steps. Every step
// is a single invertible generator applied at some position (embedded via
// SumM/ProdM with identities), so the composite is invertible and
// well-typed by construction.
// ---------------------------------------------------------------------------

struct WalkStep {
  WitnessRef w;
  ShapeRef target;
};

inline std::vector<WalkStep> rootMoves(const ShapeRef& s) {
  using W = WitnessTerm;
  std::vector<WalkStep> out;
  auto push = [&out](WitnessRef w) {
    MorType mt = typecheck(w);
    out.push_back({std::move(w), mt.target});
  };
  push(W::lPlusInv(s));
  push(W::rPlusInv(s));
  push(W::lTimesInv(s));
  push(W::rTimesInv(s));
  if (s->kind() == Shape::Kind::Sum) {
    const ShapeRef& a = s->left();
    const ShapeRef& b = s->right();
    push(W::bPlus(a, b));
    if (a->kind() == Shape::Kind::Sum) push(W::aPlus(a->left(), a->right(), b));
    if (b->kind() == Shape::Kind::Sum) push(W::aPlusInv(a, b->left(), b->right()));
    if (a->kind() == Shape::Kind::Zero) push(W::lPlus(b));
    if (b->kind() == Shape::Kind::Zero) push(W::rPlus(a));
    if (a->kind() == Shape::Kind::Prod && b->kind() == Shape::Kind::Prod) {
      if (shapeEq(a->left(), b->left())) {
        push(W::distLInv(a->left(), a->right(), b->right()));
      }
      if (shapeEq(a->right(), b->right())) {
        push(W::distRInv(a->left(), b->left(), a->right()));
      }
    }
  }
  if (s->kind() == Shape::Kind::Prod) {
    const ShapeRef& a = s->left();
    const ShapeRef& b = s->right();
    push(W::bTimesOver(a, b));
    push(W::bTimesUnder(a, b));
    if (a->kind() == Shape::Kind::Prod) push(W::aTimes(a->left(), a->right(), b));
    if (b->kind() == Shape::Kind::Prod) push(W::aTimesInv(a, b->left(), b->right()));
    if (a->kind() == Shape::Kind::One) push(W::lTimes(b));
    if (b->kind() == Shape::Kind::One) push(W::rTimes(a));
    if (a->kind() == Shape::Kind::Zero) push(W::zeroL(b));
    if (b->kind() == Shape::Kind::Zero) push(W::zeroR(a));
    if (b->kind() == Shape::Kind::Sum) push(W::distL(a, b->left(), b->right()));
    if (a->kind() == Shape::Kind::Sum) push(W::distR(a->left(), a->right(), b));
  }
  return out;
}

inline WalkStep randomStep(const ShapeRef& s, SplitMix64& rng) {
  bool composite = s->kind() == Shape::Kind::Sum || s->kind() == Shape::Kind::Prod;
  if (composite && rng.below(2) == 0) {
    bool leftSide = rng.below(2) == 0;
    WalkStep inner = randomStep(leftSide ? s->left() : s->right(), rng);
    bool isSum = s->kind() == Shape::Kind::Sum;
    WitnessRef other = WitnessTerm::id(leftSide ? s->right() : s->left());
    WitnessRef w = leftSide
                       ? (isSum ? WitnessTerm::sumM(inner.w, other)
                                : WitnessTerm::prodM(inner.w, other))
                       : (isSum ? WitnessTerm::sumM(other, inner.w)
                                : WitnessTerm::prodM(other, inner.w));
    ShapeRef tgt = leftSide
                       ? (isSum ? Shape::sum(inner.target, s->right())
                                : Shape::prod(inner.target, s->right()))
                       : (isSum ? Shape::sum(s->left(), inner.target)
                                : Shape::prod(s->left(), inner.target));
    return {w, tgt};
  }
  std::vector<WalkStep> moves = rootMoves(s);
  return moves[rng.below(moves.size())];
}

/// Invertible term of `steps` composed moves starting at s0.
inline WitnessRef randomWalkTerm(const ShapeRef& s0, SplitMix64& rng, int steps) {
  ShapeRef cur = s0;
  WitnessRef acc = WitnessTerm::id(s0);
  for (int i = 0; i < steps; ++i) {
    WalkStep st = randomStep(cur, rng);
    acc = WitnessTerm::comp(st.w, acc);
    cur = st.target;
  }
  return acc;
}

}  // namespace rigcat::testsupport
