#include "rigcat/strictify.hpp"

#include <cstddef>

#include "rigcat/backend.hpp"
#include "rigcat/errors.hpp"

namespace rigcat {

namespace {

using W = WitnessTerm;
using Mono = std::vector<std::string>;
using MonoList = std::vector<Mono>;

ShapeRef monoShape(const Mono& m) {
  if (m.empty()) return Shape::one();
  ShapeRef acc = Shape::var(m.back());
  for (std::size_t i = m.size() - 1; i-- > 0;) {
    acc = Shape::prod(Shape::var(m[i]), acc);
  }
  return acc;
}

ShapeRef nfShapeOf(const MonoList& ms) {
  if (ms.empty()) return Shape::zero();
  ShapeRef acc = monoShape(ms.back());
  for (std::size_t i = ms.size() - 1; i-- > 0;) {
    acc = Shape::sum(monoShape(ms[i]), acc);
  }
  return acc;
}

MonoList tail(const MonoList& ms) { return MonoList(ms.begin() + 1, ms.end()); }

Mono concatMono(const Mono& a, const Mono& b) {
  Mono out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Left factor major: all of mt against ms[0], then ms[1], ...
MonoList crossLeft(const MonoList& ms, const MonoList& mt) {
  MonoList out;
  for (const Mono& m : ms) {
    for (const Mono& t : mt) out.push_back(concatMono(m, t));
  }
  return out;
}

/// Right factor major: all of ms against mt[0], then mt[1], ...
MonoList crossRight(const MonoList& ms, const MonoList& mt) {
  MonoList out;
  for (const Mono& t : mt) {
    for (const Mono& m : ms) out.push_back(concatMono(m, t));
  }
  return out;
}

/// nf(ms) + nf(mt) -> nf(ms ++ mt), reassociating the left list in.
WitnessRef mergePlus(const MonoList& ms, const MonoList& mt) {
  if (ms.empty()) return W::lPlus(nfShapeOf(mt));
  if (ms.size() == 1) {
    if (mt.empty()) return W::rPlus(monoShape(ms[0]));
    return W::id(Shape::sum(monoShape(ms[0]), nfShapeOf(mt)));
  }
  MonoList rest = tail(ms);
  ShapeRef m0 = monoShape(ms[0]);
  return W::comp(W::sumM(W::id(m0), mergePlus(rest, mt)),
                 W::aPlus(m0, nfShapeOf(rest), nfShapeOf(mt)));
}

/// mono(m) * mono(mp) -> mono(m ++ mp), reassociating factors rightward.
WitnessRef monoConcat(const Mono& m, const Mono& mp) {
  if (m.empty()) return W::lTimes(monoShape(mp));
  ShapeRef head = Shape::var(m[0]);
  if (m.size() == 1) {
    if (mp.empty()) return W::rTimes(head);
    return W::id(Shape::prod(head, monoShape(mp)));
  }
  Mono rest(m.begin() + 1, m.end());
  return W::comp(W::prodM(W::id(head), monoConcat(rest, mp)),
                 W::aTimes(head, monoShape(rest), monoShape(mp)));
}

/// mono(m) * nf(mt) -> nf([m ++ t for t in mt]), distributing from the left.
WitnessRef monoTimes(const Mono& m, const MonoList& mt) {
  ShapeRef ms = monoShape(m);
  if (mt.empty()) return W::zeroR(ms);
  if (mt.size() == 1) return monoConcat(m, mt[0]);
  MonoList rest = tail(mt);
  return W::comp(W::sumM(monoConcat(m, mt[0]), monoTimes(m, rest)),
                 W::distL(ms, monoShape(mt[0]), nfShapeOf(rest)));
}

/// nf(ms) * mono(mp) -> nf([m ++ mp for m in ms]), distributing from the right.
WitnessRef timesMono(const MonoList& ms, const Mono& mp) {
  ShapeRef mps = monoShape(mp);
  if (ms.empty()) return W::zeroL(mps);
  if (ms.size() == 1) return monoConcat(ms[0], mp);
  MonoList rest = tail(ms);
  return W::comp(W::sumM(monoConcat(ms[0], mp), timesMono(rest, mp)),
                 W::distR(monoShape(ms[0]), nfShapeOf(rest), mps));
}

/// nf(ms) * nf(mt) -> nf(crossLeft(ms, mt)).
WitnessRef prodLeftMajor(const MonoList& ms, const MonoList& mt) {
  if (ms.empty()) return W::zeroL(nfShapeOf(mt));
  if (ms.size() == 1) return monoTimes(ms[0], mt);
  MonoList rest = tail(ms);
  WitnessRef spread = W::comp(
      W::sumM(monoTimes(ms[0], mt), prodLeftMajor(rest, mt)),
      W::distR(monoShape(ms[0]), nfShapeOf(rest), nfShapeOf(mt)));
  return W::comp(mergePlus(crossLeft({ms[0]}, mt), crossLeft(rest, mt)), spread);
}

/// nf(ms) * nf(mt) -> nf(crossRight(ms, mt)).
WitnessRef prodRightMajor(const MonoList& ms, const MonoList& mt) {
  if (mt.empty()) return W::zeroR(nfShapeOf(ms));
  if (mt.size() == 1) return timesMono(ms, mt[0]);
  MonoList rest = tail(mt);
  WitnessRef spread = W::comp(
      W::sumM(timesMono(ms, mt[0]), prodRightMajor(ms, rest)),
      W::distL(nfShapeOf(ms), monoShape(mt[0]), nfShapeOf(rest)));
  return W::comp(mergePlus(crossRight(ms, {mt[0]}), crossRight(ms, rest)), spread);
}

struct Expansion {
  MonoList monos;
  WitnessRef witness;  // input subshape -> nfShapeOf(monos)
};

Expansion normRec(const ShapeRef& s, bool leftMajor) {
  switch (s->kind()) {
    case Shape::Kind::Var:
      return {{{s->name()}}, W::id(s)};
    case Shape::Kind::Zero:
      return {{}, W::id(s)};
    case Shape::Kind::One:
      return {{Mono{}}, W::id(s)};
    case Shape::Kind::Sum: {
      Expansion l = normRec(s->left(), leftMajor);
      Expansion r = normRec(s->right(), leftMajor);
      WitnessRef w =
          W::comp(mergePlus(l.monos, r.monos), W::sumM(l.witness, r.witness));
      MonoList monos = l.monos;
      monos.insert(monos.end(), r.monos.begin(), r.monos.end());
      return {std::move(monos), std::move(w)};
    }
    case Shape::Kind::Prod: {
      Expansion l = normRec(s->left(), leftMajor);
      Expansion r = normRec(s->right(), leftMajor);
      WitnessRef spread = leftMajor ? prodLeftMajor(l.monos, r.monos)
                                    : prodRightMajor(l.monos, r.monos);
      WitnessRef w = W::comp(spread, W::prodM(l.witness, r.witness));
      MonoList monos =
          leftMajor ? crossLeft(l.monos, r.monos) : crossRight(l.monos, r.monos);
      return {std::move(monos), std::move(w)};
    }
  }
  throw BackendError("unreachable shape kind");
}

/// Swaps the monomials at positions k and k+1 of the right-nested sum,
/// leaving everything else alone.
WitnessRef swapAdjacent(const MonoList& list, std::size_t k) {
  ShapeRef mk = monoShape(list[k]);
  ShapeRef mk1 = monoShape(list[k + 1]);
  WitnessRef core;
  if (k + 2 == list.size()) {
    core = W::bPlus(mk, mk1);
  } else {
    MonoList suffix(list.begin() + static_cast<long>(k) + 2, list.end());
    ShapeRef rest = nfShapeOf(suffix);
    core = W::comp(
        W::aPlus(mk1, mk, rest),
        W::comp(W::sumM(W::bPlus(mk, mk1), W::id(rest)), W::aPlusInv(mk, mk1, rest)));
  }
  for (std::size_t j = k; j-- > 0;) {
    core = W::sumM(W::id(monoShape(list[j])), core);
  }
  return core;
}

}  // namespace

ShapeRef NormalForm::asShape() const {
  return nfShapeOf(monomials);
}

std::string NormalForm::render() const {
  if (monomials.empty()) return "0";
  std::string out;
  bool outerSep = false;
  for (const auto& m : monomials) {
    if (outerSep) out += " + ";
    outerSep = true;
    if (m.empty()) {
      out += 'I';
      continue;
    }
    bool innerSep = false;
    for (const auto& v : m) {
      if (innerSep) out += '*';
      out += v;
      innerSep = true;
    }
  }
  return out;
}

StrictifyResult normalize(const ShapeRef& s) {
  Expansion e = normRec(s, true);
  return {NormalForm{std::move(e.monos)}, simplifyTerm(e.witness)};
}

StrictifyResult altNormalize(const ShapeRef& s) {
  Expansion e = normRec(s, false);
  return {NormalForm{std::move(e.monos)}, simplifyTerm(e.witness)};
}

StrategyComparison compareStrategies(const ShapeRef& s) {
  StrictifyResult left = normalize(s);
  StrictifyResult right = altNormalize(s);

  // Semantic matching of the two monomial orders: in the all-dims-1
  // environment every monomial denotes exactly one basis vector, so the
  // composite below is the position permutation relating the two targets.
  // Matching monomials by shape instead would misroute duplicates.
  Env env;
  for (const std::string& v : freeVars(s)) {
    env.bind(v, defaultAtoms(v, 1, 0));
  }
  BackendConfig cfg;
  ConcreteMorphism toLeft = compile(left.witness, env, cfg);
  ConcreteMorphism toRight = compile(right.witness, env, cfg);
  ConcreteMorphism perm = compose(toLeft, inverse(toRight));

  std::size_t m = right.nf.monomials.size();
  std::vector<std::size_t> dest(m);
  for (std::size_t i = 0; i < m; ++i) dest[i] = perm.at(i)->row;

  MonoList cur = right.nf.monomials;
  WitnessRef relating = W::id(right.nf.asShape());
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      if (dest[k] > dest[k + 1]) {
        relating = W::comp(swapAdjacent(cur, k), relating);
        std::swap(dest[k], dest[k + 1]);
        std::swap(cur[k], cur[k + 1]);
        moved = true;
      }
    }
  }
  relating = simplifyTerm(relating);

  if (!morEq(toLeft, compose(compile(relating, env, cfg), toRight))) {
    throw BackendError("relating witness failed to reconcile the two strategies");
  }
  return {std::move(left), std::move(right), std::move(relating)};
}

}  // namespace rigcat
