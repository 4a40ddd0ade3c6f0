#include "rigcat/witness.hpp"

#include <array>
#include <map>

#include "rigcat/errors.hpp"

namespace rigcat {

namespace {

using Kind = WitnessTerm::Kind;

const ShapeRef& slot(int i) {
  static const std::array<ShapeRef, 3> slots = {
      Shape::var("@0"), Shape::var("@1"), Shape::var("@2")};
  return slots.at(static_cast<std::size_t>(i));
}

std::map<Kind, GenSig> makeSigTable() {
  const ShapeRef a = slot(0), b = slot(1), c = slot(2);
  const ShapeRef zero = Shape::zero(), one = Shape::one();
  std::map<Kind, GenSig> t;
  auto put = [&](Kind k, int arity, ShapeRef src, ShapeRef tgt, const char* name) {
    t.emplace(k, GenSig{arity, std::move(src), std::move(tgt), name});
  };
  put(Kind::Id, 1, a, a, "id");
  put(Kind::APlus, 3, Shape::sum(Shape::sum(a, b), c), Shape::sum(a, Shape::sum(b, c)), "aP");
  put(Kind::APlusInv, 3, Shape::sum(a, Shape::sum(b, c)), Shape::sum(Shape::sum(a, b), c), "aP_inv");
  put(Kind::ATimes, 3, Shape::prod(Shape::prod(a, b), c), Shape::prod(a, Shape::prod(b, c)), "aT");
  put(Kind::ATimesInv, 3, Shape::prod(a, Shape::prod(b, c)), Shape::prod(Shape::prod(a, b), c), "aT_inv");
  put(Kind::BPlus, 2, Shape::sum(a, b), Shape::sum(b, a), "bP");
  put(Kind::BTimesOver, 2, Shape::prod(a, b), Shape::prod(b, a), "bT_over");
  put(Kind::BTimesUnder, 2, Shape::prod(a, b), Shape::prod(b, a), "bT_under");
  put(Kind::LPlus, 1, Shape::sum(zero, a), a, "lP");
  put(Kind::LPlusInv, 1, a, Shape::sum(zero, a), "lP_inv");
  put(Kind::RPlus, 1, Shape::sum(a, zero), a, "rP");
  put(Kind::RPlusInv, 1, a, Shape::sum(a, zero), "rP_inv");
  put(Kind::LTimes, 1, Shape::prod(one, a), a, "lT");
  put(Kind::LTimesInv, 1, a, Shape::prod(one, a), "lT_inv");
  put(Kind::RTimes, 1, Shape::prod(a, one), a, "rT");
  put(Kind::RTimesInv, 1, a, Shape::prod(a, one), "rT_inv");
  put(Kind::DistL, 3, Shape::prod(a, Shape::sum(b, c)),
      Shape::sum(Shape::prod(a, b), Shape::prod(a, c)), "dL");
  put(Kind::DistLInv, 3, Shape::sum(Shape::prod(a, b), Shape::prod(a, c)),
      Shape::prod(a, Shape::sum(b, c)), "dL_inv");
  put(Kind::DistR, 3, Shape::prod(Shape::sum(a, b), c),
      Shape::sum(Shape::prod(a, c), Shape::prod(b, c)), "dR");
  put(Kind::DistRInv, 3, Shape::sum(Shape::prod(a, c), Shape::prod(b, c)),
      Shape::prod(Shape::sum(a, b), c), "dR_inv");
  put(Kind::ZeroL, 1, Shape::prod(zero, a), zero, "zL");
  put(Kind::ZeroLInv, 1, zero, Shape::prod(zero, a), "zL_inv");
  put(Kind::ZeroR, 1, Shape::prod(a, zero), zero, "zR");
  put(Kind::ZeroRInv, 1, zero, Shape::prod(a, zero), "zR_inv");
  put(Kind::Inl, 2, a, Shape::sum(a, b), "inl");
  put(Kind::Inr, 2, b, Shape::sum(a, b), "inr");
  return t;
}

const std::map<Kind, GenSig>& sigTable() {
  static const std::map<Kind, GenSig> table = makeSigTable();
  return table;
}

}  // namespace

const GenSig& genSig(WitnessTerm::Kind k) {
  auto it = sigTable().find(k);
  if (it == sigTable().end()) throw TypeError("not a generator kind");
  return it->second;
}

bool WitnessTerm::isGenerator() const {
  switch (kind_) {
    case Kind::Comp:
    case Kind::SumM:
    case Kind::ProdM:
    case Kind::Copair:
      return false;
    default:
      return true;
  }
}

WitnessRef WitnessTerm::id(ShapeRef a) { return gen(Kind::Id, {std::move(a)}); }

WitnessRef WitnessTerm::comp(WitnessRef after, WitnessRef before) {
  return WitnessRef(new WitnessTerm(Kind::Comp, {}, std::move(after), std::move(before)));
}

WitnessRef WitnessTerm::sumM(WitnessRef f, WitnessRef g) {
  return WitnessRef(new WitnessTerm(Kind::SumM, {}, std::move(f), std::move(g)));
}

WitnessRef WitnessTerm::prodM(WitnessRef f, WitnessRef g) {
  return WitnessRef(new WitnessTerm(Kind::ProdM, {}, std::move(f), std::move(g)));
}

WitnessRef WitnessTerm::copair(WitnessRef f, WitnessRef g) {
  return WitnessRef(new WitnessTerm(Kind::Copair, {}, std::move(f), std::move(g)));
}

WitnessRef WitnessTerm::gen(Kind k, std::vector<ShapeRef> shapes) {
  const GenSig& sig = genSig(k);
  if (static_cast<int>(shapes.size()) != sig.arity) {
    throw TypeError(std::string(sig.name) + " expects " + std::to_string(sig.arity) +
                    " shape argument(s), got " + std::to_string(shapes.size()));
  }
  return WitnessRef(new WitnessTerm(k, std::move(shapes), nullptr, nullptr));
}

WitnessRef WitnessTerm::aPlus(ShapeRef a, ShapeRef b, ShapeRef c) {
  return gen(Kind::APlus, {std::move(a), std::move(b), std::move(c)});
}
WitnessRef WitnessTerm::aPlusInv(ShapeRef a, ShapeRef b, ShapeRef c) {
  return gen(Kind::APlusInv, {std::move(a), std::move(b), std::move(c)});
}
WitnessRef WitnessTerm::aTimes(ShapeRef a, ShapeRef b, ShapeRef c) {
  return gen(Kind::ATimes, {std::move(a), std::move(b), std::move(c)});
}
WitnessRef WitnessTerm::aTimesInv(ShapeRef a, ShapeRef b, ShapeRef c) {
  return gen(Kind::ATimesInv, {std::move(a), std::move(b), std::move(c)});
}
WitnessRef WitnessTerm::bPlus(ShapeRef a, ShapeRef b) {
  return gen(Kind::BPlus, {std::move(a), std::move(b)});
}
WitnessRef WitnessTerm::bTimesOver(ShapeRef a, ShapeRef b) {
  return gen(Kind::BTimesOver, {std::move(a), std::move(b)});
}
WitnessRef WitnessTerm::bTimesUnder(ShapeRef a, ShapeRef b) {
  return gen(Kind::BTimesUnder, {std::move(a), std::move(b)});
}
WitnessRef WitnessTerm::lPlus(ShapeRef a) { return gen(Kind::LPlus, {std::move(a)}); }
WitnessRef WitnessTerm::lPlusInv(ShapeRef a) { return gen(Kind::LPlusInv, {std::move(a)}); }
WitnessRef WitnessTerm::rPlus(ShapeRef a) { return gen(Kind::RPlus, {std::move(a)}); }
WitnessRef WitnessTerm::rPlusInv(ShapeRef a) { return gen(Kind::RPlusInv, {std::move(a)}); }
WitnessRef WitnessTerm::lTimes(ShapeRef a) { return gen(Kind::LTimes, {std::move(a)}); }
WitnessRef WitnessTerm::lTimesInv(ShapeRef a) { return gen(Kind::LTimesInv, {std::move(a)}); }
WitnessRef WitnessTerm::rTimes(ShapeRef a) { return gen(Kind::RTimes, {std::move(a)}); }
WitnessRef WitnessTerm::rTimesInv(ShapeRef a) { return gen(Kind::RTimesInv, {std::move(a)}); }
WitnessRef WitnessTerm::distL(ShapeRef a, ShapeRef b, ShapeRef c) {
  return gen(Kind::DistL, {std::move(a), std::move(b), std::move(c)});
}
WitnessRef WitnessTerm::distLInv(ShapeRef a, ShapeRef b, ShapeRef c) {
  return gen(Kind::DistLInv, {std::move(a), std::move(b), std::move(c)});
}
WitnessRef WitnessTerm::distR(ShapeRef a, ShapeRef b, ShapeRef c) {
  return gen(Kind::DistR, {std::move(a), std::move(b), std::move(c)});
}
WitnessRef WitnessTerm::distRInv(ShapeRef a, ShapeRef b, ShapeRef c) {
  return gen(Kind::DistRInv, {std::move(a), std::move(b), std::move(c)});
}
WitnessRef WitnessTerm::zeroL(ShapeRef a) { return gen(Kind::ZeroL, {std::move(a)}); }
WitnessRef WitnessTerm::zeroLInv(ShapeRef a) { return gen(Kind::ZeroLInv, {std::move(a)}); }
WitnessRef WitnessTerm::zeroR(ShapeRef a) { return gen(Kind::ZeroR, {std::move(a)}); }
WitnessRef WitnessTerm::zeroRInv(ShapeRef a) { return gen(Kind::ZeroRInv, {std::move(a)}); }
WitnessRef WitnessTerm::inl(ShapeRef a, ShapeRef b) {
  return gen(Kind::Inl, {std::move(a), std::move(b)});
}
WitnessRef WitnessTerm::inr(ShapeRef a, ShapeRef b) {
  return gen(Kind::Inr, {std::move(a), std::move(b)});
}

ShapeRef instantiatePattern(const ShapeRef& pattern, const std::vector<ShapeRef>& args) {
  switch (pattern->kind()) {
    case Shape::Kind::Var: {
      const std::string& n = pattern->name();
      if (!n.empty() && n[0] == '@') {
        return args.at(static_cast<std::size_t>(n[1] - '0'));
      }
      return pattern;
    }
    case Shape::Kind::Zero:
    case Shape::Kind::One:
      return pattern;
    case Shape::Kind::Sum:
      return Shape::sum(instantiatePattern(pattern->left(), args),
                        instantiatePattern(pattern->right(), args));
    case Shape::Kind::Prod:
      return Shape::prod(instantiatePattern(pattern->left(), args),
                         instantiatePattern(pattern->right(), args));
  }
  return pattern;
}

MorType typecheck(const WitnessRef& t) {
  switch (t->kind()) {
    case Kind::Comp: {
      MorType g = typecheck(t->first());
      MorType f = typecheck(t->second());
      if (!shapeEq(f.target, g.source)) {
        throw TypeError("composition mismatch: earlier morphism targets " +
                        renderShape(f.target) + " but later one starts at " +
                        renderShape(g.source));
      }
      return {f.source, g.target};
    }
    case Kind::SumM: {
      MorType f = typecheck(t->first());
      MorType g = typecheck(t->second());
      return {Shape::sum(f.source, g.source), Shape::sum(f.target, g.target)};
    }
    case Kind::ProdM: {
      MorType f = typecheck(t->first());
      MorType g = typecheck(t->second());
      return {Shape::prod(f.source, g.source), Shape::prod(f.target, g.target)};
    }
    case Kind::Copair: {
      MorType f = typecheck(t->first());
      MorType g = typecheck(t->second());
      if (!shapeEq(f.target, g.target)) {
        throw TypeError("copairing mismatch: branches target " + renderShape(f.target) +
                        " and " + renderShape(g.target));
      }
      return {Shape::sum(f.source, g.source), f.target};
    }
    default: {
      const GenSig& sig = genSig(t->kind());
      return {instantiatePattern(sig.source, t->shapes()),
              instantiatePattern(sig.target, t->shapes())};
    }
  }
}

WitnessRef invert(const WitnessRef& t) {
  using W = WitnessTerm;
  const auto& sh = t->shapes();
  switch (t->kind()) {
    case Kind::Id:
      return t;
    case Kind::Comp:
      return W::comp(invert(t->second()), invert(t->first()));
    case Kind::SumM:
      return W::sumM(invert(t->first()), invert(t->second()));
    case Kind::ProdM:
      return W::prodM(invert(t->first()), invert(t->second()));
    case Kind::Copair:
      throw NotInvertibleError("copair is not invertible");
    case Kind::Inl:
      throw NotInvertibleError("inl is not invertible");
    case Kind::Inr:
      throw NotInvertibleError("inr is not invertible");
    case Kind::BPlus:
      return W::bPlus(sh[1], sh[0]);
    case Kind::BTimesOver:
      return W::bTimesUnder(sh[1], sh[0]);
    case Kind::BTimesUnder:
      return W::bTimesOver(sh[1], sh[0]);
    case Kind::APlus:
      return W::gen(Kind::APlusInv, sh);
    case Kind::APlusInv:
      return W::gen(Kind::APlus, sh);
    case Kind::ATimes:
      return W::gen(Kind::ATimesInv, sh);
    case Kind::ATimesInv:
      return W::gen(Kind::ATimes, sh);
    case Kind::LPlus:
      return W::gen(Kind::LPlusInv, sh);
    case Kind::LPlusInv:
      return W::gen(Kind::LPlus, sh);
    case Kind::RPlus:
      return W::gen(Kind::RPlusInv, sh);
    case Kind::RPlusInv:
      return W::gen(Kind::RPlus, sh);
    case Kind::LTimes:
      return W::gen(Kind::LTimesInv, sh);
    case Kind::LTimesInv:
      return W::gen(Kind::LTimes, sh);
    case Kind::RTimes:
      return W::gen(Kind::RTimesInv, sh);
    case Kind::RTimesInv:
      return W::gen(Kind::RTimes, sh);
    case Kind::DistL:
      return W::gen(Kind::DistLInv, sh);
    case Kind::DistLInv:
      return W::gen(Kind::DistL, sh);
    case Kind::DistR:
      return W::gen(Kind::DistRInv, sh);
    case Kind::DistRInv:
      return W::gen(Kind::DistR, sh);
    case Kind::ZeroL:
      return W::gen(Kind::ZeroLInv, sh);
    case Kind::ZeroLInv:
      return W::gen(Kind::ZeroL, sh);
    case Kind::ZeroR:
      return W::gen(Kind::ZeroRInv, sh);
    case Kind::ZeroRInv:
      return W::gen(Kind::ZeroR, sh);
  }
  throw NotInvertibleError("unknown constructor");
}

namespace {

/// Functorial action of a signature pattern on argument morphisms: slots
/// become the arguments, Sum/Prod become SumM/ProdM, constants become
/// identities.
WitnessRef patternAction(const ShapeRef& pattern, const std::vector<WitnessRef>& args) {
  using W = WitnessTerm;
  switch (pattern->kind()) {
    case Shape::Kind::Var: {
      const std::string& n = pattern->name();
      if (!n.empty() && n[0] == '@') {
        return args.at(static_cast<std::size_t>(n[1] - '0'));
      }
      return W::id(pattern);
    }
    case Shape::Kind::Zero:
      return W::id(Shape::zero());
    case Shape::Kind::One:
      return W::id(Shape::one());
    case Shape::Kind::Sum:
      return W::sumM(patternAction(pattern->left(), args),
                     patternAction(pattern->right(), args));
    case Shape::Kind::Prod:
      return W::prodM(patternAction(pattern->left(), args),
                      patternAction(pattern->right(), args));
  }
  return W::id(pattern);
}

}  // namespace

std::pair<WitnessRef, WitnessRef> naturalitySquare(WitnessTerm::Kind gen,
                                                   const std::vector<WitnessRef>& args) {
  using W = WitnessTerm;
  const GenSig& sig = genSig(gen);
  if (static_cast<int>(args.size()) != sig.arity) {
    throw TypeError(std::string("naturality square for ") + sig.name + " expects " +
                    std::to_string(sig.arity) + " argument morphism(s)");
  }
  std::vector<ShapeRef> sources, targets;
  sources.reserve(args.size());
  targets.reserve(args.size());
  for (const auto& f : args) {
    MorType ty = typecheck(f);
    sources.push_back(ty.source);
    targets.push_back(ty.target);
  }
  WitnessRef throughGen = W::comp(patternAction(sig.target, args), W::gen(gen, sources));
  WitnessRef throughArgs = W::comp(W::gen(gen, targets), patternAction(sig.source, args));
  return {throughGen, throughArgs};
}

bool termEq(const WitnessRef& a, const WitnessRef& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  if (a->shapes().size() != b->shapes().size()) return false;
  for (std::size_t i = 0; i < a->shapes().size(); ++i) {
    if (!shapeEq(a->shapes()[i], b->shapes()[i])) return false;
  }
  if ((a->first() == nullptr) != (b->first() == nullptr)) return false;
  if (a->first() && !termEq(a->first(), b->first())) return false;
  if ((a->second() == nullptr) != (b->second() == nullptr)) return false;
  if (a->second() && !termEq(a->second(), b->second())) return false;
  return true;
}

namespace {

// Precedence context for rendering: composition chains are written in
// diagrammatic order with parentheses exactly around non-atomic operands,
// so renderTerm(t) parses back to t.
void renderInto(const WitnessRef& t, std::string& out) {
  auto paren = [&out](const WitnessRef& u) {
    bool atomic = u->isGenerator() || u->kind() == Kind::Copair;
    if (!atomic) out += '(';
    renderInto(u, out);
    if (!atomic) out += ')';
  };
  switch (t->kind()) {
    case Kind::Comp:
      paren(t->second());
      out += " ; ";
      paren(t->first());
      break;
    case Kind::SumM:
      paren(t->first());
      out += " + ";
      paren(t->second());
      break;
    case Kind::ProdM:
      paren(t->first());
      out += " * ";
      paren(t->second());
      break;
    case Kind::Copair:
      out += '[';
      renderInto(t->first(), out);
      out += ", ";
      renderInto(t->second(), out);
      out += ']';
      break;
    default: {
      const GenSig& sig = genSig(t->kind());
      out += sig.name;
      out += '[';
      bool sep = false;
      for (const auto& s : t->shapes()) {
        if (sep) out += ',';
        out += renderShape(s);
        sep = true;
      }
      out += ']';
      break;
    }
  }
}

}  // namespace

std::string renderTerm(const WitnessRef& t) {
  std::string out;
  renderInto(t, out);
  return out;
}

WitnessRef simplifyTerm(const WitnessRef& t) {
  using W = WitnessTerm;
  switch (t->kind()) {
    case Kind::Comp: {
      WitnessRef g = simplifyTerm(t->first());
      WitnessRef f = simplifyTerm(t->second());
      if (f->kind() == Kind::Id) return g;
      if (g->kind() == Kind::Id) return f;
      return W::comp(g, f);
    }
    case Kind::SumM: {
      WitnessRef f = simplifyTerm(t->first());
      WitnessRef g = simplifyTerm(t->second());
      if (f->kind() == Kind::Id && g->kind() == Kind::Id) {
        return W::id(Shape::sum(f->shapes()[0], g->shapes()[0]));
      }
      return W::sumM(f, g);
    }
    case Kind::ProdM: {
      WitnessRef f = simplifyTerm(t->first());
      WitnessRef g = simplifyTerm(t->second());
      if (f->kind() == Kind::Id && g->kind() == Kind::Id) {
        return W::id(Shape::prod(f->shapes()[0], g->shapes()[0]));
      }
      return W::prodM(f, g);
    }
    case Kind::Copair:
      return W::copair(simplifyTerm(t->first()), simplifyTerm(t->second()));
    default:
      return t;
  }
}

}  // namespace rigcat
