#include <doctest.h>

#include <set>

#include "rigcat/coherence.hpp"
#include "rigcat/errors.hpp"
#include "rigcat/parse.hpp"
#include "rigcat/witness.hpp"

using namespace rigcat;
using W = WitnessTerm;

TEST_CASE("registry lists every structural law once") {
  const auto& laws = builtinLaws();
  CHECK(laws.size() == 41);
  std::set<std::string> names;
  for (const auto& law : laws) names.insert(law.name);
  CHECK(names.size() == laws.size());
  for (const char* expected :
       {"pentagon-times", "pentagon-plus", "triangle-times", "triangle-plus",
        "hexagon-times-over", "hexagon-times-under", "hexagon-plus", "hexagon-plus-inv",
        "symmetry-plus", "dist-braid", "dist-assoc-plus", "dist-interchange", "zero-absorb",
        "dist-braid-unit", "dist-assoc-plus-unit", "naturality-id", "naturality-bP",
        "naturality-bT_over", "naturality-dL", "naturality-inl", "naturality-inr",
        "naturality-zL_inv"}) {
    CHECK_MESSAGE(names.count(expected) == 1, expected);
  }
  CHECK(findLaw("pentagon-times").has_value());
  CHECK_FALSE(findLaw("no-such-law").has_value());
}

TEST_CASE("every law is well-typed with matching sides") {
  BackendConfig cfg;
  for (const auto& law : builtinLaws()) {
    MorType l = typecheck(law.lhs);
    MorType r = typecheck(law.rhs);
    CHECK_MESSAGE(shapeEq(l.source, r.source), law.name);
    CHECK_MESSAGE(shapeEq(l.target, r.target), law.name);
    // params cover every variable either side mentions
    std::set<std::string> declared(law.params.begin(), law.params.end());
    for (const auto& v : freeVars(l.source)) CHECK_MESSAGE(declared.count(v) == 1, law.name);
    for (const auto& v : freeVars(l.target)) CHECK_MESSAGE(declared.count(v) == 1, law.name);
    // trials=0 exercises the type sanity path only
    CHECK(audit(law, cfg, 0, 1, 4).passed());
  }
}

TEST_CASE("drawEnv stays in range and reuses bindings") {
  SplitMix64 rng(99);
  bool sawReuse = false, sawEmpty = false;
  for (int i = 0; i < 200; ++i) {
    Env e = drawEnv({"A", "B", "C", "D"}, rng, 4);
    const auto& a = e.at("A");
    for (const auto& [var, atoms] : e.bindings()) {
      CHECK(atoms.size() <= 4);
      if (atoms.empty()) sawEmpty = true;
      for (const Atom& atom : atoms) {
        CHECK(atom.degree >= -2);
        CHECK(atom.degree <= 2);
      }
      if (var != "A" && !atoms.empty() && atoms.size() == a.size() &&
          std::equal(atoms.begin(), atoms.end(), a.begin())) {
        sawReuse = true;
      }
    }
  }
  CHECK(sawReuse);
  CHECK(sawEmpty);
}

TEST_CASE("a fixed environment check of the times pentagon") {
  auto law = findLaw("pentagon-times");
  REQUIRE(law.has_value());
  Env e;
  e.bind("A", {Atom{"a0", 1}, Atom{"a1", 0}});
  e.bind("B", {Atom{"b0", -1}});
  e.bind("C", {Atom{"c0", 2}});
  e.bind("D", {Atom{"d0", 1}, Atom{"d1", 1}});
  BackendConfig cfg;
  cfg.phaseOrder = 4;
  CHECK(morEq(compile(law->lhs, e, cfg), compile(law->rhs, e, cfg)));
}

TEST_CASE("audits are deterministic for a fixed seed") {
  BackendConfig cfg;
  cfg.phaseOrder = 2;
  auto law = *findLaw("hexagon-times-over");
  AuditReport r1 = audit(law, cfg, 30, 42, 3);
  AuditReport r2 = audit(law, cfg, 30, 42, 3);
  CHECK(r1.passed());
  CHECK(reportJsonLine(r1) == reportJsonLine(r2));
  CHECK(reportJsonLine(r1) ==
        R"({"law":"hexagon-times-over","outcome":"pass","seed":42,"trials":30})");
}

TEST_CASE("an unsound law is refuted with a counterexample report") {
  // claims the over-braiding is an involution, which grading refutes
  ShapeRef A = Shape::var("A"), B = Shape::var("B");
  LawSpec bogus{"bogus-involution",
                {"A", "B"},
                W::comp(W::bTimesOver(B, A), W::bTimesOver(A, B)),
                W::id(Shape::prod(A, B))};
  BackendConfig cfg;
  cfg.phaseOrder = 4;
  AuditReport r = audit(bogus, cfg, 100, 7, 3);
  REQUIRE_FALSE(r.passed());
  CHECK(r.counter->lhs.sourceDim() == r.counter->rhs.sourceDim());
  std::string line = reportJsonLine(r);
  CHECK(line.find("\"outcome\":\"counterexample\"") != std::string::npos);
  CHECK(line.find("\"trial\"") != std::string::npos);
  CHECK(line.find("\"env\"") != std::string::npos);

  // the same claim is fine when nothing is graded
  BackendConfig flat;
  CHECK(audit(bogus, flat, 100, 7, 3).passed());
}

TEST_CASE("mismatched law sides are rejected before any trial") {
  LawSpec broken{"broken", {"A", "B"}, W::bPlus(Shape::var("A"), Shape::var("B")),
                 W::id(Shape::var("A"))};
  BackendConfig cfg;
  CHECK_THROWS_AS(audit(broken, cfg, 1, 1, 2), TypeError);
}

TEST_CASE("the distributor block swap is caught by the distributivity family") {
  BackendConfig mutated;
  mutated.mutation = Mutation::SwapDistLBlocks;
  AuditReport r = audit(*findLaw("dist-assoc-plus"), mutated, 100, 7, 4);
  CHECK_FALSE(r.passed());
}

TEST_CASE("naturality squares hold for non-invertible arguments too") {
  BackendConfig cfg;
  cfg.phaseOrder = 4;
  for (const char* name : {"naturality-inl", "naturality-inr", "naturality-bP",
                           "naturality-dL", "naturality-zL", "naturality-aT_inv"}) {
    auto law = findLaw(name);
    REQUIRE_MESSAGE(law.has_value(), name);
    CHECK_MESSAGE(audit(*law, cfg, 60, 11, 3).passed(), name);
  }
}

TEST_CASE("auditAll covers the whole registry in order") {
  BackendConfig cfg;
  auto reports = auditLaws(builtinLaws(), cfg, 2, 5, 2);
  REQUIRE(reports.size() == builtinLaws().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].law == builtinLaws()[i].name);
    CHECK(reports[i].passed());
  }
}
