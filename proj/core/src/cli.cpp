#include "rigcat/cli.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "rigcat/backend.hpp"
#include "rigcat/coherence.hpp"
#include "rigcat/errors.hpp"
#include "rigcat/io.hpp"
#include "rigcat/parse.hpp"
#include "rigcat/sets.hpp"
#include "rigcat/strictify.hpp"

namespace rigcat {

namespace {

struct BackendFlags {
  std::string backend = "graded";
  long phaseOrder = 1;
};

void addBackendFlags(CLI::App* cmd, BackendFlags& f) {
  cmd->add_option("--backend", f.backend, "Backend: finset or graded")
      ->check(CLI::IsMember({"finset", "graded"}))
      ->capture_default_str();
  cmd->add_option("--phase-order", f.phaseOrder, "Order of the braiding phase root of unity")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

BackendConfig toConfig(const BackendFlags& f) {
  BackendConfig cfg;
  cfg.kind = f.backend == "finset" ? BackendKind::FinSet : BackendKind::GradedVec;
  cfg.phaseOrder = f.phaseOrder;
  return cfg;
}

void collectTermVars(const WitnessRef& t, std::set<std::string>& vars) {
  for (const ShapeRef& s : t->shapes()) {
    for (const std::string& v : freeVars(s)) vars.insert(v);
  }
  if (t->first()) collectTermVars(t->first(), vars);
  if (t->second()) collectTermVars(t->second(), vars);
}

/// One degree-0 atom per variable; the documented default when --env is
/// not given.
Env defaultEnv(const std::set<std::string>& vars) {
  Env env;
  for (const std::string& v : vars) env.bind(v, defaultAtoms(v, 1));
  return env;
}

int cmdCheck(const std::string& termText, std::ostream& out) {
  MorType mt = typecheck(parseTerm(termText));
  out << renderShape(mt.source) << " -> " << renderShape(mt.target) << "\n";
  return 0;
}

int cmdCompile(const std::string& termText, const std::string& envPath,
               const BackendConfig& cfg, std::ostream& out) {
  WitnessRef t = parseTerm(termText);
  Env env;
  if (envPath.empty()) {
    std::set<std::string> vars;
    collectTermVars(t, vars);
    env = defaultEnv(vars);
  } else {
    env = envFromFile(envPath);
  }
  out << morphismJson(compile(t, env, cfg)) << "\n";
  return 0;
}

int cmdAudit(const std::string& lawName, const BackendConfig& cfg, long trials,
             std::uint64_t seed, long maxDim, std::ostream& out, std::ostream& err) {
  std::vector<LawSpec> laws;
  if (lawName == "all") {
    laws = builtinLaws();
  } else {
    std::optional<LawSpec> law = findLaw(lawName);
    if (!law) {
      err << "error: unknown law '" << lawName << "'\n";
      return 2;
    }
    laws.push_back(*law);
  }
  bool failed = false;
  for (const AuditReport& r : auditLaws(laws, cfg, trials, seed, maxDim)) {
    out << reportJsonLine(r) << "\n";
    failed = failed || !r.passed();
  }
  return failed ? 1 : 0;
}

int cmdNormalize(const std::string& shapeText, const std::string& envPath,
                 const BackendConfig& cfg, std::ostream& out) {
  ShapeRef s = parseShape(shapeText);
  StrictifyResult r = normalize(s);
  Env env = envPath.empty() ? defaultEnv(freeVars(s)) : envFromFile(envPath);
  out << "nf: " << r.nf.render() << "\n";
  out << "witness: " << renderTerm(r.witness) << "\n";
  out << "matrix: " << morphismJson(compile(r.witness, env, cfg)) << "\n";
  return 0;
}

int demoDisjointUnion(std::ostream& out) {
  FinSet a{1, 2}, b{2, 3};
  out << "disjoint union: tagged pairs (def1) vs initial segment (def2)\n";
  out << "A = " << renderSet(a) << "\n";
  out << "B = " << renderSet(b) << "\n";
  out << "def1(A,B) = " << renderSet(def1Union(a, b)) << "\n";
  out << "def1(B,A) = " << renderSet(def1Union(b, a)) << "\n";
  out << "def1 commutative here: " << (setEq(def1Union(a, b), def1Union(b, a)) ? "yes" : "no")
      << "\n";
  out << "def2(A,B) = " << renderSet(def2Union(a, b)) << "\n";
  out << "def2(B,A) = " << renderSet(def2Union(b, a)) << "\n";
  out << "def2 commutative here: " << (setEq(def2Union(a, b), def2Union(b, a)) ? "yes" : "no")
      << "\n";
  FinSet c{5, 7}, empty{};
  out << "A = " << renderSet(c) << "\n";
  out << "def2(A,{}) = " << renderSet(def2Union(c, empty)) << "\n";
  out << "verdict: " << (setEq(def2Union(c, empty), c) ? "identical to A" : "not identical to A")
      << "\n";
  out << "def1(A,{}) = " << renderSet(def1Union(c, empty)) << "\n";
  out << "verdict: " << (setEq(def1Union(c, empty), c) ? "identical to A" : "not identical to A")
      << "\n";
  out << "def2(A,{}) is identical to A exactly when A is an initial segment of the naturals\n";
  return 0;
}

int demoBraiding(std::ostream& out) {
  BackendConfig cfg;
  cfg.phaseOrder = 4;
  Env env;
  env.bind("A", defaultAtoms("A", 1, 1));
  env.bind("B", defaultAtoms("B", 1, 1));
  ShapeRef A = Shape::var("A"), B = Shape::var("B");
  WitnessRef over = WitnessTerm::bTimesOver(A, B);
  WitnessRef under = WitnessTerm::bTimesUnder(A, B);
  ConcreteMorphism mOver = compile(over, env, cfg);
  ConcreteMorphism mUnder = compile(under, env, cfg);
  ConcreteMorphism mDouble =
      compile(WitnessTerm::comp(WitnessTerm::bTimesOver(B, A), over), env, cfg);
  out << "braiding demo, phase order 4\n";
  out << "A = one atom a0 of degree 1, B = one atom b0 of degree 1\n";
  out << "source basis: " << basisJson(denote(Shape::prod(A, B), env, cfg)) << "\n";
  out << "target basis: " << basisJson(denote(Shape::prod(B, A), env, cfg)) << "\n";
  out << "over(A,B)  = " << morphismJson(mOver) << "\n";
  out << "under(A,B) = " << morphismJson(mUnder) << "\n";
  out << "over equals under: " << (morEq(mOver, mUnder) ? "yes" : "no") << "\n";
  out << "over(A,B) ; over(B,A) = " << morphismJson(mDouble) << "\n";
  out << "equals identity: "
      << (morEq(mDouble, ConcreteMorphism::identityMor(1, 4)) ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witness engine for the braided rig signature (+, *, 0, I)"};
  app.name("rigcat");
  app.require_subcommand(1);

  std::string checkTerm;
  CLI::App* check = app.add_subcommand("check", "Typecheck a witness term");
  check->add_option("term", checkTerm, "Witness term text")->required();

  std::string compileTerm, compileEnvPath;
  BackendFlags compileFlags;
  CLI::App* compileCmd = app.add_subcommand("compile", "Compile a witness term to a matrix");
  compileCmd->add_option("term", compileTerm, "Witness term text")->required();
  compileCmd->add_option("--env", compileEnvPath,
                         "Environment JSON file (default: one degree-0 atom per variable)");
  addBackendFlags(compileCmd, compileFlags);

  std::string auditLaw = "all";
  BackendFlags auditFlags;
  long trials = 100, maxDim = 4;
  std::uint64_t seed = 7;
  CLI::App* auditCmd = app.add_subcommand("audit", "Audit coherence laws over random environments");
  auditCmd->add_option("law", auditLaw, "Law name, or 'all'")->capture_default_str();
  auditCmd->add_option("--trials", trials, "Environments per law")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  auditCmd->add_option("--seed", seed, "Root seed")->capture_default_str();
  auditCmd->add_option("--max-dim", maxDim, "Largest drawn dimension")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  addBackendFlags(auditCmd, auditFlags);

  std::string normShape, normEnvPath;
  BackendFlags normFlags;
  CLI::App* normCmd = app.add_subcommand("normalize", "Distribute a shape to sum-of-monomials form");
  normCmd->add_option("shape", normShape, "Shape text")->required();
  normCmd->add_option("--env", normEnvPath,
                      "Environment JSON file (default: one degree-0 atom per variable)");
  addBackendFlags(normCmd, normFlags);

  std::string demoName;
  CLI::App* demoCmd = app.add_subcommand("demo", "Run a worked demonstration");
  demoCmd->add_option("name", demoName, "disjoint-union or braiding")
      ->required()
      ->check(CLI::IsMember({"disjoint-union", "braiding"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*check) return cmdCheck(checkTerm, out);
    if (*compileCmd) return cmdCompile(compileTerm, compileEnvPath, toConfig(compileFlags), out);
    if (*auditCmd)
      return cmdAudit(auditLaw, toConfig(auditFlags), trials, seed, maxDim, out, err);
    if (*normCmd) return cmdNormalize(normShape, normEnvPath, toConfig(normFlags), out);
    if (*demoCmd)
      return demoName == "disjoint-union" ? demoDisjointUnion(out) : demoBraiding(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const EnvError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rigcat
