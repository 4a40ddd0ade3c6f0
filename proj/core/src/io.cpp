#include "rigcat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rigcat/errors.hpp"

namespace rigcat {

using nlohmann::json;

std::string morphismJson(const ConcreteMorphism& m) {
  json entries = json::array();
  for (std::size_t col = 0; col < m.sourceDim(); ++col) {
    if (const auto& e = m.at(col)) {
      entries.push_back(json::array({e->row, col, e->phaseExp}));
    }
  }
  json j;
  j["source_dim"] = m.sourceDim();
  j["target_dim"] = m.targetDim();
  j["phase_order"] = m.phaseOrder();
  j["entries"] = std::move(entries);
  return j.dump();
}

std::string basisJson(const std::vector<BasisVector>& basis) {
  json j = json::array();
  for (const auto& v : basis) j.push_back(renderBasis(v));
  return j.dump();
}

std::string envJson(const Env& e) {
  json j = json::object();
  for (const auto& [var, atoms] : e.bindings()) {
    json list = json::array();
    for (const Atom& a : atoms) {
      list.push_back(json{{"degree", a.degree}, {"label", a.label}});
    }
    j[var] = std::move(list);
  }
  return j.dump();
}

Env envFromJsonText(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("invalid environment JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ParseError("environment JSON must be an object");
  Env env;
  for (const auto& [var, list] : j.items()) {
    if (!list.is_array()) {
      throw ParseError("binding for '" + var + "' must be a list of atoms");
    }
    std::vector<Atom> atoms;
    for (const auto& item : list) {
      if (!item.is_object() || !item.contains("label") || !item["label"].is_string()) {
        throw ParseError("atom in binding for '" + var + "' needs a string label");
      }
      Atom a;
      a.label = item["label"].get<std::string>();
      if (item.contains("degree")) {
        if (!item["degree"].is_number_integer()) {
          throw ParseError("atom degree for '" + var + "' must be an integer");
        }
        a.degree = item["degree"].get<int>();
      }
      atoms.push_back(std::move(a));
    }
    try {
      env.bind(var, std::move(atoms));
    } catch (const EnvError& ex) {
      throw ParseError(ex.what());
    }
  }
  return env;
}

Env envFromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read environment file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return envFromJsonText(buf.str());
}

}  // namespace rigcat
