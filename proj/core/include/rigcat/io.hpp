#pragma once

#include <string>
#include <vector>

#include "rigcat/backend.hpp"
#include "rigcat/shape.hpp"

namespace rigcat {

/// {"source_dim": k, "target_dim": m, "phase_order": n,
///  "entries": [[row, col, phase_exp], ...]} with entries sorted by col.
/// Keys are emitted sorted, so equal morphisms serialize byte-identically.
std::string morphismJson(const ConcreteMorphism& m);

/// ["L(a1)", "(a1,b2)", ...] in enumeration order.
std::string basisJson(const std::vector<BasisVector>& basis);

/// {"A": [{"degree": 0, "label": "a1"}, ...], ...}
std::string envJson(const Env& e);

/// Parses the envJson format. Throws ParseError on malformed input.
Env envFromJsonText(const std::string& text);

/// Reads and parses an environment file. Throws ParseError when the file
/// cannot be read.
Env envFromFile(const std::string& path);

}  // namespace rigcat
