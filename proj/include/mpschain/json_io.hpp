#pragma once

#include <string>

#include <json.hpp>

#include "mpschain/state_engine.hpp"

namespace mpschain {

/// Insertion-ordered JSON so emitted documents have a stable field order.
using Json = nlohmann::ordered_json;

// Wire formats. All matrices are {"rows": r, "cols": c,
// "entries": [[re, im], ...]} row-major; parse failures throw ParseError.

Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const MPSFamily& family);
MPSFamily family_from_json(const Json& j);

Json to_json(const LocalObservable& x);
LocalObservable observable_from_json(const Json& j);

Json to_json(const ConditionReport& report);
Json to_json(const DensityMatrix& rho);
Json to_json(const EvaluationReport& report, bool include_elapsed = false);

/// Serializes with every floating-point number printed to 17 significant
/// digits (round-trip exact for doubles) so identical values always
/// produce identical bytes. Pretty mode indents by two spaces.
std::string dump_json(const Json& j, bool pretty = false);

Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace mpschain
