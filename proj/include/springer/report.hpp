#pragma once

#include <json.hpp>

#include "springer/rep_engine.hpp"

namespace springer {

// Reports keep a fixed key order so that serialized output is reproducible
// byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const GenericityReport& r);
Json to_json(const MorphismChecks& m, bool include_matrix = true);
Json to_json(const PresentationReport& r);
Json to_json(const TwoRowsOutcome& t);

/// {"mu": [...], "hilbert": {"0": 1, ...}, "submodules": {"(k,l)": dim}}
Json dims_report(const Partition& mu, int l, bool allow_large);

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

Json to_json(const CheckLine& c);

/// The stable envelope: {"command", "mu", "l", "results", "checks"}.
Json envelope(const std::string& command, const Json& mu, const Json& l,
              Json results, const std::vector<CheckLine>& checks);

}  // namespace springer
