#include "springer/report.hpp"

#include <sstream>

namespace springer {

Json to_json(const Partition& p) {
    Json j = Json::array();
    for (int part : p.parts) j.push_back(part);
    return j;
}

Json to_json(const GenericityReport& r) {
    Json comps = Json::array();
    for (const auto& c : r.components) {
        Json line;
        line["lambda"] = to_json(c.lambda);
        line["multiplicity"] = c.multiplicity;
        line["specht_dim"] = c.specht_dim;
        line["rank"] = c.rank;
        line["full_rank"] = c.full_rank;
        comps.push_back(std::move(line));
    }
    Json j;
    j["generic"] = r.generic;
    j["components"] = std::move(comps);
    return j;
}

Json to_json(const MorphismChecks& m, bool include_matrix) {
    Json j;
    j["source"] = m.source;
    j["target"] = m.target;
    j["well_defined"] = m.well_defined;
    j["injective"] = m.injective;
    j["surjective"] = m.surjective;
    j["equivariant"] = m.equivariant;
    j["rank"] = m.rank;
    j["index"] = m.index;
    if (include_matrix) {
        Json rows = Json::array();
        for (const auto& row : m.matrix) {
            Json r = Json::array();
            for (const auto& entry : row) r.push_back(entry);
            rows.push_back(std::move(r));
        }
        j["matrix"] = std::move(rows);
    }
    if (m.diagnosis) j["diagnosis"] = to_json(*m.diagnosis);
    return j;
}

Json to_json(const PresentationReport& r) {
    Json j;
    j["mu"] = to_json(r.mu);
    j["l"] = r.l;
    j["dims"] = r.dims;
    j["dims_constant"] = r.dims_constant;
    j["characters_match"] = r.characters_match;
    j["mismatches"] = r.mismatches;
    return j;
}

Json to_json(const TwoRowsOutcome& t) {
    Json j;
    j["n"] = t.n;
    j["i"] = t.i;
    j["sign_law"] = t.sign_law;
    j["unique_ssyt"] = t.unique_ssyt;
    j["f"] = t.f.str();
    j["quotient_checked"] = t.quotient_checked;
    if (t.quotient_checked) {
        j["zf_generic"] = t.zf_generic;
        j["zf_generates"] = t.zf_generates;
    }
    return j;
}

Json dims_report(const Partition& mu, int l, bool allow_large) {
    auto q = GradedQuotient::of(mu, allow_large);
    Json hilbert;
    for (const auto& [d, n] : q->graded_dims()) hilbert[std::to_string(d)] = n;
    Json subs;
    for (int k = 0; k < l; ++k) {
        std::ostringstream key;
        key << "(" << k << "," << l << ")";
        subs[key.str()] = submodule_basis(q, k, l).dim;
    }
    Json j;
    j["mu"] = to_json(mu);
    j["hilbert"] = std::move(hilbert);
    j["submodules"] = std::move(subs);
    j["total_dim"] = q->total_dim();
    return j;
}

Json to_json(const CheckLine& c) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    return j;
}

Json envelope(const std::string& command, const Json& mu, const Json& l, Json results,
              const std::vector<CheckLine>& checks) {
    Json j;
    j["command"] = command;
    j["mu"] = mu;
    j["l"] = l;
    j["results"] = std::move(results);
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(to_json(c));
    j["checks"] = std::move(cs);
    return j;
}

}  // namespace springer
