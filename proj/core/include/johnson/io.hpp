#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "johnson/eigenfunctions.hpp"
#include "johnson/reconstruction.hpp"

namespace johnson {

/// {"n": int, "w": int, "values": ["p/q", ...]} with values in colex rank
/// order, integers serialized without the "/1". Byte-stable.
std::string vertex_function_to_json(const VertexFunction& f);
VertexFunction vertex_function_from_json(std::string_view text);

/// Sparse vertex/value list used for reconstruction inputs:
/// {"n": int, "w": int, "values": [["bitstring", "p/q"], ...]}.
std::string restriction_to_json(const JohnsonParams& params,
                                const std::vector<std::pair<Vertex, Rat>>& values);
std::vector<std::pair<Vertex, Rat>> restriction_from_json(std::string_view text);

struct VerdictRow {
    int n = 0, w = 0, i = 0, r = 0;
    Verdict criterion_verdict = Verdict::Reconstructible;
    Verdict oracle_verdict = Verdict::Reconstructible;
    bool agreement = false;
    std::optional<std::pair<int, int>> failing_k;
    char failing_which = 0;  // '1' or '2', 0 when inapplicable
};

std::string verdict_csv_header();
std::string verdict_csv_row(const VerdictRow& row);

/// Human-readable criterion report (exact rationals as p/q).
std::string criterion_report_text(const CriterionReport& rep);
std::string criterion_report_json(const CriterionReport& rep);

}  // namespace johnson
