#include "johnson/io.hpp"

#include <json.hpp>

#include <sstream>

namespace johnson {

using nlohmann::json;

std::string vertex_function_to_json(const VertexFunction& f) {
    json j;
    j["n"] = f.params().n;
    j["w"] = f.params().w;
    json vals = json::array();
    for (const Rat& v : f.values()) vals.push_back(to_string(v));
    j["values"] = std::move(vals);
    return j.dump(2) + "\n";
}

VertexFunction vertex_function_from_json(std::string_view text) {
    json j = json::parse(text);
    const JohnsonParams params(j.at("n").get<int>(), j.at("w").get<int>());
    const auto& vals = j.at("values");
    if (!vals.is_array()) throw std::invalid_argument("vertex function: \"values\" must be an array");
    std::vector<Rat> values;
    values.reserve(vals.size());
    for (const auto& v : vals) values.push_back(rat_from_string(v.get<std::string>()));
    return VertexFunction(params, std::move(values));
}

std::string restriction_to_json(const JohnsonParams& params,
                                const std::vector<std::pair<Vertex, Rat>>& values) {
    json j;
    j["n"] = params.n;
    j["w"] = params.w;
    json vals = json::array();
    for (const auto& [v, value] : values) vals.push_back(json::array({v.str(), to_string(value)}));
    j["values"] = std::move(vals);
    return j.dump(2) + "\n";
}

std::vector<std::pair<Vertex, Rat>> restriction_from_json(std::string_view text) {
    json j = json::parse(text);
    const JohnsonParams params(j.at("n").get<int>(), j.at("w").get<int>());
    std::vector<std::pair<Vertex, Rat>> out;
    for (const auto& entry : j.at("values")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("restriction: entries must be [bitstring, value] pairs");
        Vertex v = Vertex::parse(entry[0].get<std::string>());
        if (v.n != params.n || v.weight() != params.w)
            throw std::invalid_argument("restriction: vertex " + v.str() + " not in J(" +
                                        std::to_string(params.n) + "," + std::to_string(params.w) + ")");
        out.emplace_back(v, rat_from_string(entry[1].get<std::string>()));
    }
    return out;
}

std::string verdict_csv_header() {
    return "n,w,i,r,criterion_verdict,oracle_verdict,agreement,failing_k1,failing_k2,which_F\n";
}

std::string verdict_csv_row(const VerdictRow& row) {
    std::ostringstream os;
    os << row.n << ',' << row.w << ',' << row.i << ',' << row.r << ','
       << to_string(row.criterion_verdict) << ',' << to_string(row.oracle_verdict) << ','
       << (row.agreement ? "true" : "false") << ',';
    if (row.failing_k) os << row.failing_k->first;
    os << ',';
    if (row.failing_k) os << row.failing_k->second;
    os << ',';
    if (row.failing_which) os << 'F' << row.failing_which;
    os << '\n';
    return os.str();
}

std::string criterion_report_text(const CriterionReport& rep) {
    std::ostringstream os;
    os << "J(" << rep.params.n << "," << rep.params.w << ") i=" << rep.index
       << " r=" << rep.radius << "\n";
    os << "radius_window_ok: " << (rep.radius_window_ok ? "true" : "false") << "\n";
    os << "hypothesis_ok: " << (rep.hypothesis_ok ? "true" : "false") << "\n";
    if (rep.window_corner) os << "window_corner: true\n";
    for (const CriterionEvaluation& ev : rep.evaluations)
        os << "F" << ev.which << "(" << ev.k1 << "," << ev.k2
           << ") = " << (ev.value ? to_string(*ev.value) : "ill-posed") << "\n";
    os << "verdict: " << to_string(rep.verdict);
    if (!rep.hypothesis_ok) os << " (advisory: outside the theorem window)";
    os << "\n";
    if (!rep.reason.empty()) os << "reason: " << rep.reason << "\n";
    return os.str();
}

std::string criterion_report_json(const CriterionReport& rep) {
    json j;
    j["n"] = rep.params.n;
    j["w"] = rep.params.w;
    j["i"] = rep.index;
    j["r"] = rep.radius;
    j["radius_window_ok"] = rep.radius_window_ok;
    j["hypothesis_ok"] = rep.hypothesis_ok;
    j["window_corner"] = rep.window_corner;
    json evs = json::array();
    for (const CriterionEvaluation& ev : rep.evaluations) {
        json e;
        e["k1"] = ev.k1;
        e["k2"] = ev.k2;
        e["which"] = std::string("F") + ev.which;
        if (ev.value)
            e["value"] = to_string(*ev.value);
        else
            e["value"] = nullptr;
        evs.push_back(std::move(e));
    }
    j["evaluations"] = std::move(evs);
    j["verdict"] = to_string(rep.verdict);
    j["advisory"] = !rep.hypothesis_ok;
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    if (rep.failing_k) {
        j["failing_k1"] = rep.failing_k->first;
        j["failing_k2"] = rep.failing_k->second;
        j["which_F"] = std::string("F") + rep.failing_which;
    }
    return j.dump(2) + "\n";
}

}  // namespace johnson
