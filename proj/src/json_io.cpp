#include "expind/json_io.hpp"

#include <sstream>

namespace expind {

using nlohmann::json;

json dyadic_json(const Dyadic& d) {
    return json{{"num", d.num().str()}, {"shift", d.shift()}};
}

json weight_report_json(const WeightReport& report) {
    json contributions = json::array();
    for (const auto& c : report.contributions) {
        json dist = c.dist == INF_DIST ? json("inf") : json(c.dist);
        contributions.push_back(json::array({c.source, dist, dyadic_json(c.term)}));
    }
    return json{{"vertex", report.vertex},
                {"weight", dyadic_json(report.total)},
                {"contributions", contributions}};
}

json solve_result_json(const SolveResult& result, const std::string& invariant) {
    return json{{"invariant", invariant},
                {"value", result.value},
                {"witness", result.witness},
                {"nodes", result.nodes_explored},
                {"ms", result.elapsed.count()}};
}

json family_descriptor_json(const FamilyDescriptor& d) {
    return json{{"kind", family_kind_name(d.kind)}, {"k", d.k}, {"labeling", d.labeling}};
}

json extremal_report_json(const ExtremalReport& r) {
    auto rational = [](const Rational& q) { return json{{"num", q.num}, {"den", q.den}}; };
    return json{{"n", r.n},
                {"diam", r.diam},
                {"alpha", r.alpha},
                {"alpha_e", r.alpha_e},
                {"lower_bound", rational(r.lower_bound)},
                {"upper_bound", rational(r.upper_bound)},
                {"meets_lower", r.meets_lower},
                {"meets_upper", r.meets_upper},
                {"is_path_5k", r.is_path_5k},
                {"is_full_binary", r.is_full_binary}};
}

std::string verification_report_lines(const VerificationReport& report) {
    std::ostringstream out;
    out << json{{"theorem", report.theorem_id},
                {"range", report.parameter_range},
                {"instances", report.instances_checked}}
               .dump()
        << '\n';
    for (const auto& f : report.failures)
        out << json{{"failure", {{"graph", f.graph}, {"expected", f.expected}, {"got", f.got}}}}
                   .dump()
            << '\n';
    out << json{{"passed", report.passed},
                {"failures", report.failures.size()},
                {"ms", report.elapsed.count()}}
               .dump()
        << '\n';
    return out.str();
}

}  // namespace expind
