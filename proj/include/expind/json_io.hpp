#ifndef EXPIND_JSON_IO_HPP
#define EXPIND_JSON_IO_HPP

#include <json.hpp>

#include "expind/characterize.hpp"
#include "expind/families.hpp"
#include "expind/solver.hpp"
#include "expind/verify.hpp"
#include "expind/weights.hpp"

namespace expind {

// Dyadic as {"num": decimal string, "shift": int}
nlohmann::json dyadic_json(const Dyadic& d);

// {"vertex": int, "weight": {...}, "contributions": [[v, dist|"inf", {...}], ...]}
nlohmann::json weight_report_json(const WeightReport& report);

// {"invariant": ..., "value": ..., "witness": [...], "nodes": ..., "ms": ...}
nlohmann::json solve_result_json(const SolveResult& result, const std::string& invariant);

nlohmann::json family_descriptor_json(const FamilyDescriptor& d);

nlohmann::json extremal_report_json(const ExtremalReport& report);

// JSON lines: one header object, one object per failure, one summary.
std::string verification_report_lines(const VerificationReport& report);

}  // namespace expind

#endif
