#include "lpadic/report_json.hpp"

namespace lpadic {

using nlohmann::json;

json to_json(const IdentityReport& r) {
    json j{{"id", r.id},
           {"statement", r.statement},
           {"precision", r.precision},
           {"valuationDifference", r.valuation_difference},
           {"valuationSum", r.valuation_sum},
           {"matchedSign", r.matched_sign},
           {"matchedForm", r.matched_form},
           {"passed", r.passed},
           {"lhs", r.lhs},
           {"rhs", r.rhs}};
    if (r.valuation_difference_flipped >= 0) {
        j["valuationDifferenceFlipped"] = r.valuation_difference_flipped;
        j["valuationSumFlipped"] = r.valuation_sum_flipped;
    }
    return j;
}

json to_json(const CheckResult& r) {
    json j{{"id", r.id},
           {"statement", r.statement},
           {"status", r.passed ? "pass" : "fail"},
           {"maxVerifiedOrder", r.verified_order},
           {"quoted", r.quoted}};
    if (r.first_failing_order) {
        j["firstFailingOrder"] = *r.first_failing_order;
        j["firstFailingCoefficient"] = r.first_failing_coefficient;
    }
    return j;
}

json to_json(const PadeOrderResult& r) {
    json j{{"family", to_string(r.family)},
           {"n", r.n},
           {"order", r.order},
           {"targetSign", r.target_sign},
           {"status", r.passed ? "pass" : "fail"},
           {"verifiedThrough", r.verified_through}};
    if (r.leading_order) {
        j["leadingOrder"] = *r.leading_order;
        j["leadingCoefficient"] = r.leading_coefficient.to_string();
    }
    return j;
}

json to_json(const CertificateOutcome& r) {
    return {{"id", r.id},
            {"statement", r.statement},
            {"status", r.verified ? "pass" : "fail"},
            {"negatedMultiplierVerifies", r.negated_multiplier_verifies}};
}

json to_json(const ConditionReport& r) {
    return {{"which", to_string(r.which)},
            {"p", r.p},
            {"F", r.F},
            {"r", r.r},
            {"digits", r.digits},
            {"lhs", r.lhs},
            {"lhsError", r.lhs_error},
            {"rhs", r.rhs},
            {"rhsError", r.rhs_error},
            {"margin", r.margin},
            {"verdict", to_string(r.verdict)}};
}

json to_json(const CorollaryEntry& r) {
    return {{"number", r.number},
            {"condition", to_string(r.which)},
            {"p", r.p},
            {"F", r.F},
            {"verdict", to_string(r.verdict)},
            {"certified", r.certified},
            {"via", r.via},
            {"note", r.note}};
}

json to_json(const DenominatorAudit& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"qIntegral", row.q_integral},
                        {"pIntegral", row.p_integral},
                        {"qTimesQnIntegral", row.q_times_Q_integral}});
    return {{"family", to_string(r.family)}, {"a", r.a}, {"F", r.F}, {"allIntegral", r.all_integral()}, {"rows", rows}};
}

json to_json(const GapDiagnostic& g, std::size_t window) {
    json rows = json::array();
    for (const auto& row : g.rows) rows.push_back(json::array({row.n, row.value}));
    json j{{"family", to_string(g.family)},
           {"a", g.point.a},
           {"F", g.point.F},
           {"p", g.point.p},
           {"N", g.N},
           {"targetSign", g.target_sign},
           {"tailWindow", window},
           {"tailDecreasing", g.tail_decreasing(window)},
           {"gap", rows}};
    if (g.rows.size() >= window) j["tailSlope"] = g.tail_slope(window);
    return j;
}

json to_json(const std::vector<RemainderRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"n", r.n},
                       {"valuation", r.valuation},
                       {"knownTo", r.known_to},
                       {"capped", r.capped},
                       {"meetsBound", r.meets_bound}});
    return out;
}

}  // namespace lpadic
