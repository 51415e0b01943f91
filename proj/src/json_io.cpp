#include "qcomb/json_io.hpp"

#include <limits>

namespace qcomb {

namespace {

nlohmann::json coefficient_to_json(const BigInt& c) {
    static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
    static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
    if (c >= kMin && c <= kMax) return c.convert_to<std::int64_t>();
    return c.str();
}

BigInt coefficient_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

}  // namespace

nlohmann::json poly_to_json(const LaurentPoly& poly) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : poly.terms()) out.push_back({e, coefficient_to_json(c)});
    return out;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (const auto& term : j) p.add_term(term.at(0).get<int>(), coefficient_from_json(term.at(1)));
    return p;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json j{
        {"id", report.id},
        {"n", report.n},
        {"lhs", poly_to_json(report.lhs)},
        {"rhs", poly_to_json(report.rhs)},
        {"lhs_text", report.lhs.str()},
        {"rhs_text", report.rhs.str()},
        {"equal", report.equal},
        {"elapsed_ms", report.elapsed_ms},
        {"counts", nlohmann::json::object()},
    };
    if (report.param) j["param"] = *report.param;
    j["length"] = report.length;
    for (const auto& [key, value] : report.counts) j["counts"][key] = value;
    return j;
}

}  // namespace qcomb
