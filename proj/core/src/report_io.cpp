#include "telescope/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace telescope {

namespace {

using Json = nlohmann::ordered_json;

Json fraction_json(const FactoredFraction& f) {
    Json factors = Json::array();
    for (const auto& d : f.denominator_factors()) factors.push_back(to_string(d));
    return Json{{"numerator", to_string(f.numerator())}, {"denominator_factors", std::move(factors)}};
}

Json report_json(const VerificationReport& r) {
    Json j;
    j["name"] = r.name;
    j["eq"] = r.equation.empty() ? Json(nullptr) : Json(r.equation);
    j["n_min"] = r.n_min;
    j["n_max"] = r.n_max;
    j["status"] = std::string(to_string(r.status));
    if (r.first_failure) {
        j["first_failure"] = Json{{"n", r.first_failure->n},
                                  {"lhs", fraction_json(r.first_failure->lhs)},
                                  {"rhs", fraction_json(r.first_failure->rhs)}};
    } else {
        j["first_failure"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed.count();
    return j;
}

std::string millis(const VerificationReport& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.elapsed.count());
    return buf;
}

}  // namespace

std::string report_to_json(const VerificationReport& r, int indent) { return report_json(r).dump(indent); }

std::string reports_to_json(std::span<const VerificationReport> rs, int indent) {
    Json arr = Json::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    return arr.dump(indent);
}

std::string report_csv_header() { return "name,eq,status,n_max,elapsed_ms"; }

std::string report_to_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << r.name << ',' << r.equation << ',' << to_string(r.status) << ',' << r.n_max << ',' << millis(r);
    return os.str();
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.equation.empty()) os << "  " << r.equation;
    os << "  n=" << r.n_min << ".." << r.n_max << "  " << millis(r) << " ms";
    if (r.first_failure) {
        os << "\n  first failure at n=" << r.first_failure->n << "\n    lhs: " << to_string(r.first_failure->lhs)
           << "\n    rhs: " << to_string(r.first_failure->rhs);
    }
    return os.str();
}

}  // namespace telescope
