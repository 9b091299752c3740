#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli.hpp"
#include "telescope/catalog.hpp"
#include "telescope/properties.hpp"
#include "telescope/sequences.hpp"

using namespace telescope;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << title;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << '\n';
    if (!ok) ++failures;
}

template <typename F>
void criterion(int id, const std::string& title, F&& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(id, title, ok, detail);
}

bool all_passed(const std::vector<VerificationReport>& rs, std::string& detail) {
    for (const auto& r : rs)
        if (!r.passed()) {
            detail = "failed: " + r.name;
            return false;
        }
    return true;
}

}  // namespace

int main() {
    criterion(1, "catalog: 21 identities exact through n = 40 in under 10 s", [](std::string& detail) {
        const auto started = std::chrono::steady_clock::now();
        std::vector<VerificationReport> rs;
        for (auto name : catalog_names()) rs.push_back(verify_identity(name, 40));
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
        const bool ok = all_passed(rs, detail) && rs.size() == 21;
        if (!detail.empty()) detail += ", ";
        detail += std::to_string(rs.size()) + " identities, " + std::to_string(elapsed.count()) + " s";
        return ok && elapsed.count() < 10.0;
    });

    criterion(2, "spot values", [](std::string& detail) {
        const auto sury = catalog_get("id_sury_236");
        const auto pell = catalog_get("id_pell_sum");
        const auto gb = catalog_get("id_gb_sury");
        const auto t = LaurentPoly::variable(Variable::T);
        const bool a = evaluate(sury.lhs(2), {}) == BigRational(16) && evaluate(sury.rhs(2), {}) == BigRational(16);
        const bool b = evaluate(pell.lhs(2), {}) == BigRational(10) && evaluate(pell.rhs(2), {}) == BigRational(10);
        const bool c = frac_equal(gb.lhs(0), FactoredFraction(t)) && frac_equal(gb.rhs(0), FactoredFraction(t));
        detail = std::string("sury(2)=16:") + (a ? "ok" : "no") + " pell(2)=10:" + (b ? "ok" : "no") +
                 " gb(0)=t:" + (c ? "ok" : "no");
        return a && b && c;
    });

    criterion(3, "telescoping engine: 200 random schemes, modes agree, mutations located", [](std::string& detail) {
        const auto r = property_scheme_modes(3, 200, 12);
        if (!r.passed()) detail = "first failure at n = " + std::to_string(r.first_failure->n);
        return r.passed();
    });

    criterion(4, "recurrence schemes: 100 random unit recurrences through n = 20", [](std::string& detail) {
        const auto r = property_recurrence_schemes(4, 100, 20);
        if (!r.passed()) detail = "first failure at n = " + std::to_string(r.first_failure->n);
        return r.passed();
    });

    criterion(5, "specializations of the power-weighted generalization through n = 30", [](std::string& detail) {
        std::vector<VerificationReport> rs;
        for (const auto& c : specialization_cases())
            if (c.base == "id_gb_sury") rs.push_back(verify_specialization(c, 30));
        detail = std::to_string(rs.size()) + " cases";
        return all_passed(rs, detail) && rs.size() == 5;
    });

    criterion(6, "reductions of the generic identities through n = 20", [](std::string& detail) {
        const auto rs = reduction_checks(20);
        return all_passed(rs, detail) && rs.size() == 2;
    });

    criterion(7, "sequence relations", [](std::string& detail) {
        const bool fl = fibonacci_lucas_relation_check(200);
        const bool pq = pell_relation_check(200);
        SequenceEngine D(builtin_sequence("derangement_shifted"));
        bool derange = true;
        for (std::int64_t n = 0; n <= 100; ++n) derange = derange && D.term(n) == LaurentPoly(derangement_count(n + 1));
        SequenceEngine G(builtin_sequence("qfib"));
        SequenceEngine F(builtin_sequence("fibonacci"));
        bool qfib = true;
        const Assignment one{{Variable::Q, 1}, {Variable::A, 1}};
        for (std::int64_t n = 0; n <= 30; ++n) qfib = qfib && evaluate(G.term(n), one) == evaluate(F.term(n), {});
        detail = std::string("F/L:") + (fl ? "ok" : "no") + " P/Q:" + (pq ? "ok" : "no") +
                 " D:" + (derange ? "ok" : "no") + " qfib:" + (qfib ? "ok" : "no");
        return fl && pq && derange && qfib;
    });

    criterion(8, "command line: report passes, a corrupted sign flips the exit code", [](std::string& detail) {
        std::ostringstream out, err;
        const int clean = cli::run_cli({"report", "--n-max", "40", "--format", "json"}, out, err);
        const auto records = nlohmann::json::parse(out.str());
        std::size_t passing = 0;
        for (const auto& r : records) passing += r["status"] == "pass";

        cli::CliHooks hooks;
        hooks.corrupt_identity = "id_derange_sury";
        std::ostringstream bad_out, bad_err;
        const int corrupted = cli::run_cli({"report", "--n-max", "40"}, bad_out, bad_err, hooks);
        const bool named = bad_err.str().find("id_derange_sury") != std::string::npos;
        detail = "exit " + std::to_string(clean) + ", " + std::to_string(passing) + "/" +
                 std::to_string(records.size()) + " passing; corrupted exit " + std::to_string(corrupted) +
                 (named ? ", named" : ", not named");
        return clean == 0 && passing == records.size() && records.size() >= 21 + 5 + 2 && corrupted == 1 && named;
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << '\n';
    return failures == 0 ? 0 : 1;
}
