#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <map>

#include "telescope/catalog.hpp"
#include "telescope/errors.hpp"
#include "telescope/properties.hpp"
#include "telescope/report_io.hpp"
#include "telescope/sequences.hpp"

namespace telescope::cli {

namespace {

enum class Format { Text, Json, Csv };

struct Options {
    std::string identity;
    std::string sequence;
    std::int64_t n = -1;
    std::int64_t n_max = 40;
    Format format = Format::Text;
    std::optional<std::uint64_t> seed;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

IdentityInstance load_identity(std::string_view name, const CliHooks& hooks) {
    IdentityInstance id = catalog_get(name);
    if (hooks.corrupt_identity && *hooks.corrupt_identity == id.name)
        id.summand = [inner = id.summand](std::int64_t k) { return -inner(k); };
    return id;
}

std::vector<VerificationReport> identity_reports(const Options& o, const CliHooks& hooks) {
    std::vector<VerificationReport> out;
    if (!o.identity.empty()) {
        out.push_back(verify_identity(load_identity(o.identity, hooks), o.n_max));
        return out;
    }
    for (auto name : catalog_names()) out.push_back(verify_identity(load_identity(name, hooks), o.n_max));
    return out;
}

int emit_reports(const std::vector<VerificationReport>& reports, Format format, std::ostream& out,
                 std::ostream& err) {
    switch (format) {
        case Format::Json: out << reports_to_json(reports) << '\n'; break;
        case Format::Csv:
            out << report_csv_header() << '\n';
            for (const auto& r : reports) out << report_to_csv(r) << '\n';
            break;
        case Format::Text:
            for (const auto& r : reports) out << report_to_text(r) << '\n';
            break;
    }
    int failures = 0;
    for (const auto& r : reports) {
        if (r.passed()) continue;
        ++failures;
        err << "FAIL " << r.name << '\n';
    }
    return failures == 0 ? 0 : 1;
}

int cmd_list(const Options& o, std::ostream& out) {
    switch (o.format) {
        case Format::Json: out << catalog_json() << '\n'; break;
        case Format::Csv:
            out << "name,eq,k_start,constraints\n";
            for (const auto& id : catalog_list())
                out << id.name << ',' << id.equation << ',' << id.k_start << ',' << csv_field(id.constraints)
                    << '\n';
            break;
        case Format::Text:
            for (const auto& id : catalog_list()) {
                out << id.name << "  (" << id.equation << ")";
                if (!id.constraints.empty()) out << "  " << id.constraints;
                out << '\n';
            }
            break;
    }
    return 0;
}

int cmd_term(const Options& o, std::ostream& out) {
    SequenceEngine engine(builtin_sequence(o.sequence));
    const std::string value = to_string(engine.term(o.n));
    switch (o.format) {
        case Format::Json: {
            nlohmann::ordered_json j{{"sequence", o.sequence}, {"n", o.n}, {"value", value}};
            out << j.dump() << '\n';
            break;
        }
        case Format::Csv: out << "sequence,n,value\n" << o.sequence << ',' << o.n << ',' << value << '\n'; break;
        case Format::Text: out << value << '\n'; break;
    }
    return 0;
}

int cmd_report(const Options& o, const CliHooks& hooks, std::ostream& out, std::ostream& err) {
    auto reports = identity_reports(o, hooks);
    for (const auto& c : specialization_cases()) reports.push_back(verify_specialization(c, o.n_max));
    for (auto& r : reduction_checks(o.n_max)) reports.push_back(std::move(r));
    if (o.seed) {
        reports.push_back(property_scheme_modes(*o.seed));
        reports.push_back(property_recurrence_schemes(*o.seed));
    }
    return emit_reports(reports, o.format, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
    CLI::App app{"Exact verification of telescoping-sum identities", "telescope"};
    app.require_subcommand(1);
    Options o;
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto add_n_max = [&](CLI::App* sub) {
        sub->add_option("--n-max", o.n_max, "largest n checked")->check(CLI::NonNegativeNumber)->capture_default_str();
    };

    auto* list = app.add_subcommand("list", "list the identity catalog");
    add_format(list);

    auto* term = app.add_subcommand("term", "print one sequence term");
    term->add_option("--seq", o.sequence, "sequence name")->required();
    term->add_option("--n", o.n, "index")->required()->check(CLI::NonNegativeNumber);
    add_format(term);

    auto* verify = app.add_subcommand("verify", "verify one identity, or all of them");
    verify->add_option("--identity", o.identity, "identity name");
    add_n_max(verify);
    add_format(verify);

    auto* report = app.add_subcommand("report", "verify the catalog and the cross checks");
    add_n_max(report);
    add_format(report);
    report->add_option("--seed", o.seed, "seed for the randomized property suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_list(o, out);
        if (term->parsed()) return cmd_term(o, out);
        if (verify->parsed()) return emit_reports(identity_reports(o, hooks), o.format, out, err);
        return cmd_report(o, hooks, out, err);
    } catch (const UnknownIdentity& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnknownSequence& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace telescope::cli
