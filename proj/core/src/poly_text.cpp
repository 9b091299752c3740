#include <cctype>
#include <charconv>
#include <ostream>
#include <string>

#include "telescope/errors.hpp"
#include "telescope/laurent_poly.hpp"

namespace telescope {

namespace {

std::string monomial_text(const Exponents& e) {
    std::string out;
    for (Variable v : {Variable::T, Variable::A, Variable::Q}) {
        const auto x = e[static_cast<std::size_t>(v)];
        if (x == 0) continue;
        if (!out.empty()) out += '*';
        out += variable_symbol(v);
        if (x != 1) {
            out += '^';
            out += std::to_string(x);
        }
    }
    return out;
}

std::string term_text(const Term& term) {
    const std::string mono = monomial_text(term.exponents);
    if (mono.empty()) return term.coefficient.to_string();
    if (term.coefficient.is_one()) return mono;
    if (term.coefficient == BigRational(-1)) return "-" + mono;
    return term.coefficient.to_string() + "*" + mono;
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
    throw ParseError("cannot parse polynomial '" + std::string(text) + "': " + why);
}

bool parse_variable(char c, Variable& v) {
    switch (c) {
        case 't': v = Variable::T; return true;
        case 'q': v = Variable::Q; return true;
        case 'A': v = Variable::A; return true;
        default: return false;
    }
}

Term parse_term(std::string_view whole, std::string_view text) {
    Term term{Exponents{}, BigRational(1)};
    if (text.empty()) fail(whole, "empty term");
    if (text.front() == '-' && text.size() > 1 && std::isalpha(static_cast<unsigned char>(text[1]))) {
        term.coefficient = BigRational(-1);
        text.remove_prefix(1);
    }
    bool first = true;
    while (true) {
        const auto star = text.find('*');
        const std::string_view factor = text.substr(0, star);
        if (factor.empty()) fail(whole, "empty factor");
        Variable v{};
        if (parse_variable(factor.front(), v)) {
            std::int32_t exponent = 1;
            if (factor.size() > 1) {
                if (factor[1] != '^' || factor.size() == 2) fail(whole, "bad exponent");
                const char* begin = factor.data() + 2;
                const char* end = factor.data() + factor.size();
                auto [ptr, ec] = std::from_chars(begin, end, exponent);
                if (ec != std::errc{} || ptr != end) fail(whole, "bad exponent");
            }
            auto& slot = term.exponents[static_cast<std::size_t>(v)];
            if (slot != 0 || exponent == 0) fail(whole, "repeated or zero exponent");
            slot = exponent;
        } else if (first) {
            term.coefficient = BigRational::parse(factor);
            if (term.coefficient.is_zero()) fail(whole, "zero coefficient");
        } else {
            fail(whole, "unexpected factor '" + std::string(factor) + "'");
        }
        first = false;
        if (star == std::string_view::npos) break;
        text.remove_prefix(star + 1);
    }
    return term;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& term : p.terms()) {
        if (!out.empty()) out += " + ";
        out += term_text(term);
    }
    return out;
}

LaurentPoly parse_poly(std::string_view text) {
    if (text == "0") return {};
    std::vector<Term> terms;
    std::string_view rest = text;
    while (true) {
        const auto sep = rest.find(" + ");
        terms.push_back(parse_term(text, rest.substr(0, sep)));
        if (sep == std::string_view::npos) break;
        rest.remove_prefix(sep + 3);
    }
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (!term_order_less(terms[i - 1].exponents, terms[i].exponents))
            fail(text, "terms not in canonical order");
    return LaurentPoly::from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace telescope
