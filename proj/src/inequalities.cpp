#include "macroreal/inequalities.hpp"

#include <charconv>
#include <string>
#include <utility>

namespace macroreal {
namespace {

constexpr Outcome P = Outcome::Plus;
constexpr Outcome M = Outcome::Minus;

// +P(a) - P(b) - P(c) <= 0 over three times.
InequalitySpec three_term(std::string name, EventSpec a, EventSpec b, EventSpec c) {
    return {std::move(name), 3, {{+1, std::move(a)}, {-1, std::move(b)}, {-1, std::move(c)}}, 0.0,
            std::nullopt};
}

std::optional<int> parse_suffix_int(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    const std::string_view digits = name.substr(prefix.size());
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        return std::nullopt;
    }
    return n;
}

void add_correlator(std::vector<Term>& terms, int sign, int i, int j) {
    for (Outcome a : {P, M}) {
        for (Outcome b : {P, M}) {
            terms.push_back({sign * sign_of(a) * sign_of(b), EventSpec{{i, a}, {j, b}}});
        }
    }
}

}  // namespace

void InequalitySpec::validate() const {
    if (n_times < 1) throw DomainError(name + ": n_times must be >= 1");
    for (const auto& t : terms) {
        if (t.sign != 1 && t.sign != -1) throw DomainError(name + ": term signs must be +-1");
        if (t.event.last_time() > n_times) {
            throw DomainError(name + ": " + t.event.to_string() + " exceeds n_times");
        }
    }
}

InequalitySpec InequalitySpec::flipped() const {
    InequalitySpec out = *this;
    out.name += "-flipped";
    for (auto& t : out.terms) t.event = t.event.flipped();
    return out;
}

std::string InequalitySpec::to_string() const {
    std::string s;
    for (const auto& t : terms) {
        s += (t.sign > 0 ? (s.empty() ? "" : " + ") : (s.empty() ? "-" : " - "));
        s += t.event.to_string();
    }
    s += " <= " + std::to_string(upper_bound);
    return s;
}

std::vector<InequalitySpec> wlgi3_catalog() {
    std::vector<InequalitySpec> listed = {
        three_term("wlgi3-4", {{2, P}, {3, M}}, {{1, P}, {2, P}}, {{1, M}, {3, M}}),
        three_term("wlgi3-5a", {{2, P}, {3, P}}, {{1, M}, {2, P}}, {{1, P}, {3, P}}),
        three_term("wlgi3-5b", {{2, P}, {3, M}}, {{1, M}, {2, P}}, {{1, P}, {3, M}}),
        three_term("wlgi3-5c", {{2, P}, {3, P}}, {{1, P}, {2, P}}, {{1, M}, {3, P}}),
        three_term("wlgi3-5d", {{1, P}, {3, M}}, {{1, P}, {2, M}}, {{2, P}, {3, M}}),
        three_term("wlgi3-5e", {{1, P}, {3, M}}, {{1, P}, {2, P}}, {{2, M}, {3, M}}),
        three_term("wlgi3-5f", {{1, P}, {3, P}}, {{1, P}, {2, P}}, {{2, M}, {3, P}}),
        three_term("wlgi3-5g", {{1, P}, {3, P}}, {{1, P}, {2, M}}, {{2, P}, {3, P}}),
        three_term("wlgi3-5h", {{1, P}, {2, M}}, {{1, P}, {3, M}}, {{2, M}, {3, P}}),
        three_term("wlgi3-5i", {{1, P}, {2, M}}, {{1, P}, {3, P}}, {{2, M}, {3, M}}),
        three_term("wlgi3-5j", {{1, P}, {2, P}}, {{1, P}, {3, P}}, {{2, P}, {3, M}}),
        three_term("wlgi3-5k", {{1, P}, {2, P}}, {{1, P}, {3, M}}, {{2, P}, {3, P}}),
    };
    std::vector<InequalitySpec> all = listed;
    for (const auto& spec : listed) all.push_back(spec.flipped());
    return all;
}

InequalitySpec wlgi_n(int n) {
    if (n < 3) throw DomainError("wlgi-n requires n >= 3");
    InequalitySpec spec{"wlgi-n:" + std::to_string(n), n, {}, 0.0, std::nullopt};
    spec.terms.push_back({+1, EventSpec{{1, P}, {n, M}}});
    for (int i = 1; i < n; ++i) spec.terms.push_back({-1, EventSpec{{i, P}, {i + 1, M}}});
    return spec;
}

double lgi_lower_bound(int n) {
    return n % 2 ? -static_cast<double>(n) : -static_cast<double>(n - 2);
}

InequalitySpec lgi_spec(int n) {
    if (n < 3) throw DomainError("lgi requires n >= 3");
    InequalitySpec spec{"lgi:" + std::to_string(n), n, {}, static_cast<double>(n - 2),
                        lgi_lower_bound(n)};
    for (int i = 1; i < n; ++i) add_correlator(spec.terms, +1, i, i + 1);
    add_correlator(spec.terms, -1, 1, n);
    return spec;
}

InequalitySpec nsit_spec() {
    return {"nsit", 2, {{+1, EventSpec{{2, P}}}, {-1, EventSpec{{1, P}, {2, P}}}, {-1, EventSpec{{1, M}, {2, P}}}},
            0.0, 0.0};
}

std::optional<int> parse_lgi_name(std::string_view name) {
    return parse_suffix_int(name, "lgi:");
}

InequalitySpec find_spec(std::string_view name) {
    if (name == "nsit") return nsit_spec();
    if (auto n = parse_lgi_name(name)) return lgi_spec(*n);
    if (auto n = parse_suffix_int(name, "wlgi-n:")) return wlgi_n(*n);
    if (name.substr(0, 6) == "wlgi3-") {
        for (auto& spec : wlgi3_catalog()) {
            if (spec.name == name) return spec;
        }
    }
    throw UnknownSpecError("unknown inequality '" + std::string(name) + "'");
}

ViolationResult evaluate(const InequalitySpec& spec, const ModelParams& params) {
    params.validate();
    const MeasurementPlan plan = MeasurementPlan::from_params(params, spec.n_times);
    double value = 0.0;
    for (const auto& t : spec.terms) value += t.sign * joint_probability(plan, t.event);
    return {params, value, spec.upper_bound, value - spec.upper_bound};
}

ViolationResult evaluate(std::string_view spec_name, const ModelParams& params) {
    if (auto n = parse_lgi_name(spec_name)) return lgi_kn(*n, params);
    return evaluate(find_spec(spec_name), params);
}

ViolationResult lgi_kn(int n, const ModelParams& params) {
    if (n < 3) throw DomainError("lgi requires n >= 3");
    params.validate();
    const MeasurementPlan plan = MeasurementPlan::from_params(params, n);
    double k = 0.0;
    for (int i = 1; i < n; ++i) k += correlation(plan, i, i + 1);
    k -= correlation(plan, 1, n);
    const double bound = n - 2;
    return {params, k, bound, k - bound};
}

double nsit_delta(const ModelParams& params) {
    params.validate();
    const MeasurementPlan plan = MeasurementPlan::from_params(params, 2);
    return single_time_probability(plan, 2, P) - joint_probability(plan, EventSpec{{1, P}, {2, P}}) -
           joint_probability(plan, EventSpec{{1, M}, {2, P}});
}

}  // namespace macroreal
