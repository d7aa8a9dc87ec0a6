#include "logconc/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace logconc::io {

namespace {

using profiles::DecreasingProfile;

double require_number(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw std::invalid_argument(std::string("profile JSON: missing numeric field '") +
                                    key + "'");
    return j[key].get<double>();
}

std::vector<double> require_array(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("profile JSON: missing array field '") +
                                    key + "'");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number())
            throw std::invalid_argument(std::string("profile JSON: field '") + key +
                                        "' must contain numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

ordered_json number(double v) { return ordered_json(round12(v)); }

ordered_json array12(const std::vector<double>& vs) {
    ordered_json a = ordered_json::array();
    for (double v : vs) a.push_back(round12(v));
    return a;
}

}  // namespace

double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

ordered_json profile_to_json(const DecreasingProfile& f) {
    ordered_json j;
    std::visit(
        [&j](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, profiles::Indicator>) {
                j["kind"] = "Indicator";
                j["c"] = number(v.c);
                j["d"] = number(v.d);
            } else if constexpr (std::is_same_v<T, profiles::TruncatedExponential>) {
                j["kind"] = "TruncatedExponential";
                j["c"] = number(v.c);
                j["a"] = number(v.a);
                j["d"] = number(v.d);
            } else if constexpr (std::is_same_v<T, profiles::PlateauExponential>) {
                j["kind"] = "PlateauExponential";
                j["c"] = number(v.c);
                j["d"] = number(v.d);
                j["rate"] = number(v.rate);
            } else if constexpr (std::is_same_v<T, profiles::PlateauPower>) {
                j["kind"] = "PlateauPower";
                j["c"] = number(v.c);
                j["d"] = number(v.d);
                j["b"] = number(v.b);
                j["s"] = number(v.s);
            } else if constexpr (std::is_same_v<T, profiles::LogConcaveSampled>) {
                j["kind"] = "LogConcaveSampled";
                j["knots"] = array12(v.knots);
                j["phi"] = array12(v.phi);
            } else {
                j["kind"] = "SConcaveSampled";
                j["s"] = number(v.s);
                j["knots"] = array12(v.knots);
                j["g"] = array12(v.g);
            }
        },
        f);
    return j;
}

DecreasingProfile profile_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("profile JSON: expected an object with a 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "Indicator")
        return profiles::Indicator{require_number(j, "c"), require_number(j, "d")};
    if (kind == "TruncatedExponential")
        return profiles::TruncatedExponential{require_number(j, "c"),
                                              require_number(j, "a"),
                                              require_number(j, "d")};
    if (kind == "PlateauExponential")
        return profiles::PlateauExponential{require_number(j, "c"),
                                            require_number(j, "d"),
                                            require_number(j, "rate")};
    if (kind == "PlateauPower")
        return profiles::PlateauPower{require_number(j, "c"), require_number(j, "d"),
                                      require_number(j, "b"), require_number(j, "s")};
    if (kind == "LogConcaveSampled")
        return profiles::LogConcaveSampled{require_array(j, "knots"),
                                           require_array(j, "phi")};
    if (kind == "SConcaveSampled")
        return profiles::SConcaveSampled{require_number(j, "s"),
                                         require_array(j, "knots"),
                                         require_array(j, "g")};
    throw std::invalid_argument("profile JSON: unknown kind '" + kind + "'");
}

DecreasingProfile profile_from_string(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument("profile JSON: parse error in '" + text + "'");
    return profile_from_json(j);
}

ordered_json report_to_json(const bounds::BoundReport& r) {
    ordered_json j;
    j["theorem"] = r.theorem;
    j["lhs"] = number(r.lhs);
    j["rhs"] = number(r.rhs);
    j["ratio"] = number(r.ratio);
    j["threshold"] = number(r.threshold);
    j["applicable"] = r.applicable;
    j["satisfied"] = r.satisfied;
    j["slack"] = number(r.slack);
    return j;
}

ordered_json slab_report_to_json(const std::string& body,
                                 const geometry::SlabSandwichReport& r, int n) {
    ordered_json j;
    j["body"] = body;
    j["n"] = n;
    j["h"] = number(r.h);
    j["slab"] = number(r.slab);
    j["moment"] = number(r.moment);
    j["bounds"] = ordered_json{{"lower", number(r.lower)}, {"upper", number(r.upper)}};
    j["applicable"] = r.applicable;
    j["satisfied"] = r.lower_report.satisfied && r.upper_report.satisfied;
    return j;
}

ordered_json isotropic_report_to_json(const geometry::IsotropicReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["h"] = number(r.h);
    j["slab"] = number(r.slab);
    j["L_lower"] = number(r.L_lower);
    j["L_upper"] = number(r.L_upper);
    j["applicable"] = r.applicable;
    return j;
}

ordered_json floating_to_json(const geometry::FloatingRadii& r, double L, int n,
                              double delta) {
    ordered_json j;
    j["n"] = n;
    j["L"] = number(L);
    j["delta"] = number(delta);
    j["delta_window"] = ordered_json{{"min", number(r.delta_min)},
                                     {"max", number(r.delta_max)}};
    j["r_inner"] = number(r.r_inner);
    j["r_outer"] = number(r.r_outer);
    j["applicable"] = r.applicable;
    return j;
}

ordered_json median_to_json(const prob::MedianSandwich& m, double l2, double mean) {
    ordered_json j;
    j["lower"] = number(m.lower);
    j["median"] = number(m.median);
    j["upper"] = number(m.upper);
    j["l2norm"] = number(l2);
    j["mean"] = number(mean);
    j["satisfied"] = m.lower <= m.median * (1.0 + 1e-8) &&
                     m.median <= m.upper * (1.0 + 1e-8);
    return j;
}

ordered_json jensen_to_json(const prob::JensenReport& r) {
    ordered_json j;
    j["bound"] = number(r.bound);
    j["oracle"] = number(r.oracle);
    j["classical"] = number(r.classical);
    j["mean"] = number(r.mean);
    j["head"] = number(r.head);
    j["applicable"] = r.applicable;
    j["satisfied"] = !r.applicable || r.oracle >= r.bound * (1.0 - 1e-8);
    return j;
}

ordered_json anticoncentration_to_json(const prob::AnticoncentrationReport& r) {
    ordered_json j;
    j["h"] = number(r.h);
    j["prob"] = number(r.prob);
    j["l2norm"] = number(r.l2norm);
    j["premise_threshold"] = number(r.premise_threshold);
    j["bound"] = number(r.bound);
    j["applicable"] = r.applicable;
    j["satisfied"] = r.satisfied;
    j["note"] = r.note;
    return j;
}

std::string sweep_to_csv(const extremal::SweepResult& s) {
    std::ostringstream os;
    os << "x,value\n";
    char buf[96];
    for (const auto& row : s.rows) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", row.x, row.value);
        os << buf;
    }
    return os.str();
}

ordered_json sweep_summary_to_json(const extremal::SweepResult& s) {
    ordered_json j;
    j["argmax"] = number(s.argmax);
    j["max"] = number(s.max_value);
    j["argmin"] = number(s.argmin);
    j["min"] = number(s.min_value);
    j["monotone"] = s.monotone();
    j["nonincreasing"] = s.nonincreasing;
    j["nondecreasing"] = s.nondecreasing;
    return j;
}

}  // namespace logconc::io
