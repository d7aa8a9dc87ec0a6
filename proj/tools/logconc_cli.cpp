// Command-line front end: evaluate theorem bounds against the quadrature
// oracle, run seeded verification suites, compute thresholds, sweep the
// one-parameter proof objectives, and emit machine-readable reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "logconc/bounds.hpp"
#include "logconc/extremal.hpp"
#include "logconc/geometry.hpp"
#include "logconc/json_io.hpp"
#include "logconc/prob.hpp"

using namespace logconc;
using io::ordered_json;
using measures::WeightedMeasure;
using profiles::ConvexWeight;
using profiles::DecreasingProfile;

namespace {

struct RunConfig {
    std::uint64_t seed = 42;
    int trials = 1000;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    std::string format = "json";
    std::string out;
};

QuadratureConfig quad_config(const RunConfig& rc) {
    QuadratureConfig cfg;
    cfg.rel_tol = rc.rel_tol;
    cfg.abs_tol = rc.abs_tol;
    return cfg;
}

void emit(const RunConfig& rc, const std::string& text) {
    if (rc.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(rc.out);
    if (!f) throw std::invalid_argument("cannot open output file: " + rc.out);
    f << text << "\n";
}

WeightedMeasure parse_measure(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--measure expects 'p,lambda'");
    return WeightedMeasure{std::stod(text.substr(0, comma)),
                           std::stod(text.substr(comma + 1))};
}

ConvexWeight parse_weight(const std::string& text) {
    if (text == "t2") return ConvexWeight::power(2.0);
    if (text == "t3") return ConvexWeight::power(3.0);
    if (text == "t4") return ConvexWeight::power(4.0);
    if (text.rfind("power:", 0) == 0)
        return ConvexWeight::power(std::stod(text.substr(6)));
    if (text.rfind("cosh:", 0) == 0)
        return ConvexWeight::cosh_rate(std::stod(text.substr(5)));
    throw std::invalid_argument("unknown weight '" + text +
                                "' (use t2|t3|t4|power:Q|cosh:S)");
}

DecreasingProfile parse_profile(const std::string& text) {
    if (text == "uniform") return profiles::Indicator{0.5, 1.0};
    if (text == "exponential") return profiles::PlateauExponential{0.5, 0.0, 1.0};
    return io::profile_from_string(text);
}

int report_exit(const bounds::BoundReport& r) {
    if (!r.applicable) return 0;
    return r.satisfied ? 0 : 1;
}

// ---------------------------------------------------------------- bound ----

struct BoundArgs {
    std::string theorem;
    std::string profile_json;
    double h = 0.0;
    std::string measure = "0,0";
    double s = 1.0;
    double q = 2.0;
    double p = 2.0;
    std::string weight = "t2";
};

int cmd_bound(const RunConfig& rc, const BoundArgs& args) {
    const QuadratureConfig cfg = quad_config(rc);
    const DecreasingProfile f = parse_profile(args.profile_json);
    if (!(args.h > 0.0)) throw std::invalid_argument("--h must be positive");

    bounds::BoundReport rep;
    if (args.theorem == "hensley")
        rep = bounds::check_hensley(f, args.h, cfg);
    else if (args.theorem == "bk")
        rep = bounds::check_bk(f, args.h, cfg);
    else if (args.theorem == "upper-lc")
        rep = bounds::check_upper_logconcave(f, args.h, cfg);
    else if (args.theorem == "upper-sc")
        rep = bounds::check_upper_sconcave(f, args.h, args.s, cfg);
    else if (args.theorem == "weighted")
        rep = bounds::check_weighted_lower(f, parse_measure(args.measure),
                                           parse_weight(args.weight), args.h, cfg);
    else if (args.theorem == "power")
        rep = bounds::check_power_lower(f, args.q, args.h, cfg);
    else if (args.theorem == "pnorm")
        rep = bounds::check_pnorm_upper(f, args.p, args.h, cfg);
    else if (args.theorem == "entropy")
        rep = bounds::check_entropy_upper(f, args.h, 0.5, cfg);
    else
        throw std::invalid_argument("unknown theorem '" + args.theorem + "'");

    emit(rc, io::report_to_json(rep).dump(2));
    return report_exit(rep);
}

// --------------------------------------------------------------- verify ----

struct VerifyArgs {
    std::string family = "logconcave";
    double s = 1.0;
};

double pick_h(const DecreasingProfile& f, double target_ratio,
              const QuadratureConfig& cfg) {
    const double end = profiles::support_end(f);
    double lo = end * 1e-6, hi = end * (1.0 - 1e-9);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (profiles::stats(f, WeightedMeasure{}, mid, cfg).ratio < target_ratio
             ? lo
             : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

int cmd_verify(const RunConfig& rc, const VerifyArgs& args) {
    if (rc.trials < 1) throw std::invalid_argument("--trials must be >= 1");
    QuadratureConfig cfg = quad_config(rc);

    long checks = 0, applicable = 0, violations = 0;
    double worst_slack = measures::kInfinity;
    std::string worst_theorem;

    auto tally = [&](const bounds::BoundReport& r) {
        ++checks;
        if (!r.applicable) return;
        ++applicable;
        const double scale = std::max({std::abs(r.lhs), std::abs(r.rhs), 1e-300});
        const double rel = r.slack / scale;
        if (rel < worst_slack) {
            worst_slack = rel;
            worst_theorem = r.theorem;
        }
        if (!r.satisfied) ++violations;
    };

    for (int trial = 0; trial < rc.trials; ++trial) {
        const std::uint64_t trial_seed =
            rc.seed + 0x9E3779B97F4A7C15ull * (trial + 1);
        std::mt19937_64 mix(trial_seed);
        const double target = 0.05 + 0.65 * (mix() >> 11) * 0x1.0p-53;
        const int knots = 3 + int(mix() % 7);

        if (args.family == "logconcave") {
            const DecreasingProfile f = profiles::random_logconcave(trial_seed, knots);
            const double h = pick_h(f, target, cfg);
            tally(bounds::check_hensley(f, h, cfg));
            tally(bounds::check_bk(f, h, cfg));
            tally(bounds::check_upper_logconcave(f, h, cfg));
            for (double q : {1.0, 2.0, 3.0})
                tally(bounds::check_power_lower(f, q, h, cfg));
            tally(bounds::check_pnorm_upper(f, 2.0, h, cfg));
            tally(bounds::check_entropy_upper(f, h, 0.5, cfg));
            static const ConvexWeight t2 = ConvexWeight::power(2.0);
            tally(bounds::check_weighted_lower(f, WeightedMeasure{0.0, 1.0}, t2, h,
                                               cfg));
            tally(bounds::check_weighted_lower(f, WeightedMeasure{0.5, 1.0}, t2, h,
                                               cfg));
        } else if (args.family == "sconcave") {
            const DecreasingProfile f =
                profiles::random_sconcave(trial_seed, args.s, knots);
            const double h = pick_h(f, target, cfg);
            tally(bounds::check_upper_sconcave(f, h, args.s, cfg));
            tally(bounds::check_bk(f, h, cfg));
            for (double q : {1.0, 2.0, 3.0})
                tally(bounds::check_power_lower(f, q, h, cfg));
        } else {
            throw std::invalid_argument("--family must be logconcave or sconcave");
        }
    }

    ordered_json j;
    j["family"] = args.family;
    if (args.family == "sconcave") j["s"] = io::round12(args.s);
    j["seed"] = rc.seed;
    j["trials"] = rc.trials;
    j["checks"] = checks;
    j["applicable"] = applicable;
    j["violations"] = violations;
    j["worst_relative_slack"] = io::round12(worst_slack);
    j["worst_theorem"] = worst_theorem;
    emit(rc, j.dump(2));
    return violations == 0 ? 0 : 1;
}

// ------------------------------------------------------------ threshold ----

int cmd_threshold(const RunConfig& rc, double theta_p, double delta_s) {
    ordered_json j;
    if (theta_p > 0.0) {
        if (!(theta_p > 1.0))
            throw std::invalid_argument("--theta-p requires p > 1");
        const bounds::PnormThreshold t = bounds::pnorm_threshold(theta_p);
        j["theta_p"] = ordered_json{{"p", io::round12(theta_p)},
                                    {"value", io::round12(t.value)},
                                    {"argmin", io::round12(t.argmin)},
                                    {"method", "1024-point log grid + golden section"}};
    }
    if (delta_s != 0.0) {
        if (!(delta_s > 0.0)) throw std::invalid_argument("--delta-s requires s > 0");
        j["delta_s"] = ordered_json{
            {"s", io::round12(delta_s)},
            {"value", io::round12(bounds::sconcave_threshold(delta_s))}};
    }
    if (j.empty())
        throw std::invalid_argument("nothing to compute: pass --theta-p or --delta-s");
    emit(rc, j.dump(2));
    return 0;
}

// ---------------------------------------------------------------- sweep ----

struct SweepArgs {
    std::string objective = "upper-lc";
    double delta = 0.3;
    double xmax = 10.0;
    int steps = 4096;
    double s = 1.0;
    std::string measure = "0,0";
    std::string weight = "t2";
    double u = 0.5;
    double V = 1.0;
    double h = 1.0;
    std::string spacing = "log";
};

int cmd_sweep(const RunConfig& rc, const SweepArgs& args) {
    const QuadratureConfig cfg = quad_config(rc);
    std::function<double(double)> objective;
    double x_min = 0.0, x_max = args.xmax;

    if (args.objective == "upper-lc") {
        objective = [&](double x) {
            return extremal::objective_upper_logconcave(x, args.delta);
        };
    } else if (args.objective == "upper-sc") {
        objective = [&](double x) {
            return extremal::objective_upper_sconcave(x, args.delta, args.s);
        };
    } else if (args.objective == "weighted") {
        const WeightedMeasure mu = parse_measure(args.measure);
        const ConvexWeight N = parse_weight(args.weight);
        const auto [lo, hi] =
            extremal::weighted_objective_domain(mu, args.u, args.V, args.h, cfg);
        if (!(hi > lo))
            throw std::invalid_argument(
                "empty admissible x-interval for these (measure, u, V, h)");
        x_min = lo * (1.0 + 1e-9);
        x_max = std::min(args.xmax > 0 ? args.xmax : hi, 0.995 * hi);
        objective = [&args, mu, N, cfg](double x) {
            return extremal::weighted_objective(N, mu, args.u, args.V, args.h, x,
                                                cfg);
        };
    } else {
        throw std::invalid_argument("unknown objective '" + args.objective + "'");
    }

    std::vector<double> xs;
    if (args.spacing == "log") {
        xs = extremal::make_sweep_grid(x_min, x_max, args.steps);
    } else if (args.spacing == "uniform") {
        for (int i = 0; i < args.steps; ++i)
            xs.push_back(x_min + (x_max - x_min) * i / (args.steps - 1));
    } else {
        throw std::invalid_argument("--spacing must be log or uniform");
    }

    const extremal::SweepResult res = extremal::sweep(objective, xs);
    const std::string csv = io::sweep_to_csv(res);
    const std::string summary = io::sweep_summary_to_json(res).dump(2);
    if (rc.out.empty()) {
        std::cout << csv;
        std::cerr << summary << "\n";
    } else {
        std::ofstream f(rc.out);
        if (!f) throw std::invalid_argument("cannot open output file: " + rc.out);
        f << csv;
        std::cout << summary << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- geometry ----

struct GeometryArgs {
    std::string body = "cube_axis";
    int n = 3;
    double h = 0.25;
    bool isotropic = false;
    double floating_delta = -1.0;
    double L = -1.0;
};

int cmd_geometry(const RunConfig& rc, const GeometryArgs& args) {
    const QuadratureConfig cfg = quad_config(rc);
    geometry::BodyKind kind;
    if (args.body == "cube_axis")
        kind = geometry::BodyKind::CubeAxis;
    else if (args.body == "ball")
        kind = geometry::BodyKind::Ball;
    else if (args.body == "l1ball_axis")
        kind = geometry::BodyKind::L1BallAxis;
    else
        throw std::invalid_argument("unknown body '" + args.body + "'");

    const geometry::BodyProfile body = geometry::builtin_body(kind, args.n);
    const geometry::SlabSandwichReport rep =
        geometry::slab_sandwich_check(body, args.h, cfg);
    ordered_json j = io::slab_report_to_json(args.body, rep, args.n);

    if (args.isotropic)
        j["isotropic"] =
            io::isotropic_report_to_json(geometry::isotropic_sandwich(
                args.n, args.h, rep.slab));
    if (args.floating_delta >= 0.0) {
        const double L = args.L > 0.0 ? args.L : rep.lower > 0.0
                                                     ? std::sqrt(rep.moment)
                                                     : 1.0;
        j["floating"] = io::floating_to_json(
            geometry::floating_radius_bounds(L, args.n, args.floating_delta), L,
            args.n, args.floating_delta);
    }
    emit(rc, j.dump(2));
    const bool ok = !rep.applicable ||
                    (rep.lower_report.satisfied && rep.upper_report.satisfied);
    return ok ? 0 : 1;
}

// ----------------------------------------------------------------- prob ----

struct ProbArgs {
    bool laplace = false;
    bool median = false;
    bool anticoncentration = false;
    bool jensen = false;
    std::string profile = "uniform";
    double s = 1.0;
    double h = 0.5;
    std::string weight = "t2";
};

int cmd_prob(const RunConfig& rc, const ProbArgs& args) {
    const QuadratureConfig cfg = quad_config(rc);
    ordered_json j;
    bool ok = true;

    if (args.jensen) {
        const DecreasingProfile survival =
            args.profile == "exponential"
                ? DecreasingProfile{profiles::PlateauExponential{1.0, 0.0, 1.0}}
                : parse_profile(args.profile);
        const prob::TailVariable X = prob::make_tail_variable(survival, cfg);
        const prob::JensenReport rep =
            prob::jensen_improved(X, parse_weight(args.weight), args.h, cfg);
        j = io::jensen_to_json(rep);
        ok = !rep.applicable || rep.oracle >= rep.bound * (1.0 - 1e-8);
        emit(rc, j.dump(2));
        return ok ? 0 : 1;
    }

    const prob::EvenRandomVariable X =
        prob::make_even_variable(parse_profile(args.profile), cfg);

    if (args.laplace) {
        const double m = prob::median_abs(X, cfg);
        const double bound = prob::laplace_lower(m, args.s);
        const double oracle = prob::laplace_transform(X, args.s, cfg);
        j["median"] = io::round12(m);
        j["l2norm"] = io::round12(prob::l2_norm(X, cfg));
        j["mean"] = io::round12(prob::mean_abs(X, cfg));
        j["s"] = io::round12(args.s);
        j["bound"] = io::round12(bound);
        j["oracle"] = io::round12(oracle);
        ok = oracle >= bound * (1.0 - 1e-8);
        j["satisfied"] = ok;
    } else if (args.median) {
        const prob::MedianSandwich ms =
            prob::median_sandwich(X, parse_weight(args.weight), cfg);
        j = io::median_to_json(ms, prob::l2_norm(X, cfg), prob::mean_abs(X, cfg));
        ok = j["satisfied"].get<bool>();
    } else if (args.anticoncentration) {
        const prob::AnticoncentrationReport rep =
            prob::anticoncentration(X, args.h, cfg);
        j = io::anticoncentration_to_json(rep);
        ok = !rep.applicable || rep.satisfied;
    } else {
        throw std::invalid_argument(
            "pass one of --laplace, --median, --anticoncentration, --jensen");
    }
    emit(rc, j.dump(2));
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantitative bounds for decreasing log-concave and s-concave "
                 "profiles, with quadrature verification"};
    app.require_subcommand(1);

    RunConfig rc;
    app.add_option("--seed", rc.seed, "random seed")->capture_default_str();
    app.add_option("--trials", rc.trials, "number of random trials")
        ->capture_default_str();
    app.add_option("--rel-tol", rc.rel_tol, "quadrature relative tolerance")
        ->capture_default_str();
    app.add_option("--abs-tol", rc.abs_tol, "quadrature absolute tolerance")
        ->capture_default_str();
    app.add_option("--out", rc.out, "write the main payload to this file");

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "check one theorem on a profile");
    bound->add_option("--theorem", bound_args.theorem,
                      "hensley|bk|upper-lc|upper-sc|weighted|power|pnorm|entropy")
        ->required();
    bound->add_option("--profile", bound_args.profile_json,
                      "profile JSON or builtin name")
        ->required();
    bound->add_option("--h", bound_args.h, "head width")->required();
    bound->add_option("--measure", bound_args.measure, "weighted measure 'p,lambda'");
    bound->add_option("--s", bound_args.s, "concavity parameter");
    bound->add_option("--q", bound_args.q, "moment order for --theorem power");
    bound->add_option("--p", bound_args.p, "norm exponent for --theorem pnorm");
    bound->add_option("--N", bound_args.weight, "weight t2|t3|t4|power:Q|cosh:S");

    VerifyArgs verify_args;
    CLI::App* verify =
        app.add_subcommand("verify", "random-profile property verification");
    verify->add_option("--family", verify_args.family, "logconcave|sconcave");
    verify->add_option("--s", verify_args.s, "concavity for --family sconcave");

    double theta_p = 0.0, delta_s = 0.0;
    CLI::App* threshold =
        app.add_subcommand("threshold", "numeric threshold constants");
    threshold->add_option("--theta-p", theta_p, "p-norm threshold exponent");
    threshold->add_option("--delta-s", delta_s, "s-concave admissible ratio");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "sweep a proof objective");
    sweep->add_option("--objective", sweep_args.objective,
                      "upper-lc|upper-sc|weighted");
    sweep->add_option("--delta", sweep_args.delta, "Delta = 1 - u/V");
    sweep->add_option("--xmax", sweep_args.xmax, "sweep end");
    sweep->add_option("--steps", sweep_args.steps, "grid size");
    sweep->add_option("--s", sweep_args.s, "concavity for upper-sc");
    sweep->add_option("--measure", sweep_args.measure, "'p,lambda' for weighted");
    sweep->add_option("--N", sweep_args.weight, "weight for weighted");
    sweep->add_option("--u", sweep_args.u, "head mass for weighted");
    sweep->add_option("--V", sweep_args.V, "total mass for weighted");
    sweep->add_option("--h", sweep_args.h, "head width for weighted");
    sweep->add_option("--spacing", sweep_args.spacing, "log|uniform");

    GeometryArgs geo_args;
    CLI::App* geo = app.add_subcommand("geometry", "slab sandwich for a body");
    geo->add_option("--body", geo_args.body, "cube_axis|ball|l1ball_axis");
    geo->add_option("--n", geo_args.n, "dimension");
    geo->add_option("--h", geo_args.h, "slab half-width");
    geo->add_flag("--isotropic", geo_args.isotropic, "include isotropic bounds");
    geo->add_option("--floating-delta", geo_args.floating_delta,
                    "include floating-body radii at this delta");
    geo->add_option("--L", geo_args.L, "isotropic constant for --floating-delta");

    ProbArgs prob_args;
    CLI::App* prob_cmd = app.add_subcommand("prob", "probabilistic corollaries");
    prob_cmd->add_flag("--laplace", prob_args.laplace, "Laplace-transform bound");
    prob_cmd->add_flag("--median", prob_args.median, "median sandwich");
    prob_cmd->add_flag("--anticoncentration", prob_args.anticoncentration,
                       "anticoncentration implication");
    prob_cmd->add_flag("--jensen", prob_args.jensen, "improved Jensen bound");
    prob_cmd->add_option("--profile", prob_args.profile,
                         "builtin name (uniform|exponential) or profile JSON");
    prob_cmd->add_option("--s", prob_args.s, "transform argument / concavity");
    prob_cmd->add_option("--h", prob_args.h, "head width");
    prob_cmd->add_option("--N", prob_args.weight, "weight for --median/--jensen");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (bound->parsed()) return cmd_bound(rc, bound_args);
        if (verify->parsed()) return cmd_verify(rc, verify_args);
        if (threshold->parsed()) return cmd_threshold(rc, theta_p, delta_s);
        if (sweep->parsed()) return cmd_sweep(rc, sweep_args);
        if (geo->parsed()) return cmd_geometry(rc, geo_args);
        if (prob_cmd->parsed()) return cmd_prob(rc, prob_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
