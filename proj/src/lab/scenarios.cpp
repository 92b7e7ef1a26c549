#include "hardylab/lab/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <random>
#include <sstream>

#include "hardylab/errors.hpp"
#include "hardylab/spectral.hpp"

namespace hardylab::lab {
namespace {

Json cjson(cplx z) { return Json::array({z.real(), z.imag()}); }

std::string short_form(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

Json settings_json(const Settings& s) {
    return {{"working_order", s.working_order}, {"grid_size", s.grid_size}, {"boundary_radius", s.boundary_radius}};
}

Json dims_json(const std::vector<int>& dims) { return Json(dims); }

std::vector<std::string> texts(const std::vector<FunctionSpec>& specs) {
    std::vector<std::string> out;
    for (const auto& s : specs) out.push_back(s.text);
    return out;
}

void echo_common(Report& r, const ScenarioConfig& c) {
    r.inputs["settings"] = settings_json(c.settings);
}

void echo_panel_tolerances(Report& r, const ScenarioConfig& c) {
    r.tolerances["probe_bounded_below"] = c.probe.bounded_threshold;
    r.tolerances["probe_divergent_above"] = c.probe.divergent_threshold;
    r.tolerances["probe_radii"] = c.probe.radii;
    r.tolerances["probe_angles"] = c.probe.angles;
    r.tolerances["probe_target_metric"] = c.probe.target_metric;
    r.tolerances["multiplier_growth_at_most"] = c.multiplier.growth_threshold;
    r.tolerances["garsia_cap"] = c.multiplier.garsia_cap;
    r.tolerances["condition_cap"] = kConditionCap;
    r.tolerances["factorization_tol"] = c.factorization_tol;
}

// Class-membership evidence reported beside each panel; never part of a verdict.
void class_evidence(Report& r, const ScenarioConfig& c, const std::vector<FourierSeries>& series,
                    const std::vector<std::string>& names) {
    if (c.scenario == "theorem-a") {
        auto& t = r.table("lipschitz", {"symbol", "alpha", "dim", "seminorm"});
        const double alpha = 1.0 / c.p;
        for (std::size_t i = 0; i < series.size(); ++i)
            for (int dim : c.dims)
                t.add_row({names[i], alpha, dim, lipschitz_seminorm(series[i].with_order(dim), alpha, DiskGrid::ladder(dim))});
        r.tolerances["lipschitz_alpha"] = alpha;
        return;
    }
    const double q = c.scenario == "theorem-b" ? c.q : 1.0;
    GevreyOptions gopt;
    gopt.alpha0 = 1.0 / (1.0 + q);
    auto& t = r.table("gevrey", {"symbol", "c", "alpha", "fit_residual", "verdict", "growth_margin"});
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto fit = gevrey_fit(series[i], gopt);
        t.add_row({names[i], fit.c, fit.alpha, fit.residual, to_string(fit.verdict),
                   coefficient_growth_margin(series[i], q)});
    }
    r.tolerances["gevrey_alpha0"] = gopt.alpha0;
    r.tolerances["gevrey_alpha_slack"] = gopt.alpha_slack;
    r.tolerances["gevrey_residual_tol"] = gopt.residual_tol;
}

Report panel_scenario(const ScenarioConfig& c) {
    Report r;
    r.scenario = c.scenario;
    echo_common(r, c);
    echo_panel_tolerances(r, c);

    const ClassPanel* panel = &c.theorem_a;
    ProbeSpace space = ProbeSpace::hp(c.p);
    if (c.scenario == "theorem-b") {
        panel = &c.theorem_b;
        space = ProbeSpace::privalov(c.q);
        r.inputs["q"] = c.q;
    } else if (c.scenario == "davis-mccarthy") {
        panel = &c.davis_mccarthy;
        space = ProbeSpace::smirnov();
    } else {
        r.inputs["p"] = c.p;
    }
    r.inputs["dims"] = dims_json(c.dims);
    r.inputs["probe_space"] = space.name();
    r.inputs["symbols"] = texts(panel->symbols);
    r.inputs["pairs"] = texts(panel->pair_quotients);

    const auto res = run_class_panel(*panel, space, c);

    auto& probes = r.table("probe", {"symbol", "dim", "norm"});
    for (std::size_t i = 0; i < res.symbols.size(); ++i)
        for (std::size_t k = 0; k < res.probes[i].dims.size(); ++k)
            probes.add_row({res.symbols[i], res.probes[i].dims[k], res.probes[i].norms[k]});

    auto& mult = r.table("multiplier", {"symbol", "pair", "dim", "u_garsia", "mate_garsia", "composed_a", "composed_b"});
    auto& cells = r.table("multiplier_summary", {"symbol", "pair", "growth_ratio", "ill_conditioned", "verdict"});
    for (std::size_t i = 0; i < res.symbols.size(); ++i) {
        for (std::size_t j = 0; j < res.pairs.size(); ++j) {
            const auto& m = res.cells[i][j];
            for (std::size_t k = 0; k < m.dims.size(); ++k)
                mult.add_row({res.symbols[i], res.pairs[j], m.dims[k], m.u_garsia[k], m.mate_garsia[k],
                              m.composed_a[k], m.composed_b[k]});
            cells.add_row({res.symbols[i], res.pairs[j], m.growth_ratio, m.ill_conditioned, to_string(m.verdict)});
        }
    }

    auto& cross = r.table("crosstab", {"symbol", "probe_ratio", "probe_verdict", "certification", "agree"});
    for (std::size_t i = 0; i < res.symbols.size(); ++i) {
        const bool ok = res.agrees(i);
        cross.add_row({res.symbols[i], res.probes[i].growth_ratio, to_string(res.probes[i].verdict),
                       to_string(res.universal[i]), ok});
        r.check("pattern: " + res.symbols[i], ok,
                space.name() + " probe " + to_string(res.probes[i].verdict) + " (ratio " +
                    short_form(res.probes[i].growth_ratio) + "), certification " + to_string(res.universal[i]));
    }

    std::vector<FourierSeries> series;
    for (const auto& s : panel->symbols) series.push_back(to_series(s, c.settings));
    class_evidence(r, c, series, res.symbols);
    return r;
}

Report stability_scenario(const ScenarioConfig& c) {
    Report r;
    r.scenario = c.scenario;
    echo_common(r, c);
    r.inputs["h"] = c.stability_h.text;
    r.inputs["perturbations"] = "z^n / n";
    r.inputs["n"] = c.stability_ns;
    r.tolerances["factorization_tol"] = c.factorization_tol;
    r.tolerances["final_a_error_below"] = c.stability_final_tol;

    std::vector<FourierSeries> perturbations;
    for (int n : c.stability_ns) perturbations.push_back(FourierSeries::monomial(n, 1.0 / n));
    StabilityTable table;
    if (is_rational(c.stability_h))
        table = stability_experiment(to_rational(c.stability_h), perturbations, c.factorization_tol, c.settings);
    else
        table = stability_experiment(to_series(c.stability_h, c.settings), perturbations, c.factorization_tol, c.settings);

    auto& t = r.table("stability", {"metric", "a_error", "b_error"});
    for (const auto& row : table.rows) t.add_row({row.metric, row.a_error, row.b_error});
    r.check("error columns strictly decrease", table.strictly_decreasing);
    const double last = table.rows.empty() ? INFINITY : table.rows.back().a_error;
    r.check("final a error", last < c.stability_final_tol,
            "max-grid |a_n - a| = " + format_double(last) + " at n = " + std::to_string(c.stability_ns.back()));
    return r;
}

Report linearity_scenario(const ScenarioConfig& c) {
    Report r;
    r.scenario = c.scenario;
    echo_common(r, c);
    r.inputs["h1"] = c.linearity_h1.text;
    r.inputs["h2"] = c.linearity_h2.text;
    r.inputs["m"] = c.linearity_m.text;
    r.inputs["lambda"] = cjson(c.linearity_lambda);
    r.inputs["dim"] = c.linearity_dim;
    r.tolerances["residual_below"] = c.linearity_tol;
    r.tolerances["factorization_tol"] = c.factorization_tol;

    const auto p1 = pair_from_quotient(c.linearity_h1, c);
    const auto p2 = pair_from_quotient(c.linearity_h2, c);
    PythagoreanPair ph;
    if (is_rational(c.linearity_h1) && is_rational(c.linearity_h2)) {
        const auto h = linear_combination(to_rational(c.linearity_h1), to_rational(c.linearity_h2), c.linearity_lambda);
        ph = pythagorean_factorize(h, h.inner_part(), c.factorization_tol, c.settings).pair;
    } else {
        const auto h = to_series(c.linearity_h1, c.settings) * c.linearity_lambda + to_series(c.linearity_h2, c.settings);
        ph = pythagorean_factorize(h, {}, c.factorization_tol, c.settings).pair;
    }
    const auto m = to_series(c.linearity_m, c.settings);
    const int dim = c.linearity_dim;
    const auto m1 = solve_mate(p1, m, dim), m2 = solve_mate(p2, m, dim), mh = solve_mate(ph, m, dim);
    const double residual = mate_linearity_residual(p1, p2, ph, c.linearity_lambda, m, dim);

    auto& t = r.table("mates", {"n", "mate_h", "combination"});
    for (int n = 0; n < std::min(dim / 2, 8); ++n)
        t.add_row({n, cjson(mh.f_plus[n]), cjson(std::conj(c.linearity_lambda) * m1.f_plus[n] + m2.f_plus[n])});
    auto& s = r.table("solves", {"quotient", "residual", "hb_norm"});
    s.add_row({"h1", m1.residual, m1.hb_norm});
    s.add_row({"h2", m2.residual, m2.hb_norm});
    s.add_row({"lambda h1 + h2", mh.residual, mh.hb_norm});
    r.check("conjugate linearity", residual < c.linearity_tol, "residual " + format_double(residual));
    return r;
}

// ---------------------------------------------------------------------------
// Invariant suite

FourierSeries random_series(std::mt19937& rng, int lo, int hi) {
    std::normal_distribution<double> nd;
    FourierSeries f(std::max(std::abs(lo), std::abs(hi)));
    for (int n = lo; n <= hi; ++n) f.set(n, cplx{nd(rng), nd(rng)});
    return f;
}

double coefficient_inner(const FourierSeries& f, const FourierSeries& g) {
    cplx s{};
    const int n = std::max(f.order(), g.order());
    for (int k = -n; k <= n; ++k) s += f[k] * std::conj(g[k]);
    return std::abs(s);
}

Report sanity_scenario(const ScenarioConfig& c) {
    Report r;
    r.scenario = c.scenario;
    echo_common(r, c);
    r.inputs["seed"] = c.sanity_seed;
    r.inputs["trials"] = c.sanity_trials;
    r.inputs["degree"] = c.sanity_degree;
    constexpr double kExact = 0.0, kMatrix = 1e-12, kHolder = 1e-6, kGarsia = 1e-9;
    r.tolerances["projection_exact"] = kExact;
    r.tolerances["matrix_projection"] = kMatrix;
    r.tolerances["holder_relative_slack"] = kHolder;
    r.tolerances["garsia_relative_slack"] = kGarsia;

    std::mt19937 rng(c.sanity_seed);
    const int d = c.sanity_degree;
    auto& t = r.table("invariants", {"invariant", "trials", "worst"});
    auto record = [&](const std::string& name, double worst, double bound) {
        t.add_row({name, c.sanity_trials, worst});
        r.check(name, worst <= bound, "worst " + format_double(worst) + " (bound " + format_double(bound) + ")");
    };

    double split = 0.0, idem = 0.0, ortho = 0.0, conj_id = 0.0;
    for (int i = 0; i < c.sanity_trials; ++i) {
        const auto f = random_series(rng, -d, d);
        const auto pp = project_plus(f), pm = project_minus(f);
        split = std::max(split, max_coefficient_distance(pp + pm, f));
        idem = std::max({idem, max_coefficient_distance(project_plus(pp), pp), max_coefficient_distance(project_minus(pm), pm)});
        ortho = std::max(ortho, coefficient_inner(pp, pm));
        // conj(P_- f) = P_+ conj(f) - conj(f_0)
        const auto lhs = conj_series(pm);
        const auto rhs = project_plus(conj_series(f)) - FourierSeries::constant(std::conj(f[0]));
        conj_id = std::max(conj_id, max_coefficient_distance(lhs, rhs));
    }
    record("projections sum to the identity", split, kExact);
    record("projections are idempotent", idem, kExact);
    record("projection ranges are orthogonal", ortho, kExact);
    record("conjugate series identity", conj_id, kExact);

    // Hoelder: |gh|_q <= |g|_s |h|_p with 1/q = 1/s + 1/p.
    const DiskGrid grid = DiskGrid::ladder(4 * d);
    double holder = 0.0;
    const std::pair<double, double> exps[] = {{2.0, 2.0}, {1.0, 3.0}, {4.0, 0.5}, {0.5, 0.5}};
    for (int i = 0; i < c.sanity_trials; ++i) {
        const auto g = random_series(rng, 0, d), h = random_series(rng, 0, d);
        const auto gh = multiply(g, h, 2 * d);
        for (auto [s, p] : exps) {
            const double q = 1.0 / (1.0 / s + 1.0 / p);
            const double lhs = hp_quasinorm(gh, q, grid);
            const double rhs = hp_quasinorm(g, s, grid) * hp_quasinorm(h, p, grid);
            holder = std::max(holder, lhs / rhs);
        }
    }
    record("Hoelder ratio |gh|_q / (|g|_s |h|_p)", holder, 1.0 + kHolder);

    double garsia = 0.0;
    for (int i = 0; i < c.sanity_trials; ++i) {
        const auto u = random_series(rng, 0, d);
        const auto boundary = synthesize(u, 16 * grid.angular_resolution());
        double sup = 0.0;
        for (cplx v : boundary.values()) sup = std::max(sup, std::abs(v));
        garsia = std::max(garsia, garsia_bmoa_norm(u, grid) / sup);
    }
    record("Garsia ratio garsia(u) / sup |u|", garsia, 1.0 + kGarsia);

    // Truncated matrices against projections of products on the window unaffected by truncation.
    double toep = 0.0, hank = 0.0;
    const int dim = 4 * d;
    for (int i = 0; i < c.sanity_trials; ++i) {
        const auto g = random_series(rng, 0, d), f = random_series(rng, 0, d), m = random_series(rng, 0, d);
        const auto tf = hardylab::apply(toeplitz_matrix(g, dim), f.taylor(dim));
        const auto pf = project_plus(multiply(conj_series(g), f, 2 * d));
        const auto hf = hankel_image(hankel_matrix(m, dim), f.taylor(dim));
        const auto mf = conj_series(project_minus(multiply(conj_series(m), f, 2 * d)));
        for (int n = 0; n < dim; ++n) toep = std::max(toep, std::abs(tf[static_cast<std::size_t>(n)] - pf[n]));
        for (int n = 1; n < dim; ++n) hank = std::max(hank, std::abs(hf[n] - mf[n]));
    }
    record("Toeplitz matrix matches P+(conj(g) f)", toep, kMatrix);
    record("Hankel matrix matches P-(conj(m) f)", hank, kMatrix);
    return r;
}

} // namespace

bool PanelResult::agrees(std::size_t symbol) const {
    const auto v = probes[symbol].verdict;
    const auto u = universal[symbol];
    return (v == Verdict::Bounded && u == MultiplierVerdict::Multiplier) ||
           (v == Verdict::Divergent && u == MultiplierVerdict::NotCertified);
}

PythagoreanPair pair_from_quotient(const FunctionSpec& h, const ScenarioConfig& config) {
    if (is_rational(h)) {
        const auto rh = to_rational(h);
        return pythagorean_factorize(rh, rh.inner_part(), config.factorization_tol, config.settings).pair;
    }
    return pythagorean_factorize(to_series(h, config.settings), {}, config.factorization_tol, config.settings).pair;
}

PanelResult run_class_panel(const ClassPanel& panel, const ProbeSpace& space, const ScenarioConfig& config) {
    PanelResult res;
    res.symbols = texts(panel.symbols);
    res.pairs = texts(panel.pair_quotients);

    std::vector<PythagoreanPair> pairs;
    for (const auto& q : panel.pair_quotients) pairs.push_back(pair_from_quotient(q, config));
    std::vector<FourierSeries> symbols;
    for (const auto& s : panel.symbols) symbols.push_back(to_series(s, config.settings));

    // Cells are independent; results are gathered in panel order.
    std::vector<std::future<ContinuityProbeReport>> probe_jobs;
    std::vector<std::vector<std::future<MultiplierReport>>> cell_jobs(symbols.size());
    for (const auto& m : symbols) {
        probe_jobs.push_back(std::async(std::launch::async, [&, m] {
            return hankel_continuity_probe(m, space, config.dims, config.probe);
        }));
    }
    for (std::size_t i = 0; i < symbols.size(); ++i)
        for (const auto& pair : pairs)
            cell_jobs[i].push_back(std::async(std::launch::async, [&, i, pair] {
                return lotto_sarason_check(pair, symbols[i], config.dims, config.multiplier);
            }));

    for (auto& job : probe_jobs) res.probes.push_back(job.get());
    res.cells.resize(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        bool all = true;
        for (auto& job : cell_jobs[i]) {
            res.cells[i].push_back(job.get());
            all = all && res.cells[i].back().verdict == MultiplierVerdict::Multiplier;
        }
        res.universal.push_back(all ? MultiplierVerdict::Multiplier : MultiplierVerdict::NotCertified);
    }
    return res;
}

Report run_scenario(const ScenarioConfig& config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    Report r;
    try {
        if (config.scenario == "stability") r = stability_scenario(config);
        else if (config.scenario == "mate-linearity") r = linearity_scenario(config);
        else if (config.scenario == "sanity") r = sanity_scenario(config);
        else r = panel_scenario(config);
    } catch (const Error& e) {
        // Numerical failures are scenario verdicts, not crashes.
        r = Report{};
        r.scenario = config.scenario;
        r.check("scenario completed", false, e.what());
    }
    if (config.record_timing)
        r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace hardylab::lab
