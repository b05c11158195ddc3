#include "qdirac/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include <json.hpp>

#include "qdirac/boundary.hpp"
#include "qdirac/errors.hpp"

namespace qdirac {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- defaults

const std::set<std::string> kScenarios = {
    "verify-algebra", "cauchy-interior", "cauchy-exterior", "radiation-scan",
    "spinor-exterior", "stokes-check",   "l2-scan",         "convergence",
};

std::vector<PointSource> outside_sources() {
    return {{{0.0, 0.0, 3.0}, CQuat{1.0, 0.2, -0.3, 0.1}}};
}

std::vector<PointSource> inside_sources() {
    return {{{0.1, -0.05, 0.2}, CQuat{1.0, 0.0, 0.5, -0.2}}};
}

std::vector<Vec3> ring_targets(std::initializer_list<double> radii) {
    const Vec3 dir = normalized(Vec3{0.2, 0.3, 0.93});
    std::vector<Vec3> out;
    for (double r : radii) out.push_back(r * dir);
    return out;
}

} // namespace

ScenarioConfig default_scenario_config(const std::string& scenario) {
    if (kScenarios.count(scenario) == 0) {
        throw ConfigInvalid("unknown scenario: " + scenario);
    }
    ScenarioConfig c;
    c.scenario = scenario;

    if (scenario == "cauchy-interior") {
        c.nu = Cplx(1.0, 0.0);
        c.sources = outside_sources();
        c.targets = {{0.0, 0.0, 0.0}, {0.3, 0.1, -0.2}, {-0.35, 0.2, 0.25}};
    } else if (scenario == "convergence") {
        c.nu = Cplx(1.0, 0.0);
        c.sources = outside_sources();
        // Near-center targets stay clear of the coarsest level's guard
        // (3 edge lengths ~ 0.9 at level 2).
        c.targets = {{0.0, 0.0, 0.0}, {0.05, 0.02, -0.03}, {-0.04, 0.03, 0.05}};
        c.levels = {2, 3, 4};
    } else if (scenario == "cauchy-exterior") {
        c.nu = Cplx(1.0, 0.5);
        c.sources = inside_sources();
        c.targets = ring_targets({1.5, 2.0, 3.0});
        c.radii = {4.0, 8.0, 16.0};
    } else if (scenario == "radiation-scan") {
        c.nu = Cplx(1.0, 0.0);
        c.radii = {10.0, 31.6227766016838, 100.0, 316.227766016838, 1000.0};
    } else if (scenario == "spinor-exterior") {
        c.omega_m = {2.0, 1.0};
        c.sources = inside_sources();
        c.targets = ring_targets({1.5, 2.0, 3.0});
        c.radii = {10.0, 100.0, 1000.0};
    } else if (scenario == "stokes-check") {
        c.samples = 3;
        c.tolerance = 0.01;
    } else if (scenario == "l2-scan") {
        c.nu = Cplx(2.0, 0.0);
        c.radii = {2.0, 4.0, 8.0, 16.0};
        c.tolerance = 1.1;
    }
    return c;
}

// ------------------------------------------------------------- validation

namespace {

void require_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& item : obj.items()) {
        if (allowed.count(item.key()) == 0) {
            throw ConfigInvalid("unknown key \"" + item.key() + "\" in " + where);
        }
    }
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ConfigInvalid(where + " must be a number");
    return v.get<double>();
}

Vec3 as_vec3(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 3) throw ConfigInvalid(where + " must be [x, y, z]");
    return {as_number(v[0], where), as_number(v[1], where), as_number(v[2], where)};
}

Cplx as_cplx(const json& v, const std::string& where) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2) {
        return {as_number(v[0], where), as_number(v[1], where)};
    }
    throw ConfigInvalid(where + " must be a number or [re, im]");
}

CQuat as_cquat(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 4) throw ConfigInvalid(where + " must hold 4 components");
    return {as_cplx(v[0], where), as_cplx(v[1], where), as_cplx(v[2], where), as_cplx(v[3], where)};
}

void parse_geometry(const json& g, ScenarioConfig& c) {
    require_keys(g, {"kind", "radius", "center", "level", "path"}, "geometry");
    const std::string kind = g.value("kind", "sphere");
    if (kind == "sphere") {
        c.use_mesh_file = false;
        if (g.contains("radius")) c.radius = as_number(g["radius"], "geometry.radius");
        if (c.radius <= 0.0) throw ConfigInvalid("geometry.radius must be positive");
        if (g.contains("center")) c.center = as_vec3(g["center"], "geometry.center");
        if (g.contains("level")) {
            if (!g["level"].is_number_integer()) throw ConfigInvalid("geometry.level must be an integer");
            c.level = g["level"].get<int>();
        }
        if (c.level < 0 || c.level > 7) throw ConfigInvalid("geometry.level must be in [0, 7]");
    } else if (kind == "mesh") {
        if (!g.contains("path") || !g["path"].is_string()) {
            throw ConfigInvalid("geometry.path is required for kind \"mesh\"");
        }
        c.use_mesh_file = true;
        c.mesh_path = g["path"].get<std::string>();
    } else {
        throw ConfigInvalid("geometry.kind must be \"sphere\" or \"mesh\"");
    }
}

void parse_params(const json& p, ScenarioConfig& c) {
    require_keys(p, {"nu", "omega", "m"}, "params");
    if (p.contains("nu")) {
        if (p.contains("omega") || p.contains("m")) {
            throw ConfigInvalid("params: give either nu or (omega, m), not both");
        }
        c.nu = as_cplx(p["nu"], "params.nu");
        c.omega_m.reset();
        if (c.nu->imag() < 0.0 || (c.nu->imag() == 0.0 && c.nu->real() < 0.0)) {
            throw ConfigInvalid("params.nu must lie in the closed upper half plane (Re >= 0 if real)");
        }
    } else if (p.contains("omega") && p.contains("m")) {
        c.omega_m = {as_number(p["omega"], "params.omega"), as_number(p["m"], "params.m")};
        c.nu.reset();
    } else if (p.contains("omega") || p.contains("m")) {
        throw ConfigInvalid("params: omega and m come as a pair");
    }
}

} // namespace

ScenarioConfig parse_scenario_config(const std::string& json_text, const std::string& scenario) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigInvalid(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigInvalid("config root must be an object");

    require_keys(doc,
                 {"schema_version", "scenario", "seed", "output", "geometry", "params", "sources",
                  "targets", "radii", "levels", "tolerance", "spacing", "samples"},
                 "config root");

    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer() ||
        doc["schema_version"].get<int>() != 1) {
        throw ConfigInvalid("config requires \"schema_version\": 1");
    }

    std::string name = scenario;
    if (doc.contains("scenario")) {
        if (!doc["scenario"].is_string()) throw ConfigInvalid("scenario must be a string");
        const std::string from_file = doc["scenario"].get<std::string>();
        if (!name.empty() && from_file != name) {
            throw ConfigInvalid("config is for scenario \"" + from_file +
                                "\" but subcommand is \"" + name + "\"");
        }
        name = from_file;
    }
    if (name.empty()) throw ConfigInvalid("no scenario given (subcommand or \"scenario\" key)");

    ScenarioConfig c = default_scenario_config(name);

    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) throw ConfigInvalid("seed must be a non-negative integer");
        c.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("output")) {
        if (!doc["output"].is_string()) throw ConfigInvalid("output must be a string");
        c.output = doc["output"].get<std::string>();
    }
    if (doc.contains("geometry")) parse_geometry(doc["geometry"], c);
    if (doc.contains("params")) parse_params(doc["params"], c);
    if (doc.contains("sources")) {
        if (!doc["sources"].is_array()) throw ConfigInvalid("sources must be an array");
        c.sources.clear();
        for (const json& s : doc["sources"]) {
            require_keys(s, {"point", "strength"}, "source");
            if (!s.contains("point")) throw ConfigInvalid("source needs a point");
            PointSource ps;
            ps.location = as_vec3(s["point"], "source.point");
            ps.strength = s.contains("strength") ? as_cquat(s["strength"], "source.strength")
                                                 : CQuat::one();
            c.sources.push_back(ps);
        }
        if (c.sources.empty()) throw ConfigInvalid("sources must not be empty");
    }
    if (doc.contains("targets")) {
        if (!doc["targets"].is_array()) throw ConfigInvalid("targets must be an array");
        c.targets.clear();
        for (const json& t : doc["targets"]) c.targets.push_back(as_vec3(t, "target"));
        if (c.targets.empty()) throw ConfigInvalid("targets must not be empty");
    }
    if (doc.contains("radii")) {
        if (!doc["radii"].is_array()) throw ConfigInvalid("radii must be an array");
        c.radii.clear();
        for (const json& r : doc["radii"]) {
            const double v = as_number(r, "radii entry");
            if (v <= 0.0) throw ConfigInvalid("radii must be positive");
            c.radii.push_back(v);
        }
        if (c.radii.empty()) throw ConfigInvalid("radii must not be empty");
    }
    if (doc.contains("levels")) {
        if (!doc["levels"].is_array()) throw ConfigInvalid("levels must be an array");
        c.levels.clear();
        for (const json& l : doc["levels"]) {
            if (!l.is_number_integer()) throw ConfigInvalid("levels entries must be integers");
            const int v = l.get<int>();
            if (v < 0 || v > 7) throw ConfigInvalid("levels entries must be in [0, 7]");
            c.levels.push_back(v);
        }
        if (c.levels.size() < 2) throw ConfigInvalid("levels needs at least two entries");
    }
    if (doc.contains("tolerance")) {
        c.tolerance = as_number(doc["tolerance"], "tolerance");
        if (c.tolerance <= 0.0) throw ConfigInvalid("tolerance must be positive");
    }
    if (doc.contains("spacing")) {
        c.spacing = as_number(doc["spacing"], "spacing");
        if (c.spacing <= 0.0) throw ConfigInvalid("spacing must be positive");
    }
    if (doc.contains("samples")) {
        if (!doc["samples"].is_number_integer()) throw ConfigInvalid("samples must be an integer");
        c.samples = doc["samples"].get<int>();
        if (c.samples <= 0) throw ConfigInvalid("samples must be positive");
    }
    return c;
}

// ---------------------------------------------------------------- helpers

namespace {

struct Sampler {
    std::mt19937_64 engine;
    std::uniform_real_distribution<double> unit{-1.0, 1.0};

    explicit Sampler(std::uint64_t seed) : engine(seed) {}
    double real() { return unit(engine); }
    Cplx cplx() { return {real(), real()}; }
    CQuat cquat() { return {cplx(), cplx(), cplx(), cplx()}; }
    CQuat pure_vector() { return {0.0, cplx(), cplx(), cplx()}; }
    Spinor4 spinor() { return {cplx(), cplx(), cplx(), cplx()}; }
};

SurfaceMesh scenario_mesh(const ScenarioConfig& c) {
    if (c.use_mesh_file) return load_mesh(c.mesh_path);
    return icosphere(c.radius, c.level, c.center);
}

KernelParams scenario_params(const ScenarioConfig& c) {
    if (c.omega_m) return KernelParams::from_spinor(c.omega_m->first, c.omega_m->second);
    return KernelParams::from_nu(c.nu.value_or(Cplx(1.0, 0.0)));
}

double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double dn = static_cast<double>(n);
    return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

std::string target_tag(std::size_t i) { return "target" + std::to_string(i); }

std::string radius_tag(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", r);
    return buf;
}

// ------------------------------------------------------------ the runners

Report run_verify_algebra(const ScenarioConfig& c) {
    Report rep;
    Sampler rng(c.seed);
    const int n = c.samples;

    double conj_dev = 0.0, mult_dev = 0.0, inv_dev = 0.0;
    for (int k = 0; k < n; ++k) {
        const CQuat a = rng.cquat();
        const CQuat b = rng.cquat();
        const double scale = std::max(1.0, modulus_c(a) * modulus_c(b));
        conj_dev = std::max(conj_dev, modulus_c(conj(a * b) - conj(b) * conj(a)) / scale);
        mult_dev = std::max(mult_dev, std::abs(norm_sq(a * b) - norm_sq(a) * norm_sq(b)) / scale);
        if (std::abs(norm_sq(a)) > kInverseEps * modulus_c_sq(a)) {
            inv_dev = std::max(inv_dev, modulus_c(a * inverse(a) - CQuat::one()));
        }
    }
    rep.add_max("conjugation-antihomomorphism", "algebra/conj-antihom", conj_dev, 1e-12);
    rep.add_max("norm-multiplicativity", "algebra/norm-mult", mult_dev, 1e-12);
    rep.add_max("inverse-law", "algebra/inverse", inv_dev, 1e-12);

    // The four equivalent zero-divisor criteria answer identically, and
    // constructed cone elements classify positive.
    bool agree = true;
    double cone_margin = 0.0;
    for (int k = 0; k < n; ++k) {
        CQuat a;
        if (k % 2 == 0) {
            a = rng.cquat();
        } else {
            Vec3 u = normalized(Vec3{rng.real(), rng.real(), rng.real()});
            a = rng.cplx() * (CQuat::one() + kImagUnit * CQuat::from_vec(u));
            if (modulus_c(a) == 0.0) continue;
        }
        const ZeroDivisorDiag d = zero_divisor_check(a);
        for (double crit : d.criteria) {
            if ((crit <= kZeroDivisorTol) != d.is_zero_divisor) agree = false;
        }
        if (k % 2 == 1) {
            cone_margin = std::max(cone_margin, d.margin);
            if (!d.is_zero_divisor) agree = false;
        }
    }
    rep.add("zero-divisor-criteria-agreement", "algebra/zero-divisor-criteria", agree ? 1.0 : 0.0, 1.0,
            agree);
    rep.add_max("zero-divisor-cone-margin", "algebra/zero-divisor-margin", cone_margin, 1e-10);

    // Gamma algebra.
    const CMatrix4 e4 = CMatrix4::identity();
    double gamma_dev = std::max(max_abs_diff(gamma(0) * gamma(0), e4),
                                max_abs_diff(gamma(5) * gamma(5), e4));
    for (int k = 1; k <= 3; ++k) {
        gamma_dev = std::max(gamma_dev, max_abs_diff(gamma(k) * gamma(k), e4 * Cplx(-1.0)));
    }
    const int idx[5] = {0, 1, 2, 3, 5};
    for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) {
            gamma_dev = std::max(gamma_dev, max_abs_diff(gamma(idx[a]) * gamma(idx[b]) +
                                                             gamma(idx[b]) * gamma(idx[a]),
                                                         CMatrix4{}));
        }
    }
    rep.add_max("gamma-relations", "algebra/gamma", gamma_dev, 1e-12);
    rep.add_max("a-transform-inverse-pair", "algebra/a-inverse-pair",
                std::max(max_abs_diff(a_matrix() * a_inv_matrix(), e4),
                         max_abs_diff(a_inv_matrix() * a_matrix(), e4)),
                1e-12);

    // Intertwining identities on random arguments.
    double twine_dev = 0.0;
    for (int k = 0; k < std::min(n, 2000); ++k) {
        const CQuat rho = rng.cquat();
        const Spinor4 v = apply_A_inv(rho);
        auto wrap = [&](const CMatrix4& mid) {
            return apply_A(gamma123() * (mid * v));
        };
        twine_dev = std::max(twine_dev, modulus_c(wrap(gamma(1)) - CQuat::i1() * rho));
        twine_dev = std::max(twine_dev, modulus_c(wrap(gamma(2)) - CQuat::i2() * rho));
        twine_dev = std::max(twine_dev, modulus_c(wrap(gamma(3)) + CQuat::i3() * rho));
        twine_dev = std::max(twine_dev, modulus_c(wrap(gamma(0)) - rho * CQuat::i1()));
        twine_dev = std::max(twine_dev,
                             modulus_c(wrap(CMatrix4::identity()) + kImagUnit * (rho * CQuat::i2())));
    }
    rep.add_max("a-transform-intertwining", "algebra/intertwining", twine_dev, 1e-12);

    // Projector laws on random off-cone parameters.
    double proj_dev = 0.0;
    int done = 0;
    while (done < std::min(n, 5000)) {
        const CQuat alpha = rng.pure_vector();
        const Cplx nu = alpha_to_nu(alpha);
        if (std::abs(nu) < 0.3) continue;
        ++done;
        const ProjectorPair p = make_projectors(alpha);
        const CQuat f = rng.cquat();
        proj_dev = std::max(proj_dev, modulus_c(p.plus + p.minus - CQuat::one()));
        proj_dev = std::max(proj_dev, modulus_c(p.plus * p.plus - p.plus));
        proj_dev = std::max(proj_dev, modulus_c(p.plus * p.minus));
        proj_dev = std::max(proj_dev, modulus_c(f * p.plus * alpha - nu * (f * p.plus)) /
                                          std::max(1.0, modulus_c(f)));
        proj_dev = std::max(proj_dev, modulus_c(f * p.minus * alpha + nu * (f * p.minus)) /
                                          std::max(1.0, modulus_c(f)));
    }
    rep.add_max("projector-laws", "algebra/projectors", proj_dev, 1e-12);
    return rep;
}

Report run_cauchy_interior(const ScenarioConfig& c) {
    Report rep;
    const KernelParams p = scenario_params(c);
    const QuatField f = null_field(p, c.sources);
    const SurfaceMesh mesh = scenario_mesh(c);

    for (std::size_t i = 0; i < c.targets.size(); ++i) {
        const ReconstructionReport r =
            c.omega_m || p.kind != KernelParams::Kind::Nu
                ? reconstruct_alpha(mesh, f, c.targets[i], p.alpha, OperatorSide::Interior,
                                    KAlphaForm::Projection, c.level)
                : reconstruct_nu(mesh, f, c.targets[i], p.nu, OperatorSide::Interior, c.level);
        rep.add_max(target_tag(i) + "-rel-error", "cauchy/interior", r.rel_error, c.tolerance);
    }
    return rep;
}

Report run_cauchy_exterior(const ScenarioConfig& c) {
    Report rep;
    const KernelParams p = scenario_params(c);
    const QuatField f = null_field(p, c.sources);
    const SurfaceMesh mesh = scenario_mesh(c);

    for (std::size_t i = 0; i < c.targets.size(); ++i) {
        const ReconstructionReport r =
            p.kind != KernelParams::Kind::Nu
                ? reconstruct_alpha(mesh, f, c.targets[i], p.alpha, OperatorSide::Exterior,
                                    KAlphaForm::Projection, c.level)
                : reconstruct_nu(mesh, f, c.targets[i], p.nu, OperatorSide::Exterior, c.level);
        rep.add_max(target_tag(i) + "-rel-error", "cauchy/exterior-minus-sign", r.rel_error,
                    c.tolerance);
    }

    // Far-sphere tail of the exterior argument. With Im nu > 0 the decay is
    // exponential and the per-doubling ratio gates; at real nu the true tail
    // is zero and the magnitude gates instead (ratios of quadrature noise
    // are reported informationally).
    const Vec3 probe = c.targets.front();
    std::vector<double> tails;
    for (double radius : c.radii) {
        tails.push_back(modulus_c(truncation_integral(f, probe, p.nu, radius, c.level)));
        rep.add("truncation-magnitude-R" + radius_tag(radius),
                "cauchy/truncation-tail", tails.back(), 1e-6, tails.back() <= 1e-6,
                /*gate=*/p.nu.imag() == 0.0);
    }
    for (std::size_t i = 0; i + 1 < tails.size(); ++i) {
        const double ratio = tails[i] / std::max(tails[i + 1], 1e-300);
        rep.add("truncation-decay-step" + std::to_string(i), "cauchy/truncation-decay", ratio, 5.0,
                ratio >= 5.0, /*gate=*/p.nu.imag() > 0.0);
    }
    return rep;
}

Report run_radiation_scan(const ScenarioConfig& c) {
    Report rep;
    const Cplx nu = c.nu.value_or(Cplx(1.0, 0.0));
    const KernelParams p = KernelParams::from_nu(nu);
    const Vec3 dir = normalized(Vec3{0.2, 0.3, 0.93});

    const QuatField kplus{[nu](const Vec3& x) { return fund_K(x, nu, +1); }, {Vec3{}}};
    const QuatField kminus{[nu](const Vec3& x) { return fund_K(x, nu, -1); }, {Vec3{}}};

    std::vector<double> res_plus, res_minus_scaled;
    for (double r : c.radii) {
        res_plus.push_back(radiation_residual(RadiationKind::Rad, kplus, r * dir, p));
        res_minus_scaled.push_back(r * radiation_residual(RadiationKind::Rad, kminus, r * dir, p));
    }

    const double slope = fit_loglog_slope(c.radii, res_plus);
    const bool plus_radiating = std::abs(slope + 2.0) <= 0.1;
    rep.add("kplus[radiating]-residual-slope", "radiation/outgoing-decay", slope, -2.0,
            plus_radiating);

    const auto [lo, hi] = std::minmax_element(res_minus_scaled.begin(), res_minus_scaled.end());
    const double spread = *hi / std::max(*lo, 1e-300);
    rep.add_max("kminus[non-radiating]-scaled-residual-spread", "radiation/incoming-no-decay",
                spread, 2.0);

    // The zero-divisor counterexample: (1 - ix/|x|) |x|^2 kills the weaker
    // condition exactly while the Cauchy-kernel product grows linearly.
    const QuatField counter{[](const Vec3& x) {
                                const double r = norm(x);
                                return (CQuat::one() - (kImagUnit / r) * CQuat::from_vec(x)) * (r * r);
                            },
                            {Vec3{}}};
    double mm_rel = 0.0;
    std::vector<double> growth;
    for (double r : c.radii) {
        const Vec3 x = r * dir;
        mm_rel = std::max(mm_rel, radiation_residual(RadiationKind::MM, counter, x, p) / (r * r));
        growth.push_back(modulus_c((CQuat::from_vec(x) / (r * r)) * counter(x)));
    }
    rep.add_max("counterexample-weak-residual", "radiation/weak-condition-zero", mm_rel, 1e-12);
    const double gslope = fit_loglog_slope(c.radii, growth);
    rep.add("counterexample-product-growth-slope", "radiation/weak-condition-insufficient", gslope,
            1.0, std::abs(gslope - 1.0) <= 0.05);
    return rep;
}

Report run_spinor_exterior(const ScenarioConfig& c) {
    Report rep;
    const auto [omega, m] = c.omega_m.value_or(std::pair{2.0, 1.0});
    const KernelParams p = KernelParams::from_spinor(omega, m);
    const SpinorField q = null_spinor_field(omega, m, c.sources);
    const SurfaceMesh mesh = scenario_mesh(c);

    for (std::size_t i = 0; i < c.targets.size(); ++i) {
        const ReconstructionReport r =
            reconstruct_spinor(mesh, q, c.targets[i], omega, m, OperatorSide::Exterior, c.level);
        rep.add_max(target_tag(i) + "-rel-error", "spinor/exterior-cauchy", r.rel_error,
                    c.tolerance);
    }

    // Dirac operator annihilates the generated trace data (wiring check).
    double dirac_resid = 0.0;
    for (const Vec3& t : c.targets) {
        dirac_resid = std::max(dirac_resid, modulus(dirac_wm_fd(q, omega, m, t, 1e-4)));
    }
    rep.add_max("dirac-null-residual", "spinor/null-field", dirac_resid, 1e-6);

    // o(1/r) proxy for the spinor radiation condition: r * residual drops
    // by >= 10x per decade (up to a rounding tie at exactly 10).
    const Vec3 dir = normalized(Vec3{0.4, -0.3, 0.6});
    std::vector<double> scaled;
    for (double r : c.radii) {
        scaled.push_back(r * radiation_residual(RadiationKind::Spinor, q, r * dir, p));
    }
    for (std::size_t i = 0; i + 1 < scaled.size(); ++i) {
        const double decades = std::log10(c.radii[i + 1] / c.radii[i]);
        const double ratio = std::pow(scaled[i] / std::max(scaled[i + 1], 1e-300), 1.0 / decades);
        rep.add_min("radiation-decade-decay-step" + std::to_string(i), "spinor/radiation-decay",
                    ratio, kDecadeDecayFactor * (1.0 - kDecadeDecaySlack));
    }
    return rep;
}

Report run_stokes_check(const ScenarioConfig& c) {
    Report rep;
    Sampler rng(c.seed);
    const SurfaceMesh mesh = scenario_mesh(c);
    const BallGrid grid = shell_grid(c.radius, std::nullopt, c.spacing, c.center);
    const double h = 1e-3;

    {
        const QuatField one{[](const Vec3&) { return CQuat::one(); }, {}};
        const QuatField x1{[](const Vec3& v) { return CQuat(Cplx(v.x)); }, {}};
        const double scale = stokes_scale(grid, one, x1, h);
        rep.add_max("linear-field-residual", "stokes/identity",
                    stokes_residual(grid, mesh, one, x1, h) / scale, c.tolerance);
    }

    for (int trial = 0; trial < c.samples; ++trial) {
        // Random quadratic fields with analytic-free construction: affine +
        // squares, coefficients from the seeded sampler.
        std::array<CQuat, 10> cf{}, cg{};
        for (auto& v : cf) v = rng.cquat();
        for (auto& v : cg) v = rng.cquat();
        auto poly = [](const std::array<CQuat, 10>& k) {
            return QuatField{[k](const Vec3& v) {
                                 return k[0] + k[1] * v.x + k[2] * v.y + k[3] * v.z +
                                        k[4] * (v.x * v.x) + k[5] * (v.y * v.y) +
                                        k[6] * (v.z * v.z) + k[7] * (v.x * v.y) +
                                        k[8] * (v.y * v.z) + k[9] * (v.x * v.z);
                             },
                             {}};
        };
        const QuatField f = poly(cf);
        const QuatField g = poly(cg);
        const double scale = stokes_scale(grid, f, g, h);
        rep.add_max("quadratic-field-residual-" + std::to_string(trial), "stokes/identity",
                    stokes_residual(grid, mesh, f, g, h) / scale, c.tolerance);
    }
    return rep;
}

Report run_l2_scan(const ScenarioConfig& c) {
    Report rep;
    const Cplx nu = c.nu.value_or(Cplx(2.0, 0.0));

    const QuatField f = null_field(KernelParams::from_nu(nu), {{c.center, CQuat::one()}});
    const GrowthScan scan = l2_growth_scan(f, c.radii, c.level);
    for (const GrowthSample& s : scan.samples) {
        rep.add("norm-sq-R" + radius_tag(s.radius), "l2/surface-norm", s.norm_sq,
                0.0, true, /*gate=*/false);
    }
    rep.add_max("bounded-max-over-min", "l2/radiating-bounded", scan.max_over_min, c.tolerance);

    // Reference row at nu = 1: the exact transient (2 nu^2 + 1/R^2) peaks at
    // the smallest radius; ratio ~1.12 over this window.
    const QuatField f1 =
        null_field(KernelParams::from_nu(Cplx(1.0, 0.0)), {{c.center, CQuat::one()}});
    rep.add_max("bounded-max-over-min-nu1", "l2/radiating-bounded",
                l2_growth_scan(f1, c.radii, c.level).max_over_min, 1.15, /*gate=*/false);

    // Absorbing frequency: strictly decreasing norms.
    const QuatField fa =
        null_field(KernelParams::from_nu(Cplx(0.0, 1.0)), {{c.center, CQuat::one()}});
    const GrowthScan absorb = l2_growth_scan(fa, c.radii, c.level);
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i + 1 < absorb.samples.size(); ++i) {
        worst_ratio = std::max(worst_ratio, absorb.samples[i + 1].norm_sq / absorb.samples[i].norm_sq);
    }
    rep.add("absorbing-strictly-decreasing", "l2/absorbing-decay", worst_ratio, 1.0,
            worst_ratio < 1.0);

    // Counterexample grows at least like R^4 (exactly R^6 for this field).
    const QuatField counter{[](const Vec3& x) {
                                const double r = norm(x);
                                return (CQuat::one() - (kImagUnit / r) * CQuat::from_vec(x)) * (r * r);
                            },
                            {Vec3{}}};
    const GrowthScan growth = l2_growth_scan(counter, c.radii, c.level);
    const double exponent =
        std::log(growth.samples.back().norm_sq / growth.samples.front().norm_sq) /
        std::log(c.radii.back() / c.radii.front());
    rep.add_min("counterexample-growth-exponent", "l2/counterexample-divergence", exponent, 4.0);
    return rep;
}

Report run_convergence(const ScenarioConfig& c) {
    Report rep;
    const std::vector<ConvergenceRow> table = convergence_table(c);
    for (const ConvergenceRow& row : table) {
        rep.add("L" + std::to_string(row.level) + "-rel-error", "cauchy/interior", row.error,
                c.tolerance, true, /*gate=*/false);
    }
    for (std::size_t i = 0; i + 1 < table.size(); ++i) {
        const double order = std::log2(table[i].error / table[i + 1].error) /
                             std::log2(table[i].edge / table[i + 1].edge);
        rep.add_min("order-L" + std::to_string(table[i].level) + "-to-L" +
                        std::to_string(table[i + 1].level),
                    "cauchy/quadrature-order", order, 1.7);
    }
    rep.add_max("finest-level-rel-error", "cauchy/interior", table.back().error, c.tolerance);
    return rep;
}

} // namespace

std::vector<ConvergenceRow> convergence_table(const ScenarioConfig& c) {
    if (c.levels.size() < 2) throw ConfigInvalid("convergence needs at least two levels");
    const KernelParams p = scenario_params(c);
    const QuatField f = null_field(p, c.sources);

    std::vector<ConvergenceRow> out;
    for (int level : c.levels) {
        const SurfaceMesh mesh = icosphere(c.radius, level, c.center);
        double worst = 0.0;
        for (const Vec3& t : c.targets) {
            const ReconstructionReport r =
                p.kind != KernelParams::Kind::Nu
                    ? reconstruct_alpha(mesh, f, t, p.alpha, OperatorSide::Interior,
                                        KAlphaForm::Projection, level)
                    : reconstruct_nu(mesh, f, t, p.nu, OperatorSide::Interior, level);
            worst = std::max(worst, r.rel_error);
        }
        out.push_back({level, mesh.typical_edge, worst});
    }
    return out;
}

Report run_scenario(const ScenarioConfig& c) {
    Report rep;
    if (c.scenario == "verify-algebra") rep = run_verify_algebra(c);
    else if (c.scenario == "cauchy-interior") rep = run_cauchy_interior(c);
    else if (c.scenario == "cauchy-exterior") rep = run_cauchy_exterior(c);
    else if (c.scenario == "radiation-scan") rep = run_radiation_scan(c);
    else if (c.scenario == "spinor-exterior") rep = run_spinor_exterior(c);
    else if (c.scenario == "stokes-check") rep = run_stokes_check(c);
    else if (c.scenario == "l2-scan") rep = run_l2_scan(c);
    else if (c.scenario == "convergence") rep = run_convergence(c);
    else throw ConfigInvalid("unknown scenario: " + c.scenario);

    rep.scenario = c.scenario;
    rep.seed = c.seed;
    return rep;
}

} // namespace qdirac
