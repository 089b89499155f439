#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "eph/cycles.hpp"
#include "eph/errors.hpp"
#include "eph/invariants.hpp"
#include "eph/mech.hpp"
#include "eph/moebius.hpp"
#include "eph/scene.hpp"
#include "eph/sl2rep.hpp"
#include "eph/spectral.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace eph;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecision = 3;
constexpr std::uint64_t kDefaultSeed = 7;

struct Context {
    std::string format = "csv";
    bool strict = false;
    std::vector<std::string> warnings;
};

std::string num(double x) {
    if (x == 0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("EPH_SEED");
    if (!env || !*env) return kDefaultSeed;
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(env, &pos, 10);
        if (pos != std::string(env).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string("EPH_SEED is not an unsigned integer: ") + env);
    }
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write output file: " + path);
    out << text;
}

void add_format(CLI::App* sub, Context& ctx, bool text = false) {
    const std::vector<std::string> choices = text ? std::vector<std::string>{"text", "csv", "json"}
                                                  : std::vector<std::string>{"csv", "json"};
    sub->add_option("--format", ctx.format, text ? "Output format: text (default), csv or json" : "Output format: csv (default) or json")
        ->check(CLI::IsMember(choices));
}

// render ------------------------------------------------------------------

int cmd_render(Context& ctx, const std::string& scene_path, const std::string& out_path) {
    const Scene scene = load_scene(scene_path);
    const std::string svg = render_svg(scene);
    if (out_path.empty() || out_path == "-") {
        std::cout << svg;
        return kExitOk;
    }
    emit(svg, out_path);
    json rows = json::array();
    std::ostringstream csv;
    csv << "cycle,k,l,n,m,sigma,branches\n";
    for (std::size_t i = 0; i < scene.cycles.size(); ++i) {
        const auto& sc = scene.cycles[i];
        const auto br = cycle_branches(sc.cycle, sc.sigma, scene.viewport, scene.samples);
        csv << i << ',' << num(sc.cycle.k) << ',' << num(sc.cycle.l) << ',' << num(sc.cycle.n) << ','
            << num(sc.cycle.m) << ',' << sc.sigma.value() << ',' << br.size() << '\n';
        rows.push_back({{"cycle", i},
                        {"k", sc.cycle.k},
                        {"l", sc.cycle.l},
                        {"n", sc.cycle.n},
                        {"m", sc.cycle.m},
                        {"sigma", sc.sigma.value()},
                        {"branches", br.size()}});
    }
    if (ctx.format == "json")
        std::cout << json{{"svg", out_path}, {"cycles", rows}}.dump(2) << '\n';
    else
        std::cout << csv.str();
    return kExitOk;
}

// korbits -----------------------------------------------------------------

Point2 parse_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError("start point must look like u,v: " + s);
    try {
        std::size_t p1 = 0, p2 = 0;
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        const double u = std::stod(a, &p1), v = std::stod(b, &p2);
        if (p1 != a.size() || p2 != b.size() || !std::isfinite(u) || !std::isfinite(v)) throw std::invalid_argument(s);
        return {u, v};
    } catch (const std::exception&) {
        throw InputError("start point must look like u,v: " + s);
    }
}

int cmd_korbits(Context& ctx, int sigma_i, const std::vector<std::string>& starts_s, int num_pts,
                const std::string& svg_path) {
    const Signature sigma(sigma_i);
    if (num_pts < 3) throw InputError("--num must be at least 3");
    std::vector<Point2> starts;
    for (const auto& s : starts_s) starts.push_back(parse_point(s));
    Scene scene;
    scene.viewport = {-4, 4, -3, 3};
    scene.samples = 64;
    json rows = json::array();
    std::ostringstream csv;
    csv << "start_u,start_v,k,l,n,m,max_residual,points\n";
    for (const Point2& st : starts) {
        const auto orbit = k_orbit_sample(ExtendedPoint::at(st.u, st.v), sigma, num_pts);
        std::vector<Point2> pts;
        for (const auto& p : orbit)
            if (!p.infinite && std::abs(p.u) < 1e6 && std::abs(p.v) < 1e6) pts.push_back({p.u, p.v});
        Cycle c;
        try {
            c = cycle_from_points(pts, sigma, sigma).normalized();
        } catch (const DegenerateError&) {
            throw InputError("orbit of (" + num(st.u) + "," + num(st.v) + ") is degenerate (fixed point of K)");
        }
        const double scale = std::max({std::abs(c.k), std::abs(c.l), std::abs(c.n), std::abs(c.m)});
        double res = 0;
        for (const auto& p : pts)
            res = std::max(res, std::abs(cycle_equation(c, p.u, p.v, sigma)) /
                                    (scale * (1 + p.u * p.u + p.v * p.v)));
        if (res > 1e-8) ctx.warnings.push_back("orbit fit residual " + num(res) + " exceeds 1e-8");
        csv << num(st.u) << ',' << num(st.v) << ',' << num(c.k) << ',' << num(c.l) << ',' << num(c.n) << ','
            << num(c.m) << ',' << num(res) << ',' << pts.size() << '\n';
        rows.push_back({{"start", {st.u, st.v}},
                        {"k", c.k},
                        {"l", c.l},
                        {"n", c.n},
                        {"m", c.m},
                        {"max_residual", res},
                        {"points", pts.size()}});
        scene.cycles.push_back({c, sigma, ""});
        for (const auto& p : pts) scene.points.push_back({p, "#333333"});
    }
    if (!svg_path.empty()) emit(render_svg(scene), svg_path);
    if (ctx.format == "json")
        std::cout << json{{"sigma", sigma_i}, {"num", num_pts}, {"orbits", rows}}.dump(2) << '\n';
    else
        std::cout << csv.str();
    return kExitOk;
}

// invariants --------------------------------------------------------------

int cmd_invariants(Context& ctx, const std::string& scene_path, double tol) {
    const Scene scene = load_scene(scene_path);
    for (const auto& sc : scene.cycles)
        if (sc.cycle.sigma_breve != scene.cycles.front().cycle.sigma_breve)
            throw InputError("invariants needs every cycle to share one sigma_breve");
    json rows = json::array();
    std::ostringstream csv;
    csv << "i,j,pairing,normalized_pairing,orthogonal,f_orthogonal\n";
    for (std::size_t i = 0; i < scene.cycles.size(); ++i)
        for (std::size_t j = 0; j < scene.cycles.size(); ++j) {
            if (i == j) continue;
            const Cycle& a = scene.cycles[i].cycle;
            const Cycle& b = scene.cycles[j].cycle;
            const double p = pairing(a, b), np = normalized_pairing(a, b);
            const bool orth = is_orthogonal(a, b, tol);
            bool forth = false;
            std::string f_text;
            try {
                forth = is_f_orthogonal(a, b, tol);
                f_text = forth ? "1" : "0";
            } catch (const DegenerateError&) {
                f_text = "degenerate";
            }
            csv << i << ',' << j << ',' << num(p) << ',' << num(np) << ',' << (orth ? 1 : 0) << ',' << f_text << '\n';
            json row{{"i", i}, {"j", j}, {"pairing", p}, {"normalized_pairing", np}, {"orthogonal", orth}};
            if (f_text == "degenerate")
                row["f_orthogonal"] = nullptr;
            else
                row["f_orthogonal"] = forth;
            rows.push_back(row);
        }
    if (ctx.format == "json")
        std::cout << json{{"cycles", scene.cycles.size()}, {"pairs", rows}}.dump(2) << '\n';
    else
        std::cout << csv.str();
    return kExitOk;
}

// lidskii -----------------------------------------------------------------

int cmd_lidskii(Context& ctx, int n, double eps, std::uint64_t seed, bool eigs) {
    if (n < 2 || n > 64) throw InputError("--n must lie in [2, 64]");
    if (!(eps > 0 && eps < 1)) throw InputError("--eps must lie in (0, 1)");
    const LidskiiReport r = lidskii_experiment(n, eps, seed);
    const double expected_gap = 2 * 3.14159265358979323846 / n;
    if (ctx.format == "json") {
        json ev = json::array();
        for (const auto& z : r.eigenvalues) ev.push_back({z.real(), z.imag()});
        json out{{"n", n},
                 {"eps", eps},
                 {"seed", seed},
                 {"expected_gap", expected_gap},
                 {"max_gap_dev", r.max_gap_dev},
                 {"mean_magnitude", r.mean_magnitude},
                 {"predicted_magnitude", r.predicted_magnitude},
                 {"max_magnitude_dev", r.max_magnitude_dev},
                 {"residual", r.residual}};
        if (eigs) out["eigenvalues"] = ev;
        std::cout << out.dump(2) << '\n';
        return kExitOk;
    }
    if (eigs) {
        std::cout << "index,re,im,abs,arg\n";
        for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
            const auto z = r.eigenvalues[i];
            std::cout << i << ',' << num(z.real()) << ',' << num(z.imag()) << ',' << num(std::abs(z)) << ','
                      << num(std::arg(z)) << '\n';
        }
        return kExitOk;
    }
    std::cout << "n,eps,seed,expected_gap,max_gap_dev,mean_magnitude,predicted_magnitude,max_magnitude_dev,residual\n";
    std::cout << n << ',' << num(eps) << ',' << seed << ',' << num(expected_gap) << ',' << num(r.max_gap_dev) << ','
              << num(r.mean_magnitude) << ',' << num(r.predicted_magnitude) << ',' << num(r.max_magnitude_dev) << ','
              << num(r.residual) << '\n';
    return kExitOk;
}

// slope2 ------------------------------------------------------------------

int cmd_slope2(Context& ctx, int trials, std::uint64_t seed, const std::vector<double>& grid, int max_nodes) {
    const StabilityReport r = stability_exponent(trials, grid, seed, max_nodes);
    if (!r.converged) ctx.warnings.push_back("spectral distance quadrature convergence not reached within " + std::to_string(max_nodes) + " nodes");
    if (ctx.format == "json") {
        std::cout << json{{"trials", trials},
                          {"seed", seed},
                          {"eps", grid},
                          {"slope", r.slope},
                          {"control_slope", r.control_slope},
                          {"trial_slopes", r.trial_slopes},
                          {"control_trial_slopes", r.control_trial_slopes},
                          {"converged", r.converged}}
                         .dump(2)
                  << '\n';
        return kExitOk;
    }
    std::cout << "trial,slope,control_slope\n";
    for (int t = 0; t < trials; ++t)
        std::cout << t << ',' << num(r.trial_slopes[t]) << ',' << num(r.control_trial_slopes[t]) << '\n';
    std::cout << "mean," << num(r.slope) << ',' << num(r.control_slope) << '\n';
    return kExitOk;
}

// interference ------------------------------------------------------------

std::string curve_svg(const Curve& c, const std::string& title) {
    double lo = 0, hi = 0;
    for (const auto& p : c.points) {
        lo = std::min(lo, p.value);
        hi = std::max(hi, p.value);
    }
    if (hi - lo <= 0) hi = lo + 1;
    const double pad = 0.05 * (hi - lo);
    Viewport vp{c.points.front().c, c.points.back().c, lo - pad, hi + pad};
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvasW << "\" height=\"" << kCanvasH
      << "\" viewBox=\"0 0 " << kCanvasW << ' ' << kCanvasH << "\">\n";
    o << "<title>" << title << "</title>\n";
    o << "<rect x=\"0\" y=\"0\" width=\"" << kCanvasW << "\" height=\"" << kCanvasH << "\" fill=\"#ffffff\"/>\n";
    o << "<path class=\"curve\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" d=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const Point2 q = to_canvas(vp, {c.points[i].c, c.points[i].value});
        o << (i == 0 ? "M" : " L") << fmt_num(q.u) << ',' << fmt_num(q.v);
    }
    o << "\"/>\n</svg>\n";
    return o.str();
}

struct InterferenceArgs {
    std::string mode = "elliptic", state = "gaussian", svg;
    double b = 2, k = 1, m = 1, hbar = 1, cmin = -2, cmax = 2;
    int samples = 401;
};

int cmd_interference(Context& ctx, const InterferenceArgs& a) {
    const CharacterMode mode = parse_mode(a.mode);
    const StateKind kind = parse_state_kind(a.state);
    const OscParams P(a.m, a.k, a.hbar);
    if (!std::isfinite(a.b)) throw InputError("--b must be finite");
    const Curve c = interference_curve(mode, kind, a.b, P, a.cmin, a.cmax, a.samples);
    if (!c.converged) ctx.warnings.push_back("interference quadrature did not converge");
    std::vector<double> vals;
    for (const auto& p : c.points) vals.push_back(p.value);
    const int maxima = count_interior_maxima(vals);
    if (!a.svg.empty()) emit(curve_svg(c, to_string(mode) + " " + to_string(kind) + " b=" + num(a.b)), a.svg);
    if (ctx.format == "json") {
        json pts = json::array();
        for (const auto& p : c.points) pts.push_back({p.c, p.value});
        std::cout << json{{"mode", to_string(mode)},
                          {"state", to_string(kind)},
                          {"b", a.b},
                          {"k", a.k},
                          {"m", a.m},
                          {"hbar", a.hbar},
                          {"interior_maxima", maxima},
                          {"converged", c.converged},
                          {"points", pts}}
                         .dump(2)
                  << '\n';
        return kExitOk;
    }
    std::cout << "c,value\n";
    for (const auto& p : c.points) std::cout << num(p.c) << ',' << num(p.value) << '\n';
    return kExitOk;
}

// ladder ------------------------------------------------------------------

std::string coef_term(double x, const char* name, bool first) {
    if (x == 0) return "";
    std::string sign = x < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    const double a = std::abs(x);
    if (a == 1) return sign + name;
    if (a == 0.5) return sign + name + "/2";
    return sign + num(a) + name;
}

// real-coefficient part of an element as text
std::string real_combo(const Sl2Element& y) {
    std::string out;
    for (auto [x, name] : {std::pair{y.a.re, "A"}, std::pair{y.b.re, "B"}, std::pair{y.c.re, "Z"}})
        out += coef_term(x, name, out.empty());
    return out.empty() ? "0" : out;
}

std::string unit_symbol(const Hypercomplex& iota) {
    const char u = iota.sig == Signature::elliptic() ? 'i' : iota.sig == Signature::parabolic() ? 'p' : 'h';
    if (iota.im == 0) return iota.re == 1 ? "" : num(iota.re);
    if (iota.im == 1) return std::string(1, u);
    return num(iota.im) + u;
}

int cmd_ladder(Context& ctx, const std::string& gen, double t) {
    const LadderSolution s = solve_ladder(parse_generator(gen), t);
    if (ctx.format == "text") {
        for (const auto& p : s.pairs) {
            const Sl2Element y = 0.5 * (p.plus + p.minus);
            std::string rest = real_combo(y);
            std::string line = s.characteristic + "; L± = ±" + unit_symbol(p.iota) + "A";
            if (rest != "0") line += (rest[0] == '-' ? " - " + rest.substr(1) : " + " + rest);
            std::cout << line << "  [" << p.label << "]\n";
        }
        return kExitOk;
    }
    auto elem_json = [](const Sl2Element& x) {
        return json{{"A", {x.a.re, x.a.im}}, {"B", {x.b.re, x.b.im}}, {"Z", {x.c.re, x.c.im}}};
    };
    if (ctx.format == "json") {
        json pairs = json::array();
        for (const auto& p : s.pairs)
            pairs.push_back({{"label", p.label},
                             {"iota", {p.iota.re, p.iota.im}},
                             {"unit_sigma", p.unit.value()},
                             {"L_plus", elem_json(p.plus)},
                             {"L_minus", elem_json(p.minus)}});
        std::cout << json{{"generator", generator_name(s.generator)},
                          {"characteristic", s.characteristic},
                          {"lambda", {s.lambda.re, s.lambda.im}},
                          {"unit_sigma", s.unit.value()},
                          {"X", elem_json(s.X)},
                          {"Y", elem_json(s.Y)},
                          {"pairs", pairs}}
                         .dump(2)
                  << '\n';
        return kExitOk;
    }
    std::cout << "generator,label,unit_sigma,lambda_re,lambda_im,op,A_re,A_im,B_re,B_im,Z_re,Z_im\n";
    for (const auto& p : s.pairs)
        for (auto [name, x] : {std::pair<const char*, const Sl2Element*>{"L+", &p.plus}, {"L-", &p.minus}})
            std::cout << generator_name(s.generator) << ',' << p.label << ',' << p.unit.value() << ','
                      << num(s.lambda.re) << ',' << num(s.lambda.im) << ',' << name << ',' << num(x->a.re) << ','
                      << num(x->a.im) << ',' << num(x->b.re) << ',' << num(x->b.im) << ',' << num(x->c.re) << ','
                      << num(x->c.im) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Context ctx;
    CLI::App app{"eph: cycles, Moebius actions, spectra and two-slit experiments in elliptic, parabolic and "
                 "hyperbolic geometry.\nExit codes: 0 ok, 2 input error, 3 precision warning with --strict.\n"
                 "EPH_SEED overrides the default seed (7) of seeded commands."};
    app.require_subcommand(1);
    app.add_flag("--strict", ctx.strict, "Turn numeric precision warnings into exit code 3");
    app.fallthrough();

    std::string scene_path, out_path;
    auto* render = app.add_subcommand("render", "Render a cycle scene (JSON) to SVG");
    render->add_option("scene", scene_path, "Scene JSON file")->required();
    render->add_option("-o,--output", out_path, "SVG output path; '-' or absent writes the SVG to stdout");
    add_format(render, ctx);

    int sigma = -1, num_pts = 64;
    std::vector<std::string> starts{"0,0.25", "0,0.5", "0,2", "0,3"};
    std::string korbit_svg;
    auto* korbits = app.add_subcommand("korbits", "Fit cycles through K-subgroup orbits of sample points");
    korbits->add_option("--sigma", sigma, "Point plane signature: -1, 0 or 1")->required()->check(CLI::IsMember({-1, 0, 1}));
    korbits->add_option("--start", starts, "Start point u,v (repeatable)")->capture_default_str();
    korbits->add_option("--num", num_pts, "Orbit samples per start")->capture_default_str();
    korbits->add_option("--svg", korbit_svg, "Also write the orbits and fitted cycles as SVG ('-' for stdout, before the table)");
    add_format(korbits, ctx);

    std::string inv_scene;
    double inv_tol = 1e-9;
    auto* inv = app.add_subcommand("invariants", "Pairwise orthogonality and f-orthogonality table for a scene");
    inv->add_option("scene", inv_scene, "Scene JSON file")->required();
    inv->add_option("--tol", inv_tol, "Tolerance on normalized pairings")->capture_default_str();
    add_format(inv, ctx);

    int lid_n = 20;
    double lid_eps = 0.1;
    std::uint64_t lid_seed = 0;
    bool lid_eigs = false;
    auto* lid = app.add_subcommand("lidskii", "Perturbed Jordan block eigenvalue polygon");
    lid->add_option("--n", lid_n, "Jordan block size")->capture_default_str();
    lid->add_option("--eps", lid_eps, "Perturbation scale (matrix J + eps^n K)")->capture_default_str();
    auto* lid_seed_opt = lid->add_option("--seed", lid_seed, "Random seed (default: EPH_SEED or 7)");
    lid->add_flag("--eigs", lid_eigs, "Print the eigenvalues instead of the summary row");
    add_format(lid, ctx);

    int sl_trials = 10;
    std::uint64_t sl_seed = 0;
    std::vector<double> sl_grid{0.1, 0.05, 0.02, 0.01};
    int sl_max_nodes = 1 << 22;
    auto* slope = app.add_subcommand("slope2", "Stability exponent of the spectral distance for J2 + eps^2 K");
    slope->add_option("--trials", sl_trials, "Number of random K")->capture_default_str();
    auto* sl_seed_opt = slope->add_option("--seed", sl_seed, "Random seed (default: EPH_SEED or 7)");
    slope->add_option("--eps", sl_grid, "Comma-separated eps grid")->delimiter(',')->capture_default_str();
    slope->add_option("--max-nodes", sl_max_nodes, "Cap on quadrature nodes for the spectral distance (>= 8)")
        ->capture_default_str();
    add_format(slope, ctx);

    InterferenceArgs ia;
    auto* interf = app.add_subcommand("interference", "Two-slit measurement curve");
    interf->add_option("--mode", ia.mode, "elliptic, hyperbolic or parabolic")->capture_default_str();
    interf->add_option("--state", ia.state, "gaussian, rational or bump (bump: parabolic only)")->capture_default_str();
    interf->add_option("--b", ia.b, "Slit momentum offset: states at (0, b) and (0, -b)")->capture_default_str();
    interf->add_option("--k", ia.k, "Oscillator frequency")->capture_default_str();
    interf->add_option("--m", ia.m, "Mass")->capture_default_str();
    interf->add_option("--hbar", ia.hbar, "Planck constant")->capture_default_str();
    interf->add_option("--cmin", ia.cmin, "Curve start")->capture_default_str();
    interf->add_option("--cmax", ia.cmax, "Curve end")->capture_default_str();
    interf->add_option("--samples", ia.samples, "Curve samples")->capture_default_str();
    interf->add_option("--svg", ia.svg, "Also plot the curve to this SVG path ('-' for stdout, before the table)");
    add_format(interf, ctx);

    std::string gen = "Z";
    double ladder_t = 1;
    auto* ladder = app.add_subcommand("ladder", "Ladder operators for a one-parameter subgroup generator");
    ladder->add_option("--generator", gen, "Z, B or BminusHalfZ (alias B-Z/2)")->required();
    ladder->add_option("--t", ladder_t, "Dual-number scale of the parabolic eigenvalue")->capture_default_str();
    ctx.format = "csv";
    ladder->add_option("--format", ctx.format, "Output format: text (default), csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        int rc = kExitOk;
        if (*render) {
            rc = cmd_render(ctx, scene_path, out_path);
        } else if (*korbits) {
            rc = cmd_korbits(ctx, sigma, starts, num_pts, korbit_svg);
        } else if (*inv) {
            rc = cmd_invariants(ctx, inv_scene, inv_tol);
        } else if (*lid) {
            rc = cmd_lidskii(ctx, lid_n, lid_eps, lid_seed_opt->count() ? lid_seed : default_seed(), lid_eigs);
        } else if (*slope) {
            rc = cmd_slope2(ctx, sl_trials, sl_seed_opt->count() ? sl_seed : default_seed(), sl_grid, sl_max_nodes);
        } else if (*interf) {
            rc = cmd_interference(ctx, ia);
        } else if (*ladder) {
            if (ladder->get_option("--format")->count() == 0) ctx.format = "text";
            rc = cmd_ladder(ctx, gen, ladder_t);
        }
        for (const auto& w : ctx.warnings) std::cerr << "warning: " << w << '\n';
        if (!ctx.warnings.empty() && ctx.strict) return kExitPrecision;
        return rc;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
