// prints one PASS/FAIL line per acceptance criterion; optional argument selects one criterion
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "eph/invariants.hpp"
#include "eph/mech.hpp"
#include "eph/sl2rep.hpp"
#include "eph/spectral.hpp"
#include "test_util.hpp"

using namespace eph;
using eph::testing::kSigs;
using eph::testing::random_cycle;
using eph::testing::sample_points;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Cycle raw_similarity(const MoebiusMap& g, const Cycle& c) {
    return cycle_from_matrix(g * fscc_matrix(c) * g.inverse(), c.s);
}

Outcome c1_moebius_invariance() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(101);
    int bad = 0, orth = 0, forth = 0;
    double worst_pair = 0;
    for (int i = 0; i < 500; ++i) {
        const Signature s = kSigs[i % 3];
        const Cycle c1 = random_cycle(rng, s);
        Cycle c2 = random_cycle(rng, s, true);
        if (i % 4 == 1) c2.m = (2 * c1.l * c2.l - 2 * double(s) * c1.n * c2.n - c1.m * c2.k) / c1.k;
        if (i % 4 == 2 && s != Signature::parabolic()) {
            const Point2 f = focus(c1, Signature(-s.value()), s);
            const double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
            c2 = Cycle(0, a, b, 2 * a * f.u - 2 * b * f.v, s);
        }
        const MoebiusMap g = random_sl2(rng);
        const Cycle g1 = similarity(g, c1), g2 = similarity(g, c2);
        const bool o = is_orthogonal(c1, c2, 1e-8), fo = is_f_orthogonal(c1, c2, 1e-8);
        orth += o;
        forth += fo;
        if (o != is_orthogonal(g1, g2, 1e-8) || fo != is_f_orthogonal(g1, g2, 1e-8)) ++bad;
        // unnormalized image: scale exactly 1
        const double p0 = pairing(c1, c2), p1 = pairing(raw_similarity(g, c1), raw_similarity(g, c2));
        const double sc = std::max(1.0, std::sqrt(std::abs(pairing(c1, c1) * pairing(c2, c2))));
        worst_pair = std::max(worst_pair, std::abs(p1 - p0) / sc);
    }
    const double t = seconds_since(t0);
    const bool pass = bad == 0 && worst_pair <= 1e-8 && t < 5 && orth > 0 && forth > 0;
    return {pass, "predicate flips " + std::to_string(bad) + "/500, orthogonal " + std::to_string(orth) +
                      ", f-orthogonal " + std::to_string(forth) + ", pairing drift " + fmt("%.2e", worst_pair) +
                      ", " + fmt("%.2f", t) + " s"};
}

Outcome c2_intertwining() {
    Rng rng(102);
    int done = 0, bad = 0;
    while (done < 500) {
        const Signature s = kSigs[done % 3];
        const Cycle c = random_cycle(rng, s);
        const MoebiusMap g = random_sl2(rng);
        const auto pts = sample_points(c, s, rng, 6);
        if (pts.size() < 6) continue;
        std::vector<Point2> img;
        for (auto& p : pts) {
            const auto q = act_point(g, ExtendedPoint::at(p.u, p.v), s);
            if (!q.infinite && std::hypot(q.u, q.v) < 1e2) img.push_back({q.u, q.v});
        }
        if (img.size() < 5) continue;
        if (!projectively_equal(cycle_from_points(img, s, s), similarity(g, c), 1e-8)) ++bad;
        ++done;
    }
    return {bad == 0, "mismatches " + std::to_string(bad) + "/500 at 1e-8"};
}

Outcome c3_centres_foci() {
    Rng rng(103);
    bool exact = true;
    for (int i = 0; i < 200; ++i) {
        const Cycle q(rng.uniform(0.5, 2), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
        const Point2 ce = centre(q, Signature::elliptic()), cp = centre(q, Signature::parabolic()),
                     ch = centre(q, Signature::hyperbolic());
        exact = exact && ce.u == ch.u && ce.v == -ch.v && cp.u == (ce.u + ch.u) / 2 && cp.v == (ce.v + ch.v) / 2;
    }
    const Cycle par(1, 0, 1, 0, Signature::parabolic());
    const Signature P = Signature::parabolic();
    const Point2 fh = focus(par, Signature::hyperbolic(), P), fp = focus(par, P, P), fe = focus(par, Signature::elliptic(), P);
    const bool triple = std::abs(fh.u) < 1e-15 && std::abs(fh.v - 0.5) < 1e-15 && std::abs(fp.v) < 1e-15 &&
                        std::abs(fe.v + 0.5) < 1e-15;
    int mismatch = 0, through = 0;
    for (int i = 0; i < 200; ++i) {
        const Signature s = kSigs[i % 3];
        const double pu = rng.uniform(-2, 2), pv = rng.uniform(-2, 2);
        const double cv = s == P ? 0.0 : pv;
        Cycle c = random_cycle(rng, s);
        if (i % 2 == 0) c.m = -(c.k * (pu * pu - double(s) * cv * cv) - 2 * c.l * pu - 2 * c.n * cv);
        const bool on = passes_through(c, pu, cv, s, 1e-9);
        through += on;
        if (is_orthogonal(c, zero_radius_at(pu, pv, s), 1e-9) != on) ++mismatch;
    }
    return {exact && triple && mismatch == 0,
            std::string("centre identities ") + (exact ? "exact" : "broken") + ", parabola foci (0,1/2),(0,0),(0,-1/2) " +
                (triple ? "ok" : "wrong") + ", incidence mismatches " + std::to_string(mismatch) + "/200 (" +
                std::to_string(through) + " incident)"};
}

Outcome c4_ladder() {
    double worst = 0;
    int pairs = 0;
    for (Generator g : {Generator::Z, Generator::BminusHalfZ, Generator::B}) {
        const LadderSolution sol = solve_ladder(g);
        for (const auto& p : sol.pairs) {
            ++pairs;
            worst = std::max(worst, max_abs(bracket(sol.X, p.plus) - p.iota * p.plus));
            worst = std::max(worst, max_abs(bracket(sol.X, p.minus) + p.iota * p.minus));
            worst = std::max(worst, max_abs(bracket(p.minus, p.plus) - (2.0 * p.iota) * sol.X));
            for (const auto* l : {&p.plus, &p.minus}) {
                const Hypercomplex k = killing(*l, *l);
                worst = std::max({worst, std::abs(k.re), std::abs(k.im)});
            }
        }
    }
    return {worst <= 1e-12 && pairs == 4, std::to_string(pairs) + " pairs, max residual " + fmt("%.1e", worst)};
}

JetSpectrum random_spectrum(Rng& rng) {
    JetSpectrum s;
    int dim = 0;
    const int target = 1 + int(rng.uniform() * 8);
    while (dim < target) {
        const int k = std::min(target - dim, 1 + int(rng.uniform() * 4));
        cplx l;
        bool ok;
        do {
            l = std::polar(rng.uniform(0.1, 0.9), rng.uniform(-kPi, kPi));
            ok = true;
            for (auto& p : s) ok = ok && std::abs(p.lambda - l) > 0.35;
        } while (!ok);
        if (!s.empty() && rng.uniform() < 0.2) l = s.back().lambda;
        s.push_back({l, k});
        dim += k;
    }
    return s;
}

Outcome c5_spectral_mapping() {
    Rng rng(105);
    int done = 0, bad = 0, floor_bad = 0;
    for (int i = 0; done < 50 && i < 1000; ++i) {
        const JetSpectrum s = random_spectrum(rng);
        Polynomial phi{{cplx(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)), cplx(rng.uniform(0.5, 1), 0),
                        cplx(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))}};
        if (i % 3 == 0) phi = Polynomial::from_roots({s[0].lambda}, {1}).primitive(0.2);
        bool separated = true;
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (s[a].lambda != s[b].lambda && std::abs(phi(s[a].lambda) - phi(s[b].lambda)) < 0.1) separated = false;
        if (!separated) continue;
        try {
            if (!same_spectrum(covariant_spectrum(phi(assemble_jordan(s)), 0.02), spectral_map(s, phi, MapMode::jordan), 1e-6))
                ++bad;
        } catch (const DegenerateError&) {
            ++bad;
        }
        for (const auto& p : s) {
            int smallest = p.order;
            for (const auto& q : spectral_map({p}, phi, MapMode::jordan, true)) smallest = std::min(smallest, q.order);
            floor_bad += spectral_map({p}, phi, MapMode::floor, true)[0].order != smallest;
        }
        ++done;
    }
    // order pattern 1, 3, >=2, any
    const JetSpectrum ex{{std::polar(0.75, kPi / 4), 3},
                         {std::polar(2.0 / 3, 5 * kPi / 6), 4},
                         {std::polar(0.4, -3 * kPi / 4), 1},
                         {std::polar(0.6, -kPi / 3), 2}};
    const Polynomial phi = Polynomial::from_roots({ex[1].lambda, ex[2].lambda}, {2, 1}).primitive(0.1);
    const JetSpectrum want{{phi(ex[0].lambda), 3}, {phi(ex[1].lambda), 1}, {phi(ex[3].lambda), 2}};
    const bool pattern = same_spectrum(spectral_map(ex, phi), want, 1e-12) &&
                         same_spectrum(covariant_spectrum(assemble_jordan(ex)), ex, 1e-9);
    return {done == 50 && bad == 0 && floor_bad == 0 && pattern,
            "jordan-split mismatches " + std::to_string(bad) + "/" + std::to_string(done) + ", floor-order mismatches " +
                std::to_string(floor_bad) + ", example pattern " + (pattern ? "ok" : "wrong")};
}

Outcome c6_lidskii() {
    const auto t0 = std::chrono::steady_clock::now();
    double gap = 0, mag = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const LidskiiReport r = lidskii_experiment(20, 0.1, seed);
        gap = std::max(gap, r.max_gap_dev);
        mag = std::max(mag, r.max_magnitude_dev);
    }
    const double t = seconds_since(t0);
    return {gap < 0.1 && mag <= 0.3 && t < 2, "max gap deviation " + fmt("%.4f", gap) + " rad, max magnitude deviation " +
                                                  fmt("%.1f", 100 * mag) + "%, " + fmt("%.2f", t) + " s"};
}

Outcome c7_stability() {
    const StabilityReport r = stability_exponent(10, {0.1, 0.05, 0.02, 0.01}, 7);
    const bool pass = std::abs(r.slope - 4) <= 0.3 && std::abs(r.control_slope - 2) <= 0.3 && r.converged;
    return {pass, "slope " + fmt("%.3f", r.slope) + ", control " + fmt("%.3f", r.control_slope)};
}

RMat random_real(Rng& rng, int n) {
    RMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-1, 1);
    return m;
}

Outcome c8_pencils() {
    Rng rng(108);
    double lin = 0, quad = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 6;
        const PencilPair p{random_real(rng, n), random_real(rng, n)};
        const MoebiusMap g = random_sl2(rng);
        std::vector<ExtComplex> img;
        for (const auto& z : pencil_eigs(p)) img.push_back(moebius(g, z));
        lin = std::max(lin, match_distance(pencil_eigs(pencil_act(g, p)), img));
    }
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 3;
        const QuadraticPencil q{random_real(rng, n), random_real(rng, n), random_real(rng, n)};
        const MoebiusMap g = random_sl2(rng);
        std::vector<ExtComplex> img;
        for (const auto& z : quadratic_eigs(q)) img.push_back(moebius(g, z));
        quad = std::max(quad, match_distance(quadratic_eigs(quadratic_pencil_conjugate(g, q)), img));
    }
    return {lin <= 1e-8 && quad <= 1e-8,
            "linear max chordal error " + fmt("%.1e", lin) + ", quadratic " + fmt("%.1e", quad)};
}

Outcome c9_mechanics() {
    const OscParams p;
    Rng rng(109);
    double single = 0;
    for (int i = 0; i < 10; ++i) {
        const GaussianState g{rng.uniform(-1, 1), rng.uniform(-1, 1), p};
        const double c = g.a + rng.uniform(-0.5, 0.5);
        single = std::max(single, std::abs(measure_gaussian_quadrature(g, c).value / measure_gaussian(g, c) - 1));
    }
    double two = 0, hyp = 0;
    for (double b : {0.3, 1.0, 2.0})
        for (int i = 0; i <= 20; ++i) {
            const double c = -1 + 0.1 * i;
            const GaussianState v[2] = {{0, b, p}, {0, -b, p}};
            double sum = 0;
            for (auto& vi : v)
                for (auto& vj : v) sum += measure_gaussian_cross(vi, vj, c).value;
            const double cf = two_slit_closed_form(b, c, p);
            two = std::max(two, std::abs(sum / cf - 1));
            const double e = two_slit_measure(CharacterMode::elliptic, StateKind::gaussian, b, c, p).value;
            const double h = two_slit_measure(CharacterMode::hyperbolic, StateKind::gaussian, b, c, p).value;
            hyp = std::max(hyp, std::abs(h / e - 1));
        }
    const BumpState a{0, 2, 1, p}, bb{0, -2, 1, p};
    const double cross = parabolic_measure(a, bb, 0.3).value;
    auto maxima = [&](CharacterMode m) {
        std::vector<double> v;
        for (const auto& pt : interference_curve(m, StateKind::rational, 2, p, -2, 2, 401).points) v.push_back(pt.value);
        return count_interior_maxima(v);
    };
    const int qmax = maxima(CharacterMode::elliptic), hmax = maxima(CharacterMode::hyperbolic);
    const bool pass = single <= 1e-6 && two <= 1e-6 && hyp <= 1e-6 && cross == 0.0 && qmax >= 5 && hmax < 2;
    return {pass, "single-slit rel " + fmt("%.1e", single) + ", two-slit rel " + fmt("%.1e", two) +
                      ", hyperbolic vs elliptic " + fmt("%.1e", hyp) + ", parabolic cross " + fmt("%g", cross) +
                      ", rational maxima quantum " + std::to_string(qmax) + " (need >=5), hyperbolic " +
                      std::to_string(hmax) + " (need <2)"};
}

Outcome c10_flow() {
    Rng rng(110);
    double per = 0, jac = 0;
    for (int i = 0; i < 100; ++i) {
        const OscParams p(rng.uniform(0.3, 3), rng.uniform(0.3, 3), 1);
        const double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2), t = rng.uniform(-5, 5);
        const auto [xp, yp] = oscillator_flow(x, y, 2 * kPi / p.k, p);
        per = std::max({per, std::abs(xp - x), std::abs(yp - y)});
        const double h = 1e-6;
        const auto fxp = oscillator_flow(x + h, y, t, p), fxm = oscillator_flow(x - h, y, t, p);
        const auto fyp = oscillator_flow(x, y + h, t, p), fym = oscillator_flow(x, y - h, t, p);
        const double j11 = (fxp.first - fxm.first) / (2 * h), j21 = (fxp.second - fxm.second) / (2 * h);
        const double j12 = (fyp.first - fym.first) / (2 * h), j22 = (fyp.second - fym.second) / (2 * h);
        jac = std::max(jac, std::abs(j11 * j22 - j12 * j21 - 1));
    }
    return {per <= 1e-10 && jac <= 1e-9, "period error " + fmt("%.1e", per) + ", Jacobian error " + fmt("%.1e", jac)};
}

std::string run_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    status = pclose(f);
    return out;
}

Outcome c11_cli(const std::string& cli, const std::string& scenes) {
    if (cli.empty()) return {false, "CLI path not given"};
    const std::vector<std::string> cmds = {
        "render " + scenes + "/three_planes.json",
        "korbits --sigma 1 --svg -",
        "interference --mode elliptic --state gaussian --b 0.5",
        "interference --mode hyperbolic --state rational --b 2 --format json",
        "lidskii --n 20 --eps 0.1",
        "slope2",
        "invariants " + scenes + "/orthogonal.json",
        "ladder --generator B --format csv",
    };
    int same = 0, failed = 0;
    for (const auto& c : cmds) {
        const std::string full = "\"" + cli + "\" " + c + " 2>/dev/null";
        int s1 = 0, s2 = 0;
        const std::string a = run_capture(full, s1), b = run_capture(full, s2);
        if (s1 != 0 || s2 != 0 || a.empty()) ++failed;
        else if (a == b) ++same;
    }
    return {same == int(cmds.size()), std::to_string(same) + "/" + std::to_string(cmds.size()) +
                                          " commands byte-identical, " + std::to_string(failed) + " failed to run"};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    std::string cli, scenes;
#ifdef EPH_DEFAULT_CLI
    cli = EPH_DEFAULT_CLI;
    scenes = EPH_DEFAULT_SCENES;
#endif
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--cli" && i + 1 < argc) cli = argv[++i];
        else if (a == "--scenes" && i + 1 < argc) scenes = argv[++i];
        else only = std::stoi(a);
    }
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"Moebius invariance of orthogonality and f-orthogonality", c1_moebius_invariance},
        {"FSCc intertwining", c2_intertwining},
        {"centre/focus geometry and zero-radius incidence", c3_centres_foci},
        {"ladder operator identities", c4_ladder},
        {"spectral mapping theorem", c5_spectral_mapping},
        {"Lidskii polygon", c6_lidskii},
        {"stability exponent", c7_stability},
        {"pencil covariance", c8_pencils},
        {"mechanics closed forms and interference", c9_mechanics},
        {"oscillator flow", c10_flow},
        {"CLI determinism", [&] { return c11_cli(cli, scenes); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && int(i) + 1 != only) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("CRITERION %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
