#include "eph/scene.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "eph/errors.hpp"

namespace eph {

namespace {

using json = nlohmann::json;

constexpr double kPad = 1.0;  // px slack around the canvas when splitting runs
constexpr int kMaxDepth = 24;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

struct Param {
    std::function<Point2(double)> f;
    double t0, t1;
    bool closed = false;
};

bool inside(Point2 p) { return p.u >= -kPad && p.u <= kCanvasW + kPad && p.v >= -kPad && p.v <= kCanvasH + kPad; }

// bit mask of the sides a point lies beyond
int outcode(Point2 p) {
    int c = 0;
    if (p.u < -kPad) c |= 1;
    if (p.u > kCanvasW + kPad) c |= 2;
    if (p.v < -kPad) c |= 4;
    if (p.v > kCanvasH + kPad) c |= 8;
    return c;
}

double chord_dev(Point2 a, Point2 b, Point2 m) {
    const double dx = b.u - a.u, dy = b.v - a.v;
    const double len = std::hypot(dx, dy);
    if (len == 0) return std::hypot(m.u - a.u, m.v - a.v);
    return std::abs(dx * (m.v - a.v) - dy * (m.u - a.u)) / len;
}

struct Sampler {
    const Viewport& vp;
    const Param& pr;
    std::vector<Point2> out;

    Point2 at(double t) const { return to_canvas(vp, pr.f(t)); }

    void refine(double t0, Point2 p0, double t1, Point2 p1, int depth) {
        const double tm = 0.5 * (t0 + t1);
        const Point2 pm = at(tm);
        const bool far_away = (outcode(p0) & outcode(p1) & outcode(pm)) != 0;
        if (depth < kMaxDepth && !far_away && chord_dev(p0, p1, pm) > kMaxChordDev) {
            refine(t0, p0, tm, pm, depth + 1);
            refine(tm, pm, t1, p1, depth + 1);
            return;
        }
        out.push_back(p1);
    }

    void run(int samples) {
        double t = pr.t0;
        Point2 p = at(t);
        out.push_back(p);
        for (int i = 1; i <= samples; ++i) {
            const double tn = pr.t0 + (pr.t1 - pr.t0) * i / samples;
            const Point2 pn = at(tn);
            refine(t, p, tn, pn, 0);
            t = tn;
            p = pn;
        }
    }
};

Branch split_runs(const std::vector<Point2>& pts, bool closed) {
    Branch b;
    Polyline cur;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const bool keep = inside(pts[i]) || inside(pts[i + 1]);
        if (keep) {
            if (cur.empty()) cur.push_back(pts[i]);
            cur.push_back(pts[i + 1]);
        } else if (!cur.empty()) {
            b.runs.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) b.runs.push_back(std::move(cur));
    // stitch the seam of a closed curve
    if (closed && b.runs.size() > 1 && inside(pts.front())) {
        Polyline& last = b.runs.back();
        Polyline& first = b.runs.front();
        last.insert(last.end(), first.begin() + 1, first.end());
        b.runs.front() = std::move(last);
        b.runs.pop_back();
    }
    return b;
}

std::vector<Param> branch_params(const Cycle& c, Signature sigma, const Viewport& vp) {
    const double du = 0.01 * (vp.umax - vp.umin), dv = 0.01 * (vp.vmax - vp.vmin);
    const double u0 = vp.umin - du, u1 = vp.umax + du, v0 = vp.vmin - dv, v1 = vp.vmax + dv;
    const double k = c.k, l = c.l, n = c.n, m = c.m;
    const double scale = std::max({std::abs(k), std::abs(l), std::abs(n), std::abs(m)});
    const double eps = 1e-12 * scale;
    std::vector<Param> out;
    auto graph_u = [&](std::function<double(double)> g) {
        out.push_back({[g](double u) { return Point2{u, g(u)}; }, u0, u1});
    };
    auto graph_v = [&](std::function<double(double)> g) {
        out.push_back({[g](double v) { return Point2{g(v), v}; }, v0, v1});
    };
    if (std::abs(k) <= eps) {
        if (std::abs(l) <= eps && std::abs(n) <= eps) return out;
        if (std::abs(n) >= std::abs(l))
            graph_u([=](double u) { return (m - 2 * l * u) / (2 * n); });
        else
            graph_v([=](double v) { return (m - 2 * n * v) / (2 * l); });
        return out;
    }
    const double cu = l / k;
    switch (sigma.value()) {
        case -1: {
            const double cv = n / k;
            const double r2 = (l * l + n * n - k * m) / (k * k);
            if (r2 <= 0) return out;
            const double r = std::sqrt(r2);
            out.push_back({[=](double t) { return Point2{cu + r * std::cos(t), cv + r * std::sin(t)}; }, 0.0,
                           2 * 3.14159265358979323846, true});
            return out;
        }
        case 0: {
            if (std::abs(n) > eps) {
                graph_u([=](double u) { return (k * u * u - 2 * l * u + m) / (2 * n); });
                return out;
            }
            for (double r : roots(c)) graph_v([=](double) { return r; });
            return out;
        }
        default: {
            const double cv = -n / k;
            const double R = (l * l - n * n - k * m) / (k * k);
            const double tol = 1e-12 * std::max(1.0, cu * cu + cv * cv);
            if (R > tol) {
                for (double sgn : {-1.0, 1.0})
                    graph_v([=](double v) { return cu + sgn * std::sqrt(R + (v - cv) * (v - cv)); });
            } else if (R < -tol) {
                for (double sgn : {-1.0, 1.0})
                    graph_u([=](double u) { return cv + sgn * std::sqrt(-R + (u - cu) * (u - cu)); });
            } else {
                for (double sgn : {-1.0, 1.0}) graph_v([=](double v) { return cu + sgn * (v - cv); });
            }
            return out;
        }
    }
}

double get_num(const json& j, const char* key, double dflt, bool required) {
    if (!j.contains(key)) {
        if (required) throw InputError(std::string("missing field: ") + key);
        return dflt;
    }
    if (!j.at(key).is_number()) throw InputError(std::string("field must be numeric: ") + key);
    return j.at(key).get<double>();
}

int get_sig(const json& j, const char* key, int dflt) {
    const double x = get_num(j, key, dflt, false);
    if (x != -1 && x != 0 && x != 1) throw InputError(std::string(key) + " must be -1, 0 or 1");
    return int(x);
}

}  // namespace

std::string fmt_num(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    std::string s(buf);
    if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

Point2 to_canvas(const Viewport& vp, Point2 p) {
    return {(p.u - vp.umin) / (vp.umax - vp.umin) * kCanvasW, (vp.vmax - p.v) / (vp.vmax - vp.vmin) * kCanvasH};
}

void validate(const Scene& s) {
    const auto& v = s.viewport;
    if (!(v.umax > v.umin) || !(v.vmax > v.vmin) || !std::isfinite(v.umax - v.umin) || !std::isfinite(v.vmax - v.vmin))
        throw InputError("degenerate viewport");
    if (s.samples < 16) throw InputError("samples must be at least 16");
}

Scene parse_scene(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("scene is not valid JSON: ") + e.what());
    }
    Scene s;
    const json* cycles = &j;
    if (j.is_object()) {
        if (j.contains("viewport")) {
            const json& v = j.at("viewport");
            if (v.is_array()) {
                if (v.size() != 4) throw InputError("viewport array needs 4 numbers");
                for (const auto& x : v)
                    if (!x.is_number()) throw InputError("viewport entries must be numeric");
                s.viewport = {v[0].get<double>(), v[1].get<double>(), v[2].get<double>(), v[3].get<double>()};
            } else if (v.is_object()) {
                s.viewport = {get_num(v, "umin", 0, true), get_num(v, "umax", 0, true), get_num(v, "vmin", 0, true),
                              get_num(v, "vmax", 0, true)};
            } else {
                throw InputError("viewport must be an array or object");
            }
        }
        if (j.contains("samples")) {
            if (!j.at("samples").is_number_integer()) throw InputError("samples must be an integer");
            s.samples = j.at("samples").get<int>();
        }
        if (j.contains("points")) {
            if (!j.at("points").is_array()) throw InputError("points must be an array");
            for (const auto& p : j.at("points")) {
                if (!p.is_object()) throw InputError("point records must be objects");
                s.points.push_back(
                    {{get_num(p, "u", 0, true), get_num(p, "v", 0, true)}, p.value("color", std::string("#000000"))});
            }
        }
        if (!j.contains("cycles")) throw InputError("scene needs a cycles array");
        cycles = &j.at("cycles");
    }
    if (!cycles->is_array()) throw InputError("cycles must be an array");
    for (const auto& c : *cycles) {
        if (!c.is_object()) throw InputError("cycle records must be objects");
        const int sb = get_sig(c, "sigma_breve", c.contains("sigma") ? get_sig(c, "sigma", -1) : -1);
        const int sg = get_sig(c, "sigma", sb);
        const double sv = get_num(c, "s", 1, false);
        if (sv != 1 && sv != -1) throw InputError("s must be 1 or -1");
        SceneCycle sc{Cycle(get_num(c, "k", 0, true), get_num(c, "l", 0, true), get_num(c, "n", 0, true),
                            get_num(c, "m", 0, true), Signature(sb), int(sv)),
                      Signature(sg), ""};
        if (c.contains("color")) {
            if (!c.at("color").is_string()) throw InputError("color must be a string");
            sc.color = c.at("color").get<std::string>();
        }
        s.cycles.push_back(std::move(sc));
    }
    validate(s);
    return s;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read scene file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str());
}

std::vector<Branch> cycle_branches(const Cycle& c, Signature sigma, const Viewport& vp, int samples) {
    std::vector<Branch> out;
    for (const Param& p : branch_params(c, sigma, vp)) {
        Sampler s{vp, p, {}};
        s.run(samples);
        Branch b = split_runs(s.out, p.closed);
        if (!b.runs.empty()) out.push_back(std::move(b));
    }
    return out;
}

std::string render_svg(const Scene& s) {
    validate(s);
    std::ostringstream o;
    const auto& vp = s.viewport;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvasW << "\" height=\"" << kCanvasH
      << "\" viewBox=\"0 0 " << kCanvasW << ' ' << kCanvasH << "\" data-umin=\"" << fmt_num(vp.umin, 6)
      << "\" data-umax=\"" << fmt_num(vp.umax, 6) << "\" data-vmin=\"" << fmt_num(vp.vmin, 6) << "\" data-vmax=\""
      << fmt_num(vp.vmax, 6) << "\">\n";
    o << "<defs><clipPath id=\"vp\"><rect x=\"0\" y=\"0\" width=\"" << kCanvasW << "\" height=\"" << kCanvasH
      << "\"/></clipPath></defs>\n";
    o << "<rect x=\"0\" y=\"0\" width=\"" << kCanvasW << "\" height=\"" << kCanvasH << "\" fill=\"#ffffff\"/>\n";
    o << "<g clip-path=\"url(#vp)\" fill=\"none\" stroke-width=\"1.5\">\n";
    if (vp.vmin <= 0 && vp.vmax >= 0) {
        const double y = to_canvas(vp, {0, 0}).v;
        o << "<line class=\"axis\" x1=\"0\" y1=\"" << fmt_num(y) << "\" x2=\"" << kCanvasW << "\" y2=\"" << fmt_num(y)
          << "\" stroke=\"#999999\" stroke-width=\"0.75\"/>\n";
    }
    char meta[256];
    for (std::size_t i = 0; i < s.cycles.size(); ++i) {
        const auto& sc = s.cycles[i];
        const std::string color = sc.color.empty() ? kPalette[i % std::size(kPalette)] : sc.color;
        const auto branches = cycle_branches(sc.cycle, sc.sigma, vp, s.samples);
        for (std::size_t bi = 0; bi < branches.size(); ++bi) {
            std::snprintf(meta, sizeof meta,
                          "data-cycle=\"%zu\" data-branch=\"%zu\" data-k=\"%.17g\" data-l=\"%.17g\" data-n=\"%.17g\" "
                          "data-m=\"%.17g\" data-s=\"%d\" data-sigma=\"%d\" data-sigma-breve=\"%d\"",
                          i, bi, sc.cycle.k, sc.cycle.l, sc.cycle.n, sc.cycle.m, sc.cycle.s, sc.sigma.value(),
                          sc.cycle.sigma_breve.value());
            o << "<path class=\"cycle\" " << meta << " stroke=\"" << color << "\" d=\"";
            bool first_run = true;
            for (const auto& run : branches[bi].runs) {
                if (!first_run) o << ' ';
                first_run = false;
                for (std::size_t pi = 0; pi < run.size(); ++pi)
                    o << (pi == 0 ? "M" : " L") << fmt_num(run[pi].u) << ',' << fmt_num(run[pi].v);
            }
            o << "\"/>\n";
        }
    }
    for (const auto& p : s.points) {
        const Point2 c = to_canvas(vp, p.p);
        o << "<circle class=\"point\" cx=\"" << fmt_num(c.u) << "\" cy=\"" << fmt_num(c.v) << "\" r=\"2.5\" fill=\""
          << p.color << "\" stroke=\"none\"/>\n";
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

void write_svg(const Scene& s, const std::string& path) {
    const std::string text = render_svg(s);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write SVG file: " + path);
    out << text;
    if (!out) throw InputError("failed writing SVG file: " + path);
}

}  // namespace eph
