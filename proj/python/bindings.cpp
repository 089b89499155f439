#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eph/invariants.hpp"
#include "eph/mech.hpp"
#include "eph/metric.hpp"
#include "eph/moebius.hpp"
#include "eph/scene.hpp"
#include "eph/sl2rep.hpp"
#include "eph/spectral.hpp"

namespace py = pybind11;
using namespace eph;
using namespace pybind11::literals;

namespace {

Signature sig(int s) { return Signature(s); }

std::pair<double, double> as_pair(Point2 p) { return {p.u, p.v}; }

JetSpectrum jets(const std::vector<std::pair<std::complex<double>, int>>& v) {
    JetSpectrum s;
    for (auto& [l, k] : v) s.push_back({l, k});
    return s;
}

std::vector<std::pair<std::complex<double>, int>> unjets(const JetSpectrum& s) {
    std::vector<std::pair<std::complex<double>, int>> v;
    for (auto& p : s) v.emplace_back(p.lambda, p.order);
    return v;
}

}  // namespace

PYBIND11_MODULE(_eph, m) {
    m.doc() = "Elliptic, parabolic and hyperbolic geometry of cycles, jet spectra and phase-space mechanics";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ArithmeticError);

    py::class_<Cycle>(m, "Cycle")
        .def(py::init([](double k, double l, double n, double mm, int sigma_breve, int s) {
                 return Cycle(k, l, n, mm, sig(sigma_breve), s);
             }),
             py::arg("k"), py::arg("l"), py::arg("n"), py::arg("m"), py::arg("sigma_breve") = -1, py::arg("s") = 1)
        .def_readwrite("k", &Cycle::k)
        .def_readwrite("l", &Cycle::l)
        .def_readwrite("n", &Cycle::n)
        .def_readwrite("m", &Cycle::m)
        .def_readwrite("s", &Cycle::s)
        .def_property_readonly("sigma_breve", [](const Cycle& c) { return c.sigma_breve.value(); })
        .def("normalized", &Cycle::normalized)
        .def("coords", &Cycle::coords)
        .def("__repr__", [](const Cycle& c) {
            return "Cycle(" + std::to_string(c.k) + ", " + std::to_string(c.l) + ", " + std::to_string(c.n) + ", " +
                   std::to_string(c.m) + ", sigma_breve=" + std::to_string(c.sigma_breve.value()) + ")";
        });

    py::class_<MoebiusMap>(m, "MoebiusMap")
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
        .def_readonly("a", &MoebiusMap::a)
        .def_readonly("b", &MoebiusMap::b)
        .def_readonly("c", &MoebiusMap::c)
        .def_readonly("d", &MoebiusMap::d)
        .def("inverse", &MoebiusMap::inverse)
        .def("__matmul__", [](const MoebiusMap& g, const MoebiusMap& h) { return compose(g, h); });

    m.def("iwasawa", [](const MoebiusMap& g) {
        const IwasawaFactors f = iwasawa(g);
        return py::make_tuple(f.alpha, f.nu, f.phi);
    });
    m.def("act_point", [](const MoebiusMap& g, double u, double v, int sigma) -> py::object {
        const ExtendedPoint p = act_point(g, ExtendedPoint::at(u, v), sig(sigma));
        if (p.infinite) return py::none();
        return py::make_tuple(p.u, p.v);
    });

    m.def("similarity", &similarity);
    m.def("det_cycle", &det_cycle);
    m.def("radius_sq", [](const Cycle& c, int sigma) { return radius_sq(c, sig(sigma)); });
    m.def("centre", [](const Cycle& c, int flavour) { return as_pair(centre(c, sig(flavour))); });
    m.def("focus", [](const Cycle& c, int flavour, int sigma) { return as_pair(focus(c, sig(flavour), sig(sigma))); });
    m.def("roots", &roots);
    m.def("zero_radius_at", [](double u, double v, int sb) { return zero_radius_at(u, v, sig(sb)); });
    m.def("cycle_from_points",
          [](const std::vector<std::pair<double, double>>& pts, int sigma, int sb) {
              std::vector<Point2> p;
              for (auto& [u, v] : pts) p.push_back({u, v});
              return cycle_from_points(p, sig(sigma), sig(sb));
          },
          py::arg("points"), py::arg("sigma"), py::arg("sigma_breve") = -1);
    m.def("projectively_equal", &projectively_equal, py::arg("a"), py::arg("b"), py::arg("tol") = kProjTol);

    m.def("pairing", &pairing);
    m.def("is_orthogonal", &is_orthogonal, py::arg("c1"), py::arg("c2"), py::arg("tol") = 1e-9);
    m.def("is_f_orthogonal", &is_f_orthogonal, py::arg("c"), py::arg("other"), py::arg("tol") = 1e-9);
    m.def("reflect_in", &reflect_in);
    m.def("ghost_cycle", [](const Cycle& c, int sigma) { return ghost_cycle(c, sig(sigma)); });
    m.def("f_ghost_cycle", [](const Cycle& c, int sigma) { return f_ghost_cycle(c, sig(sigma)); });

    m.def("distance_sq", [](double u, double v, int sigma) { return distance_sq(u, v, sig(sigma)); });

    m.def("solve_ladder",
          [](const std::string& gen, double t) {
              const LadderSolution s = solve_ladder(parse_generator(gen), t);
              py::list pairs;
              for (const auto& p : s.pairs)
                  pairs.append(py::dict("label"_a = p.label, "plus"_a = to_string(p.plus), "minus"_a = to_string(p.minus)));
              return py::dict("unit"_a = s.unit.value(), "lambda"_a = to_string(s.lambda),
                              "characteristic"_a = s.characteristic, "pairs"_a = pairs);
          },
          py::arg("generator"), py::arg("t") = 1.0);

    m.def("covariant_spectrum", [](const CMat& a, double tol) { return unjets(covariant_spectrum(a, tol)); },
          py::arg("a"), py::arg("tol") = 0.05);
    m.def("spectral_distance",
          [](const std::vector<std::pair<std::complex<double>, int>>& a,
             const std::vector<std::pair<std::complex<double>, int>>& b) { return spectral_distance(jets(a), jets(b)); });
    m.def("lidskii", [](int n, double eps, std::uint64_t seed) {
        const LidskiiReport r = lidskii_experiment(n, eps, seed);
        return py::dict("eigenvalues"_a = r.eigenvalues, "mean_magnitude"_a = r.mean_magnitude,
                        "max_magnitude_dev"_a = r.max_magnitude_dev, "max_gap_dev"_a = r.max_gap_dev,
                        "predicted_magnitude"_a = r.predicted_magnitude);
    });
    m.def("stability_exponent",
          [](int trials, const std::vector<double>& grid, std::uint64_t seed) {
              const StabilityReport r = stability_exponent(trials, grid, seed);
              return py::dict("slope"_a = r.slope, "control_slope"_a = r.control_slope, "converged"_a = r.converged);
          },
          py::arg("trials") = 10, py::arg("eps") = std::vector<double>{0.1, 0.05, 0.02, 0.01}, py::arg("seed") = 7);

    m.def("two_slit",
          [](const std::string& mode, const std::string& state, double b, double c, double k, double mm, double hbar) {
              return two_slit_measure(parse_mode(mode), parse_state_kind(state), b, c, OscParams(mm, k, hbar)).value;
          },
          py::arg("mode"), py::arg("state"), py::arg("b"), py::arg("c"), py::arg("k") = 1.0, py::arg("m") = 1.0,
          py::arg("hbar") = 1.0);
    m.def("two_slit_closed_form",
          [](double b, double c, double k, double mm, double hbar) { return two_slit_closed_form(b, c, OscParams(mm, k, hbar)); },
          py::arg("b"), py::arg("c"), py::arg("k") = 1.0, py::arg("m") = 1.0, py::arg("hbar") = 1.0);
    m.def("interference_curve",
          [](const std::string& mode, const std::string& state, double b, double cmin, double cmax, int samples) {
              std::vector<std::pair<double, double>> out;
              for (auto& p : interference_curve(parse_mode(mode), parse_state_kind(state), b, OscParams(), cmin, cmax, samples).points)
                  out.emplace_back(p.c, p.value);
              return out;
          },
          py::arg("mode"), py::arg("state"), py::arg("b"), py::arg("cmin") = -2.0, py::arg("cmax") = 2.0,
          py::arg("samples") = 401);
    m.def("count_interior_maxima", &count_interior_maxima, py::arg("values"), py::arg("rel_prominence") = 1e-9);
    m.def("oscillator_flow", [](double x, double y, double t, double k, double mm) {
        return oscillator_flow(x, y, t, OscParams(mm, k, 1));
    }, py::arg("x"), py::arg("y"), py::arg("t"), py::arg("k") = 1.0, py::arg("m") = 1.0);

    m.def("render_svg", [](const std::string& scene_json) { return render_svg(parse_scene(scene_json)); });
}
