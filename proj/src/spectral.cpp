#include "eph/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "eph/errors.hpp"
#include "eph/random.hpp"

namespace eph {

namespace {

constexpr double kPi = std::numbers::pi;

// distinct eigenvalues with the largest order (minimal polynomial exponents)
std::vector<JetPoint> distinct_max(const JetSpectrum& spec) {
    std::vector<JetPoint> out;
    for (const auto& p : spec) {
        auto it = std::find_if(out.begin(), out.end(), [&](const JetPoint& q) { return std::abs(q.lambda - p.lambda) <= 1e-12; });
        if (it == out.end())
            out.push_back(p);
        else
            it->order = std::max(it->order, p.order);
    }
    return out;
}

}  // namespace

CMat assemble_jordan(const JetSpectrum& spec) {
    int n = 0;
    for (const auto& p : spec) {
        if (p.order < 1) throw InputError("jet order must be >= 1");
        n += p.order;
    }
    CMat a = CMat::Zero(n, n);
    int off = 0;
    for (const auto& p : spec) {
        for (int i = 0; i < p.order; ++i) {
            a(off + i, off + i) = p.lambda;
            if (i + 1 < p.order) a(off + i, off + i + 1) = 1.0;
        }
        off += p.order;
    }
    return a;
}

JetSpectrum covariant_spectrum(const CMat& a, double tol) {
    if (a.rows() != a.cols()) throw InputError("matrix must be square");
    const int n = int(a.rows());
    if (n == 0) return {};
    Eigen::ComplexEigenSolver<CMat> es(a, false);
    const Eigen::VectorXcd ev = es.eigenvalues();

    // single-linkage clusters
    std::vector<int> label(n, -1);
    int nc = 0;
    for (int i = 0; i < n; ++i) {
        if (label[i] >= 0) continue;
        std::vector<int> stack{i};
        label[i] = nc;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j)
                if (label[j] < 0 && std::abs(ev(p) - ev(j)) <= tol) {
                    label[j] = nc;
                    stack.push_back(j);
                }
        }
        ++nc;
    }
    std::vector<cplx> mu(nc, 0.0);
    std::vector<int> size(nc, 0);
    for (int i = 0; i < n; ++i) {
        mu[label[i]] += ev(i);
        ++size[label[i]];
    }
    for (int c = 0; c < nc; ++c) mu[c] /= double(size[c]);
    for (int c = 0; c < nc; ++c)
        for (int d = c + 1; d < nc; ++d)
            if (std::abs(mu[c] - mu[d]) <= 2 * tol) throw DegenerateError("eigenvalue clusters are not resolved at this tolerance");

    JetSpectrum out;
    const CMat I = CMat::Identity(n, n);
    for (int c = 0; c < nc; ++c) {
        const CMat M = a - mu[c] * I;
        CMat P = I;
        std::vector<int> nullity{0};
        for (int j = 1; j <= size[c]; ++j) {
            P = P * M;
            Eigen::JacobiSVD<CMat> svd(P);
            const auto& sv = svd.singularValues();
            const double thr = 1e-8 * std::max(1.0, sv(0));
            int z = 0;
            for (int i = 0; i < sv.size(); ++i)
                if (sv(i) <= thr) ++z;
            z = std::clamp(z, nullity.back(), size[c]);
            nullity.push_back(z);
            if (z == size[c]) break;
        }
        if (nullity.back() != size[c]) throw DegenerateError("rank jumps do not account for the cluster");
        // ge[j]: blocks of size >= j
        const int J = int(nullity.size()) - 1;
        for (int j = 1; j <= J; ++j) {
            const int ge = nullity[j] - nullity[j - 1];
            const int ge_next = j < J ? nullity[j + 1] - nullity[j] : 0;
            for (int b = 0; b < ge - ge_next; ++b) out.push_back({mu[c], j});
        }
    }
    return out;
}

cplx Polynomial::operator()(cplx z) const {
    cplx r = 0;
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) r = r * z + *it;
    return r;
}

CMat Polynomial::operator()(const CMat& a) const {
    const CMat I = CMat::Identity(a.rows(), a.cols());
    CMat r = CMat::Zero(a.rows(), a.cols());
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) r = r * a + (*it) * I;
    return r;
}

std::vector<cplx> Polynomial::taylor(cplx z0) const {
    // repeated synthetic division by (z - z0)
    std::vector<cplx> c = coef, out;
    while (!c.empty()) {
        cplx r = 0;
        std::vector<cplx> q(c.size() > 1 ? c.size() - 1 : 0);
        for (std::size_t i = c.size(); i-- > 0;) {
            const cplx next = r * z0 + c[i];
            if (i > 0) q[i - 1] = next;
            r = next;
        }
        out.push_back(r);
        c = q;
    }
    return out;
}

int Polynomial::local_degree(cplx z0, double rel_tol) const {
    const auto t = taylor(z0);
    double scale = 0;
    for (std::size_t j = 1; j < t.size(); ++j) scale = std::max(scale, std::abs(t[j]));
    if (scale == 0) throw DomainError("map is constant, local degree undefined");
    for (std::size_t j = 1; j < t.size(); ++j)
        if (std::abs(t[j]) > rel_tol * scale) return int(j);
    throw DomainError("local degree undefined");
}

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots, const std::vector<int>& mult, cplx c) {
    Polynomial p{{c}};
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (int e = 0; e < mult.at(i); ++e) {
            std::vector<cplx> q(p.coef.size() + 1, 0.0);
            for (std::size_t j = 0; j < p.coef.size(); ++j) {
                q[j + 1] += p.coef[j];
                q[j] -= roots[i] * p.coef[j];
            }
            p.coef = q;
        }
    return p;
}

Polynomial Polynomial::primitive(cplx at0) const {
    Polynomial p{{at0}};
    for (std::size_t j = 0; j < coef.size(); ++j) p.coef.push_back(coef[j] / double(j + 1));
    return p;
}

JetSpectrum spectral_map(const JetSpectrum& spec, const Polynomial& phi, MapMode mode, bool keep_zero) {
    JetSpectrum out;
    for (const auto& p : spec) {
        const int d = phi.local_degree(p.lambda);
        const cplx w = phi(p.lambda);
        if (mode == MapMode::floor) {
            const int k = p.order / d;
            if (k > 0 || keep_zero) out.push_back({w, k});
        } else {
            for (int i = 0; i < d; ++i) {
                const int k = (p.order + i) / d;
                if (k > 0 || keep_zero) out.push_back({w, k});
            }
        }
    }
    return out;
}

JetSpectrum canonical(JetSpectrum s) {
    std::sort(s.begin(), s.end(), [](const JetPoint& a, const JetPoint& b) {
        if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
        if (a.lambda.imag() != b.lambda.imag()) return a.lambda.imag() < b.lambda.imag();
        return a.order < b.order;
    });
    return s;
}

bool same_spectrum(const JetSpectrum& a, const JetSpectrum& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& p : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j] && b[j].order == p.order && std::abs(b[j].lambda - p.lambda) <= tol) {
                used[j] = found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

cplx blaschke(const JetSpectrum& spec, cplx z) {
    if (std::abs(z) > 1 + 1e-12) throw DomainError("Blaschke product evaluated outside the closed disk");
    cplx r = 1.0;
    for (const auto& p : distinct_max(spec)) {
        if (std::abs(p.lambda) >= 1) throw DomainError("spectrum must lie in the open unit disk");
        const cplx f = (z - p.lambda) / (1.0 - std::conj(p.lambda) * z);
        for (int i = 0; i < p.order; ++i) r *= f;
    }
    return r;
}

std::vector<cplx> blaschke_numerator(const JetSpectrum& spec) {
    std::vector<cplx> roots;
    std::vector<int> mult;
    for (const auto& p : distinct_max(spec)) {
        roots.push_back(p.lambda);
        mult.push_back(p.order);
    }
    return Polynomial::from_roots(roots, mult).coef;
}

std::vector<cplx> minimal_polynomial(const CMat& a, double tol) {
    const int n = int(a.rows());
    std::vector<Eigen::VectorXcd> pw;
    CMat P = CMat::Identity(n, n);
    pw.push_back(Eigen::Map<const Eigen::VectorXcd>(P.data(), n * n));
    for (int d = 1; d <= n; ++d) {
        P = P * a;
        const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(P.data(), n * n);
        CMat K(n * n, d);
        for (int j = 0; j < d; ++j) K.col(j) = pw[j];
        const Eigen::VectorXcd c = K.colPivHouseholderQr().solve(-v);
        if ((K * c + v).norm() <= tol * std::max(1.0, v.norm())) {
            std::vector<cplx> out(c.data(), c.data() + d);
            out.push_back(1.0);
            return out;
        }
        pw.push_back(v);
    }
    throw DegenerateError("minimal polynomial not found");
}

namespace {

struct Quad {
    double dsq, inner_re;
};

Quad quad_at(const JetSpectrum& sa, const JetSpectrum& sb, int N) {
    double s = 0, ip = 0;
    for (int j = 0; j < N; ++j) {
        const cplx z = std::polar(1.0, 2 * kPi * j / N);
        const cplx a = blaschke(sa, z), b = blaschke(sb, z);
        s += std::norm(a - b);
        ip += (a * std::conj(b)).real();
    }
    return {s / N, ip / N};
}

}  // namespace

DistanceResult spectral_distance_full(const JetSpectrum& sa, const JetSpectrum& sb, int nodes, int max_nodes) {
    if (nodes < 8) throw InputError("too few quadrature nodes");
    if (max_nodes < nodes) throw InputError("max_nodes below nodes");
    DistanceResult r;
    Quad q = quad_at(sa, sb, nodes);
    int N = nodes;
    r.converged = false;
    while (2 * N <= max_nodes) {
        const Quad q2 = quad_at(sa, sb, 2 * N);
        const double change = std::abs(std::sqrt(q2.dsq) - std::sqrt(q.dsq));
        q = q2;
        N *= 2;
        if (change < 1e-8) {
            r.converged = true;
            break;
        }
    }
    r.nodes = N;
    r.distance_sq = q.dsq;
    r.distance = std::sqrt(q.dsq);
    r.identity_residual = std::abs(q.dsq - (2 - 2 * q.inner_re));
    return r;
}

double spectral_distance(const JetSpectrum& sa, const JetSpectrum& sb, int nodes) {
    return spectral_distance_full(sa, sb, nodes).distance;
}

JetSpectrum disk_act(const DiskMap& g, const JetSpectrum& spec) {
    JetSpectrum out = spec;
    for (auto& p : out) p.lambda = g(p.lambda);
    return out;
}

CMat disk_act(const DiskMap& g, const CMat& a) {
    const CMat I = CMat::Identity(a.rows(), a.cols());
    const CMat num = std::conj(g.alpha) * a - std::conj(g.beta) * I;
    const CMat den = g.alpha * I - g.beta * a;
    return num * den.inverse();
}

std::vector<cplx> perturbed_jordan_eigs(const RMat& K, double eps) {
    const int n = int(K.rows());
    RMat M = RMat::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) M(i, i + 1) = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) += K(i, j) * std::pow(eps, n - 1 + j - i);
    Eigen::EigenSolver<RMat> es(M, false);
    std::vector<cplx> out;
    for (int i = 0; i < n; ++i) out.push_back(eps * es.eigenvalues()(i));
    return out;
}

LidskiiReport lidskii_with_K(const RMat& K, double eps) {
    const int n = int(K.rows());
    LidskiiReport r;
    r.n = n;
    r.eps = eps;
    r.eigenvalues = perturbed_jordan_eigs(K, eps);
    std::sort(r.eigenvalues.begin(), r.eigenvalues.end(),
              [](cplx a, cplx b) { return std::arg(a) < std::arg(b); });
    double mean = 0;
    for (auto z : r.eigenvalues) mean += std::abs(z);
    mean /= n;
    r.mean_magnitude = mean;
    for (auto z : r.eigenvalues) r.max_magnitude_dev = std::max(r.max_magnitude_dev, std::abs(std::abs(z) - mean) / mean);
    for (int i = 0; i < n; ++i) {
        double gap = std::arg(r.eigenvalues[(i + 1) % n]) - std::arg(r.eigenvalues[i]);
        if (i + 1 == n) gap += 2 * kPi;
        r.max_gap_dev = std::max(r.max_gap_dev, std::abs(gap - 2 * kPi / n));
    }
    const double xi = K(n - 1, 0);
    r.predicted_magnitude = eps * std::pow(std::abs(xi), 1.0 / n);
    const cplx root = std::polar(std::pow(std::abs(xi), 1.0 / n), std::arg(cplx(xi)) / n);
    for (auto z : r.eigenvalues) {
        double best = INFINITY;
        for (int j = 0; j < n; ++j) best = std::min(best, std::abs(z - eps * root * std::polar(1.0, 2 * kPi * j / n)));
        r.residual = std::max(r.residual, best);
    }
    return r;
}

LidskiiReport lidskii_experiment(int n, double eps, std::uint64_t seed) {
    if (n < 2) throw InputError("lidskii: n must be >= 2");
    if (!(eps > 0 && eps < 0.5)) throw InputError("lidskii: eps must lie in (0, 0.5)");
    Rng rng(seed);
    RMat K(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) K(i, j) = rng.uniform(-1, 1);
    LidskiiReport r = lidskii_with_K(K, eps);
    r.seed = seed;
    return r;
}

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = double(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

StabilityReport stability_exponent(int trials, const std::vector<double>& eps_grid, std::uint64_t seed, int max_nodes) {
    if (eps_grid.size() < 4) throw InputError("stability exponent needs at least 4 eps values");
    if (trials < 1) throw InputError("stability exponent needs at least one trial");
    for (double e : eps_grid)
        if (!(e >= 1e-3 && e <= 1e-1)) throw InputError("eps values must lie in [1e-3, 1e-1]");
    StabilityReport r;
    const JetSpectrum j2{{0.0, 2}};
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed + 0x9E3779B97F4A7C15ull * std::uint64_t(t + 1));
        RMat K(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) K(i, j) = rng.uniform(-1, 1);
        cplx w[2];
        for (auto& x : w) x = std::polar(rng.uniform(0.2, 1.0), rng.uniform(-kPi, kPi));
        std::vector<double> lx, ly, lc;
        for (double e : eps_grid) {
            const double e2 = e * e;
            const cplx tr = e2 * (K(0, 0) + K(1, 1));
            const cplx det = e2 * K(0, 0) * e2 * K(1, 1) - (1 + e2 * K(0, 1)) * e2 * K(1, 0);
            const cplx disc = std::sqrt(tr * tr / 4.0 - det);
            const JetSpectrum pert{{tr / 2.0 + disc, 1}, {tr / 2.0 - disc, 1}};
            const JetSpectrum ctrl{{e * w[0], 1}, {e * w[1], 1}};
            const DistanceResult d = spectral_distance_full(j2, pert, std::min(4096, max_nodes), max_nodes);
            const DistanceResult c = spectral_distance_full(j2, ctrl, std::min(4096, max_nodes), max_nodes);
            r.converged = r.converged && d.converged && c.converged;
            lx.push_back(std::log(e));
            ly.push_back(std::log(d.distance_sq));
            lc.push_back(std::log(c.distance_sq));
        }
        r.trial_slopes.push_back(lsq_slope(lx, ly));
        r.control_trial_slopes.push_back(lsq_slope(lx, lc));
    }
    r.slope = std::accumulate(r.trial_slopes.begin(), r.trial_slopes.end(), 0.0) / trials;
    r.control_slope = std::accumulate(r.control_trial_slopes.begin(), r.control_trial_slopes.end(), 0.0) / trials;
    return r;
}

double chordal(const ExtComplex& a, const ExtComplex& b) {
    if (a.infinite && b.infinite) return 0;
    if (a.infinite) return 1 / std::sqrt(1 + std::norm(b.z));
    if (b.infinite) return 1 / std::sqrt(1 + std::norm(a.z));
    return std::abs(a.z - b.z) / std::sqrt((1 + std::norm(a.z)) * (1 + std::norm(b.z)));
}

ExtComplex moebius(const MoebiusMap& g, const ExtComplex& z) {
    if (z.infinite) {
        if (g.c == 0) return {true, 0};
        return {false, g.a / g.c};
    }
    const cplx den = g.c * z.z + g.d;
    if (den == 0.0) return {true, 0};
    return {false, (g.a * z.z + g.b) / den};
}

PencilPair pencil_act(const MoebiusMap& g, const PencilPair& p) {
    if (p.A.rows() != p.B.rows() || p.A.cols() != p.B.cols()) throw InputError("pencil dimensions differ");
    return {g.a * p.A + g.b * p.B, g.c * p.A + g.d * p.B};
}

std::vector<ExtComplex> matrix_polynomial_eigs(const std::vector<CMat>& C, double tol) {
    const int p = int(C.size()) - 1;
    const int n = int(C[0].rows());
    if (p < 1) throw InputError("matrix polynomial needs degree >= 1");
    if (n > 8) throw InputError("matrix polynomial eigenvalues limited to dimension 8");
    auto eval = [&](cplx z) {
        CMat Q = C[p];
        for (int j = p - 1; j >= 0; --j) Q = Q * z + C[j];
        return Q;
    };
    const int D = p * n, N = D + 1;
    std::vector<cplx> f(N);
    for (int j = 0; j < N; ++j) f[j] = eval(std::polar(1.0, 2 * kPi * j / N)).determinant();
    std::vector<cplx> c(N);
    for (int k = 0; k < N; ++k) {
        cplx s = 0;
        for (int j = 0; j < N; ++j) s += f[j] * std::polar(1.0, -2 * kPi * double(j) * k / N);
        c[k] = s / double(N);
    }
    double scale = 0, bound = 0;
    for (auto x : c) scale = std::max(scale, std::abs(x));
    for (const auto& M : C) bound += M.norm();
    if (scale <= 1e-13 * std::pow(std::max(bound, 1e-300), n)) throw DegenerateError("singular pencil: determinant vanishes identically");
    int d = N - 1;
    while (d > 0 && std::abs(c[d]) <= tol * scale) --d;
    std::vector<ExtComplex> out;
    if (d > 0) {
        CMat comp = CMat::Zero(d, d);
        for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
        for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
        Eigen::ComplexEigenSolver<CMat> es(comp, false);
        std::vector<cplx> r(es.eigenvalues().data(), es.eigenvalues().data() + d);
        // Newton on det: f'/f = tr(Q^{-1} Q')
        for (int i = 0; i < d; ++i) {
            double sep = INFINITY;
            for (int j = 0; j < d; ++j)
                if (j != i) sep = std::min(sep, std::abs(r[i] - r[j]));
            cplx z = r[i];
            double fz = std::abs(eval(z).determinant());
            for (int it = 0; it < 30 && fz > 0; ++it) {
                CMat dQ = CMat::Zero(n, n);
                for (int j = p; j >= 1; --j) dQ = dQ * z + double(j) * C[j];
                const Eigen::PartialPivLU<CMat> lu(eval(z));
                const cplx t = lu.solve(dQ).trace();
                if (t == 0.0) break;
                const cplx step = 1.0 / t;
                if (std::abs(step) > 0.5 * sep) break;
                const cplx z2 = z - step;
                const double f2 = std::abs(eval(z2).determinant());
                if (!(f2 < fz)) break;
                z = z2;
                fz = f2;
                if (std::abs(step) <= 1e-16 * (1 + std::abs(z))) break;
            }
            out.push_back({false, z});
        }
    }
    for (int i = d; i < D; ++i) out.push_back({true, 0});
    return out;
}

std::vector<ExtComplex> pencil_eigs(const PencilPair& p, double tol) {
    if (p.A.rows() != p.B.rows() || p.A.rows() != p.A.cols() || p.B.rows() != p.B.cols())
        throw InputError("pencil matrices must be square of equal size");
    return matrix_polynomial_eigs({p.A.cast<cplx>(), (-p.B).cast<cplx>()}, tol);
}

RMat fsc_block_matrix(const QuadraticPencil& q) {
    const Eigen::Index n = q.A0.rows();
    RMat C(2 * n, 2 * n);
    C << -0.5 * q.A1, -q.A0, q.A2, 0.5 * q.A1;
    return C;
}

QuadraticPencil quadratic_pencil_conjugate(const MoebiusMap& g, const QuadraticPencil& q, double tol) {
    const Eigen::Index n = q.A0.rows();
    if (q.A1.rows() != n || q.A2.rows() != n) throw InputError("quadratic pencil dimensions differ");
    const RMat I = RMat::Identity(n, n);
    RMat G(2 * n, 2 * n), Gi(2 * n, 2 * n);
    G << g.a * I, g.b * I, g.c * I, g.d * I;
    Gi << g.d * I, -g.b * I, -g.c * I, g.a * I;
    const RMat M = G * fsc_block_matrix(q) * Gi;
    const RMat M11 = M.topLeftCorner(n, n), M22 = M.bottomRightCorner(n, n);
    if ((M11 + M22).norm() > tol * std::max(1.0, M.norm())) throw DegenerateError("conjugation broke the FSC block shape");
    return {-M.topRightCorner(n, n), M22 - M11, M.bottomLeftCorner(n, n)};
}

std::vector<ExtComplex> quadratic_eigs(const QuadraticPencil& q, double tol) {
    return matrix_polynomial_eigs({q.A0.cast<cplx>(), q.A1.cast<cplx>(), q.A2.cast<cplx>()}, tol);
}

double match_distance(std::vector<ExtComplex> a, std::vector<ExtComplex> b) {
    if (a.size() != b.size()) return INFINITY;
    double worst = 0;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        double best = INFINITY;
        std::size_t bi = 0;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j] && chordal(x, b[j]) < best) {
                best = chordal(x, b[j]);
                bi = j;
            }
        used[bi] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace eph
