#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "eph/moebius.hpp"

namespace eph {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

struct JetPoint {
    cplx lambda;
    int order = 1;
};

using JetSpectrum = std::vector<JetPoint>;

// block diagonal of Jordan blocks J_k(lambda), superdiagonal ones
CMat assemble_jordan(const JetSpectrum& spec);

// clusters eigenvalues within tol, jet orders from rank jumps of (a - mu)^j
JetSpectrum covariant_spectrum(const CMat& a, double tol = 0.05);

// polynomial with complex coefficients, ascending powers
struct Polynomial {
    std::vector<cplx> coef;

    cplx operator()(cplx z) const;
    CMat operator()(const CMat& a) const;
    // Taylor coefficients at z0
    std::vector<cplx> taylor(cplx z0) const;
    // order of the zero of phi(z) - phi(z0) at z0
    int local_degree(cplx z0, double rel_tol = 1e-9) const;

    static Polynomial identity() { return {{0.0, 1.0}}; }
    // c * prod (z - r_i)^{e_i}
    static Polynomial from_roots(const std::vector<cplx>& roots, const std::vector<int>& mult, cplx c = 1.0);
    // primitive of p with value `at0` at 0
    Polynomial primitive(cplx at0) const;
};

enum class MapMode {
    floor,   // (phi(lambda), floor(k / deg))
    jordan,  // k split into deg near-equal parts floor((k + i) / deg)
};

JetSpectrum spectral_map(const JetSpectrum& spec, const Polynomial& phi, MapMode mode = MapMode::floor,
                         bool keep_zero = false);

// sorted canonical form for multiset comparison
JetSpectrum canonical(JetSpectrum s);
bool same_spectrum(const JetSpectrum& a, const JetSpectrum& b, double tol);

// prod ((z - l)/(1 - conj(l) z))^m, m = largest order at each distinct l
cplx blaschke(const JetSpectrum& spec, cplx z);
// coefficients of the numerator prod (z - l)^m
std::vector<cplx> blaschke_numerator(const JetSpectrum& spec);
// monic minimal polynomial of a, ascending coefficients
std::vector<cplx> minimal_polynomial(const CMat& a, double tol = 1e-9);

struct DistanceResult {
    double distance = 0;     // ||B_a - B_b||_2
    double distance_sq = 0;  // computed directly from |B_a - B_b|^2
    double identity_residual = 0;  // | d^2 - (2 - 2 Re<B_a, B_b>) |
    int nodes = 0;
    bool converged = true;
};

// node doubling from `nodes` up to `max_nodes`; converged stays false if no doubling fits
DistanceResult spectral_distance_full(const JetSpectrum& sa, const JetSpectrum& sb, int nodes = 4096,
                                     int max_nodes = 1 << 22);
double spectral_distance(const JetSpectrum& sa, const JetSpectrum& sb, int nodes = 4096);

// SU(1,1) element [[alpha, beta], [conj beta, conj alpha]] acting on the disk
struct DiskMap {
    cplx alpha{1, 0}, beta{0, 0};
    cplx operator()(cplx z) const { return (std::conj(alpha) * z - std::conj(beta)) / (alpha - beta * z); }
};
JetSpectrum disk_act(const DiskMap& g, const JetSpectrum& spec);
// (conj(alpha) a - conj(beta) e)(alpha e - beta a)^{-1}
CMat disk_act(const DiskMap& g, const CMat& a);

struct LidskiiReport {
    int n = 0;
    double eps = 0;
    std::uint64_t seed = 0;
    std::vector<cplx> eigenvalues;
    double mean_magnitude = 0;
    double max_magnitude_dev = 0;  // relative to the mean
    double max_gap_dev = 0;        // |gap - 2 pi / n|, radians
    double predicted_magnitude = 0;  // eps |xi|^{1/n}, xi = K(n, 1)
    double residual = 0;           // max |lambda_j - eps xi^{1/n} w^j| after matching
};

LidskiiReport lidskii_experiment(int n, double eps, std::uint64_t seed);
LidskiiReport lidskii_with_K(const RMat& K, double eps);
// eigenvalues of J_n + eps^n K through the similarity diag(1, eps, ..., eps^{n-1})
std::vector<cplx> perturbed_jordan_eigs(const RMat& K, double eps);

struct StabilityReport {
    double slope = 0;          // mean log-log slope of d^2(J_2, J_2 + eps^2 K)
    double control_slope = 0;  // d^2(J_2, diag(l1, l2)), |l1| + |l2| = O(eps)
    std::vector<double> trial_slopes, control_trial_slopes;
    bool converged = true;
};

StabilityReport stability_exponent(int trials, const std::vector<double>& eps_grid, std::uint64_t seed,
                                   int max_nodes = 1 << 22);

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y);

// pencils
struct PencilPair {
    RMat A, B;
};

struct ExtComplex {
    bool infinite = false;
    cplx z;
};

// chordal distance on the Riemann sphere
double chordal(const ExtComplex& a, const ExtComplex& b);
ExtComplex moebius(const MoebiusMap& g, const ExtComplex& z);

PencilPair pencil_act(const MoebiusMap& g, const PencilPair& p);
std::vector<ExtComplex> pencil_eigs(const PencilPair& p, double tol = 1e-12);

struct QuadraticPencil {
    RMat A0, A1, A2;
};

// [[-A1/2, -A0], [A2, A1/2]]: fixed points of the block Moebius map are the solutions of Q
RMat fsc_block_matrix(const QuadraticPencil& q);
QuadraticPencil quadratic_pencil_conjugate(const MoebiusMap& g, const QuadraticPencil& q, double tol = 1e-10);
std::vector<ExtComplex> quadratic_eigs(const QuadraticPencil& q, double tol = 1e-12);

// roots of det(sum lambda^j C_j), Newton-polished; degree drop gives infinities
std::vector<ExtComplex> matrix_polynomial_eigs(const std::vector<CMat>& coeffs, double tol = 1e-12);

// greedy matching; largest chordal distance
double match_distance(std::vector<ExtComplex> a, std::vector<ExtComplex> b);

}  // namespace eph
