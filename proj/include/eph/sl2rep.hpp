#pragma once

#include <string>
#include <vector>

#include "eph/cycles.hpp"
#include "eph/hypercomplex.hpp"

namespace eph {

// x = a A + b B + c Z with A = diag(-1, 1)/2, B = [[0,1],[1,0]]/2, Z = [[0,1],[-1,0]]
struct Sl2Element {
    Hypercomplex a, b, c;

    static Sl2Element basis_A(Signature s) { return {{1, 0, s}, {0, 0, s}, {0, 0, s}}; }
    static Sl2Element basis_B(Signature s) { return {{0, 0, s}, {1, 0, s}, {0, 0, s}}; }
    static Sl2Element basis_Z(Signature s) { return {{0, 0, s}, {0, 0, s}, {1, 0, s}}; }

    Signature sig() const { return a.sig; }
};

Sl2Element operator+(const Sl2Element& x, const Sl2Element& y);
Sl2Element operator-(const Sl2Element& x, const Sl2Element& y);
Sl2Element operator*(const Hypercomplex& t, const Sl2Element& x);
Sl2Element operator*(double t, const Sl2Element& x);

HMat2 to_matrix(const Sl2Element& x);
// throws if the trace residual exceeds tol
Sl2Element from_matrix(const HMat2& M, double tol = 1e-12);

Sl2Element bracket(const Sl2Element& x, const Sl2Element& y);
HMat2 matrix_commutator(const HMat2& x, const HMat2& y);

// tr(ad x . ad y) on the 3-dim adjoint
Hypercomplex killing(const Sl2Element& x, const Sl2Element& y);

double max_abs(const Sl2Element& x);
bool approx_equal(const Sl2Element& x, const Sl2Element& y, double tol = 1e-12);

enum class Generator { Z, BminusHalfZ, B };

struct LadderPair {
    Signature unit;
    Hypercomplex iota;  // [X, L+-] = +- iota L+-, [L-, L+] = 2 iota X
    Sl2Element plus, minus;
    std::string label;
};

struct LadderSolution {
    Generator generator;
    Signature unit;
    Hypercomplex lambda;  // eigenvalue of ad(generator) on L+
    std::string characteristic;
    Sl2Element X, Y;  // normalized generator, Y = [X, A]
    std::vector<LadderPair> pairs;
};

LadderSolution solve_ladder(Generator g, double t = 1.0);

const char* generator_name(Generator g);
Generator parse_generator(const std::string& s);

std::string to_string(const Sl2Element& x);

}  // namespace eph
