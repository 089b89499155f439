#pragma once

#include "eph/cycles.hpp"

namespace eph {

// Heaviside sign: 1 for t >= 0, -1 otherwise
inline int chi(double t) { return t >= 0 ? 1 : -1; }

// Re tr(C1 conj(C2)); the imaginary part vanishes identically
double pairing(const Cycle& c1, const Cycle& c2);
// pairing after scaling both matrices to unit Frobenius size
double normalized_pairing(const Cycle& c1, const Cycle& c2);

bool is_orthogonal(const Cycle& c1, const Cycle& c2, double tol = 1e-9);

// matrix of C T C, raw scale
CycleMatrix reflection_matrix(const Cycle& mirror, const Cycle& target);
// cycle of C T C, c is the mirror
Cycle reflect_in(const Cycle& c, const Cycle& target);

// c reflects `other`; not symmetric
bool is_f_orthogonal(const Cycle& c, const Cycle& other, double tol = 1e-9);

// same k, l, m; n scaled so the chi(sigma)-centre equals the sigma_breve-centre of c
Cycle ghost_cycle(const Cycle& c, Signature sigma);
// det of the ghost at s=1 against det of c with s = chi(sigma_breve), both at sigma
bool ghost_det_condition(const Cycle& c, Signature sigma, double tol = 1e-9);

// reflection of the real line in c, s set to chi(sigma)
Cycle f_ghost_cycle(const Cycle& c, Signature sigma);

bool passes_through(const Cycle& c, double u, double v, Signature sigma, double tol = 1e-9);

}  // namespace eph
