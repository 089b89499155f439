#pragma once

#include "eph/cycles.hpp"
#include "eph/moebius.hpp"

namespace eph {

struct DirectedInterval {
    Point2 A, B;
};

struct LengthKind {
    enum Tag { distance, from_centre, from_focus } tag = distance;
    Signature flavour;

    static LengthKind dist() { return {distance, Signature::elliptic()}; }
    static LengthKind centre(Signature f) { return {from_centre, f}; }
    static LengthKind focus(Signature f) { return {from_focus, f}; }
};

inline double distance_sq(double u, double v, Signature sigma) { return u * u - double(sigma) * v * v; }

// cycle with the requested centre/focus at A passing through B
Cycle length_cycle(const DirectedInterval& iv, const LengthKind& kind, Signature sigma);

double length(const DirectedInterval& iv, const LengthKind& kind, Signature sigma);

bool is_perpendicular(const DirectedInterval& ab, const DirectedInterval& cd, const LengthKind& kind,
                      Signature sigma, double tol = 1e-4);

double conformality_ratio(const MoebiusMap& g, Point2 y, Point2 ydir, double t, const LengthKind& kind,
                          Signature sigma);

// extremum of 4 radius^2 over cycles (sigma_breve = sigma) through A and B
double extremal_diameter_sq(Point2 A, Point2 B, Signature sigma);

}  // namespace eph
