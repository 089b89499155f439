#pragma once

#include <string>
#include <vector>

#include "eph/cycles.hpp"

namespace eph {

struct Viewport {
    double umin = -3, umax = 3, vmin = -2.25, vmax = 2.25;
};

struct SceneCycle {
    Cycle cycle;
    Signature sigma;  // drawing plane
    std::string color;
};

struct ScenePoint {
    Point2 p;
    std::string color;
};

struct Scene {
    std::vector<SceneCycle> cycles;
    std::vector<ScenePoint> points;
    Viewport viewport;
    int samples = 64;
};

constexpr int kCanvasW = 800;
constexpr int kCanvasH = 600;
constexpr double kMaxChordDev = 0.5;

// accepts {"viewport": [umin, umax, vmin, vmax] | {...}, "samples": n, "cycles": [...]} or a bare array of cycles
Scene parse_scene(const std::string& json_text);
Scene load_scene(const std::string& path);
void validate(const Scene& s);

// canvas coordinates, v flipped
Point2 to_canvas(const Viewport& vp, Point2 p);

// polylines in canvas pixels; each branch may hold several runs split at the viewport edge
using Polyline = std::vector<Point2>;
struct Branch {
    std::vector<Polyline> runs;
};
std::vector<Branch> cycle_branches(const Cycle& c, Signature sigma, const Viewport& vp, int samples);

std::string render_svg(const Scene& s);
void write_svg(const Scene& s, const std::string& path);

// fixed-precision number text with no negative zero
std::string fmt_num(double x, int digits = 3);

}  // namespace eph
