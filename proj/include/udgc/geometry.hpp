// Planar primitives: distances, disks, rectangles, Reuleaux coverage.
#pragma once

namespace udgc {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double dist(Point a, Point b);
double dist2(Point a, Point b);  // squared distance; use for threshold tests

// Closed disk: true iff dist(p, center) <= radius. Compared on squares so the
// boundary is exact for rational inputs.
bool point_in_disk(Point p, Point center, double radius);

// Probability that a fixed point on the circle C_r(v) lies inside a random
// Reuleaux triangle anchored at v: (1/pi)*arccos(r/2) - 1/6.
// Throws std::domain_error outside [0, 1].
double reuleaux_cover_probability(double r);

// Axis-aligned rectangle with an explicit half-open boundary convention.
// low_open = true  : (x0, x0+width] x (y0, y0+height]  (left/bottom excluded)
// low_open = false : [x0, x0+width) x [y0, y0+height)  (right/top excluded)
struct Rect {
    double x0 = 0.0;
    double y0 = 0.0;
    double width = 1.0;
    double height = 1.0;
    bool low_open = false;

    bool contains(Point p) const;
};

}  // namespace udgc
