#include "udgc/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace udgc {

double dist2(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double dist(Point a, Point b) { return std::sqrt(dist2(a, b)); }

bool point_in_disk(Point p, Point center, double radius) {
    return dist2(p, center) <= radius * radius;
}

double reuleaux_cover_probability(double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::domain_error("reuleaux_cover_probability: r outside [0,1]");
    }
    const double pi = std::acos(-1.0);
    return std::acos(r / 2.0) / pi - 1.0 / 6.0;
}

bool Rect::contains(Point p) const {
    const double x1 = x0 + width;
    const double y1 = y0 + height;
    if (low_open) {
        return p.x > x0 && p.x <= x1 && p.y > y0 && p.y <= y1;
    }
    return p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1;
}

}  // namespace udgc
