// Unit-disk graphs on weighted planar point sets: construction, exact clique
// number (lens method), disk clique number, degree profiles, and the
// structural-inequality checkers.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "udgc/geometry.hpp"

namespace udgc {

struct WeightedPoint {
    int id = 0;  // consecutive from 0 in point order
    Point pos;
    int64_t multiplicity = 1;  // m co-located, mutually adjacent vertices
};

struct WeightedPointSet {
    std::vector<WeightedPoint> points;

    int size() const { return static_cast<int>(points.size()); }
    int64_t total_weight() const;
};

// Adjacency under the closed threshold ||u-v|| <= 1 (compared on squares).
// Multiplicities are kept arithmetic: a point never expands into copies, but
// every degree/count below follows the expansion semantics.
struct UnitDiskGraph {
    WeightedPointSet vertices;
    std::vector<std::vector<int>> adj;        // sorted neighbor ids
    std::vector<std::vector<double>> adj_dist;  // distances aligned with adj

    int n() const { return vertices.size(); }
    Point pos(int v) const { return vertices.points[v].pos; }
    int64_t mult(int v) const { return vertices.points[v].multiplicity; }

    // Expansion-semantics degree of one vertex at point v:
    // sum of neighbor multiplicities plus the co-located copies.
    int64_t weighted_degree(int v) const;
};

// O(n^2) pair scan for small inputs; uniform-grid buckets beyond 10^4 points.
// Rejects multiplicity < 1.
UnitDiskGraph build_graph(const WeightedPointSet& ps);

// Exact omega via the lens method: for every pair u,v at distance d <= 1 the
// candidate clique lives in {w : dist(w,u) <= d and dist(w,v) <= d}; points on
// one side of line uv are pairwise adjacent, so the complement is bipartite
// and Koenig reduces max clique to a min vertex cover (here: weighted, via
// max-flow). Points exactly on the line count as the "above" side.
int64_t clique_number(const UnitDiskGraph& g);

// Exact omega_D: maximum total multiplicity inside a closed disk of radius
// 1/2. Candidate centers: every point, plus the (<= 2) centers of radius-1/2
// circles through each pair at distance <= 1. Coverage tests allow 1e-9 slack
// on the squared distance to absorb the irrational candidate coordinates.
int64_t disk_clique_number(const UnitDiskGraph& g);

struct DegreeProfile {
    int vertex = 0;
    // sorted distinct neighbor distances r with weighted counts x_r
    std::vector<std::pair<double, int64_t>> x_r;
    int64_t degree = 0;  // d(v) = d_1(v)

    int64_t d_r(double r) const;  // neighbors at distance <= r
};

DegreeProfile degree_profile(const UnitDiskGraph& g, int v);

struct SlackReport {
    bool ok = true;
    double max_value = 0.0;  // max over vertices of the checked left-hand side
    int argmax = -1;
    double bound = 0.0;
};

// Reuleaux inequality: S(v) = sum_{u in N(v)} (2 - dist(u,v)) must stay
// <= 6*omega for every vertex.
SlackReport check_reuleaux_inequality(const UnitDiskGraph& g, int64_t omega);

// Radius variant: d(v) + (1-r)*d_r(v) <= 6*omega; at r = 1/2 additionally
// d_{1/2}(v) <= 12*omega - 2*d(v).
SlackReport check_cor_radius(const UnitDiskGraph& g, int64_t omega, double r);

double average_degree(const UnitDiskGraph& g);

}  // namespace udgc
