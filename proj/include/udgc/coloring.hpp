// Coloring algorithms (strip, 4-omega stripes, fractional regions, 5.68-omega
// randomized, greedy baseline) plus validators.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udgc/localsim.hpp"
#include "udgc/udg.hpp"

namespace udgc {

struct Coloring {
    std::map<int, int> color;  // vertex id -> color
    int palette_size = 0;
};

struct FractionalColoring {
    int64_t p = 0;
    int64_t q = 0;
    std::map<int, std::vector<int64_t>> sets;  // vertex id -> sorted q-subset of [0, p)
};

// ---- strip coloring ------------------------------------------------------

// Exact chi = omega coloring of points inside one height-sqrt(3)/2 strip.
// Mechanism: minimum chain cover of the co-comparability order (u < v iff u
// precedes v in (x, y, id) order and dist(u, v) > 1; transitive because the
// strip forces dx > 1/2 for each such pair). Dilworth: #chains = max
// antichain = omega; each chain is an independent set = one color class.
// Rejects inputs whose y-span exceeds sqrt(3)/2.
struct StripColoring {
    std::vector<int> colors;  // aligned with the input order
    int64_t omega = 0;        // colors used == omega of the induced subgraph
};
StripColoring strip_greedy(const std::vector<Point>& pts,
                           const std::vector<int>& ids);

// Fast variant for callers that only need <= cap colors: leftmost-first
// greedy, falling back to the exact cover when greedy exceeds the cap.
std::vector<int> strip_color_capped(const std::vector<Point>& pts,
                                    const std::vector<int>& ids, int64_t cap);

// ---- stripe decomposition (4-omega algorithm) -----------------------------

// Stripes of height h = sqrt(3)/2 indexed j = floor(y/h)+1; per stripe a
// 1-long rectangle every 6 units at horizontal offset (2.2*j) mod 6. The
// leftover 5-long segments take class j mod 3. All separations (> 1 between
// distinct parts of equal tag) are asserted numerically at startup.
struct StripeDecomposition {
    enum Kind { kSegment = 0, kRectangle = 1 };
    Kind kind;
    int cls;         // segment class j mod 3; 3 for rectangles
    int64_t stripe;  // j
    int64_t index;   // period index m of the rectangle / segment within stripe
    std::string part_key() const;
};
StripeDecomposition stripe_tag(Point p);
double stripe_min_part_separation();  // min distance between equal-tag parts

struct SimulatedColoring {
    Coloring coloring;
    RoundTrace trace;
    bool failed = false;        // gather non-stabilization or local cap bust
    std::string failure;
};

// Location-aware O(1)-round program: tag from coordinates, part-component
// gather (cap 24), canonical strip coloring, palette block by tag class.
// Palette: class-i segments [i*omega, (i+1)*omega), rectangles [3w, 4w).
SimulatedColoring color_4omega(const UnitDiskGraph& g, int64_t omega,
                               uint64_t seed = 0);

// ---- fractional coloring ---------------------------------------------------

// Region system i of r: lattice of (1/eps)-long, sqrt(3)/2-high rectangles
// with periods 1+1/eps and 1+sqrt(3)/2, offset by i/r of each period;
// rectangles contain their top/right boundary and exclude bottom/left.
struct RegionSystem {
    double eps;
    int64_t r;
    // covering system test + rectangle cell key for vertex position p
    bool covers(int64_t i, Point p) const;
    std::pair<int64_t, int64_t> cell(int64_t i, Point p) const;
};

enum class FractionalMode { kCentral, kSimulate };

struct FractionalResult {
    FractionalColoring coloring;
    bool feasible = true;   // false iff q = 0 (r too small / eps too large)
    bool stabilized = true;  // simulate mode: flood reached every rectangle
    std::optional<RoundTrace> trace;  // simulate mode only
};

// p = r*omega; system i colors its covered vertices with <= omega colors per
// rectangle from [i*omega, (i+1)*omega); q = min coverage over vertices; each
// vertex keeps its q lowest-indexed covering systems. Simulate mode runs the
// identical computation as a location-aware program with round cap 4/eps + 4
// (practical only for eps >= 0.2); q is then applied by the harness since a
// global minimum is not locally computable.
FractionalResult color_fractional(const UnitDiskGraph& g, int64_t omega,
                                  int64_t r, double eps, FractionalMode mode,
                                  uint64_t seed = 0);

// ---- randomized list colorings ---------------------------------------------

struct Sim568Result {
    Coloring coloring;
    RoundTrace trace;
    bool failed = false;
    std::string failure;
    std::vector<int> a_vertices;      // vertex indices with d(v) > 5.675*omega
    bool a_components_are_cliques = true;
};

// Abstract-model randomized coloring with palette ceil(5.68*omega):
// high-degree vertices (d > 5.675*omega) form cliques, verify themselves and
// take id-rank colors; the rest run a synchronized random-proposal loop on
// lists purged of A-neighbor colors. Round cap 20*ceil(log2(n+2)).
Sim568Result color_568(const UnitDiskGraph& g, int64_t omega, uint64_t seed);

// Same proposal loop with L(v) = {0..d(v)}, palette Delta+1 (<= 6*omega-5).
SimulatedColoring color_greedy_baseline(const UnitDiskGraph& g, uint64_t seed);

// ---- validation ------------------------------------------------------------

struct ValidationReport {
    bool ok = true;
    std::string violation;          // empty iff ok
    int edge_u = -1, edge_v = -1;   // first violating edge if any
};

ValidationReport validate(const UnitDiskGraph& g, const Coloring& c);
ValidationReport validate(const UnitDiskGraph& g, const FractionalColoring& c);

}  // namespace udgc
