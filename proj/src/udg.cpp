#include "udgc/udg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "udgc/matching.hpp"

namespace udgc {
namespace {

constexpr double kDiskEps = 1e-9;  // squared-distance slack for irrational centers

// Weighted Koenig: max clique weight inside one lens = total - min vertex
// cover of the bipartite complement = total - max flow.
int64_t lens_clique(const std::vector<int64_t>& mult_a,
                    const std::vector<Point>& pos_a,
                    const std::vector<int64_t>& mult_b,
                    const std::vector<Point>& pos_b) {
    int64_t total = 0;
    for (int64_t m : mult_a) total += m;
    for (int64_t m : mult_b) total += m;
    if (mult_a.empty() || mult_b.empty()) return total;

    const int na = static_cast<int>(mult_a.size());
    const int nb = static_cast<int>(mult_b.size());
    MaxFlow flow(na + nb + 2);
    const int source = na + nb;
    const int sink = source + 1;
    for (int i = 0; i < na; ++i) flow.add_edge(source, i, mult_a[i]);
    for (int j = 0; j < nb; ++j) flow.add_edge(na + j, sink, mult_b[j]);
    const int64_t inf = std::numeric_limits<int64_t>::max() / 4;
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) {
            if (dist2(pos_a[i], pos_b[j]) > 1.0) flow.add_edge(i, na + j, inf);
        }
    }
    return total - flow.run(source, sink);
}

}  // namespace

int64_t WeightedPointSet::total_weight() const {
    int64_t w = 0;
    for (const auto& p : points) w += p.multiplicity;
    return w;
}

int64_t UnitDiskGraph::weighted_degree(int v) const {
    int64_t d = mult(v) - 1;
    for (int u : adj[v]) d += mult(u);
    return d;
}

UnitDiskGraph build_graph(const WeightedPointSet& ps) {
    for (const auto& p : ps.points) {
        if (p.multiplicity < 1) throw std::invalid_argument("multiplicity < 1");
    }
    UnitDiskGraph g;
    g.vertices = ps;
    const int n = ps.size();
    g.adj.assign(n, {});
    g.adj_dist.assign(n, {});

    auto link = [&](int i, int j) {
        const double d2 = dist2(ps.points[i].pos, ps.points[j].pos);
        if (d2 <= 1.0) {
            const double d = std::sqrt(d2);
            g.adj[i].push_back(j);
            g.adj_dist[i].push_back(d);
            g.adj[j].push_back(i);
            g.adj_dist[j].push_back(d);
        }
    };

    if (n <= 10000) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) link(i, j);
    } else {
        // uniform unit-cell buckets; only the 3x3 cell block can be in range
        std::map<std::pair<int64_t, int64_t>, std::vector<int>> cells;
        auto cell_of = [](Point p) {
            return std::pair<int64_t, int64_t>{
                static_cast<int64_t>(std::floor(p.x)),
                static_cast<int64_t>(std::floor(p.y))};
        };
        for (int i = 0; i < n; ++i) cells[cell_of(ps.points[i].pos)].push_back(i);
        for (int i = 0; i < n; ++i) {
            const auto [cx, cy] = cell_of(ps.points[i].pos);
            for (int64_t dx = -1; dx <= 1; ++dx) {
                for (int64_t dy = -1; dy <= 1; ++dy) {
                    auto it = cells.find({cx + dx, cy + dy});
                    if (it == cells.end()) continue;
                    for (int j : it->second)
                        if (j > i) link(i, j);
                }
            }
        }
    }

    // neighbor lists sorted by id, distances kept aligned
    for (int i = 0; i < n; ++i) {
        std::vector<int> order(g.adj[i].size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return g.adj[i][a] < g.adj[i][b]; });
        std::vector<int> na(order.size());
        std::vector<double> nd(order.size());
        for (size_t k = 0; k < order.size(); ++k) {
            na[k] = g.adj[i][order[k]];
            nd[k] = g.adj_dist[i][order[k]];
        }
        g.adj[i] = std::move(na);
        g.adj_dist[i] = std::move(nd);
    }
    return g;
}

int64_t clique_number(const UnitDiskGraph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    int64_t best = 0;
    for (int v = 0; v < n; ++v) best = std::max(best, g.mult(v));

    std::vector<int64_t> mult_a, mult_b;
    std::vector<Point> pos_a, pos_b;
    for (int u = 0; u < n; ++u) {
        const Point pu = g.pos(u);
        for (size_t k = 0; k < g.adj[u].size(); ++k) {
            const int v = g.adj[u][k];
            if (v <= u) continue;
            const Point pv = g.pos(v);
            const double d2 = dist2(pu, pv);
            // the lens of (u,v) sits inside N(u); split by the uv line,
            // points on the line joining side A
            mult_a.clear(); pos_a.clear();
            mult_b.clear(); pos_b.clear();
            auto consider = [&](int w) {
                const Point pw = g.pos(w);
                if (dist2(pw, pu) > d2 || dist2(pw, pv) > d2) return;
                const double cross = (pv.x - pu.x) * (pw.y - pu.y) -
                                     (pv.y - pu.y) * (pw.x - pu.x);
                if (cross >= 0.0) {
                    mult_a.push_back(g.mult(w));
                    pos_a.push_back(pw);
                } else {
                    mult_b.push_back(g.mult(w));
                    pos_b.push_back(pw);
                }
            };
            consider(u);
            for (int w : g.adj[u]) consider(w);
            best = std::max(best, lens_clique(mult_a, pos_a, mult_b, pos_b));
        }
    }
    return best;
}

int64_t disk_clique_number(const UnitDiskGraph& g) {
    const int n = g.n();
    int64_t best = 0;
    const double r2 = 0.25 + kDiskEps;

    // weight within the closed 1/2-disk at c; everything in it is within
    // distance 1 of the anchor vertex, so its adjacency list suffices
    auto count_at = [&](Point c, int anchor) {
        int64_t w = 0;
        if (dist2(g.pos(anchor), c) <= r2) w += g.mult(anchor);
        for (int u : g.adj[anchor]) {
            if (dist2(g.pos(u), c) <= r2) w += g.mult(u);
        }
        return w;
    };

    for (int v = 0; v < n; ++v) best = std::max(best, count_at(g.pos(v), v));

    for (int u = 0; u < n; ++u) {
        const Point pu = g.pos(u);
        for (size_t k = 0; k < g.adj[u].size(); ++k) {
            const int v = g.adj[u][k];
            if (v <= u) continue;
            const Point pv = g.pos(v);
            const double d2 = dist2(pu, pv);
            if (d2 == 0.0) continue;  // single-point candidate already covers
            const double rad2 = 0.25 - d2 / 4.0;
            const double t = rad2 > 0.0 ? std::sqrt(rad2 / d2) : 0.0;
            const Point mid{(pu.x + pv.x) / 2.0, (pu.y + pv.y) / 2.0};
            const Point perp{-(pv.y - pu.y) * t, (pv.x - pu.x) * t};
            best = std::max(best, count_at({mid.x + perp.x, mid.y + perp.y}, u));
            best = std::max(best, count_at({mid.x - perp.x, mid.y - perp.y}, u));
        }
    }
    return best;
}

DegreeProfile degree_profile(const UnitDiskGraph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("degree_profile: bad id");
    DegreeProfile prof;
    prof.vertex = v;
    std::map<double, int64_t> support;
    if (g.mult(v) > 1) support[0.0] += g.mult(v) - 1;
    for (size_t k = 0; k < g.adj[v].size(); ++k) {
        support[g.adj_dist[v][k]] += g.mult(g.adj[v][k]);
    }
    for (const auto& [r, cnt] : support) {
        prof.x_r.emplace_back(r, cnt);
        prof.degree += cnt;
    }
    return prof;
}

int64_t DegreeProfile::d_r(double r) const {
    int64_t c = 0;
    for (const auto& [d, cnt] : x_r) {
        if (d <= r) c += cnt;
    }
    return c;
}

SlackReport check_reuleaux_inequality(const UnitDiskGraph& g, int64_t omega) {
    SlackReport rep;
    rep.bound = 6.0 * static_cast<double>(omega);
    for (int v = 0; v < g.n(); ++v) {
        double s = 2.0 * static_cast<double>(g.mult(v) - 1);
        for (size_t k = 0; k < g.adj[v].size(); ++k) {
            s += static_cast<double>(g.mult(g.adj[v][k])) * (2.0 - g.adj_dist[v][k]);
        }
        if (s > rep.max_value || rep.argmax < 0) {
            rep.max_value = s;
            rep.argmax = v;
        }
        if (s > rep.bound) rep.ok = false;
    }
    return rep;
}

SlackReport check_cor_radius(const UnitDiskGraph& g, int64_t omega, double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("check_cor_radius: r");
    SlackReport rep;
    rep.bound = 6.0 * static_cast<double>(omega);
    for (int v = 0; v < g.n(); ++v) {
        const int64_t d = g.weighted_degree(v);
        int64_t dr = g.mult(v) - 1;
        for (size_t k = 0; k < g.adj[v].size(); ++k) {
            if (g.adj_dist[v][k] <= r) dr += g.mult(g.adj[v][k]);
        }
        const double lhs = static_cast<double>(d) + (1.0 - r) * static_cast<double>(dr);
        if (lhs > rep.max_value || rep.argmax < 0) {
            rep.max_value = lhs;
            rep.argmax = v;
        }
        if (lhs > rep.bound) rep.ok = false;
        if (r == 0.5 && static_cast<double>(dr) > 12.0 * static_cast<double>(omega) -
                            2.0 * static_cast<double>(d)) {
            rep.ok = false;
        }
    }
    return rep;
}

double average_degree(const UnitDiskGraph& g) {
    if (g.n() == 0) throw std::invalid_argument("average_degree: empty graph");
    long double num = 0, den = 0;
    for (int v = 0; v < g.n(); ++v) {
        num += static_cast<long double>(g.mult(v)) *
               static_cast<long double>(g.weighted_degree(v));
        den += static_cast<long double>(g.mult(v));
    }
    return static_cast<double>(num / den);
}

}  // namespace udgc
