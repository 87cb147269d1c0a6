#include "udgc/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "udgc/matching.hpp"

namespace udgc {
namespace {

const double kStripHeight = std::sqrt(3.0) / 2.0;

void require_unit_multiplicities(const UnitDiskGraph& g, const char* who) {
    for (int v = 0; v < g.n(); ++v) {
        if (g.mult(v) != 1) {
            throw std::invalid_argument(std::string(who) +
                                        ": a per-id Coloring cannot express "
                                        "multiplicities > 1");
        }
    }
}

struct StripVertex {
    Point p;
    int id;
    int orig;  // position in the caller's arrays
};

std::vector<StripVertex> canonical_strip_order(const std::vector<Point>& pts,
                                               const std::vector<int>& ids) {
    if (pts.size() != ids.size()) {
        throw std::invalid_argument("strip coloring: points/ids size mismatch");
    }
    if (!pts.empty()) {
        double ymin = pts[0].y, ymax = pts[0].y;
        for (const Point& p : pts) {
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
        const double span = ymax - ymin;
        if (span * span > 0.75) {
            throw std::invalid_argument("strip coloring: y-span exceeds sqrt(3)/2");
        }
    }
    std::vector<StripVertex> v(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) v[i] = {pts[i], ids[i], static_cast<int>(i)};
    std::sort(v.begin(), v.end(), [](const StripVertex& a, const StripVertex& b) {
        if (a.p.x != b.p.x) return a.p.x < b.p.x;
        if (a.p.y != b.p.y) return a.p.y < b.p.y;
        return a.id < b.id;
    });
    return v;
}

// Leftmost-first greedy on the canonical order; returns colors (input order)
// and the count used. Not always omega -- callers needing exactness use the
// chain cover below.
std::vector<int> strip_plain_greedy(const std::vector<StripVertex>& order,
                                    int* colors_used) {
    const int k = static_cast<int>(order.size());
    std::vector<int> color_by_rank(k, -1);
    int used = 0;
    std::vector<char> taken;
    for (int i = 0; i < k; ++i) {
        taken.assign(used + 1, 0);
        for (int j = i - 1; j >= 0; --j) {
            if (order[i].p.x - order[j].p.x > 1.0) break;
            if (dist2(order[i].p, order[j].p) <= 1.0) taken[color_by_rank[j]] = 1;
        }
        int c = 0;
        while (taken[c]) ++c;
        color_by_rank[i] = c;
        used = std::max(used, c + 1);
    }
    std::vector<int> out(k);
    for (int i = 0; i < k; ++i) out[order[i].orig] = color_by_rank[i];
    if (colors_used) *colors_used = used;
    return out;
}

}  // namespace

StripColoring strip_greedy(const std::vector<Point>& pts, const std::vector<int>& ids) {
    const auto order = canonical_strip_order(pts, ids);
    const int k = static_cast<int>(order.size());
    StripColoring result;
    result.colors.assign(k, 0);
    if (k == 0) return result;

    // Co-comparability chains: rank a < rank b comparable iff dist > 1.
    // Min chain cover via unit bipartite matching; chains = color classes.
    MaxFlow flow(2 * k + 2);
    const int source = 2 * k;
    const int sink = 2 * k + 1;
    for (int i = 0; i < k; ++i) {
        flow.add_edge(source, i, 1);
        flow.add_edge(k + i, sink, 1);
    }
    std::vector<std::pair<std::pair<int, int>, int>> pair_edges;  // ((a,b), edge idx)
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (dist2(order[a].p, order[b].p) > 1.0) {
                pair_edges.push_back({{a, b}, flow.add_edge(a, k + b, 1)});
            }
        }
    }
    const int64_t matched = flow.run(source, sink);
    result.omega = k - matched;

    std::vector<int> next(k, -1), prev(k, -1);
    for (const auto& [ab, idx] : pair_edges) {
        if (flow.flow_on(idx) == 1) {
            next[ab.first] = ab.second;
            prev[ab.second] = ab.first;
        }
    }
    int c = 0;
    for (int a = 0; a < k; ++a) {
        if (prev[a] >= 0) continue;
        for (int x = a; x >= 0; x = next[x]) result.colors[order[x].orig] = c;
        ++c;
    }
    // c == k - matched == omega by Dilworth
    return result;
}

std::vector<int> strip_color_capped(const std::vector<Point>& pts,
                                    const std::vector<int>& ids, int64_t cap) {
    const auto order = canonical_strip_order(pts, ids);
    int used = 0;
    std::vector<int> greedy = strip_plain_greedy(order, &used);
    if (used <= cap) return greedy;
    return strip_greedy(pts, ids).colors;
}

// ---- stripe decomposition ---------------------------------------------------

std::string StripeDecomposition::part_key() const {
    std::ostringstream os;
    os << (kind == kRectangle ? 'R' : 'S') << ':' << stripe << ':' << index;
    return os.str();
}

StripeDecomposition stripe_tag(Point p) {
    StripeDecomposition tag;
    tag.stripe = static_cast<int64_t>(std::floor(p.y / kStripHeight)) + 1;
    const double offset = std::fmod(2.2 * static_cast<double>(tag.stripe), 6.0);
    const double u = p.x - offset;
    const double m = std::floor(u / 6.0);
    const double t = u - 6.0 * m;
    tag.index = static_cast<int64_t>(m);
    if (t < 1.0) {
        tag.kind = StripeDecomposition::kRectangle;
        tag.cls = 3;
    } else {
        tag.kind = StripeDecomposition::kSegment;
        tag.cls = static_cast<int>(((tag.stripe % 3) + 3) % 3);
    }
    return tag;
}

double stripe_min_part_separation() {
    // Distinct rectangles: same stripe gap 5; across stripes the offsets
    // differ by 2.2*dj mod 6 with vertical gap (dj-1)*h between stripe
    // interiors. Same-class segments sit >= 3 stripes apart or share a stripe
    // with a rectangle strictly between them (gap > 1 by half-openness).
    double best = 5.0;  // same stripe, consecutive rectangles
    for (int dj = 1; dj <= 4; ++dj) {
        const double shift = std::fmod(2.2 * dj, 6.0);
        // rectangle x-intervals [0,1) and [shift, shift+1) on a period-6 circle
        double dx = 0.0;
        if (shift >= 1.0) {
            dx = std::min(shift - 1.0, 6.0 - shift - 1.0);
            dx = std::max(dx, 0.0);
        }
        const double dy = (dj - 1) * kStripHeight;
        best = std::min(best, std::sqrt(dx * dx + dy * dy));
    }
    return best;
}

// ---- color_4omega -----------------------------------------------------------

SimulatedColoring color_4omega(const UnitDiskGraph& g, int64_t omega, uint64_t seed) {
    require_unit_multiplicities(g, "color_4omega");
    if (omega < 1) throw std::invalid_argument("color_4omega: omega < 1");
    if (stripe_min_part_separation() <= 1.0) {
        throw std::logic_error("stripe grid separation violated");
    }

    SimOptions opt;
    opt.mode = SimMode::kLocationAware;
    opt.seed = seed;
    opt.round_cap = 24;
    auto key_fn = [](const NodeInfo& info) { return stripe_tag(*info.position).part_key(); };

    SimulatedColoring result;
    result.trace = run(g, gather_component(key_fn), opt);
    if (!gather_stabilized(result.trace)) {
        result.failed = true;
        result.failure = "part-component gather did not stabilize within the cap";
    }

    // Each node colors its own gathered part; identical views give identical
    // colorings, so cache by the serialized view.
    std::map<std::string, std::pair<std::map<int64_t, int>, int64_t>> cache;
    result.coloring.palette_size = static_cast<int>(4 * omega);
    for (int v = 0; v < g.n(); ++v) {
        const auto& out = result.trace.outputs[v];
        const std::string key = out.output["vertices"].dump();
        auto it = cache.find(key);
        if (it == cache.end()) {
            std::vector<Point> pts;
            std::vector<int> ids;
            std::vector<int64_t> local_ids;
            for (const auto& rec : out.output["vertices"]) {
                local_ids.push_back(rec[0].get<int64_t>());
                pts.push_back({rec[1].get<double>(), rec[2].get<double>()});
            }
            // ids fed to the strip order must fit int; rank by local id
            std::vector<int64_t> sorted_ids = local_ids;
            std::sort(sorted_ids.begin(), sorted_ids.end());
            for (int64_t lid : local_ids) {
                ids.push_back(static_cast<int>(
                    std::lower_bound(sorted_ids.begin(), sorted_ids.end(), lid) -
                    sorted_ids.begin()));
            }
            const StripColoring sc = strip_greedy(pts, ids);
            std::map<int64_t, int> by_id;
            for (size_t i = 0; i < local_ids.size(); ++i) by_id[local_ids[i]] = sc.colors[i];
            it = cache.emplace(key, std::pair{std::move(by_id), sc.omega}).first;
        }
        if (it->second.second > omega) {
            result.failed = true;
            result.failure = "part-component needed more than omega colors";
        }
        const StripeDecomposition tag = stripe_tag(g.pos(v));
        const int cls = tag.kind == StripeDecomposition::kRectangle ? 3 : tag.cls;
        result.coloring.color[v] =
            static_cast<int>(cls * omega) + it->second.first.at(out.local_id);
    }
    return result;
}

// ---- fractional coloring ----------------------------------------------------

bool RegionSystem::covers(int64_t i, Point p) const {
    const double px = 1.0 + 1.0 / eps;
    const double py = 1.0 + kStripHeight;
    const double frac = static_cast<double>(i) / static_cast<double>(r);
    const double ux = p.x - frac * px;
    const double uy = p.y - frac * py;
    const double mx = ux - px * std::floor(ux / px);
    const double my = uy - py * std::floor(uy / py);
    return mx > 0.0 && mx <= 1.0 / eps && my > 0.0 && my <= kStripHeight;
}

std::pair<int64_t, int64_t> RegionSystem::cell(int64_t i, Point p) const {
    const double px = 1.0 + 1.0 / eps;
    const double py = 1.0 + kStripHeight;
    const double frac = static_cast<double>(i) / static_cast<double>(r);
    return {static_cast<int64_t>(std::floor((p.x - frac * px) / px)),
            static_cast<int64_t>(std::floor((p.y - frac * py) / py))};
}

namespace {

// Connected components (dist <= 1) of one rectangle's vertex list, discovered
// on the x-sorted order so the result is canonical.
std::vector<std::vector<int>> split_components(const std::vector<Point>& pts) {
    const int k = static_cast<int>(pts.size());
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
        return pts[a].y < pts[b].y;
    });
    std::vector<int> comp(k, -1);
    int nc = 0;
    for (int s = 0; s < k; ++s) {
        if (comp[order[s]] >= 0) continue;
        std::vector<int> stack{order[s]};
        comp[order[s]] = nc;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < k; ++u) {
                if (comp[u] < 0 && dist2(pts[v], pts[u]) <= 1.0) {
                    comp[u] = nc;
                    stack.push_back(u);
                }
            }
        }
        ++nc;
    }
    std::vector<std::vector<int>> groups(nc);
    for (int i : order) groups[comp[i]].push_back(i);
    return groups;
}

// One rectangle of one system: color each component with <= omega colors.
void color_rectangle(const std::vector<Point>& pts, const std::vector<int>& ids,
                     int64_t omega, std::vector<int>* colors) {
    colors->assign(pts.size(), -1);
    for (const auto& group : split_components(pts)) {
        std::vector<Point> gp;
        std::vector<int> gi;
        for (int i : group) {
            gp.push_back(pts[i]);
            gi.push_back(ids[i]);
        }
        const std::vector<int> gc = strip_color_capped(gp, gi, omega);
        for (size_t t = 0; t < group.size(); ++t) (*colors)[group[t]] = gc[t];
    }
}

class FractionalProgram : public NodeProgram {
  public:
    FractionalProgram(const RegionSystem& sys, int64_t omega)
        : sys_(sys), omega_(omega) {}

    void initialize(const NodeInfo& info, const std::vector<int64_t>&, Rng&) override {
        id_ = info.id;
        degree_ = info.degree;
        pos_ = *info.position;
        for (int64_t i = 0; i < sys_.r; ++i) {
            if (sys_.covers(i, pos_)) {
                auto& st = systems_[i];
                st.cell = sys_.cell(i, pos_);
                st.known[id_] = pos_;
            }
        }
        changed_last_ = true;
    }

    void send(int, Outbox& out, Rng&) override {
        Message m;
        m["s"] = id_;
        auto& sys = m["sys"] = Message::object();
        for (const auto& [i, st] : systems_) {
            Message entry;
            entry["cell"] = {st.cell.first, st.cell.second};
            auto& vs = entry["v"] = Message::array();
            for (const auto& [vid, p] : st.known) vs.push_back({vid, p.x, p.y});
            sys[std::to_string(i)] = std::move(entry);
        }
        out.broadcast(std::move(m));
    }

    void receive(int, const Inbox& in, Rng&) override {
        bool changed = false;
        for (int s = 0; s < degree_; ++s) {
            const Message* m = in.from(s);
            if (!m) continue;
            for (auto& [i, st] : systems_) {
                auto it = (*m)["sys"].find(std::to_string(i));
                if (it == (*m)["sys"].end()) continue;
                const auto cell = (*it)["cell"];
                if (cell[0].get<int64_t>() != st.cell.first ||
                    cell[1].get<int64_t>() != st.cell.second) {
                    continue;
                }
                for (const auto& rec : (*it)["v"]) {
                    const int64_t vid = rec[0].get<int64_t>();
                    if (!st.known.count(vid)) {
                        st.known[vid] = {rec[1].get<double>(), rec[2].get<double>()};
                        changed = true;
                    }
                }
            }
        }
        changed_last_ = changed;
    }

    bool finished() const override { return false; }

    Message output() const override {
        Message out;
        out["changed_last_round"] = changed_last_;
        auto& cover = out["cover"] = Message::array();
        auto& colors = out["colors"] = Message::object();
        for (const auto& [i, st] : systems_) {
            cover.push_back(i);
            std::vector<Point> pts;
            std::vector<int> ids;
            std::vector<int64_t> lids;
            for (const auto& [vid, p] : st.known) {
                lids.push_back(vid);
                pts.push_back(p);
            }
            for (int64_t vid : lids) {
                ids.push_back(static_cast<int>(
                    std::lower_bound(lids.begin(), lids.end(), vid) - lids.begin()));
            }
            std::vector<int> cs;
            color_rectangle(pts, ids, omega_, &cs);
            for (size_t t = 0; t < lids.size(); ++t) {
                if (lids[t] == id_) colors[std::to_string(i)] = cs[t];
            }
        }
        return out;
    }

  private:
    struct SystemState {
        std::pair<int64_t, int64_t> cell;
        std::map<int64_t, Point> known;  // keyed by id: canonical & sorted
    };
    RegionSystem sys_;
    int64_t omega_;
    int64_t id_ = 0;
    int degree_ = 0;
    Point pos_;
    std::map<int64_t, SystemState> systems_;
    bool changed_last_ = false;
};

}  // namespace

FractionalResult color_fractional(const UnitDiskGraph& g, int64_t omega, int64_t r,
                                  double eps, FractionalMode mode, uint64_t seed) {
    require_unit_multiplicities(g, "color_fractional");
    if (omega < 1 || r < 1 || !(eps > 0.0)) {
        throw std::invalid_argument("color_fractional: bad parameters");
    }
    const RegionSystem sys{eps, r};
    const int n = g.n();

    FractionalResult result;
    result.coloring.p = r * omega;

    // q = true minimum coverage, from a direct per-vertex count
    int64_t q = r + 1;
    std::vector<std::vector<int64_t>> covering(n);
    for (int v = 0; v < n; ++v) {
        for (int64_t i = 0; i < r; ++i) {
            if (sys.covers(i, g.pos(v))) covering[v].push_back(i);
        }
        q = std::min(q, static_cast<int64_t>(covering[v].size()));
    }
    if (n == 0) q = 0;
    if (q == 0) {
        result.coloring.q = 0;
        result.feasible = false;
        return result;
    }
    result.coloring.q = q;

    // per-vertex colors per covering system
    std::vector<std::map<int64_t, int64_t>> chosen(n);

    if (mode == FractionalMode::kCentral) {
        for (int64_t i = 0; i < r; ++i) {
            std::map<std::pair<int64_t, int64_t>, std::vector<int>> cells;
            for (int v = 0; v < n; ++v) {
                if (std::binary_search(covering[v].begin(), covering[v].end(), i)) {
                    cells[sys.cell(i, g.pos(v))].push_back(v);
                }
            }
            for (const auto& [cell_key, verts] : cells) {
                std::vector<Point> pts;
                std::vector<int> ids;
                for (int v : verts) {
                    pts.push_back(g.pos(v));
                    ids.push_back(v);
                }
                std::vector<int> cs;
                color_rectangle(pts, ids, omega, &cs);
                for (size_t t = 0; t < verts.size(); ++t) {
                    chosen[verts[t]][i] = i * omega + cs[t];
                }
            }
        }
    } else {
        SimOptions opt;
        opt.mode = SimMode::kLocationAware;
        opt.seed = seed;
        opt.round_cap = static_cast<int>(std::ceil(4.0 / eps)) + 4;
        auto factory = [&]() { return std::make_unique<FractionalProgram>(sys, omega); };
        result.trace = run(g, factory, opt);
        result.stabilized = gather_stabilized(*result.trace);
        for (int v = 0; v < n; ++v) {
            const auto& out = result.trace->outputs[v].output;
            for (const auto& [key, c] : out["colors"].items()) {
                const int64_t i = std::stoll(key);
                chosen[v][i] = i * omega + c.get<int64_t>();
            }
        }
    }

    // keep the q lowest-indexed covering systems of each vertex
    for (int v = 0; v < n; ++v) {
        std::vector<int64_t> set;
        for (const auto& [i, color] : chosen[v]) {
            if (static_cast<int64_t>(set.size()) == q) break;
            set.push_back(color);
        }
        std::sort(set.begin(), set.end());
        result.coloring.sets[v] = std::move(set);
    }
    return result;
}

// ---- randomized list colorings ----------------------------------------------

namespace {

int round_cap_for(int n) {
    int k = 0;
    while ((1LL << k) < n + 2) ++k;  // ceil(log2(n+2))
    return 20 * std::max(k, 1);
}

// Shared proposal loop. With phase1 = true runs the high-degree clique
// pre-coloring (degree exchange, A-set verification, rank colors) before the
// randomized rounds; otherwise lists are {0..d(v)} and proposals start
// immediately.
class ListColorProgram : public NodeProgram {
  public:
    ListColorProgram(bool phase1, int64_t omega) : phase1_(phase1), omega_(omega) {}

    void initialize(const NodeInfo& info, const std::vector<int64_t>&, Rng&) override {
        id_ = info.id;
        degree_ = info.degree;
        nbr_colored_.assign(degree_, false);
        nbr_id_.assign(degree_, 0);
        nbr_is_a_.assign(degree_, false);
        if (phase1_) {
            palette_ = static_cast<int64_t>((568 * omega_ + 99) / 100);  // ceil(5.68w)
            am_a_ = 1000LL * degree_ > 5675LL * omega_;  // d > 5.675w, exact
        } else {
            palette_ = degree_ + 1;
            started_ = true;  // lists need no neighbor knowledge
        }
        for (int64_t c = 0; c < palette_; ++c) list_.push_back(c);
    }

    void send(int round, Outbox& out, Rng& rng) override {
        if (done_) return;
        if (phase1_ && round == 1) {
            out.broadcast({{"t", 0}, {"id", id_}, {"d", degree_}});
            return;
        }
        if (phase1_ && round == 2 && am_a_) {
            Message m{{"t", 1}, {"id", id_}};
            auto& ids = m["ids"] = Message::array();
            for (int s = 0; s < degree_; ++s) {
                if (nbr_is_a_[s]) ids.push_back(nbr_id_[s]);
            }
            out.broadcast(std::move(m));
            return;
        }
        if (phase1_ && round == 3 && am_a_) {
            out.broadcast({{"t", 3}, {"id", id_}, {"c", color_}});
            claimed_ = true;
            return;
        }
        if (!started_ || am_a_) return;
        if (color_ >= 0) {
            if (!claimed_) {
                out.broadcast({{"t", 3}, {"id", id_}, {"c", color_}});
                claimed_ = true;
            }
            return;
        }
        // propose uniformly among the (u+1) smallest list colors, u =
        // currently uncolored neighbors; |L| >= u+1 keeps this total
        int64_t uncolored = 0;
        for (int s = 0; s < degree_; ++s) {
            if (!nbr_colored_[s]) ++uncolored;
        }
        const int64_t pool =
            std::min<int64_t>(uncolored + 1, static_cast<int64_t>(list_.size()));
        proposal_ = list_[rng.uniform_int(0, pool - 1)];
        out.broadcast({{"t", 2}, {"id", id_}, {"c", proposal_}});
    }

    void receive(int round, const Inbox& in, Rng&) override {
        if (phase1_ && round == 1) {
            for (int s = 0; s < degree_; ++s) {
                const Message* m = in.from(s);
                nbr_id_[s] = (*m)["id"].get<int64_t>();
                const int64_t d = (*m)["d"].get<int64_t>();
                nbr_is_a_[s] = 1000LL * d > 5675LL * omega_;
            }
            if (!am_a_) {
                bool any_a = false;
                for (int s = 0; s < degree_; ++s) any_a |= nbr_is_a_[s];
                if (!any_a) started_ = true;  // no one to wait for
            }
            return;
        }

        // claims and proposals seen this round
        std::vector<int64_t> claims;
        std::set<int64_t> conflicting;
        for (int s = 0; s < degree_; ++s) {
            const Message* m = in.from(s);
            if (!m) continue;
            const int t = (*m)["t"].get<int>();
            if (t == 1 && phase1_ && am_a_ && round == 2) {
                a_sets_[(*m)["id"].get<int64_t>()] = (*m)["ids"].get<std::vector<int64_t>>();
            } else if (t == 2) {
                const int64_t c = (*m)["c"].get<int64_t>();
                if (c == proposal_) conflicting.insert(c);
            } else if (t == 3) {
                claims.push_back((*m)["c"].get<int64_t>());
                nbr_colored_[s] = true;
            }
        }

        if (phase1_ && am_a_ && round == 2) {
            // my A-component must be {me} + my A-neighbors, pairwise adjacent
            std::vector<int64_t> mine;
            for (int s = 0; s < degree_; ++s) {
                if (nbr_is_a_[s]) mine.push_back(nbr_id_[s]);
            }
            for (int64_t a : mine) {
                const auto& sa = a_sets_[a];
                for (int64_t b : mine) {
                    if (a != b && !std::count(sa.begin(), sa.end(), b)) clique_ok_ = false;
                }
            }
            std::vector<int64_t> clique = mine;
            clique.push_back(id_);
            std::sort(clique.begin(), clique.end());
            color_ = std::lower_bound(clique.begin(), clique.end(), id_) - clique.begin();
            return;
        }
        if (phase1_ && am_a_ && round == 3) {
            done_ = true;  // claim went out this round
            return;
        }

        for (int64_t c : claims) {
            auto it = std::lower_bound(list_.begin(), list_.end(), c);
            if (it != list_.end() && *it == c) list_.erase(it);
        }
        if (!started_) {
            if (phase1_ && round >= 3) started_ = true;  // A-claims are in
            proposal_ = -1;
            return;
        }
        if (color_ >= 0) {
            if (claimed_) done_ = true;
            return;
        }
        if (proposal_ >= 0 && !conflicting.count(proposal_) &&
            !std::count(claims.begin(), claims.end(), proposal_)) {
            color_ = proposal_;
        }
        proposal_ = -1;
    }

    bool finished() const override { return done_; }

    Message output() const override {
        return Message{{"A", am_a_}, {"c", color_}, {"ok", clique_ok_}};
    }

  private:
    bool phase1_;
    int64_t omega_;
    int64_t id_ = 0;
    int degree_ = 0;
    int64_t palette_ = 0;
    bool am_a_ = false;
    bool started_ = false;
    bool claimed_ = false;
    bool done_ = false;
    bool clique_ok_ = true;
    int64_t color_ = -1;
    int64_t proposal_ = -1;
    std::vector<int64_t> list_;
    std::vector<bool> nbr_colored_;
    std::vector<int64_t> nbr_id_;
    std::vector<bool> nbr_is_a_;
    std::map<int64_t, std::vector<int64_t>> a_sets_;
};

}  // namespace

Sim568Result color_568(const UnitDiskGraph& g, int64_t omega, uint64_t seed) {
    require_unit_multiplicities(g, "color_568");
    if (omega < 1) throw std::invalid_argument("color_568: omega < 1");
    Sim568Result result;
    SimOptions opt;
    opt.mode = SimMode::kAbstract;
    opt.seed = seed;
    opt.round_cap = round_cap_for(g.n());
    auto factory = [&]() { return std::make_unique<ListColorProgram>(true, omega); };
    result.trace = run(g, factory, opt);

    result.coloring.palette_size = static_cast<int>((568 * omega + 99) / 100);
    for (int v = 0; v < g.n(); ++v) {
        const auto& out = result.trace.outputs[v].output;
        result.coloring.color[v] = out["c"].get<int>();
        if (out["A"].get<bool>()) result.a_vertices.push_back(v);
        if (!out["ok"].get<bool>()) result.a_components_are_cliques = false;
    }
    if (result.trace.cap_exceeded) {
        result.failed = true;
        result.failure = "round cap exceeded";
    }
    if (!result.a_components_are_cliques) {
        result.failed = true;
        result.failure = "an A-component is not a clique";
    }
    return result;
}

SimulatedColoring color_greedy_baseline(const UnitDiskGraph& g, uint64_t seed) {
    require_unit_multiplicities(g, "color_greedy_baseline");
    SimulatedColoring result;
    SimOptions opt;
    opt.mode = SimMode::kAbstract;
    opt.seed = seed;
    opt.round_cap = round_cap_for(g.n());
    auto factory = [&]() { return std::make_unique<ListColorProgram>(false, 1); };
    result.trace = run(g, factory, opt);

    int delta = 0;
    for (int v = 0; v < g.n(); ++v) delta = std::max(delta, static_cast<int>(g.adj[v].size()));
    result.coloring.palette_size = delta + 1;
    for (int v = 0; v < g.n(); ++v) {
        result.coloring.color[v] = result.trace.outputs[v].output["c"].get<int>();
    }
    if (result.trace.cap_exceeded) {
        result.failed = true;
        result.failure = "round cap exceeded";
    }
    return result;
}

// ---- validation ---------------------------------------------------------------

ValidationReport validate(const UnitDiskGraph& g, const Coloring& c) {
    ValidationReport rep;
    for (int v = 0; v < g.n(); ++v) {
        if (g.mult(v) != 1) {
            rep.ok = false;
            rep.violation = "multiplicity > 1 not expressible in a per-id coloring";
            return rep;
        }
        auto it = c.color.find(v);
        if (it == c.color.end()) {
            rep.ok = false;
            rep.violation = "vertex " + std::to_string(v) + " uncolored";
            return rep;
        }
        if (it->second < 0 || it->second >= c.palette_size) {
            rep.ok = false;
            rep.violation = "vertex " + std::to_string(v) + " color outside palette";
            return rep;
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        for (int u : g.adj[v]) {
            if (u > v && c.color.at(u) == c.color.at(v)) {
                rep.ok = false;
                rep.violation = "adjacent vertices share a color";
                rep.edge_u = v;
                rep.edge_v = u;
                return rep;
            }
        }
    }
    return rep;
}

ValidationReport validate(const UnitDiskGraph& g, const FractionalColoring& c) {
    ValidationReport rep;
    if (c.q < 1) {
        rep.ok = false;
        rep.violation = "q < 1";
        return rep;
    }
    for (int v = 0; v < g.n(); ++v) {
        auto it = c.sets.find(v);
        if (it == c.sets.end() || static_cast<int64_t>(it->second.size()) != c.q) {
            rep.ok = false;
            rep.violation = "vertex " + std::to_string(v) + " set size != q";
            return rep;
        }
        const auto& s = it->second;
        for (size_t k = 0; k < s.size(); ++k) {
            if (s[k] < 0 || s[k] >= c.p || (k > 0 && s[k] <= s[k - 1])) {
                rep.ok = false;
                rep.violation = "vertex " + std::to_string(v) + " set not a sorted subset of [0,p)";
                return rep;
            }
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        for (int u : g.adj[v]) {
            if (u <= v) continue;
            const auto& a = c.sets.at(v);
            const auto& b = c.sets.at(u);
            size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) {
                    rep.ok = false;
                    rep.violation = "adjacent vertices share a fractional color";
                    rep.edge_u = v;
                    rep.edge_v = u;
                    return rep;
                }
                if (a[i] < b[j]) ++i; else ++j;
            }
        }
    }
    return rep;
}

}  // namespace udgc
