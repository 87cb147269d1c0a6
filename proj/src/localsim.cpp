#include "udgc/localsim.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace udgc {
namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(uint64_t seed, uint64_t node_id) {
    state_ = splitmix64(splitmix64(seed) ^ splitmix64(node_id * 0x9E3779B97F4A7C15ULL));
}

uint64_t Rng::next() {
    // splitmix64 stream: portable and byte-identical everywhere
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int64_t Rng::uniform_int(int64_t lo, int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<int64_t>(next());  // full 64-bit span
    uint64_t mask = ~0ULL;
    if ((range & (range - 1)) == 0) {
        return lo + static_cast<int64_t>(next() & (range - 1));
    }
    mask >>= __builtin_clzll(range - 1 | 1);
    uint64_t v;
    do {
        v = next() & mask;
    } while (v >= range);
    return lo + static_cast<int64_t>(v);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

// Seeded n-subset of {1..n^2} (Floyd's sampling), randomly assigned.
std::vector<int64_t> assign_ids(int n, uint64_t seed, bool input_order) {
    std::vector<int64_t> ids(n);
    if (input_order) {
        for (int i = 0; i < n; ++i) ids[i] = i + 1;
        return ids;
    }
    Rng rng(seed, 0x1D5EEDULL);
    const int64_t space = static_cast<int64_t>(n) * n;
    std::set<int64_t> chosen;
    for (int64_t j = space - n + 1; j <= space; ++j) {
        const int64_t t = rng.uniform_int(1, j);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<int64_t> pool(chosen.begin(), chosen.end());
    for (int i = n - 1; i > 0; --i) {
        std::swap(pool[i], pool[rng.uniform_int(0, i)]);
    }
    for (int i = 0; i < n; ++i) ids[i] = pool[i];
    return ids;
}

}  // namespace

RoundTrace run(const UnitDiskGraph& g, const ProgramFactory& make_program,
               const SimOptions& opt) {
    if (opt.round_cap < 1) throw std::invalid_argument("round_cap < 1");
    const int n = g.n();
    const std::vector<int64_t> ids = assign_ids(n, opt.seed, opt.ids_input_order);

    // adjacency slots ordered by neighbor LOCAL id
    std::vector<std::vector<int>> slots(n);  // slot -> neighbor vertex
    for (int v = 0; v < n; ++v) {
        slots[v] = g.adj[v];
        std::sort(slots[v].begin(), slots[v].end(),
                  [&](int a, int b) { return ids[a] < ids[b]; });
    }
    // reverse map: slot_of[v][u] = index of u in slots[v]
    std::vector<std::map<int, int>> slot_of(n);
    for (int v = 0; v < n; ++v) {
        for (size_t s = 0; s < slots[v].size(); ++s) slot_of[v][slots[v][s]] = static_cast<int>(s);
    }

    std::vector<std::unique_ptr<NodeProgram>> prog(n);
    std::vector<Rng> rng;
    rng.reserve(n);
    std::vector<int> finish_round(n, -1);

    for (int v = 0; v < n; ++v) {
        prog[v] = make_program();
        NodeInfo info;
        info.id = ids[v];
        info.degree = static_cast<int>(slots[v].size());
        if (opt.mode == SimMode::kLocationAware) info.position = g.pos(v);
        std::vector<int64_t> nbr_ids(slots[v].size());
        for (size_t s = 0; s < slots[v].size(); ++s) nbr_ids[s] = ids[slots[v][s]];
        rng.emplace_back(opt.seed, static_cast<uint64_t>(ids[v]));
        prog[v]->initialize(info, nbr_ids, rng[v]);
        if (prog[v]->finished()) finish_round[v] = 0;
    }

    RoundTrace trace;
    int round = 0;
    while (round < opt.round_cap) {
        bool all_done = true;
        for (int v = 0; v < n; ++v) {
            if (finish_round[v] < 0) { all_done = false; break; }
        }
        if (all_done) break;
        ++round;

        // send phase: all outboxes computed from pre-round states
        std::vector<Outbox> out;
        out.reserve(n);
        int64_t delivered = 0;
        size_t max_bytes = 0;
        for (int v = 0; v < n; ++v) {
            out.emplace_back(static_cast<int>(slots[v].size()));
            if (finish_round[v] >= 0) continue;
            prog[v]->send(round, out[v], rng[v]);
            if (out[v].broadcast_msg()) {
                max_bytes = std::max(max_bytes, out[v].broadcast_msg()->dump().size());
                delivered += static_cast<int64_t>(slots[v].size());
            }
            for (size_t s = 0; s < slots[v].size(); ++s) {
                if (out[v].slot_msg(static_cast<int>(s))) {
                    max_bytes = std::max(
                        max_bytes, out[v].slot_msg(static_cast<int>(s))->dump().size());
                    ++delivered;
                }
            }
        }
        trace.messages_per_round.push_back(delivered);
        trace.max_message_bytes_per_round.push_back(max_bytes);

        // receive phase
        for (int v = 0; v < n; ++v) {
            if (finish_round[v] >= 0) continue;
            Inbox in(static_cast<int>(slots[v].size()));
            for (size_t s = 0; s < slots[v].size(); ++s) {
                const int u = slots[v][s];
                if (finish_round[u] >= 0 && finish_round[u] < round) continue;
                const int slot_in_u = slot_of[u].at(v);
                if (out[u].slot_msg(slot_in_u)) {
                    in.put(static_cast<int>(s), *out[u].slot_msg(slot_in_u));
                } else if (out[u].broadcast_msg()) {
                    in.put(static_cast<int>(s), *out[u].broadcast_msg());
                }
            }
            prog[v]->receive(round, in, rng[v]);
            if (prog[v]->finished()) finish_round[v] = round;
        }
    }

    trace.rounds_executed = round;
    trace.outputs.resize(n);
    for (int v = 0; v < n; ++v) {
        if (finish_round[v] < 0) trace.cap_exceeded = true;
        trace.outputs[v] = {v, ids[v], prog[v]->output(), finish_round[v]};
    }
    return trace;
}

std::string RoundTrace::to_text() const {
    std::vector<const NodeResult*> order;
    order.reserve(outputs.size());
    for (const auto& r : outputs) order.push_back(&r);
    std::sort(order.begin(), order.end(), [](const NodeResult* a, const NodeResult* b) {
        return a->local_id < b->local_id;
    });
    std::ostringstream os;
    os << "rounds " << rounds_executed << " cap_exceeded " << (cap_exceeded ? 1 : 0)
       << "\n";
    for (const auto* r : order) {
        os << r->local_id << " " << r->finish_round << " " << r->output.dump() << "\n";
    }
    return os.str();
}

namespace {

// Flooding program; see header. Knowledge is (id -> position) plus an edge
// set; both are broadcast whole every round.
class GatherProgram : public NodeProgram {
  public:
    explicit GatherProgram(std::function<std::string(const NodeInfo&)> key_fn)
        : key_fn_(std::move(key_fn)) {}

    void initialize(const NodeInfo& info, const std::vector<int64_t>&, Rng&) override {
        my_id_ = info.id;
        degree_ = info.degree;
        if (key_fn_) key_ = key_fn_(info);
        double x = 0, y = 0;
        if (info.position) { x = info.position->x; y = info.position->y; }
        has_pos_ = info.position.has_value();
        vertices_[my_id_] = {x, y};
        changed_last_ = true;
    }

    void send(int, Outbox& out, Rng&) override {
        Message m;
        m["s"] = my_id_;
        if (key_fn_) m["k"] = key_;
        auto& vs = m["v"] = Message::array();
        for (const auto& [id, p] : vertices_) {
            if (has_pos_) vs.push_back({id, p.first, p.second});
            else vs.push_back({id});
        }
        auto& es = m["e"] = Message::array();
        for (const auto& [a, b] : edges_) es.push_back({a, b});
        out.broadcast(std::move(m));
    }

    void receive(int, const Inbox& in, Rng&) override {
        bool changed = false;
        for (int s = 0; s < degree_; ++s) {
            const Message* m = in.from(s);
            if (!m) continue;
            if (key_fn_ && (*m)["k"].get<std::string>() != key_) continue;
            const int64_t sender = (*m)["s"].get<int64_t>();
            changed |= edges_.insert(ordered(my_id_, sender)).second;
            for (const auto& rec : (*m)["v"]) {
                const int64_t id = rec[0].get<int64_t>();
                if (!vertices_.count(id)) {
                    if (has_pos_) vertices_[id] = {rec[1].get<double>(), rec[2].get<double>()};
                    else vertices_[id] = {0, 0};
                    changed = true;
                }
            }
            for (const auto& e : (*m)["e"]) {
                changed |= edges_
                               .insert(ordered(e[0].get<int64_t>(), e[1].get<int64_t>()))
                               .second;
            }
        }
        changed_last_ = changed;
    }

    bool finished() const override { return false; }  // keep forwarding

    Message output() const override {
        Message out;
        auto& vs = out["vertices"] = Message::array();
        for (const auto& [id, p] : vertices_) {
            if (has_pos_) vs.push_back({id, p.first, p.second});
            else vs.push_back({id});
        }
        auto& es = out["edges"] = Message::array();
        for (const auto& [a, b] : edges_) es.push_back({a, b});
        out["changed_last_round"] = changed_last_;
        return out;
    }

  private:
    static std::pair<int64_t, int64_t> ordered(int64_t a, int64_t b) {
        return a < b ? std::pair{a, b} : std::pair{b, a};
    }

    std::function<std::string(const NodeInfo&)> key_fn_;
    std::string key_;
    int64_t my_id_ = 0;
    int degree_ = 0;
    bool has_pos_ = false;
    std::map<int64_t, std::pair<double, double>> vertices_;
    std::set<std::pair<int64_t, int64_t>> edges_;
    bool changed_last_ = false;
};

}  // namespace

ProgramFactory gather_component(std::function<std::string(const NodeInfo&)> part_key_of) {
    return [part_key_of]() { return std::make_unique<GatherProgram>(part_key_of); };
}

bool gather_stabilized(const RoundTrace& trace) {
    for (const auto& r : trace.outputs) {
        if (r.output.is_object() && r.output.value("changed_last_round", false)) {
            return false;
        }
    }
    return true;
}

}  // namespace udgc
