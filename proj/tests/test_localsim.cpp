#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "udgc/io.hpp"
#include "udgc/localsim.hpp"
#include "udgc/udg.hpp"

using namespace udgc;

namespace {

WeightedPointSet make_set(std::vector<Point> pts) {
    WeightedPointSet ps;
    for (size_t i = 0; i < pts.size(); ++i)
        ps.points.push_back({static_cast<int>(i), pts[i], 1});
    return ps;
}

// Horizontal path with unit spacing: 0 - 1 - ... - (k-1).
WeightedPointSet path(int k) {
    std::vector<Point> pts;
    for (int i = 0; i < k; ++i) pts.push_back({static_cast<double>(i), 0.0});
    return make_set(pts);
}

std::vector<int> hop_distances(const UnitDiskGraph& g, int src) {
    std::vector<int> d(g.n(), -1);
    std::queue<int> q;
    d[src] = 0;
    q.push(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : g.adj[v]) {
            if (d[u] < 0) {
                d[u] = d[v] + 1;
                q.push(u);
            }
        }
    }
    return d;
}

// Finishes at initialization; output is the node's own LOCAL id.
class IdProgram : public NodeProgram {
  public:
    void initialize(const NodeInfo& info, const std::vector<int64_t>&,
                    Rng&) override {
        id_ = info.id;
        had_pos_ = info.position.has_value();
    }
    void send(int, Outbox&, Rng&) override {}
    void receive(int, const Inbox&, Rng&) override {}
    bool finished() const override { return true; }
    Message output() const override { return {{"id", id_}, {"pos", had_pos_}}; }

  private:
    int64_t id_ = 0;
    bool had_pos_ = false;
};

// Broadcasts every round; the node with the locally smallest id finishes
// after round 1, everyone else after round 3. Records which rounds delivered
// anything.
class PingProgram : public NodeProgram {
  public:
    void initialize(const NodeInfo& info, const std::vector<int64_t>& nbrs,
                    Rng&) override {
        degree_ = info.degree;
        bool smallest = true;
        for (int64_t u : nbrs) smallest = smallest && info.id < u;
        stop_ = smallest ? 1 : 3;
    }
    void send(int, Outbox& out, Rng&) override { out.broadcast({{"ping", 1}}); }
    void receive(int round, const Inbox& in, Rng&) override {
        for (int s = 0; s < degree_; ++s) {
            if (in.from(s)) {
                heard_.push_back(round);
                break;
            }
        }
        done_ = round >= stop_;
    }
    bool finished() const override { return done_; }
    Message output() const override { return {{"heard", heard_}}; }

  private:
    int degree_ = 0;
    int stop_ = 1;
    bool done_ = false;
    std::vector<int> heard_;
};

// One round: broadcast a "b" tag and send an "s" tag to slot 0; record what
// arrived on each slot. Exercises slot addressing and slot-over-broadcast
// precedence.
class SlotProgram : public NodeProgram {
  public:
    void initialize(const NodeInfo& info, const std::vector<int64_t>&,
                    Rng&) override {
        id_ = info.id;
        degree_ = info.degree;
    }
    void send(int, Outbox& out, Rng&) override {
        out.broadcast({{"t", "b"}, {"id", id_}});
        if (degree_ > 0) out.to(0, {{"t", "s"}, {"id", id_}});
    }
    void receive(int, const Inbox& in, Rng&) override {
        for (int s = 0; s < degree_; ++s) {
            if (const Message* m = in.from(s)) {
                got_.push_back({(*m)["t"].get<std::string>(),
                                (*m)["id"].get<int64_t>()});
            }
        }
        done_ = true;
    }
    bool finished() const override { return done_; }
    Message output() const override {
        Message m = Message::array();
        for (const auto& [t, id] : got_) m.push_back({t, id});
        return m;
    }

  private:
    int64_t id_ = 0;
    int degree_ = 0;
    bool done_ = false;
    std::vector<std::pair<std::string, int64_t>> got_;
};

template <class P>
ProgramFactory factory() {
    return []() { return std::make_unique<P>(); };
}

}  // namespace

TEST_CASE("Rng is deterministic and in range") {
    Rng a(12, 34), b(12, 34);
    for (int i = 0; i < 1000; ++i) REQUIRE(a.next() == b.next());

    Rng c(12, 35);
    CHECK(Rng(12, 34).next() != c.next());  // distinct streams

    Rng r(7, 7);
    std::set<int64_t> seen;
    for (int i = 0; i < 600; ++i) {
        const int64_t v = r.uniform_int(0, 5);
        REQUIRE(v >= 0);
        REQUIRE(v <= 5);
        seen.insert(v);
    }
    CHECK(seen.size() == 6);  // all values hit
    CHECK(r.uniform_int(3, 3) == 3);
    CHECK_THROWS_AS(r.uniform_int(2, 1), std::invalid_argument);
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("id assignment: unique sample of [1, n^2]") {
    const auto g = build_graph(gen_uniform_box(50, 10, 10, 5));
    SimOptions opt;
    opt.round_cap = 1;

    SUBCASE("random ids") {
        opt.seed = 1;
        const auto tr = run(g, factory<IdProgram>(), opt);
        std::set<int64_t> ids;
        for (const auto& r : tr.outputs) {
            REQUIRE(r.local_id >= 1);
            REQUIRE(r.local_id <= 50 * 50);
            ids.insert(r.local_id);
            CHECK(r.output["id"].get<int64_t>() == r.local_id);
        }
        CHECK(ids.size() == 50);

        // same seed reproduces, different seed reassigns
        const auto tr2 = run(g, factory<IdProgram>(), opt);
        opt.seed = 2;
        const auto tr3 = run(g, factory<IdProgram>(), opt);
        CHECK(tr.to_text() == tr2.to_text());
        bool any_diff = false;
        for (int v = 0; v < g.n(); ++v)
            any_diff = any_diff || tr.outputs[v].local_id != tr3.outputs[v].local_id;
        CHECK(any_diff);
    }
    SUBCASE("input-order ids") {
        opt.ids_input_order = true;
        const auto tr = run(g, factory<IdProgram>(), opt);
        for (int v = 0; v < g.n(); ++v)
            REQUIRE(tr.outputs[v].local_id == v + 1);
    }
}

TEST_CASE("nodes finished at initialization run zero rounds") {
    const auto g = build_graph(path(3));
    SimOptions opt;
    opt.round_cap = 10;
    const auto tr = run(g, factory<IdProgram>(), opt);
    CHECK(tr.rounds_executed == 0);
    CHECK_FALSE(tr.cap_exceeded);
    CHECK(tr.messages_per_round.empty());
    for (const auto& r : tr.outputs) CHECK(r.finish_round == 0);
}

TEST_CASE("position is exposed only in location-aware mode") {
    const auto g = build_graph(path(2));
    SimOptions opt;
    opt.round_cap = 1;
    const auto abs = run(g, factory<IdProgram>(), opt);
    for (const auto& r : abs.outputs) CHECK_FALSE(r.output["pos"].get<bool>());
    opt.mode = SimMode::kLocationAware;
    const auto loc = run(g, factory<IdProgram>(), opt);
    for (const auto& r : loc.outputs) CHECK(r.output["pos"].get<bool>());
}

TEST_CASE("finished nodes stop sending; same-round messages still deliver") {
    const auto g = build_graph(path(2));
    SimOptions opt;
    opt.round_cap = 10;
    opt.ids_input_order = true;  // vertex 0 gets id 1, vertex 1 id 2
    const auto tr = run(g, factory<PingProgram>(), opt);

    CHECK(tr.rounds_executed == 3);
    CHECK_FALSE(tr.cap_exceeded);
    CHECK(tr.outputs[0].finish_round == 1);
    CHECK(tr.outputs[1].finish_round == 3);
    // vertex 0's finishing-round broadcast reaches vertex 1 in round 1, then
    // silence: the later rounds deliver nothing
    CHECK(tr.outputs[0].output["heard"] == Message::array({1}));
    CHECK(tr.outputs[1].output["heard"] == Message::array({1}));
    REQUIRE(tr.messages_per_round.size() == 3);
    CHECK(tr.messages_per_round[0] == 2);
    CHECK(tr.messages_per_round[1] == 1);  // only vertex 1 still sends
    CHECK(tr.messages_per_round[2] == 1);
    CHECK(tr.max_message_bytes_per_round[0] > 0);
}

TEST_CASE("slot addressing and slot-over-broadcast precedence") {
    const auto g = build_graph(path(3));
    SimOptions opt;
    opt.round_cap = 2;
    opt.ids_input_order = true;  // ids 1, 2, 3 left to right
    const auto tr = run(g, factory<SlotProgram>(), opt);
    CHECK(tr.rounds_executed == 1);
    // vertex 0: its only slot carries vertex 1's directed message
    CHECK(tr.outputs[0].output == Message::array({{"s", 2}}));
    // vertex 1: directed messages from both sides (slot 0 targets of both)
    CHECK(tr.outputs[1].output == Message::array({{"s", 1}, {"s", 3}}));
    // vertex 2: vertex 1 aimed its slot message left, so only the broadcast
    CHECK(tr.outputs[2].output == Message::array({{"b", 2}}));
}

TEST_CASE("round cap is recorded, not thrown") {
    const auto g = build_graph(path(3));
    SimOptions opt;
    opt.round_cap = 3;
    const auto tr = run(g, gather_component(), opt);
    CHECK(tr.rounds_executed == 3);
    CHECK(tr.cap_exceeded);  // gather never finishes
    CHECK(gather_stabilized(tr));

    SimOptions bad;
    bad.round_cap = 0;
    CHECK_THROWS_AS(run(g, gather_component(), bad), std::invalid_argument);
}

TEST_CASE("gather_component knowledge radius on paths") {
    SimOptions opt;
    opt.ids_input_order = true;

    SUBCASE("5-path, 2 rounds: middle node sees everything") {
        const auto g = build_graph(path(5));
        opt.round_cap = 2;
        const auto tr = run(g, gather_component(), opt);
        const auto& mid = tr.outputs[2].output;
        REQUIRE(mid["vertices"].size() == 5);  // B_2 = all of the path
        // edges with an endpoint in B_1 = {2,3,4} joined to {1,2,3,4,5}
        REQUIRE(mid["edges"].size() == 4);
        // but the endpoints only know B_2 = three nodes and the two edges
        // with an endpoint in B_1
        CHECK(tr.outputs[0].output["vertices"].size() == 3);
        CHECK(tr.outputs[0].output["edges"].size() == 2);
        CHECK_FALSE(gather_stabilized(tr));  // endpoints were still learning
    }
    SUBCASE("3-path stabilizes under a generous cap") {
        const auto g = build_graph(path(3));
        opt.round_cap = 4;
        const auto tr = run(g, gather_component(), opt);
        CHECK(gather_stabilized(tr));
        for (const auto& r : tr.outputs) {
            CHECK(r.output["vertices"].size() == 3);
            CHECK(r.output["edges"].size() == 2);
        }
    }
    SUBCASE("isolated node knows itself only") {
        const auto g = build_graph(make_set({{0, 0}, {5, 5}}));
        opt.round_cap = 1;
        const auto tr = run(g, gather_component(), opt);
        for (const auto& r : tr.outputs) {
            CHECK(r.output["vertices"] == Message::array({{r.local_id}}));
            CHECK(r.output["edges"].empty());
        }
        CHECK(gather_stabilized(tr));
    }
}

TEST_CASE("gather matches the BFS-ball oracle on random graphs") {
    Rng rng(99, 4);
    for (int t = 1; t <= 3; ++t) {
        for (int inst = 0; inst < 8; ++inst) {
            const auto ps = gen_uniform_box(40, 6, 6, 100 * t + inst);
            const auto g = build_graph(ps);
            SimOptions opt;
            opt.mode = SimMode::kLocationAware;
            opt.ids_input_order = true;
            opt.round_cap = t;
            const auto tr = run(g, gather_component(), opt);

            const int probe = static_cast<int>(rng.uniform_int(0, g.n() - 1));
            const auto d = hop_distances(g, probe);

            std::set<int64_t> want_v;
            for (int v = 0; v < g.n(); ++v)
                if (d[v] >= 0 && d[v] <= t) want_v.insert(v + 1);
            std::set<std::pair<int64_t, int64_t>> want_e;
            for (int u = 0; u < g.n(); ++u) {
                for (int v : g.adj[u]) {
                    if (v < u) continue;
                    const bool near_u = d[u] >= 0 && d[u] <= t - 1;
                    const bool near_v = d[v] >= 0 && d[v] <= t - 1;
                    if (near_u || near_v) want_e.insert({u + 1, v + 1});
                }
            }

            std::set<int64_t> got_v;
            for (const auto& rec : tr.outputs[probe].output["vertices"])
                got_v.insert(rec[0].get<int64_t>());
            std::set<std::pair<int64_t, int64_t>> got_e;
            for (const auto& e : tr.outputs[probe].output["edges"])
                got_e.insert({e[0].get<int64_t>(), e[1].get<int64_t>()});

            REQUIRE(got_v == want_v);
            REQUIRE(got_e == want_e);
        }
    }
}

TEST_CASE("causality: views depend only on the t-ball") {
    // Relocating every vertex farther than t hops must leave a node's view
    // bit-identical: information cannot outrun the round count.
    for (int inst = 0; inst < 20; ++inst) {
        const int t = 1 + inst % 3;
        auto ps = gen_uniform_box(30, 6, 6, 500 + inst);
        const auto g = build_graph(ps);
        SimOptions opt;
        opt.mode = SimMode::kLocationAware;
        opt.ids_input_order = true;
        opt.round_cap = t;
        const auto before = run(g, gather_component(), opt);

        const int probe = inst % ps.size();
        const auto d = hop_distances(g, probe);
        auto moved = ps;
        for (int v = 0; v < moved.size(); ++v) {
            if (d[v] < 0 || d[v] > t) {
                moved.points[v].pos.x += 1000.0 + v;
                moved.points[v].pos.y += 7.0;
            }
        }
        const auto after = run(build_graph(moved), gather_component(), opt);
        REQUIRE(before.outputs[probe].output.dump() ==
                after.outputs[probe].output.dump());
    }
}

TEST_CASE("traces are byte-identical across reruns") {
    const auto g = build_graph(gen_uniform_box(60, 8, 8, 11));
    SimOptions opt;
    opt.seed = 3;
    opt.round_cap = 4;
    const auto a = run(g, gather_component(), opt);
    const auto b = run(g, gather_component(), opt);
    CHECK(a.to_text() == b.to_text());

    opt.mode = SimMode::kLocationAware;
    const auto c = run(g, gather_component(), opt);
    const auto e = run(g, gather_component(), opt);
    CHECK(c.to_text() == e.to_text());
}
