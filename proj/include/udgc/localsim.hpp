// Synchronous LOCAL-model simulator: lock-step rounds, unbounded structured
// messages, per-node random streams derived from (seed, id).
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "udgc/udg.hpp"

namespace udgc {

using Message = nlohmann::json;

// Deterministic per-node random stream. Hand-rolled draws (not std
// distributions) so outputs are byte-identical across standard libraries.
class Rng {
  public:
    Rng(uint64_t seed, uint64_t node_id);
    uint64_t next();
    // uniform in [lo, hi], inclusive, by masked rejection
    int64_t uniform_int(int64_t lo, int64_t hi);
    double uniform01();  // [0, 1)

  private:
    uint64_t state_;
};

struct NodeInfo {
    int64_t id = 0;   // unique in [1, n^2]
    int degree = 0;   // number of adjacency slots
    std::optional<Point> position;  // present iff location-aware mode
};

// Sent messages for one node in one round; slot k addresses the k-th
// adjacency slot (neighbors ordered by their LOCAL id).
class Outbox {
  public:
    explicit Outbox(int degree) : per_slot_(degree) {}
    void broadcast(Message m) { broadcast_ = std::move(m); }
    void to(int slot, Message m) { per_slot_[slot] = std::move(m); }

    const std::optional<Message>& broadcast_msg() const { return broadcast_; }
    const std::optional<Message>& slot_msg(int slot) const { return per_slot_[slot]; }

  private:
    std::optional<Message> broadcast_;
    std::vector<std::optional<Message>> per_slot_;
};

// Received messages, aligned with the adjacency slots.
class Inbox {
  public:
    explicit Inbox(int degree) : slots_(degree) {}
    const Message* from(int slot) const {
        return slots_[slot] ? &*slots_[slot] : nullptr;
    }
    void put(int slot, Message m) { slots_[slot] = std::move(m); }

  private:
    std::vector<std::optional<Message>> slots_;
};

// A node's algorithm. One instance per node per run. Rounds are 1-based.
// A node that reports finished() stops sending; its output must not change.
class NodeProgram {
  public:
    virtual ~NodeProgram() = default;
    virtual void initialize(const NodeInfo& info,
                            const std::vector<int64_t>& neighbor_ids, Rng& rng) = 0;
    virtual void send(int round, Outbox& out, Rng& rng) = 0;
    virtual void receive(int round, const Inbox& in, Rng& rng) = 0;
    virtual bool finished() const = 0;
    virtual Message output() const = 0;
};

using ProgramFactory = std::function<std::unique_ptr<NodeProgram>()>;

enum class SimMode { kAbstract, kLocationAware };

struct RoundTrace {
    int rounds_executed = 0;
    bool cap_exceeded = false;  // some node never finished within the cap
    std::vector<int64_t> messages_per_round;
    std::vector<size_t> max_message_bytes_per_round;

    struct NodeResult {
        int vertex = 0;       // graph vertex index
        int64_t local_id = 0;  // LOCAL-model id
        Message output;
        int finish_round = 0;  // 0 = finished at initialization
    };
    std::vector<NodeResult> outputs;  // indexed by vertex

    std::string to_text() const;  // one line per node: id, output, finish round
};

struct SimOptions {
    SimMode mode = SimMode::kAbstract;
    uint64_t seed = 0;
    int round_cap = 1;
    bool ids_input_order = false;  // default: seeded random sample of [1, n^2]
};

// Assigns LOCAL ids, then runs lock-step rounds: all sends are computed from
// pre-round states, then all receives are applied. Stops when every node is
// finished or the cap is reached (cap exceedance is recorded, not thrown).
RoundTrace run(const UnitDiskGraph& g, const ProgramFactory& make_program,
               const SimOptions& opt);

// Flooding program: every round each node broadcasts all (id, position,
// attribute) records and edges it knows and merges what it hears. After t
// rounds a node knows B_t plus every edge with an endpoint in B_{t-1}. Nodes
// never finish early (a locally stable node must keep forwarding); run it
// with round_cap = radius_cap and check stabilized(trace) afterwards.
//
// part_key_of: optional filter. When set, a node only retains records of
// nodes sharing its own key, so floods stay inside key-induced subgraphs.
// Output: {"vertices": [[id, x, y], ...] sorted by id,
//          "edges": [[id1, id2], ...] sorted, "changed_last_round": bool}
ProgramFactory gather_component(
    std::function<std::string(const NodeInfo&)> part_key_of = nullptr);

// True iff no node's knowledge changed in the final executed round (the
// caller's radius_cap was large enough, so every view is complete).
bool gather_stabilized(const RoundTrace& trace);

}  // namespace udgc
