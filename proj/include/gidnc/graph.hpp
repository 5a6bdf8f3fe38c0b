#pragma once
// Coding graph over the sender's feedback matrix: one vertex per packet a
// receiver may still need, edges where two vertices can share one coded
// transmission. Selecting a clique selects the packets to XOR together.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gidnc/channel.hpp"
#include "gidnc/rng.hpp"
#include "gidnc/tracking.hpp"

namespace gidnc {

struct Vertex {
  int receiver = -1;
  int packet = -1;
  bool primary = false;          // packet is in the receiver's Wants set
  double base_weight = 0.0;      // w0
  double conn_weight = 0.0;      // w
  double combined_weight = 0.0;  // w* = (w + 1) * w0
};

class IdncGraph {
 public:
  IdncGraph() = default;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::vector<Vertex>& vertices() { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  long long edge_count() const { return edge_count_; }
  int words() const { return words_; }

  bool adjacent(int a, int b) const {
    return (row(a)[b >> 6] >> (b & 63)) & 1u;
  }
  const std::uint64_t* row(int v) const { return bits_.data() + v * words_; }

  // Used by the builders/filters below.
  void reset(std::vector<Vertex> vertices);
  std::uint64_t* mutable_row(int v) { return bits_.data() + v * words_; }
  void finalize_edges();  // symmetrizes nothing; just counts edges

 private:
  std::vector<Vertex> vertices_;  // sorted by (receiver, packet)
  std::vector<std::uint64_t> bits_;  // adjacency, size() rows of words_ each
  int words_ = 0;
  long long edge_count_ = 0;
};

struct CliqueMember {
  int receiver = -1;
  int packet = -1;
  bool primary = false;
};

// A mutually adjacent vertex set; the transmission is the XOR of the distinct
// packets, so each member receiver can instantly decode its own packet.
struct Clique {
  std::vector<CliqueMember> members;  // at most one per receiver
  std::vector<int> coded_packets;    // sorted, distinct

  bool empty() const { return members.empty(); }
  const CliqueMember* member_for(int receiver) const {
    for (const auto& m : members)
      if (m.receiver == receiver) return &m;
    return nullptr;
  }
};

// One vertex per non-Has entry of the feedback matrix; edge between vertices
// of different receivers iff they carry the same packet or each receiver is
// known to have the other's packet (uncertain entries do not count as Has).
IdncGraph build_graph(const SenderView& view);

// w0 = (1 - erasure prob) * innovative prob, per vertex.
void base_weights(IdncGraph& graph, const SenderView& view,
                  const std::vector<LinkParams>& params, long long t);

// Belief-free weighting used by the expired-window baselines:
// w0 = steady-state probability the receiver's forward channel is Good.
void blind_weights(IdncGraph& graph, const std::vector<LinkParams>& params);

// w = sum over neighbors of w0 * degree / |E| (0 on edgeless graphs);
// w* = (w + 1) * w0.
void connectivity_weights(IdncGraph& graph);

// Greedy maximum-weight vertex search: primary pass picks argmax-w* and
// restricts to its neighborhood, recomputing the structural weight parts on
// the shrinking subgraph; secondary pass extends over secondary vertices
// adjacent to the whole primary clique.
Clique greedy_select(const IdncGraph& graph, const SenderView& view);

// Exact maximum-total-w0 clique of the primary subgraph by branch and bound
// (ties to the lexicographically smallest vertex set), then the same greedy
// secondary pass. Throws std::length_error above 20 primary vertices.
Clique exact_max_weight_clique(const IdncGraph& graph, const SenderView& view);

// Baseline filters for schedulers that ignore channel memory. A vertex is
// unresolved when its entry is uncertain or an attempt on it is still pending
// feedback. fve_filter assumes every unresolved packet was delivered and
// drops the vertex until feedback says otherwise; sve_filter keeps each
// unresolved vertex with the steady-state probability that the receiver's
// channel was Bad (the attempt was erased).
IdncGraph fve_filter(const IdncGraph& graph, const SenderView& view);
IdncGraph sve_filter(const IdncGraph& graph, const SenderView& view,
                     const std::vector<LinkParams>& params, Rng& rng);

// One edge per line, "receiver:packet receiver:packet", sorted; for golden
// tests and debugging.
std::string edge_list_dump(const IdncGraph& graph);

}  // namespace gidnc
