#include "gidnc/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gidnc/probability.hpp"

namespace gidnc {

void IdncGraph::reset(std::vector<Vertex> vertices) {
  vertices_ = std::move(vertices);
  const int n = size();
  words_ = n == 0 ? 0 : (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  edge_count_ = 0;
}

void IdncGraph::finalize_edges() {
  long long total = 0;
  for (int v = 0; v < size(); ++v) {
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) total += std::popcount(r[w]);
  }
  edge_count_ = total / 2;
}

namespace {

inline void set_bit(std::uint64_t* mask, int v) {
  mask[v >> 6] |= 1ull << (v & 63);
}

// Adjacency for a fixed vertex list, assembled from per-packet and
// per-receiver masks instead of pairwise checks: the row of vertex (i, j) is
// (same packet) or (receiver has j, and i has the other vertex's packet),
// minus every vertex of receiver i.
void build_adjacency(IdncGraph& g, const SenderView& view) {
  const int n = g.size();
  if (n == 0) {
    g.finalize_edges();
    return;
  }
  const int words = g.words();
  const int packets = view.packet_count();
  const int receivers = view.receiver_count();
  const auto& vs = g.vertices();

  std::vector<std::uint64_t> pkt_mask(
      static_cast<std::size_t>(packets) * words, 0);
  std::vector<std::uint64_t> holder_mask(
      static_cast<std::size_t>(packets) * words, 0);
  std::vector<std::uint64_t> recv_mask(
      static_cast<std::size_t>(receivers) * words, 0);
  std::vector<std::uint64_t> known_mask(
      static_cast<std::size_t>(receivers) * words, 0);

  for (int v = 0; v < n; ++v) {
    set_bit(&pkt_mask[static_cast<std::size_t>(vs[v].packet) * words], v);
    set_bit(&recv_mask[static_cast<std::size_t>(vs[v].receiver) * words], v);
  }
  for (int v = 0; v < n; ++v) {
    const int k = vs[v].receiver;
    for (int j = 0; j < packets; ++j)
      if (view.entry(k, j) == EntryState::Has)
        set_bit(&holder_mask[static_cast<std::size_t>(j) * words], v);
  }
  for (int i = 0; i < receivers; ++i) {
    std::uint64_t* m = &known_mask[static_cast<std::size_t>(i) * words];
    for (int v = 0; v < n; ++v)
      if (view.entry(i, vs[v].packet) == EntryState::Has) set_bit(m, v);
  }

  for (int v = 0; v < n; ++v) {
    const int i = vs[v].receiver;
    const int j = vs[v].packet;
    std::uint64_t* r = g.mutable_row(v);
    const std::uint64_t* same = &pkt_mask[static_cast<std::size_t>(j) * words];
    const std::uint64_t* hold =
        &holder_mask[static_cast<std::size_t>(j) * words];
    const std::uint64_t* know =
        &known_mask[static_cast<std::size_t>(i) * words];
    const std::uint64_t* own =
        &recv_mask[static_cast<std::size_t>(i) * words];
    for (int w = 0; w < words; ++w)
      r[w] = (same[w] | (hold[w] & know[w])) & ~own[w];
  }
  g.finalize_edges();
}

std::vector<Vertex> lack_vertices(const SenderView& view) {
  std::vector<Vertex> out;
  for (int i = 0; i < view.receiver_count(); ++i) {
    for (int j = 0; j < view.packet_count(); ++j) {
      const EntryState e = view.entry(i, j);
      if (e == EntryState::Has) continue;
      Vertex v;
      v.receiver = i;
      v.packet = j;
      v.primary = e != EntryState::SecondaryLack;
      out.push_back(v);
    }
  }
  return out;
}

Clique make_clique(const IdncGraph& g, std::vector<int> chosen) {
  Clique out;
  std::sort(chosen.begin(), chosen.end());
  for (int v : chosen) {
    const Vertex& vx = g.vertices()[v];
    out.members.push_back(CliqueMember{vx.receiver, vx.packet, vx.primary});
    out.coded_packets.push_back(vx.packet);
  }
  std::sort(out.coded_packets.begin(), out.coded_packets.end());
  out.coded_packets.erase(
      std::unique(out.coded_packets.begin(), out.coded_packets.end()),
      out.coded_packets.end());
  return out;
}

// Argmax of the combined weight over the masked subgraph, recomputing the
// structural weight parts (degrees, edge total, neighbor sums) on the
// subgraph. Base weights stay fixed within a slot. Ties fall to the lowest
// vertex index, which is the lowest (receiver, packet) pair.
int pick_best(const IdncGraph& g, const std::vector<std::uint64_t>& mask) {
  const int words = g.words();
  std::vector<int> members;
  for (int w = 0; w < words; ++w) {
    std::uint64_t bits = mask[w];
    while (bits) {
      members.push_back((w << 6) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  if (members.empty()) return -1;

  std::vector<int> degree(g.size(), 0);
  long long twice_edges = 0;
  for (int v : members) {
    const std::uint64_t* r = g.row(v);
    int d = 0;
    for (int w = 0; w < words; ++w) d += std::popcount(r[w] & mask[w]);
    degree[v] = d;
    twice_edges += d;
  }
  const double edges = static_cast<double>(twice_edges) / 2.0;

  int best = -1;
  double best_weight = -1.0;
  for (int v : members) {
    double conn = 0.0;
    if (edges > 0) {
      const std::uint64_t* r = g.row(v);
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = r[w] & mask[w];
        while (bits) {
          const int u = (w << 6) + std::countr_zero(bits);
          bits &= bits - 1;
          conn += g.vertices()[u].base_weight * degree[u];
        }
      }
      conn /= edges;
    }
    const double combined = (conn + 1.0) * g.vertices()[v].base_weight;
    if (combined > best_weight) {
      best = v;
      best_weight = combined;
    }
  }
  return best;
}

void greedy_pass(const IdncGraph& g, std::vector<std::uint64_t>& mask,
                 std::vector<int>& chosen) {
  while (true) {
    const int best = pick_best(g, mask);
    if (best < 0) break;
    chosen.push_back(best);
    const std::uint64_t* r = g.row(best);
    for (int w = 0; w < g.words(); ++w) mask[w] &= r[w];
  }
}

// Secondary vertices adjacent to everything already chosen.
std::vector<std::uint64_t> secondary_mask(const IdncGraph& g,
                                          const std::vector<int>& chosen) {
  std::vector<std::uint64_t> mask(g.words(), 0);
  for (int v = 0; v < g.size(); ++v)
    if (!g.vertices()[v].primary) set_bit(mask.data(), v);
  for (int c : chosen) {
    const std::uint64_t* r = g.row(c);
    for (int w = 0; w < g.words(); ++w) mask[w] &= r[w];
  }
  return mask;
}

}  // namespace

IdncGraph build_graph(const SenderView& view) {
  IdncGraph g;
  g.reset(lack_vertices(view));
  build_adjacency(g, view);
  return g;
}

void base_weights(IdncGraph& graph, const SenderView& view,
                  const std::vector<LinkParams>& params, long long t) {
  std::vector<double> good(view.receiver_count(), -1.0);
  for (Vertex& v : graph.vertices()) {
    if (good[v.receiver] < 0.0)
      good[v.receiver] =
          1.0 - erasure_prob(view, params[v.receiver].forward, v.receiver, t);
    v.base_weight =
        good[v.receiver] *
        innovative_prob(view, params[v.receiver], v.receiver, v.packet, t);
  }
}

void blind_weights(IdncGraph& graph, const std::vector<LinkParams>& params) {
  for (Vertex& v : graph.vertices())
    v.base_weight = params[v.receiver].forward.steady_good();
}

void connectivity_weights(IdncGraph& graph) {
  const int n = graph.size();
  const int words = graph.words();
  const long long edges = graph.edge_count();
  std::vector<int> degree(n, 0);
  for (int v = 0; v < n; ++v) {
    const std::uint64_t* r = graph.row(v);
    int d = 0;
    for (int w = 0; w < words; ++w) d += std::popcount(r[w]);
    degree[v] = d;
  }
  for (int v = 0; v < n; ++v) {
    Vertex& vx = graph.vertices()[v];
    double conn = 0.0;
    if (edges > 0) {
      const std::uint64_t* r = graph.row(v);
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
          const int u = (w << 6) + std::countr_zero(bits);
          bits &= bits - 1;
          conn += graph.vertices()[u].base_weight * degree[u];
        }
      }
      conn /= static_cast<double>(edges);
    }
    vx.conn_weight = conn;
    vx.combined_weight = (conn + 1.0) * vx.base_weight;
  }
}

Clique greedy_select(const IdncGraph& graph, const SenderView& view) {
  (void)view;
  if (graph.size() == 0) return Clique{};
  std::vector<std::uint64_t> mask(graph.words(), 0);
  for (int v = 0; v < graph.size(); ++v)
    if (graph.vertices()[v].primary) set_bit(mask.data(), v);
  std::vector<int> chosen;
  greedy_pass(graph, mask, chosen);
  auto smask = secondary_mask(graph, chosen);
  greedy_pass(graph, smask, chosen);
  return make_clique(graph, chosen);
}

namespace {

struct ExactSearch {
  const std::vector<double>* weights;
  const std::vector<std::uint32_t>* adj;  // over primary-local indices
  int n;
  double best_sum = -1.0;
  std::vector<int> best_set;
  std::vector<int> current;

  void consider(double sum) {
    if (sum > best_sum) {
      best_sum = sum;
      best_set = current;
      return;
    }
    if (sum == best_sum &&
        std::lexicographical_compare(current.begin(), current.end(),
                                     best_set.begin(), best_set.end())) {
      best_set = current;
    }
  }

  void dfs(std::uint32_t candidates, double sum) {
    consider(sum);
    while (candidates) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      current.push_back(v);
      dfs(candidates & (*adj)[v], sum + (*weights)[v]);
      current.pop_back();
    }
  }
};

}  // namespace

Clique exact_max_weight_clique(const IdncGraph& graph,
                               const SenderView& view) {
  (void)view;
  std::vector<int> primary;
  for (int v = 0; v < graph.size(); ++v)
    if (graph.vertices()[v].primary) primary.push_back(v);
  if (primary.size() > 20)
    throw std::length_error(
        "exact clique search is limited to 20 primary vertices");

  const int n = static_cast<int>(primary.size());
  std::vector<double> weights(n);
  std::vector<std::uint32_t> adj(n, 0);
  for (int a = 0; a < n; ++a) {
    weights[a] = graph.vertices()[primary[a]].base_weight;
    for (int b = 0; b < n; ++b)
      if (b != a && graph.adjacent(primary[a], primary[b]))
        adj[a] |= 1u << b;
  }

  ExactSearch search;
  search.weights = &weights;
  search.adj = &adj;
  search.n = n;
  search.best_sum = -1.0;
  search.dfs((1u << n) - 1u, 0.0);  // n <= 20, so the shift is safe

  std::vector<int> chosen;
  for (int local : search.best_set) chosen.push_back(primary[local]);
  auto smask = secondary_mask(graph, chosen);
  greedy_pass(graph, smask, chosen);
  return make_clique(graph, chosen);
}

namespace {

IdncGraph filtered(const IdncGraph& graph, const SenderView& view,
                   const std::vector<char>& keep) {
  std::vector<Vertex> vs;
  for (int v = 0; v < graph.size(); ++v)
    if (keep[v]) vs.push_back(graph.vertices()[v]);
  IdncGraph out;
  out.reset(std::move(vs));
  build_adjacency(out, view);
  return out;
}

// A vertex is unresolved once its packet has been attempted and no feedback
// has settled the outcome: either the entry is explicitly uncertain (a frame
// closed with the feedback lost) or an attempt is still pending in the open
// window.
bool unresolved(const SenderView& view, const Vertex& vx) {
  return view.entry(vx.receiver, vx.packet) == EntryState::UncertainWanted ||
         view.window_attempt_count(vx.receiver, vx.packet) > 0;
}

}  // namespace

// Both baselines assume every unresolved packet was delivered and drop its
// vertex until feedback says otherwise; SVE hedges the guess per vertex.
// Edges of the filtered graph still follow the sender's actual knowledge:
// guessed deliveries are not trusted as coding side information.
IdncGraph fve_filter(const IdncGraph& graph, const SenderView& view) {
  std::vector<char> keep(graph.size(), 1);
  for (int v = 0; v < graph.size(); ++v) {
    if (unresolved(view, graph.vertices()[v])) keep[v] = 0;
  }
  return filtered(graph, view, keep);
}

IdncGraph sve_filter(const IdncGraph& graph, const SenderView& view,
                     const std::vector<LinkParams>& params, Rng& rng) {
  std::vector<char> keep(graph.size(), 1);
  for (int v = 0; v < graph.size(); ++v) {
    const Vertex& vx = graph.vertices()[v];
    if (unresolved(view, vx))
      keep[v] = rng.bernoulli(params[vx.receiver].forward.steady_bad()) ? 1 : 0;
  }
  return filtered(graph, view, keep);
}

std::string edge_list_dump(const IdncGraph& graph) {
  std::string out;
  for (int v = 0; v < graph.size(); ++v) {
    for (int u = v + 1; u < graph.size(); ++u) {
      if (!graph.adjacent(v, u)) continue;
      const Vertex& a = graph.vertices()[v];
      const Vertex& b = graph.vertices()[u];
      out += std::to_string(a.receiver) + ':' + std::to_string(a.packet) +
             ' ' + std::to_string(b.receiver) + ':' + std::to_string(b.packet) +
             '\n';
    }
  }
  return out;
}

}  // namespace gidnc
