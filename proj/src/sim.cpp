#include "gidnc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gidnc/probability.hpp"

namespace gidnc {
namespace {

void validate(const SessionConfig& c) {
  if (c.receivers < 1 || c.packets < 1)
    throw std::invalid_argument("receivers and packets must be >= 1");
  if (!(c.demand_ratio > 0.0) || c.demand_ratio > 1.0)
    throw std::invalid_argument("demand ratio must be in (0, 1]");
  if (c.b_min < 0.0 || c.b_max > 1.0 || c.b_min > c.b_max)
    throw std::invalid_argument("erasure range must satisfy 0 <= min <= max <= 1");
  if (c.mu < 0.0 || c.mu >= 1.0)
    throw std::invalid_argument("memory factor must be in [0, 1)");
  if (c.t_down < 1 || c.t_up < 1)
    throw std::invalid_argument("frame split must have t_down, t_up >= 1");
  if (c.slot_cap_factor < 1)
    throw std::invalid_argument("slot cap factor must be >= 1");
}

GecParams params_from_steady(double steady_bad, double mu) {
  return GecParams{steady_bad * (1.0 - mu), (1.0 - steady_bad) * (1.0 - mu)};
}

void draw_link(const SessionConfig& c, ChannelPair& chan, LinkParams& link,
               Rng& rng) {
  chan.forward = params_from_steady(rng.uniform(c.b_min, c.b_max), c.mu);
  chan.feedback = c.coupling == Coupling::Independent
                      ? params_from_steady(rng.uniform(c.b_min, c.b_max), c.mu)
                      : chan.forward;
  link.forward = chan.forward;
  link.feedback = chan.feedback;
}

SessionState setup_session(const SessionConfig& c, Rng& rng) {
  validate(c);
  const FrameSchedule sched{c.t_down, c.t_up};
  SessionState s(c.receivers, c.packets, sched);
  s.world.has.assign(c.receivers, std::vector<char>(c.packets, 0));
  s.world.demand.assign(c.receivers, std::vector<char>(c.packets, 0));
  s.world.channels.resize(c.receivers);
  s.params.resize(c.receivers);
  s.frame_received.assign(c.receivers, 0);
  s.frame_heard.assign(c.receivers, 0);
  s.metrics.delay.assign(c.receivers, 0);
  s.cap = c.slot_cap_factor * static_cast<long long>(c.packets) *
          sched.t_frame();

  const int want_count = std::clamp(
      static_cast<int>(std::lround(c.demand_ratio * c.packets)), 1, c.packets);
  std::vector<int> pool(c.packets);
  for (int i = 0; i < c.receivers; ++i) {
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> wanted;
    for (int k = 0; k < want_count; ++k) {
      const auto pick = k + static_cast<int>(rng.below(c.packets - k));
      std::swap(pool[k], pool[pick]);
      wanted.push_back(pool[k]);
      s.world.demand[i][pool[k]] = 1;
    }
    s.view.set_demand(i, wanted);
  }
  for (int i = 0; i < c.receivers; ++i) {
    s.world.channels[i].coupling = c.coupling;
    draw_link(c, s.world.channels[i], s.params[i], rng);
    s.world.channels[i].sample_initial_states(rng);
  }
  return s;
}

void begin_frame(SessionState& s, const SessionConfig& c, int frame,
                 Rng& rng) {
  std::fill(s.frame_received.begin(), s.frame_received.end(), 0);
  std::fill(s.frame_heard.begin(), s.frame_heard.end(), 0);
  if (c.redraw_per_frame && frame > 1) {
    for (int i = 0; i < c.receivers; ++i)
      draw_link(c, s.world.channels[i], s.params[i], rng);
  }
}

void step_channels(SessionState& s, Rng& rng) {
  for (auto& chan : s.world.channels) chan.step(rng);
}

// Reception of one transmission (the XOR of `coded`) by every receiver whose
// forward channel is Good this slot; during recovery a reception that does
// not decode a wanted packet costs one delay unit while the true Wants set
// is nonempty.
void deliver(SessionState& s, const std::vector<int>& coded) {
  for (int i = 0; i < static_cast<int>(s.world.channels.size()); ++i) {
    if (s.world.channels[i].forward_state.bad()) continue;
    s.frame_received[i] = 1;
    int missing = -1;
    int missing_count = 0;
    for (int j : coded) {
      if (!s.world.has[i][j]) {
        missing = j;
        if (++missing_count > 1) break;
      }
    }
    if (missing_count == 1) {
      s.world.has[i][missing] = 1;
      if (s.recovery && !s.world.demand[i][missing] &&
          s.world.wants_nonempty(i))
        ++s.metrics.delay[i];
    } else if (s.recovery && s.world.wants_nonempty(i)) {
      ++s.metrics.delay[i];
    }
  }
}

int find_vertex(const IdncGraph& g, int receiver, int packet) {
  const auto& vs = g.vertices();
  int lo = 0;
  int hi = g.size() - 1;
  while (lo <= hi) {
    const int mid = (lo + hi) / 2;
    if (vs[mid].receiver < receiver ||
        (vs[mid].receiver == receiver && vs[mid].packet < packet)) {
      lo = mid + 1;
    } else if (vs[mid].receiver == receiver && vs[mid].packet == packet) {
      return mid;
    } else {
      hi = mid - 1;
    }
  }
  return -1;
}

// The scheduler must leave each primary-targeted receiver with at least one
// wanted packet attempted exactly once in the open window, or its anchor
// cannot refresh at the next heard feedback. When an attempt would break
// that, swap the receiver's vertex for its best never-attempted wanted
// alternative that still completes the clique; with a single wanted packet
// left the requirement is waived.
void enforce_once_attempted(Clique& clique, const IdncGraph& g,
                            const SenderView& view) {
  for (auto& member : clique.members) {
    if (!member.primary) continue;
    const int i = member.receiver;
    if (view.window_attempt_count(i, member.packet) == 0)
      continue;  // this attempt itself will be the once-attempted packet
    bool have_single = false;
    for (int j : view.wants(i)) {
      if (j != member.packet && view.window_attempt_count(i, j) == 1) {
        have_single = true;
        break;
      }
    }
    if (have_single) continue;

    int best = -1;
    double best_weight = -1.0;
    for (int j : view.wants(i)) {
      if (j == member.packet || view.window_attempt_count(i, j) != 0) continue;
      const int v = find_vertex(g, i, j);
      if (v < 0) continue;
      bool compatible = true;
      for (const auto& other : clique.members) {
        if (other.receiver == i) continue;
        const int u = find_vertex(g, other.receiver, other.packet);
        if (u < 0 || !g.adjacent(v, u)) {
          compatible = false;
          break;
        }
      }
      if (compatible && g.vertices()[v].base_weight > best_weight) {
        best_weight = g.vertices()[v].base_weight;
        best = j;
      }
    }
    if (best >= 0) member.packet = best;
    // Otherwise keep the original target; the anchor just stays stale, and
    // with a single wanted packet left that is the intended waiver.
  }
  clique.coded_packets.clear();
  for (const auto& m : clique.members)
    clique.coded_packets.push_back(m.packet);
  std::sort(clique.coded_packets.begin(), clique.coded_packets.end());
  clique.coded_packets.erase(
      std::unique(clique.coded_packets.begin(), clique.coded_packets.end()),
      clique.coded_packets.end());
}

// Fallback when filtering leaves nothing to send but the session is not
// done: retransmit, uncoded, the wanted packet the algorithm's own weighting
// scores highest.
Clique uncoded_fallback(const SessionState& s, const SessionConfig& c,
                        long long t) {
  int best_receiver = -1;
  int best_packet = -1;
  double best_weight = -1.0;
  for (int i = 0; i < c.receivers; ++i) {
    for (int j = 0; j < c.packets; ++j) {
      if (!s.view.is_wanted(i, j)) continue;
      double w;
      if (c.algorithm == Algorithm::Fve || c.algorithm == Algorithm::Sve) {
        // Blind scoring consistent with the filters: an entry whose outcome
        // is still unresolved is believed delivered, so it scores zero (FVE)
        // or is discounted by the steady-state loss probability (SVE).
        const bool pending =
            s.view.entry(i, j) == EntryState::UncertainWanted ||
            s.view.window_attempt_count(i, j) > 0;
        w = s.params[i].forward.steady_good();
        if (pending)
          w *= c.algorithm == Algorithm::Fve
                   ? 0.0
                   : s.params[i].forward.steady_bad();
      } else {
        w = (1.0 - erasure_prob(s.view, s.params[i].forward, i, t)) *
            innovative_prob(s.view, s.params[i], i, j, t);
      }
      if (w > best_weight) {
        best_weight = w;
        best_receiver = i;
        best_packet = j;
      }
    }
  }
  Clique out;
  if (best_packet < 0) return out;
  for (int i = 0; i < c.receivers; ++i) {
    if (s.view.entry(i, best_packet) == EntryState::Has) continue;
    out.members.push_back(
        CliqueMember{i, best_packet, s.view.is_wanted(i, best_packet)});
  }
  out.coded_packets.push_back(best_packet);
  return out;
}

void finalize(SessionState& s) {
  long long total = 0;
  for (long long d : s.metrics.delay) total += d;
  s.metrics.mean_delay =
      static_cast<double>(total) / static_cast<double>(s.metrics.delay.size());
  s.metrics.slots = s.clock - 1;
}

}  // namespace

SessionState run_initial_phase(const SessionConfig& config, Rng& rng) {
  SessionState s = setup_session(config, rng);
  const int frames = (config.packets + config.t_down - 1) / config.t_down;
  int next_packet = 0;
  for (int frame = 1; frame <= frames; ++frame) {
    begin_frame(s, config, frame, rng);
    for (int d = 0; d < config.t_down; ++d) {
      if (next_packet < config.packets) {
        std::vector<std::pair<int, int>> targets;
        for (int i = 0; i < config.receivers; ++i)
          if (s.view.entry(i, next_packet) != EntryState::Has)
            targets.push_back({i, next_packet});
        s.view.record_attempt(targets, s.clock);
        step_channels(s, rng);
        deliver(s, {next_packet});
        ++next_packet;
      } else {
        step_channels(s, rng);  // idle tail of the last initial frame
      }
      ++s.clock;
    }
    run_uplink(s, config, frame, rng);
  }
  s.recovery = true;
  return s;
}

void run_recovery_slot(SessionState& s, const SessionConfig& config,
                       long long t, Rng& rng) {
  IdncGraph graph = build_graph(s.view);
  Clique clique;
  bool enforce = true;
  switch (config.algorithm) {
    case Algorithm::AguGreedy:
    case Algorithm::Opt:
      base_weights(graph, s.view, s.params, t);
      clique = greedy_select(graph, s.view);
      break;
    case Algorithm::AguExact:
      base_weights(graph, s.view, s.params, t);
      clique = exact_max_weight_clique(graph, s.view);
      break;
    case Algorithm::Fve: {
      IdncGraph f = fve_filter(graph, s.view);
      blind_weights(f, s.params);
      clique = greedy_select(f, s.view);
      graph = std::move(f);
      enforce = false;
      break;
    }
    case Algorithm::Sve: {
      IdncGraph f = sve_filter(graph, s.view, s.params, rng);
      blind_weights(f, s.params);
      clique = greedy_select(f, s.view);
      graph = std::move(f);
      enforce = false;
      break;
    }
  }
  if (clique.empty() && !s.view.all_wants_empty())
    clique = uncoded_fallback(s, config, t);
  else if (enforce)
    enforce_once_attempted(clique, graph, s.view);

  if (!clique.empty()) {
    std::vector<std::pair<int, int>> targets;
    for (const auto& m : clique.members)
      targets.push_back({m.receiver, m.packet});
    s.view.record_attempt(targets, t);
  }
  step_channels(s, rng);
  if (!clique.empty()) deliver(s, clique.coded_packets);
  ++s.clock;
}

void run_uplink(SessionState& s, const SessionConfig& config, int frame,
                Rng& rng) {
  const FrameSchedule& sched = s.view.schedule();
  for (int pos = 1; pos <= config.t_up; ++pos) {
    step_channels(s, rng);
    for (int i = 0; i < config.receivers; ++i) {
      if (sched.uplink_slot(i) != pos) continue;
      bool heard;
      if (config.perfect_prompt_feedback) {
        heard = true;
      } else {
        const bool sends =
            s.view.targeted_in_frame(i, frame) && s.frame_received[i];
        heard = sends && !s.world.channels[i].feedback_state.bad();
      }
      if (heard) {
        std::vector<int> acked;
        for (int j = 0; j < config.packets; ++j)
          if (s.world.has[i][j]) acked.push_back(j);
        s.view.apply_feedback(i, acked, s.clock);
        s.frame_heard[i] = 1;
      }
    }
    ++s.clock;
  }
  for (int i = 0; i < config.receivers; ++i)
    if (!s.frame_heard[i] && s.view.targeted_in_frame(i, frame))
      s.view.close_frame_unheard(i, frame);
}

SessionMetrics run_session(const SessionConfig& config, Rng& rng) {
  if (config.algorithm == Algorithm::Opt && !config.perfect_prompt_feedback)
    return opt_baseline(config, rng);
  SessionState s = run_initial_phase(config, rng);
  const FrameSchedule& sched = s.view.schedule();
  while (!s.view.all_wants_empty()) {
    if (s.clock > s.cap) {
      s.metrics.capped = true;
      break;
    }
    const int frame = sched.frame_of(s.clock);
    begin_frame(s, config, frame, rng);
    for (int d = 0; d < config.t_down; ++d) {
      run_recovery_slot(s, config, s.clock, rng);
    }
    run_uplink(s, config, frame, rng);
  }
  finalize(s);
  return s.metrics;
}

SessionMetrics opt_baseline(SessionConfig config, Rng& rng) {
  config.algorithm = Algorithm::AguGreedy;  // weights collapse to 1 - p_i
  config.t_down = 1;
  config.t_up = 1;
  config.perfect_prompt_feedback = true;
  return run_session(config, rng);
}

}  // namespace gidnc
