#pragma once
// Ground-truth world and session engine: the initial uncoded broadcast
// phase, coded recovery rounds driven by the configured scheduler, receiver
// side decoding with per-unit delay accounting, and termination when the
// sender has heard that everyone finished.

#include <cstdint>
#include <vector>

#include "gidnc/channel.hpp"
#include "gidnc/graph.hpp"
#include "gidnc/rng.hpp"
#include "gidnc/tracking.hpp"

namespace gidnc {

enum class Algorithm { AguGreedy, AguExact, Fve, Sve, Opt };

struct SessionConfig {
  int receivers = 10;
  int packets = 10;
  double demand_ratio = 0.8;  // fraction of packets each receiver wants
  // Per-receiver steady-state erasure probability, drawn uniformly from
  // [b_min, b_max] per session; the Markov transition rates derive from it
  // and the memory factor, so the erasure rate is held fixed as memory
  // varies.
  double b_min = 0.1;
  double b_max = 0.3;
  double mu = 0.0;  // memory factor of both directions
  Coupling coupling = Coupling::Reciprocal;
  int t_down = 1;
  int t_up = 1;
  Algorithm algorithm = Algorithm::AguGreedy;
  bool redraw_per_frame = false;  // redraw erasure rates at every frame
  bool perfect_prompt_feedback = false;  // every receiver heard every frame
  long long slot_cap_factor = 50;  // abort after factor * packets * t_frame
};

struct SessionMetrics {
  std::vector<long long> delay;  // per receiver: +1 per reception that decodes nothing wanted
  double mean_delay = 0.0;
  long long slots = 0;
  bool capped = false;
};

struct GroundTruth {
  std::vector<std::vector<char>> has;     // actual receptions
  std::vector<std::vector<char>> demand;  // primary demand per receiver
  std::vector<ChannelPair> channels;

  bool wants(int receiver, int packet) const {
    return demand[receiver][packet] && !has[receiver][packet];
  }
  bool wants_nonempty(int receiver) const {
    const auto& d = demand[receiver];
    const auto& h = has[receiver];
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[j] && !h[j]) return true;
    return false;
  }
};

struct SessionState {
  GroundTruth world;
  SenderView view;
  std::vector<LinkParams> params;  // what the scheduler conditions on
  SessionMetrics metrics;
  std::vector<char> frame_received;  // any reception this frame
  std::vector<char> frame_heard;     // feedback heard this frame
  long long clock = 1;               // next slot to execute
  long long cap = 0;
  bool recovery = false;  // delay units only accrue during recovery

  SessionState(int receivers, int packets, FrameSchedule sched)
      : view(receivers, packets, sched) {}
};

// Broadcasts every packet once, uncoded, under the TDD schedule, processing
// feedback frames as in recovery; returns the state poised at the first
// recovery frame.
SessionState run_initial_phase(const SessionConfig& config, Rng& rng);

// One recovery downlink slot: graph build, filtering, clique selection,
// attempt bookkeeping, channel stepping, reception/decode/delay.
void run_recovery_slot(SessionState& s, const SessionConfig& config,
                       long long t, Rng& rng);

// One whole uplink subframe plus the unheard-frame closing that follows it.
void run_uplink(SessionState& s, const SessionConfig& config, int frame,
                Rng& rng);

SessionMetrics run_session(const SessionConfig& config, Rng& rng);

// Perfect prompt feedback oracle: per-slot frames, feedback never lost,
// every receiver reports every frame. Implemented as a config transform.
SessionMetrics opt_baseline(SessionConfig config, Rng& rng);

}  // namespace gidnc
