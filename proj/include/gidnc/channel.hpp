#pragma once
// Two-state Gilbert-Elliott erasure channel: parameters, state stepping, and
// the closed-form k-step conditional flip probability used by the scheduler's
// belief machinery. Bad means the slot's transmission is erased.

#include <utility>

#include "gidnc/rng.hpp"

namespace gidnc {

struct GecParams {
  double to_bad = 0.0;   // P(Bad at t+1 | Good at t)
  double to_good = 0.0;  // P(Good at t+1 | Bad at t)

  // Correlation of consecutive states; 0 is memoryless, 1 is frozen.
  double memory() const { return 1.0 - to_bad - to_good; }
  double steady_bad() const;   // throws on to_bad + to_good == 0
  double steady_good() const { return 1.0 - steady_bad(); }
};

enum class ChannelState { Good, Bad };

struct GecState {
  ChannelState state = ChannelState::Good;
  bool bad() const { return state == ChannelState::Bad; }
};

enum class Coupling { Independent, IdenticallyDistributed, Reciprocal };

// Forward link carries data, feedback link carries acknowledgements.
// Reciprocal shares a single state realization between the two directions;
// IdenticallyDistributed shares parameters but draws states independently.
struct ChannelPair {
  GecParams forward;
  GecParams feedback;
  Coupling coupling = Coupling::Independent;
  GecState forward_state;
  GecState feedback_state;

  void sample_initial_states(Rng& rng);
  void step(Rng& rng);
};

// Channel parameters the sender knows for one receiver, both directions.
struct LinkParams {
  GecParams forward;
  GecParams feedback;
};

GecState step(GecState state, const GecParams& params, Rng& rng);

// P(chain is in the flipped state after `steps` steps | start state), where
// p_tr is the one-step probability of leaving the start state. Equals
// p_tr * sum_{i=0}^{steps-1} memory^i; 0 for steps == 0.
double k_step_flip_prob(double p_tr, double memory, int steps);

std::pair<double, double> steady_state(const GecParams& params);  // (good, bad)

GecState sample_initial(const GecParams& params, Rng& rng);

}  // namespace gidnc
