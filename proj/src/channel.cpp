#include "gidnc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gidnc {

double GecParams::steady_bad() const {
  const double denom = to_bad + to_good;
  if (denom <= 0.0)
    throw std::domain_error("degenerate channel: to_bad + to_good must be > 0");
  return to_bad / denom;
}

GecState step(GecState state, const GecParams& params, Rng& rng) {
  const double leave_prob = state.bad() ? params.to_good : params.to_bad;
  const bool flip = rng.bernoulli(leave_prob);
  if (state.bad())
    return GecState{flip ? ChannelState::Good : ChannelState::Bad};
  return GecState{flip ? ChannelState::Bad : ChannelState::Good};
}

double k_step_flip_prob(double p_tr, double memory, int steps) {
  if (steps <= 0) return 0.0;
  double value;
  if (std::abs(1.0 - memory) < 1e-15) {
    value = p_tr * steps;  // degenerate frozen chain, p_tr is 0 in practice
  } else {
    // Closed form of p_tr * sum_{i=0}^{steps-1} memory^i.
    value = p_tr * (1.0 - std::pow(memory, steps)) / (1.0 - memory);
  }
  return std::clamp(value, 0.0, 1.0);
}

std::pair<double, double> steady_state(const GecParams& params) {
  const double bad = params.steady_bad();
  return {1.0 - bad, bad};
}

GecState sample_initial(const GecParams& params, Rng& rng) {
  return GecState{rng.bernoulli(params.steady_bad()) ? ChannelState::Bad
                                                     : ChannelState::Good};
}

void ChannelPair::sample_initial_states(Rng& rng) {
  forward_state = sample_initial(forward, rng);
  feedback_state = coupling == Coupling::Reciprocal
                       ? forward_state
                       : sample_initial(feedback, rng);
}

void ChannelPair::step(Rng& rng) {
  forward_state = gidnc::step(forward_state, forward, rng);
  feedback_state = coupling == Coupling::Reciprocal
                       ? forward_state
                       : gidnc::step(feedback_state, feedback, rng);
}

}  // namespace gidnc
