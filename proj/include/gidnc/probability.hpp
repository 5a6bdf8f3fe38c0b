#pragma once
// The scheduler's probability estimates, all conditioned on the sender's
// view: per-slot erasure and feedback-loss probabilities anchored at the last
// heard feedback, the posterior that an unconfirmed packet is still missing,
// the posterior that a receiver already finished, and the per-transmission
// expected decoding-delay increments built from them.

#include <vector>

#include "gidnc/channel.hpp"
#include "gidnc/graph.hpp"
#include "gidnc/tracking.hpp"

namespace gidnc {

// P(forward channel of `receiver` is Bad at downlink slot t | view).
// Falls back to the steady state before any feedback was heard.
double erasure_prob(const SenderView& view, const GecParams& forward,
                    int receiver, long long t);

// P(a feedback sent at slot t by `receiver` is lost | view), same fallback.
double feedback_loss_prob(const SenderView& view, const GecParams& feedback,
                          int receiver, long long t);

// Posterior that `packet` is still missing at `receiver` given the silent
// window: product over current-frame attempts of the erasure probability,
// times one Bayes factor per unheard frame in which the packet was attempted.
double innovative_prob(const SenderView& view, const LinkParams& params,
                       int receiver, int packet, long long t);

// Posterior that the receiver already holds all its wanted packets without
// the sender knowing: product of (1 - innovative_prob) over the Wants set.
double finish_prob(const SenderView& view, const LinkParams& params,
                   int receiver, long long t);

struct ReceiverClassification {
  bool wants_nonempty = false;
  bool targeted_primary = false;      // clique decodes a wanted packet for it
  bool fully_uncertain = false;       // every wanted packet is uncertain
  bool target_state_unknown = false;  // the targeted wanted packet is uncertain
  int targeted_packet = -1;
};

ReceiverClassification classify(const SenderView& view, const Clique& clique,
                                int receiver);

// P(this transmission adds one unit of decoding delay at `receiver`),
// by case over (targeted?, target certain?, fully uncertain?); 0 for
// receivers whose Wants set is empty.
double delay_increment_prob(const SenderView& view,
                            const std::vector<LinkParams>& params,
                            const Clique& clique, int receiver, long long t);

// Sum of delay_increment_prob over all receivers.
double expected_sum_delay(const SenderView& view,
                          const std::vector<LinkParams>& params,
                          const Clique& clique, long long t);

// Closed forms of the seven degenerate regimes (memoryless and/or perfect
// feedback and/or feedback after every downlink slot). Used as cross-checks
// that the general machinery reduces correctly.
enum class SpecialCase {
  PersistentLossyPromptFeedback,    // memory, lossy feedback, T_d = 1
  PersistentPerfectIntermittent,    // memory, perfect feedback, frames
  PersistentPerfectPromptFeedback,  // memory, perfect feedback, T_d = 1
  MemorylessLossyIntermittent,
  MemorylessLossyPromptFeedback,
  MemorylessPerfectIntermittent,
  MemorylessPerfectPromptFeedback,
};

struct SpecialCaseInputs {
  double memory = 0.0;        // must be 0 for the memoryless cases
  double erasure = 0.0;       // constant per-slot erasure prob (memoryless)
  double feedback_loss = 0.0; // constant loss prob; must be 0 when perfect
  // Per unheard frame, for the persistent prompt-feedback case: the erasure
  // probability at that frame's single attempt slot and the loss probability
  // at its feedback slot.
  std::vector<double> frame_erasure;
  std::vector<double> frame_feedback_loss;
  // Per unheard frame, for the memoryless intermittent case: total attempts
  // to the receiver and attempts of the packet in question.
  std::vector<int> frame_attempts_total;
  std::vector<int> frame_attempts_packet;
  // Erasure probabilities at the current frame's attempt slots (persistent),
  // or their count (memoryless).
  std::vector<double> current_erasure;
  int unheard_frames = 0;
  int current_attempts = 0;
};

double special_case_innovative(SpecialCase kind, const SpecialCaseInputs& in);

}  // namespace gidnc
