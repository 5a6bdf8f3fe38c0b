#include "gidnc/probability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gidnc {
namespace {

// Straight multiplication unless a factor is tiny, then log-space to dodge
// underflow on long histories.
double product(const std::vector<double>& factors) {
  bool tiny = false;
  for (double f : factors)
    if (f < 1e-6) { tiny = true; break; }
  if (!tiny) {
    double out = 1.0;
    for (double f : factors) out *= f;
    return out;
  }
  double log_sum = 0.0;
  for (double f : factors) {
    if (f <= 0.0) return 0.0;
    log_sum += std::log(f);
  }
  return std::exp(log_sum);
}

void require(bool cond, const char* msg) {
  if (!cond) throw ConstraintViolation(msg);
}

double loss_given_unheard(double p, double q) {
  const double den = p + (1.0 - p) * q;
  return den > 0.0 ? p / den : 1.0;
}

}  // namespace

double erasure_prob(const SenderView& view, const GecParams& forward,
                    int receiver, long long t) {
  const Anchor& anchor = view.anchor(receiver);
  if (!anchor.valid_p) return forward.steady_bad();
  const int steps = static_cast<int>(t - anchor.t0);
  if (!anchor.observed_bad)
    return k_step_flip_prob(forward.to_bad, forward.memory(), steps);
  return 1.0 - k_step_flip_prob(forward.to_good, forward.memory(), steps);
}

double feedback_loss_prob(const SenderView& view, const GecParams& feedback,
                          int receiver, long long t) {
  const Anchor& anchor = view.anchor(receiver);
  if (!anchor.valid_q) return feedback.steady_bad();
  const int steps = static_cast<int>(t - anchor.t_star) +
                    view.schedule().uplink_slot(receiver);
  return k_step_flip_prob(feedback.to_bad, feedback.memory(), steps);
}

double innovative_prob(const SenderView& view, const LinkParams& params,
                       int receiver, int packet, long long t) {
  if (view.entry(receiver, packet) == EntryState::Has) return 0.0;
  std::vector<double> factors;
  const FrameSchedule& sched = view.schedule();
  for (const FrameRecord& rec : view.window(receiver)) {
    if (!rec.closed_unheard) {
      // Open frame: no feedback opportunity yet, so the packet is missing
      // iff each of its attempts so far was erased.
      for (const Attempt& at : rec.attempts)
        if (at.packet == packet)
          factors.push_back(
              erasure_prob(view, params.forward, receiver, at.slot));
      continue;
    }
    double p_all = 1.0;
    double p_pkt = 1.0;
    bool attempted = false;
    for (const Attempt& at : rec.attempts) {
      const double p = erasure_prob(view, params.forward, receiver, at.slot);
      p_all *= p;
      if (at.packet == packet) {
        p_pkt *= p;
        attempted = true;
      }
    }
    if (!attempted) continue;  // the frame carries no evidence on this packet
    // Bayes factor of one unheard frame: unheard means either every downlink
    // reception was erased (no feedback sent) or the feedback itself was lost.
    const double q = feedback_loss_prob(
        view, params.feedback, receiver, sched.feedback_time(receiver, rec.frame));
    const double num = p_all + (p_pkt - p_all) * q;
    const double den = p_all + (1.0 - p_all) * q;
    factors.push_back(den > 0.0 ? num / den : 1.0);
  }
  return std::clamp(product(factors), 0.0, 1.0);
}

double finish_prob(const SenderView& view, const LinkParams& params,
                   int receiver, long long t) {
  std::vector<double> factors;
  for (int j : view.wants(receiver))
    factors.push_back(1.0 - innovative_prob(view, params, receiver, j, t));
  return std::clamp(product(factors), 0.0, 1.0);
}

ReceiverClassification classify(const SenderView& view, const Clique& clique,
                                int receiver) {
  ReceiverClassification c;
  c.wants_nonempty = !view.wants_empty(receiver);
  const CliqueMember* member = clique.member_for(receiver);
  if (member != nullptr && member->primary) {
    c.targeted_primary = true;
    c.targeted_packet = member->packet;
    c.target_state_unknown =
        view.entry(receiver, member->packet) == EntryState::UncertainWanted;
  }
  if (c.wants_nonempty) {
    c.fully_uncertain = true;
    for (int j = 0; j < view.packet_count(); ++j) {
      if (view.entry(receiver, j) == EntryState::Wanted) {
        c.fully_uncertain = false;
        break;
      }
    }
  }
  return c;
}

double delay_increment_prob(const SenderView& view,
                            const std::vector<LinkParams>& params,
                            const Clique& clique, int receiver, long long t) {
  const ReceiverClassification c = classify(view, clique, receiver);
  if (!c.wants_nonempty) return 0.0;
  const LinkParams& link = params[receiver];
  const double receive = 1.0 - erasure_prob(view, link.forward, receiver, t);
  if (!c.targeted_primary) {
    // Untargeted (or targeted only as a side packet): any reception is a
    // delay unit unless the receiver secretly finished already.
    if (!c.fully_uncertain) return std::clamp(receive, 0.0, 1.0);
    const double fin = finish_prob(view, link, receiver, t);
    return std::clamp(receive * (1.0 - fin), 0.0, 1.0);
  }
  if (!c.target_state_unknown) return 0.0;  // certain wanted target
  const double innov =
      innovative_prob(view, link, receiver, c.targeted_packet, t);
  if (!c.fully_uncertain)
    return std::clamp(receive * (1.0 - innov), 0.0, 1.0);
  const double fin = finish_prob(view, link, receiver, t);
  return std::clamp(receive * (1.0 - innov - fin), 0.0, 1.0);
}

double expected_sum_delay(const SenderView& view,
                          const std::vector<LinkParams>& params,
                          const Clique& clique, long long t) {
  double sum = 0.0;
  for (int i = 0; i < view.receiver_count(); ++i)
    sum += delay_increment_prob(view, params, clique, i, t);
  return sum;
}

double special_case_innovative(SpecialCase kind, const SpecialCaseInputs& in) {
  switch (kind) {
    case SpecialCase::PersistentLossyPromptFeedback: {
      require(in.frame_erasure.size() == in.frame_feedback_loss.size(),
              "per-frame erasure and feedback-loss lists must align");
      double out = 1.0;
      for (std::size_t k = 0; k < in.frame_erasure.size(); ++k)
        out *= loss_given_unheard(in.frame_erasure[k],
                                  in.frame_feedback_loss[k]);
      return out;
    }
    case SpecialCase::PersistentPerfectIntermittent: {
      require(in.feedback_loss == 0.0,
              "perfect feedback requires feedback_loss == 0");
      double out = 1.0;
      for (double p : in.current_erasure) out *= p;
      return out;
    }
    case SpecialCase::PersistentPerfectPromptFeedback:
      require(in.feedback_loss == 0.0,
              "perfect feedback requires feedback_loss == 0");
      return 1.0;
    case SpecialCase::MemorylessLossyIntermittent: {
      require(in.memory == 0.0, "memoryless case requires memory == 0");
      require(in.frame_attempts_total.size() ==
                  in.frame_attempts_packet.size(),
              "per-frame attempt counts must align");
      double out = std::pow(in.erasure, in.current_attempts);
      for (std::size_t k = 0; k < in.frame_attempts_total.size(); ++k) {
        require(in.frame_attempts_packet[k] >= 1 &&
                    in.frame_attempts_packet[k] <= in.frame_attempts_total[k],
                "frame attempt counts must include the packet's attempts");
        const double p_all = std::pow(in.erasure, in.frame_attempts_total[k]);
        const double p_pkt = std::pow(in.erasure, in.frame_attempts_packet[k]);
        const double num = p_all + (p_pkt - p_all) * in.feedback_loss;
        const double den = p_all + (1.0 - p_all) * in.feedback_loss;
        out *= den > 0.0 ? num / den : 1.0;
      }
      return out;
    }
    case SpecialCase::MemorylessLossyPromptFeedback:
      require(in.memory == 0.0, "memoryless case requires memory == 0");
      return std::pow(loss_given_unheard(in.erasure, in.feedback_loss),
                      in.unheard_frames);
    case SpecialCase::MemorylessPerfectIntermittent:
      require(in.memory == 0.0 && in.feedback_loss == 0.0,
              "memoryless perfect case requires memory == 0 and "
              "feedback_loss == 0");
      return std::pow(in.erasure, in.current_attempts);
    case SpecialCase::MemorylessPerfectPromptFeedback:
      require(in.memory == 0.0 && in.feedback_loss == 0.0,
              "memoryless perfect case requires memory == 0 and "
              "feedback_loss == 0");
      return 1.0;
  }
  throw std::invalid_argument("unknown special case");
}

}  // namespace gidnc
