#include "gidnc/tracking.hpp"

#include <algorithm>

namespace gidnc {

SenderView::SenderView(int receivers, int packets, FrameSchedule schedule)
    : receivers_(receivers),
      packets_(packets),
      schedule_(schedule),
      entries_(static_cast<std::size_t>(receivers) * packets,
               EntryState::SecondaryLack),
      windows_(receivers),
      counts_(static_cast<std::size_t>(receivers) * packets, 0),
      last_heard_(receivers, 0),
      prev_heard_(receivers, 0),
      anchors_(receivers) {
  if (receivers < 1 || packets < 1)
    throw std::invalid_argument("need at least one receiver and one packet");
}

void SenderView::set_demand(int receiver, const std::vector<int>& wanted) {
  for (int j = 0; j < packets_; ++j)
    set_entry(receiver, j, EntryState::SecondaryLack);
  for (int j : wanted) set_entry(receiver, j, EntryState::Wanted);
}

std::vector<int> SenderView::wants(int receiver) const {
  std::vector<int> out;
  for (int j = 0; j < packets_; ++j)
    if (is_wanted(receiver, j)) out.push_back(j);
  return out;
}

bool SenderView::wants_empty(int receiver) const {
  for (int j = 0; j < packets_; ++j)
    if (is_wanted(receiver, j)) return false;
  return true;
}

bool SenderView::all_wants_empty() const {
  for (int i = 0; i < receivers_; ++i)
    if (!wants_empty(i)) return false;
  return true;
}

FrameRecord& SenderView::record_for(int receiver, int frame) {
  auto& window = windows_[receiver];
  if (window.empty() || window.back().frame != frame) {
    window.push_back(FrameRecord{frame, false, {}});
  }
  return window.back();
}

void SenderView::record_attempt(
    const std::vector<std::pair<int, int>>& targets, long long t) {
  if (!schedule_.is_downlink(t))
    throw std::invalid_argument("attempts are recorded at downlink slots");
  const int frame = schedule_.frame_of(t);
  for (const auto& [receiver, packet] : targets) {
    if (entry(receiver, packet) == EntryState::Has)
      throw std::invalid_argument(
          "attempt on a packet the receiver is known to have");
    record_for(receiver, frame).attempts.push_back(Attempt{t, packet});
    ++counts_[static_cast<std::size_t>(receiver) * packets_ + packet];
  }
}

void SenderView::apply_feedback(int receiver, const std::vector<int>& acked,
                                long long t) {
  if (schedule_.is_downlink(t))
    throw std::invalid_argument("feedback arrives at uplink slots");
  const int frame = schedule_.frame_of(t);

  // Anchor refresh happens against the window that this feedback closes,
  // before entries are resolved: among packets still wanted and attempted
  // exactly once within the window, the latest-attempted one. An empty
  // candidate set keeps the previous anchor.
  int best_packet = -1;
  long long best_slot = -1;
  for (const auto& rec : windows_[receiver]) {
    for (const auto& attempt : rec.attempts) {
      if (!is_wanted(receiver, attempt.packet)) continue;
      if (window_attempt_count(receiver, attempt.packet) != 1) continue;
      // Latest attempt wins; same-slot ties go to the lowest packet id so the
      // result does not depend on recording order.
      if (attempt.slot > best_slot ||
          (attempt.slot == best_slot && attempt.packet < best_packet)) {
        best_slot = attempt.slot;
        best_packet = attempt.packet;
      }
    }
  }

  Anchor& anchor = anchors_[receiver];
  if (best_packet >= 0) {
    anchor.valid_p = true;
    anchor.packet = best_packet;
    anchor.t0 = best_slot;
    anchor.observed_bad =
        std::find(acked.begin(), acked.end(), best_packet) == acked.end();
  }
  anchor.valid_q = true;
  anchor.t_star = static_cast<long long>(frame) * schedule_.t_frame() -
                  schedule_.t_up + 1;

  // Cumulative acknowledgement resolves everything: acked packets are Has,
  // every remaining uncertain entry falls back to Wanted.
  for (int j : acked) set_entry(receiver, j, EntryState::Has);
  for (int j = 0; j < packets_; ++j) {
    if (entry(receiver, j) == EntryState::UncertainWanted)
      set_entry(receiver, j, EntryState::Wanted);
  }

  windows_[receiver].clear();
  std::fill_n(counts_.begin() + static_cast<std::size_t>(receiver) * packets_,
              packets_, 0);
  prev_heard_[receiver] = last_heard_[receiver];
  last_heard_[receiver] = frame;
}

void SenderView::close_frame_unheard(int receiver, int frame) {
  auto& window = windows_[receiver];
  for (auto& rec : window) {
    if (rec.frame != frame) continue;
    rec.closed_unheard = true;
    for (const auto& attempt : rec.attempts) {
      if (entry(receiver, attempt.packet) == EntryState::Wanted)
        set_entry(receiver, attempt.packet, EntryState::UncertainWanted);
    }
    return;
  }
  // Receiver untargeted this frame: nothing to close.
}

std::pair<int, long long> SenderView::anchor_packet(int receiver) const {
  const Anchor& anchor = anchors_[receiver];
  if (!anchor.valid_p)
    throw ConstraintViolation(
        "no once-attempted anchor packet exists for this receiver");
  return {anchor.packet, anchor.t0};
}

bool SenderView::targeted_in_frame(int receiver, int frame) const {
  for (const auto& rec : windows_[receiver])
    if (rec.frame == frame) return !rec.attempts.empty();
  return false;
}

std::string SenderView::debug_grid() const {
  std::string out;
  for (int i = 0; i < receivers_; ++i) {
    for (int j = 0; j < packets_; ++j) {
      if (j) out += ' ';
      switch (entry(i, j)) {
        case EntryState::Has: out += " 0"; break;
        case EntryState::SecondaryLack: out += "-1"; break;
        case EntryState::Wanted: out += " 1"; break;
        case EntryState::UncertainWanted: out += " x"; break;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace gidnc
