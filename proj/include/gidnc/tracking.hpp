#pragma once
// TDD frame arithmetic and the sender's belief about each receiver: the
// feedback matrix, the attempt history of the current silent window, and the
// anchor quantities (last heard frames, once-attempted anchor packet) that
// the probability estimators condition on.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gidnc {

// Raised when a protocol-level constraint that the scheduler is supposed to
// maintain turns out to be violated.
struct ConstraintViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FrameSchedule {
  int t_down = 1;  // downlink slots per frame
  int t_up = 1;    // uplink slots per frame

  int t_frame() const { return t_down + t_up; }

  // Frames are 1-based; slot times are 1-based. Frame n owns slots
  // [(n-1)*T_f + 1, n*T_f], downlink first.
  int frame_of(long long t) const {
    return static_cast<int>((t + t_frame() - 1) / t_frame());
  }
  int prev_downlink_frame(long long t) const {
    return static_cast<int>(t / t_frame());
  }
  bool is_downlink(long long t) const {
    return (t - 1) % t_frame() < t_down;
  }
  long long frame_start(int frame) const {
    return static_cast<long long>(frame - 1) * t_frame() + 1;
  }
  // Receivers share uplink slots round-robin; receiver ids are 0-based.
  int uplink_slot(int receiver) const { return 1 + receiver % t_up; }
  long long feedback_time(int receiver, int frame) const {
    return static_cast<long long>(frame) * t_frame() - t_up +
           uplink_slot(receiver);
  }
};

// Per-entry sender knowledge: 0 / -1 / 1 / x in the feedback matrix.
enum class EntryState { Has, SecondaryLack, Wanted, UncertainWanted };

struct Attempt {
  long long slot = 0;
  int packet = -1;
};

// Attempts made to one receiver within one frame of the current silent
// window. closed_unheard marks frames whose feedback opportunity passed
// without the sender hearing anything.
struct FrameRecord {
  int frame = 0;
  bool closed_unheard = false;
  std::vector<Attempt> attempts;  // ordered by slot
};

struct Anchor {
  bool valid_p = false;       // forward-channel anchor established
  int packet = -1;            // the once-attempted packet of the last window
  long long t0 = 0;           // its single attempt slot
  bool observed_bad = false;  // state at t0: acked -> Good, still wanted -> Bad
  bool valid_q = false;       // any feedback heard yet
  long long t_star = 0;       // first uplink slot of the last heard frame
};

class SenderView {
 public:
  SenderView(int receivers, int packets, FrameSchedule schedule);

  int receiver_count() const { return receivers_; }
  int packet_count() const { return packets_; }
  const FrameSchedule& schedule() const { return schedule_; }

  // Marks the given packets Wanted for the receiver, the rest SecondaryLack.
  void set_demand(int receiver, const std::vector<int>& wanted_packets);

  EntryState entry(int receiver, int packet) const {
    return entries_[static_cast<std::size_t>(receiver) * packets_ + packet];
  }
  bool is_wanted(int receiver, int packet) const {
    const EntryState e = entry(receiver, packet);
    return e == EntryState::Wanted || e == EntryState::UncertainWanted;
  }
  std::vector<int> wants(int receiver) const;
  bool wants_empty(int receiver) const;
  bool all_wants_empty() const;

  // Records one downlink transmission at slot t targeting the given
  // (receiver, packet) pairs. Rejects attempts on packets the sender already
  // knows the receiver has.
  void record_attempt(const std::vector<std::pair<int, int>>& targets,
                      long long t);

  // Processes a heard cumulative acknowledgement at uplink slot t: resolves
  // every uncertain entry, prunes the silent window, shifts the last-heard
  // frames, and refreshes the anchors.
  void apply_feedback(int receiver, const std::vector<int>& acked,
                      long long t);

  // Marks a targeted-but-unheard frame: attempted wanted packets become
  // uncertain and the frame joins the unheard set of each attempted packet.
  void close_frame_unheard(int receiver, int frame);

  // The once-attempted anchor established at the last heard feedback.
  // Throws ConstraintViolation when no anchor was ever established.
  std::pair<int, long long> anchor_packet(int receiver) const;

  const Anchor& anchor(int receiver) const { return anchors_[receiver]; }
  int last_heard(int receiver) const { return last_heard_[receiver]; }
  int prev_heard(int receiver) const { return prev_heard_[receiver]; }

  // Silent-window history (frames after the last heard feedback, oldest
  // first; at most the trailing record is still open).
  const std::vector<FrameRecord>& window(int receiver) const {
    return windows_[receiver];
  }
  bool targeted_in_frame(int receiver, int frame) const;
  // Attempts of this packet across the whole current silent window.
  int window_attempt_count(int receiver, int packet) const {
    return counts_[static_cast<std::size_t>(receiver) * packets_ + packet];
  }

  // Text grid of the feedback matrix: one row per receiver, entries
  // 0 / -1 / 1 / x separated by spaces.
  std::string debug_grid() const;

 private:
  void set_entry(int receiver, int packet, EntryState s) {
    entries_[static_cast<std::size_t>(receiver) * packets_ + packet] = s;
  }
  FrameRecord& record_for(int receiver, int frame);

  int receivers_;
  int packets_;
  FrameSchedule schedule_;
  std::vector<EntryState> entries_;        // receivers x packets
  std::vector<std::vector<FrameRecord>> windows_;
  std::vector<int> counts_;                // window attempt counts per entry
  std::vector<int> last_heard_;            // 0 = never
  std::vector<int> prev_heard_;
  std::vector<Anchor> anchors_;
};

}  // namespace gidnc
