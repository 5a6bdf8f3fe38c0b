// Acceptance suite: nine checks, one line of output each. Checks 1-5 verify
// the probability and graph machinery against independent oracles, 6-7
// reproduce the published delay trends at full scale, 8 pins determinism,
// and 9 is excluded (the competing heuristic it would compare against is not
// specified anywhere reproducible). Exit status is nonzero if any check
// fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "gidnc/probability.hpp"
#include "gidnc/sim.hpp"
#include "gidnc/sweep.hpp"
#include "../oracles.hpp"

using gidnc::Algorithm;
using gidnc::Clique;
using gidnc::EntryState;
using gidnc::FrameSchedule;
using gidnc::GecParams;
using gidnc::IdncGraph;
using gidnc::LinkParams;
using gidnc::Rng;
using gidnc::SenderView;
using gidnc::SessionConfig;
using gidnc::SweepCell;
using gidnc::SweepSpec;

namespace {

int g_failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int number, const char* label, bool pass,
            const std::string& detail) {
  std::printf("criterion %d [%s]: %s (%s)\n", number, label,
              pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

// ---- criterion 1: k-step flip probability vs 2x2 matrix powers ----

void criterion_markov() {
  Timer timer;
  double max_err = 0.0;
  for (int bi = 0; bi < 10; ++bi) {
    for (int gi = 0; gi < 10; ++gi) {
      const double b = 0.05 + 0.1 * bi;
      const double g = 0.05 + 0.1 * gi;
      const double memory = 1.0 - b - g;
      for (int steps = 0; steps <= 64; ++steps) {
        max_err = std::max(
            max_err, std::abs(gidnc::k_step_flip_prob(b, memory, steps) -
                              oracles::matrix_flip_prob(b, g, steps)));
        max_err = std::max(
            max_err, std::abs(gidnc::k_step_flip_prob(g, memory, steps) -
                              oracles::matrix_flip_prob(g, b, steps)));
      }
    }
  }
  const double elapsed = timer.seconds();
  report(1, "markov oracle", max_err <= 1e-12 && elapsed < 1.0,
         fmt("max err %.3g over 13000 cases, %.2f s", max_err, elapsed));
}

// ---- criterion 2: posterior vs exhaustive outcome enumeration ----

// Enumerates every silent-window scenario with up to `max_packets` attempted
// packets and up to two closed unheard frames on a T_d=3, T_u=2 schedule,
// both anchor polarities and two channel parameter sets.
void criterion_bayes() {
  Timer timer;
  const FrameSchedule sched{3, 2};
  const LinkParams param_sets[2] = {
      {GecParams{0.2, 0.7}, GecParams{0.15, 0.6}},
      {GecParams{0.35, 0.4}, GecParams{0.3, 0.5}},
  };
  double max_err = 0.0;
  long long scenarios = 0;

  for (int n_pkts = 1; n_pkts <= 3; ++n_pkts) {
    const int full = (1 << n_pkts) - 1;  // attempt subsets over packets 1..n
    std::vector<std::vector<int>> frame_choices;  // nonempty subsets
    for (int set = 1; set <= full; ++set) {
      std::vector<int> slots;
      for (int j = 0; j < n_pkts; ++j)
        if ((set >> j) & 1) slots.push_back(j + 1);
      frame_choices.push_back(slots);
    }
    const int n_choices = static_cast<int>(frame_choices.size());

    for (int n_frames = 0; n_frames <= 2; ++n_frames) {
      long long combos = 1;
      for (int k = 0; k < n_frames; ++k) combos *= n_choices;
      for (long long combo = 0; combo < combos; ++combo) {
        oracles::WindowScript script;
        script.packets = n_pkts + 1;  // packet 0 carries the anchor
        script.demand.clear();
        for (int j = 0; j <= n_pkts; ++j) script.demand.push_back(j);
        long long rest = combo;
        for (int k = 0; k < n_frames; ++k) {
          script.closed_frames.push_back(frame_choices[rest % n_choices]);
          rest /= n_choices;
        }
        for (int current = 0; current <= full; ++current) {
          script.current_attempts.clear();
          for (int j = 0; j < n_pkts; ++j)
            if ((current >> j) & 1) script.current_attempts.push_back(j + 1);
          for (bool acked : {false, true}) {
            script.anchor_acked = acked;
            for (const LinkParams& link : param_sets) {
              const oracles::ScriptedView sv =
                  oracles::scripted_view(script, sched);
              ++scenarios;

              // oracle fed the engine's own per-slot probabilities, so the
              // comparison isolates the conditioning structure
              oracles::OracleScenario sc;
              for (const gidnc::FrameRecord& rec : sv.view.window(0)) {
                if (rec.closed_unheard) {
                  oracles::OracleFrame of;
                  for (const gidnc::Attempt& at : rec.attempts)
                    of.attempts.push_back(
                        {at.packet, gidnc::erasure_prob(sv.view, link.forward,
                                                        0, at.slot)});
                  of.feedback_loss = gidnc::feedback_loss_prob(
                      sv.view, link.feedback, 0,
                      sched.feedback_time(0, rec.frame));
                  sc.closed.push_back(of);
                } else {
                  for (const gidnc::Attempt& at : rec.attempts)
                    sc.current.push_back(
                        {at.packet, gidnc::erasure_prob(sv.view, link.forward,
                                                        0, at.slot)});
                }
              }

              double finish_oracle = 1.0;
              for (int j : sv.view.wants(0)) {
                const double engine =
                    gidnc::innovative_prob(sv.view, link, 0, j, sv.eval_t);
                const double exact = oracles::enumerate_missing(sc, j);
                max_err = std::max(max_err, std::abs(engine - exact));
                finish_oracle *= 1.0 - exact;
              }
              max_err = std::max(
                  max_err,
                  std::abs(gidnc::finish_prob(sv.view, link, 0, sv.eval_t) -
                           finish_oracle));
            }
          }
        }
      }
    }
  }
  const double elapsed = timer.seconds();
  report(2, "bayes oracle", max_err <= 1e-12 && elapsed < 10.0,
         fmt("max err %.3g over %lld scenarios, %.2f s", max_err, scenarios,
             elapsed));
}

// ---- criterion 3: general formulas vs the seven closed forms ----

// One randomized history: random per-direction channel parameters, random
// anchor polarity, and random frame contents under the structural
// constraints of the regime (downlink width, perfect feedback, memory).
struct RegimeCheck {
  const char* name;
  double max_err = 0.0;
};

double persistent_prompt_lossy(Rng& rng) {
  const FrameSchedule sched{1, 1};
  const LinkParams link{GecParams{rng.uniform(0.05, 0.6), rng.uniform(0.1, 0.8)},
                        GecParams{rng.uniform(0.05, 0.6), rng.uniform(0.1, 0.8)}};
  const int n_pkts = 1 + static_cast<int>(rng.below(2));
  oracles::WindowScript script;
  script.packets = n_pkts + 1;
  for (int j = 0; j <= n_pkts; ++j) script.demand.push_back(j);
  script.anchor_acked = rng.bernoulli(0.5);
  const int frames = 1 + static_cast<int>(rng.below(6));
  for (int k = 0; k < frames; ++k)
    script.closed_frames.push_back({1 + static_cast<int>(rng.below(n_pkts))});
  const oracles::ScriptedView sv = oracles::scripted_view(script, sched);

  double max_err = 0.0;
  for (int j = 1; j <= n_pkts; ++j) {
    gidnc::SpecialCaseInputs in;
    for (const gidnc::FrameRecord& rec : sv.view.window(0)) {
      if (!rec.closed_unheard || rec.attempts[0].packet != j) continue;
      in.frame_erasure.push_back(gidnc::erasure_prob(
          sv.view, link.forward, 0, rec.attempts[0].slot));
      in.frame_feedback_loss.push_back(gidnc::feedback_loss_prob(
          sv.view, link.feedback, 0, sched.feedback_time(0, rec.frame)));
    }
    const double closed = gidnc::special_case_innovative(
        gidnc::SpecialCase::PersistentLossyPromptFeedback, in);
    max_err = std::max(
        max_err,
        std::abs(closed - gidnc::innovative_prob(sv.view, link, 0, j,
                                                 sv.eval_t)));
  }
  return max_err;
}

double persistent_intermittent_perfect(Rng& rng) {
  const FrameSchedule sched{3, 2};
  const LinkParams link{GecParams{rng.uniform(0.05, 0.6), rng.uniform(0.1, 0.8)},
                        GecParams{0.0, rng.uniform(0.1, 0.9)}};
  const int n_pkts = 1 + static_cast<int>(rng.below(3));
  oracles::WindowScript script;
  script.packets = n_pkts + 1;
  for (int j = 0; j <= n_pkts; ++j) script.demand.push_back(j);
  script.anchor_acked = rng.bernoulli(0.5);
  const int frames = static_cast<int>(rng.below(3));
  for (int k = 0; k < frames; ++k) {
    std::vector<int> slots;
    const int width = 1 + static_cast<int>(rng.below(3));
    for (int s = 0; s < width; ++s)
      slots.push_back(1 + static_cast<int>(rng.below(n_pkts)));
    script.closed_frames.push_back(slots);
  }
  const int current = static_cast<int>(rng.below(4));
  for (int s = 0; s < current; ++s)
    script.current_attempts.push_back(1 + static_cast<int>(rng.below(n_pkts)));
  const oracles::ScriptedView sv = oracles::scripted_view(script, sched);

  double max_err = 0.0;
  for (int j = 1; j <= n_pkts; ++j) {
    gidnc::SpecialCaseInputs in;
    for (const gidnc::FrameRecord& rec : sv.view.window(0)) {
      if (rec.closed_unheard) continue;
      for (const gidnc::Attempt& at : rec.attempts)
        if (at.packet == j)
          in.current_erasure.push_back(
              gidnc::erasure_prob(sv.view, link.forward, 0, at.slot));
    }
    const double closed = gidnc::special_case_innovative(
        gidnc::SpecialCase::PersistentPerfectIntermittent, in);
    max_err = std::max(
        max_err,
        std::abs(closed - gidnc::innovative_prob(sv.view, link, 0, j,
                                                 sv.eval_t)));
  }
  return max_err;
}

double persistent_prompt_perfect(Rng& rng) {
  const FrameSchedule sched{1, 1};
  const LinkParams link{GecParams{rng.uniform(0.05, 0.6), rng.uniform(0.1, 0.8)},
                        GecParams{0.0, rng.uniform(0.1, 0.9)}};
  const int n_pkts = 1 + static_cast<int>(rng.below(2));
  oracles::WindowScript script;
  script.packets = n_pkts + 1;
  for (int j = 0; j <= n_pkts; ++j) script.demand.push_back(j);
  script.anchor_acked = rng.bernoulli(0.5);
  const int frames = static_cast<int>(rng.below(5));
  for (int k = 0; k < frames; ++k)
    script.closed_frames.push_back({1 + static_cast<int>(rng.below(n_pkts))});
  const oracles::ScriptedView sv = oracles::scripted_view(script, sched);

  double max_err = 0.0;
  gidnc::SpecialCaseInputs in;
  const double closed = gidnc::special_case_innovative(
      gidnc::SpecialCase::PersistentPerfectPromptFeedback, in);
  for (int j = 1; j <= n_pkts; ++j)
    max_err = std::max(
        max_err,
        std::abs(closed - gidnc::innovative_prob(sv.view, link, 0, j,
                                                 sv.eval_t)));
  return max_err;
}

// Shared generator for the memoryless regimes: erasure rate p gives
// GecParams{p, 1-p}, which has memory 0 and a flat per-slot erasure
// probability regardless of the anchor state.
double memoryless_regime(Rng& rng, bool lossy, bool intermittent) {
  const FrameSchedule sched = intermittent ? FrameSchedule{3, 2}
                                           : FrameSchedule{1, 1};
  const double p = rng.uniform(0.05, 0.7);
  const double q = lossy ? rng.uniform(0.05, 0.7) : 0.0;
  const LinkParams link{GecParams{p, 1.0 - p}, GecParams{q, 1.0 - q}};
  const int n_pkts = 1 + static_cast<int>(rng.below(intermittent ? 3 : 2));
  oracles::WindowScript script;
  script.packets = n_pkts + 1;
  for (int j = 0; j <= n_pkts; ++j) script.demand.push_back(j);
  script.anchor_acked = rng.bernoulli(0.5);
  const int frames = static_cast<int>(rng.below(4));
  for (int k = 0; k < frames; ++k) {
    std::vector<int> slots;
    const int width = intermittent ? 1 + static_cast<int>(rng.below(3)) : 1;
    for (int s = 0; s < width; ++s)
      slots.push_back(1 + static_cast<int>(rng.below(n_pkts)));
    script.closed_frames.push_back(slots);
  }
  if (intermittent) {
    const int current = static_cast<int>(rng.below(4));
    for (int s = 0; s < current; ++s)
      script.current_attempts.push_back(1 +
                                        static_cast<int>(rng.below(n_pkts)));
  }
  const oracles::ScriptedView sv = oracles::scripted_view(script, sched);

  double max_err = 0.0;
  for (int j = 1; j <= n_pkts; ++j) {
    gidnc::SpecialCaseInputs in;
    in.memory = 0.0;
    in.erasure = p;
    in.feedback_loss = q;
    for (const gidnc::FrameRecord& rec : sv.view.window(0)) {
      if (rec.closed_unheard) {
        int total = 0;
        int mine = 0;
        for (const gidnc::Attempt& at : rec.attempts) {
          ++total;
          if (at.packet == j) ++mine;
        }
        if (mine == 0) continue;  // no evidence about this packet
        in.frame_attempts_total.push_back(total);
        in.frame_attempts_packet.push_back(mine);
        ++in.unheard_frames;
      } else {
        for (const gidnc::Attempt& at : rec.attempts)
          if (at.packet == j) ++in.current_attempts;
      }
    }
    gidnc::SpecialCase kind;
    if (lossy)
      kind = intermittent ? gidnc::SpecialCase::MemorylessLossyIntermittent
                          : gidnc::SpecialCase::MemorylessLossyPromptFeedback;
    else
      kind = intermittent
                 ? gidnc::SpecialCase::MemorylessPerfectIntermittent
                 : gidnc::SpecialCase::MemorylessPerfectPromptFeedback;
    const double closed = gidnc::special_case_innovative(kind, in);
    max_err = std::max(
        max_err,
        std::abs(closed - gidnc::innovative_prob(sv.view, link, 0, j,
                                                 sv.eval_t)));
  }
  return max_err;
}

void criterion_special_cases() {
  Timer timer;
  Rng rng(333);
  RegimeCheck checks[7] = {
      {"persistent lossy prompt"},   {"persistent perfect intermittent"},
      {"persistent perfect prompt"}, {"memoryless lossy intermittent"},
      {"memoryless lossy prompt"},   {"memoryless perfect intermittent"},
      {"memoryless perfect prompt"},
  };
  for (int h = 0; h < 1000; ++h) {
    checks[0].max_err = std::max(checks[0].max_err,
                                 persistent_prompt_lossy(rng));
    checks[1].max_err = std::max(checks[1].max_err,
                                 persistent_intermittent_perfect(rng));
    checks[2].max_err = std::max(checks[2].max_err,
                                 persistent_prompt_perfect(rng));
    checks[3].max_err = std::max(checks[3].max_err,
                                 memoryless_regime(rng, true, true));
    checks[4].max_err = std::max(checks[4].max_err,
                                 memoryless_regime(rng, true, false));
    checks[5].max_err = std::max(checks[5].max_err,
                                 memoryless_regime(rng, false, true));
    checks[6].max_err = std::max(checks[6].max_err,
                                 memoryless_regime(rng, false, false));
  }
  double worst = 0.0;
  const char* worst_name = checks[0].name;
  for (const RegimeCheck& c : checks) {
    if (c.max_err > worst) {
      worst = c.max_err;
      worst_name = c.name;
    }
  }
  report(3, "special-case reductions", worst <= 1e-12,
         fmt("worst err %.3g (%s), 1000 histories x 7 regimes, %.2f s", worst,
             worst_name, timer.seconds()));
}

// ---- criterion 4: per-transmission delay probability vs Monte Carlo ----

// Samples ground truths the way the five-case decomposition models them:
// certain wanted packets are missing, uncertain ones missing independently
// with their posterior, receptions erased with the anchored per-slot
// probability, and a receiver is delayed on any reception that does not
// decode its targeted wanted packet, unless it had secretly finished.
void criterion_delay_mc() {
  Timer timer;
  const int trials = 100000;
  double worst_sigma = 0.0;
  int views_used = 0;
  int receivers_checked = 0;

  for (std::uint64_t seed = 1; views_used < 20 && seed < 200; ++seed) {
    SessionConfig config;
    config.receivers = 6;
    config.packets = 8;
    config.demand_ratio = 0.7;
    config.b_min = 0.15;
    config.b_max = 0.35;
    config.mu = 0.5;
    config.t_down = 3;
    config.t_up = 2;
    Rng rng(gidnc::hash_combine(300, seed));
    gidnc::SessionState s = gidnc::run_initial_phase(config, rng);
    const int extra_frames = static_cast<int>(seed % 4);
    for (int f = 0; f < extra_frames; ++f) {
      const int frame = s.view.schedule().frame_of(s.clock);
      for (int d = 0; d < config.t_down; ++d)
        gidnc::run_recovery_slot(s, config, s.clock, rng);
      gidnc::run_uplink(s, config, frame, rng);
    }
    if (s.view.all_wants_empty()) continue;

    const long long t = s.clock;
    IdncGraph graph = gidnc::build_graph(s.view);
    gidnc::base_weights(graph, s.view, s.params, t);
    gidnc::connectivity_weights(graph);
    const Clique clique = gidnc::greedy_select(graph, s.view);
    if (clique.empty()) continue;
    ++views_used;

    Rng mc(gidnc::hash_combine(9000, seed));
    for (int i = 0; i < config.receivers; ++i) {
      const double predicted =
          gidnc::delay_increment_prob(s.view, s.params, clique, i, t);
      std::vector<int> uncertain;
      bool has_certain_want = false;
      for (int j = 0; j < config.packets; ++j) {
        if (s.view.entry(i, j) == EntryState::Wanted) has_certain_want = true;
        if (s.view.entry(i, j) == EntryState::UncertainWanted)
          uncertain.push_back(j);
      }
      std::vector<double> p_in;
      for (int j : uncertain)
        p_in.push_back(
            gidnc::innovative_prob(s.view, s.params[i], i, j, t));
      const double p_erase =
          gidnc::erasure_prob(s.view, s.params[i].forward, i, t);
      const gidnc::CliqueMember* member = clique.member_for(i);
      const int target =
          member != nullptr && member->primary ? member->packet : -1;
      const bool wants_empty = s.view.wants_empty(i);

      long long delayed = 0;
      for (int trial = 0; trial < trials; ++trial) {
        if (wants_empty) break;
        if (mc.bernoulli(p_erase)) continue;  // erased: never a delay unit
        bool finished = !has_certain_want;
        bool target_missing =
            target >= 0 && s.view.entry(i, target) == EntryState::Wanted;
        for (std::size_t k = 0; k < uncertain.size(); ++k) {
          const bool missing = mc.bernoulli(p_in[k]);
          if (missing) finished = false;
          if (uncertain[k] == target && missing) target_missing = true;
        }
        if (finished) continue;  // secretly complete: no delay
        if (target >= 0 && target_missing) continue;  // innovative decode
        ++delayed;
      }
      const double freq = static_cast<double>(delayed) / trials;
      const double se =
          std::sqrt(std::max(predicted * (1.0 - predicted), 0.0) / trials);
      const double sigmas =
          se > 0.0 ? std::abs(freq - predicted) / se
                   : (freq == predicted ? 0.0 : 1e9);
      worst_sigma = std::max(worst_sigma, sigmas);
      ++receivers_checked;
    }
  }
  report(4, "per-slot delay monte carlo",
         views_used == 20 && worst_sigma <= 3.0,
         fmt("%d views, %d receivers, worst |freq-p| = %.2f sigma, %.1f s",
             views_used, receivers_checked, worst_sigma, timer.seconds()));
}

// ---- criterion 5: clique search vs subset enumeration ----

SenderView random_instance(Rng& rng, int receivers, int packets) {
  const FrameSchedule sched{packets, 2};
  SenderView view(receivers, packets, sched);
  for (int i = 0; i < receivers; ++i) {
    std::vector<int> demand;
    for (int j = 0; j < packets; ++j)
      if (rng.bernoulli(0.6)) demand.push_back(j);
    if (demand.empty()) demand.push_back(static_cast<int>(rng.below(packets)));
    view.set_demand(i, demand);
  }
  for (int i = 0; i < receivers; ++i) {
    std::vector<int> acked;
    for (int j = 0; j < packets; ++j)
      if (rng.bernoulli(0.3)) acked.push_back(j);
    view.apply_feedback(i, acked, sched.feedback_time(i, 1));
  }
  // a closed unheard frame seeds uncertain entries
  for (int slot = 0; slot < packets; ++slot) {
    std::vector<std::pair<int, int>> targets;
    for (int i = 0; i < receivers; ++i) {
      if (!rng.bernoulli(0.35)) continue;
      std::vector<int> open;
      for (int j = 0; j < packets; ++j)
        if (view.is_wanted(i, j) &&
            view.window_attempt_count(i, j) == 0)
          open.push_back(j);
      if (!open.empty())
        targets.push_back({i, open[rng.below(open.size())]});
    }
    if (!targets.empty())
      view.record_attempt(targets, sched.frame_start(2) + slot);
  }
  for (int i = 0; i < receivers; ++i)
    if (rng.bernoulli(0.7)) view.close_frame_unheard(i, 2);
  return view;
}

void criterion_clique() {
  Timer timer;
  Rng rng(555);
  int instances = 0;
  int mismatches = 0;
  int greedy_above = 0;
  double ratio_sum = 0.0;
  int ratio_count = 0;

  while (instances < 500) {
    const int receivers = 2 + static_cast<int>(rng.below(4));
    const int packets = 2 + static_cast<int>(rng.below(5));
    SenderView view = random_instance(rng, receivers, packets);

    std::vector<LinkParams> params;
    for (int i = 0; i < receivers; ++i)
      params.push_back({GecParams{rng.uniform(0.05, 0.5),
                                  rng.uniform(0.2, 0.9)},
                        GecParams{rng.uniform(0.05, 0.5),
                                  rng.uniform(0.2, 0.9)}});
    const long long t = view.schedule().frame_start(3);

    IdncGraph graph = gidnc::build_graph(view);
    std::vector<int> primary;
    for (int v = 0; v < graph.size(); ++v)
      if (graph.vertices()[v].primary) primary.push_back(v);
    if (primary.empty() || primary.size() > 12) continue;
    ++instances;

    gidnc::base_weights(graph, view, params, t);
    gidnc::connectivity_weights(graph);

    std::vector<double> weights;
    std::vector<std::uint32_t> adjacency(primary.size(), 0);
    for (std::size_t a = 0; a < primary.size(); ++a) {
      weights.push_back(graph.vertices()[primary[a]].base_weight);
      for (std::size_t b = 0; b < primary.size(); ++b)
        if (a != b && graph.adjacent(primary[a], primary[b]))
          adjacency[a] |= 1u << b;
    }
    const oracles::BruteCliqueResult brute =
        oracles::brute_force_clique(weights, adjacency);

    auto primary_objective = [&](const Clique& clique) {
      double sum = 0.0;
      for (const gidnc::CliqueMember& m : clique.members) {
        if (!m.primary) continue;
        for (int v : primary) {
          const gidnc::Vertex& vx = graph.vertices()[v];
          if (vx.receiver == m.receiver && vx.packet == m.packet)
            sum += vx.base_weight;
        }
      }
      return sum;
    };
    auto primary_members = [&](const Clique& clique) {
      std::vector<std::pair<int, int>> out;
      for (const gidnc::CliqueMember& m : clique.members)
        if (m.primary) out.push_back({m.receiver, m.packet});
      std::sort(out.begin(), out.end());
      return out;
    };

    const Clique exact = gidnc::exact_max_weight_clique(graph, view);
    std::vector<std::pair<int, int>> brute_members;
    for (int v : brute.vertices)
      brute_members.push_back({graph.vertices()[primary[v]].receiver,
                               graph.vertices()[primary[v]].packet});
    if (std::abs(primary_objective(exact) - brute.objective) > 1e-12 ||
        primary_members(exact) != brute_members)
      ++mismatches;

    const Clique greedy = gidnc::greedy_select(graph, view);
    const double greedy_obj = primary_objective(greedy);
    if (greedy_obj > brute.objective + 1e-12) ++greedy_above;
    if (brute.objective > 0.0) {
      ratio_sum += greedy_obj / brute.objective;
      ++ratio_count;
    }
  }
  const double avg_ratio = ratio_count > 0 ? ratio_sum / ratio_count : 0.0;
  report(5, "clique optimality",
         mismatches == 0 && greedy_above == 0 && avg_ratio >= 0.9,
         fmt("500 instances: %d exact mismatches, %d greedy exceedances, "
             "mean greedy/exact %.4f, %.2f s",
             mismatches, greedy_above, avg_ratio, timer.seconds()));
}

// ---- criteria 6-7: full-scale delay trends ----

SessionConfig paper_base() {
  SessionConfig base;
  base.receivers = 60;
  base.packets = 30;
  base.demand_ratio = 0.8;
  base.b_min = 0.1;
  base.b_max = 0.3;
  base.coupling = gidnc::Coupling::Reciprocal;
  base.t_down = 4;
  base.t_up = 1;
  return base;
}

void criterion_memory_trend() {
  Timer timer;
  SweepSpec spec;
  spec.axis = gidnc::SweepAxis::Memory;
  spec.values = {0.0, 0.4, 0.6, 0.8};
  spec.base = paper_base();
  spec.algorithms = {Algorithm::Opt, Algorithm::AguGreedy, Algorithm::Fve,
                     Algorithm::Sve};
  spec.iterations = 300;
  spec.seed = 606;
  const std::vector<SweepCell> table = gidnc::run_sweep(spec);

  auto mean = [&](double mu, Algorithm a) {
    for (const SweepCell& cell : table)
      if (cell.value == mu && cell.algorithm == a) return cell.mean_delay;
    return -1.0;
  };

  bool ordered = true;
  std::string detail;
  for (double mu : {0.4, 0.6, 0.8}) {
    const double opt = mean(mu, Algorithm::Opt);
    const double agu = mean(mu, Algorithm::AguGreedy);
    const double fve = mean(mu, Algorithm::Fve);
    const double sve = mean(mu, Algorithm::Sve);
    if (!(opt <= agu && agu <= std::min(fve, sve))) ordered = false;
    detail += fmt("mu=%.1f opt %.2f agu %.2f fve %.2f sve %.2f; ", mu, opt,
                  agu, fve, sve);
  }
  const double agu0 = mean(0.0, Algorithm::AguGreedy);
  const double fve0 = mean(0.0, Algorithm::Fve);
  const double sve0 = mean(0.0, Algorithm::Sve);
  const double hi = std::max({agu0, fve0, sve0});
  const double lo = std::min({agu0, fve0, sve0});
  const bool close_at_zero = hi <= 1.1 * lo;
  detail += fmt("ordering %s; ", ordered ? "holds" : "violated");
  detail += fmt("mu=0 agu %.2f fve %.2f sve %.2f spread %.1f%% (bound 10%%); "
                "%.0f s",
                agu0, fve0, sve0, 100.0 * (hi / lo - 1.0), timer.seconds());
  report(6, "memory trend", ordered && close_at_zero, detail);
}

void criterion_demand_trend() {
  Timer timer;
  SweepSpec spec;
  spec.axis = gidnc::SweepAxis::DemandRatio;
  spec.values = {0.2, 0.5, 0.9};
  spec.base = paper_base();
  spec.base.mu = 0.2;
  spec.algorithms = {Algorithm::AguGreedy};
  spec.iterations = 300;
  spec.seed = 707;
  const std::vector<SweepCell> table = gidnc::run_sweep(spec);
  const double low = table[0].mean_delay;
  const double mid = table[1].mean_delay;
  const double high = table[2].mean_delay;
  report(7, "demand-ratio hump", mid > low && mid > high,
         fmt("L=0.2: %.2f, L=0.5: %.2f, L=0.9: %.2f, %.0f s", low, mid, high,
             timer.seconds()));
}

void criterion_determinism() {
  Timer timer;
  SweepSpec spec;
  spec.axis = gidnc::SweepAxis::Memory;
  spec.values = {0.0, 0.4};
  spec.base.receivers = 10;
  spec.base.packets = 10;
  spec.base.t_down = 4;
  spec.base.t_up = 1;
  spec.algorithms = {Algorithm::AguGreedy, Algorithm::Sve};
  spec.iterations = 25;
  spec.seed = 808;
  const std::string first = gidnc::csv_string(gidnc::run_sweep(spec));
  const std::string second = gidnc::csv_string(gidnc::run_sweep(spec));
  report(8, "byte-identical reruns", first == second,
         fmt("%zu-byte CSV compared, %.1f s", first.size(), timer.seconds()));
}

}  // namespace

int main() {
  criterion_markov();
  criterion_bayes();
  criterion_special_cases();
  criterion_delay_mc();
  criterion_clique();
  criterion_memory_trend();
  criterion_demand_trend();
  criterion_determinism();
  std::printf(
      "criterion 9 [reference-heuristic margin]: SKIP (the compared "
      "heuristic's vertex weights are not published anywhere reproducible; "
      "excluded by design)\n");
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all checked criteria passed\n");
  return 0;
}
