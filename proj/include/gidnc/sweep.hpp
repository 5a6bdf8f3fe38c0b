#pragma once
// Monte-Carlo experiment harness: sweeps one config axis across a value
// list and a set of algorithms, aggregates session mean delays across
// iterations, and reads/writes the result table as CSV.

#include <cstdint>
#include <string>
#include <vector>

#include "gidnc/sim.hpp"

namespace gidnc {

enum class SweepAxis { Receivers, Packets, Memory, FrameLen, DemandRatio };

// Axis labels are M, N, mu, Tf, L.
std::string axis_name(SweepAxis axis);
SweepAxis axis_from_name(const std::string& name);
std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct SweepSpec {
  SweepAxis axis = SweepAxis::Receivers;
  std::vector<double> values;  // strictly increasing
  SessionConfig base;
  std::vector<Algorithm> algorithms{Algorithm::AguGreedy};
  int iterations = 1;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct SweepCell {
  std::string axis;
  double value = 0.0;
  Algorithm algorithm = Algorithm::AguGreedy;
  double mean_delay = 0.0;
  double std_error = 0.0;
  int iterations = 0;
  bool capped = false;  // some iteration hit the slot cap
};

// The base config with one axis value substituted. FrameLen keeps the
// uplink length and stretches the downlink.
SessionConfig apply_axis(const SessionConfig& base, SweepAxis axis,
                         double value);

// One cell per (value, algorithm); iteration seeds depend on (spec seed,
// value index, iteration) but not on the algorithm, so algorithms are
// compared on matched random worlds. Deterministic for a fixed spec,
// regardless of thread count.
std::vector<SweepCell> run_sweep(const SweepSpec& spec);

std::string csv_string(const std::vector<SweepCell>& table);
void emit_csv(const std::vector<SweepCell>& table, const std::string& path);
std::vector<SweepCell> read_csv(const std::string& path);

}  // namespace gidnc
