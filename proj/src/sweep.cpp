#include "gidnc/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gidnc/rng.hpp"

namespace gidnc {

std::string axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Receivers: return "M";
    case SweepAxis::Packets: return "N";
    case SweepAxis::Memory: return "mu";
    case SweepAxis::FrameLen: return "Tf";
    case SweepAxis::DemandRatio: return "L";
  }
  throw std::invalid_argument("unknown sweep axis");
}

SweepAxis axis_from_name(const std::string& name) {
  if (name == "M") return SweepAxis::Receivers;
  if (name == "N") return SweepAxis::Packets;
  if (name == "mu") return SweepAxis::Memory;
  if (name == "Tf") return SweepAxis::FrameLen;
  if (name == "L") return SweepAxis::DemandRatio;
  throw std::invalid_argument("unknown sweep axis: " + name);
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::AguGreedy: return "agu-greedy";
    case Algorithm::AguExact: return "agu-exact";
    case Algorithm::Fve: return "fve";
    case Algorithm::Sve: return "sve";
    case Algorithm::Opt: return "opt";
  }
  throw std::invalid_argument("unknown algorithm");
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "agu-greedy") return Algorithm::AguGreedy;
  if (name == "agu-exact") return Algorithm::AguExact;
  if (name == "fve") return Algorithm::Fve;
  if (name == "sve") return Algorithm::Sve;
  if (name == "opt") return Algorithm::Opt;
  throw std::invalid_argument("unknown algorithm: " + name);
}

SessionConfig apply_axis(const SessionConfig& base, SweepAxis axis,
                         double value) {
  SessionConfig cfg = base;
  switch (axis) {
    case SweepAxis::Receivers:
      cfg.receivers = static_cast<int>(std::lround(value));
      break;
    case SweepAxis::Packets:
      cfg.packets = static_cast<int>(std::lround(value));
      break;
    case SweepAxis::Memory:
      cfg.mu = value;
      break;
    case SweepAxis::FrameLen: {
      const int t_frame = static_cast<int>(std::lround(value));
      if (t_frame - base.t_up < 1)
        throw std::invalid_argument(
            "frame length leaves no downlink slot given t_up");
      cfg.t_down = t_frame - base.t_up;
      break;
    }
    case SweepAxis::DemandRatio:
      cfg.demand_ratio = value;
      break;
  }
  return cfg;
}

std::vector<SweepCell> run_sweep(const SweepSpec& spec) {
  if (spec.values.empty())
    throw std::invalid_argument("sweep needs at least one axis value");
  for (std::size_t i = 1; i < spec.values.size(); ++i)
    if (!(spec.values[i - 1] < spec.values[i]))
      throw std::invalid_argument("sweep values must be strictly increasing");
  if (spec.algorithms.empty())
    throw std::invalid_argument("sweep needs at least one algorithm");
  if (spec.iterations < 1)
    throw std::invalid_argument("iterations must be >= 1");

  const int n_alg = static_cast<int>(spec.algorithms.size());
  const int n_val = static_cast<int>(spec.values.size());
  const int n_tasks = n_val * n_alg * spec.iterations;
  std::vector<double> task_mean(n_tasks, 0.0);
  std::vector<char> task_capped(n_tasks, 0);

  auto work = [&](int task) {
    const int iter = task % spec.iterations;
    const int cell = task / spec.iterations;
    const int vi = cell / n_alg;
    const int gi = cell % n_alg;
    SessionConfig cfg = apply_axis(spec.base, spec.axis, spec.values[vi]);
    cfg.algorithm = spec.algorithms[gi];
    // Seed ignores the algorithm index so algorithms see matched worlds.
    Rng rng(hash_combine(hash_combine(spec.seed, vi), iter));
    const SessionMetrics m = run_session(cfg, rng);
    task_mean[task] = m.mean_delay;
    task_capped[task] = m.capped;
  };

  if (spec.threads <= 1) {
    for (int task = 0; task < n_tasks; ++task) work(task);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int n_threads = std::min(spec.threads, n_tasks);
    pool.reserve(n_threads);
    for (int k = 0; k < n_threads; ++k) {
      pool.emplace_back([&] {
        while (true) {
          const int task = next.fetch_add(1);
          if (task >= n_tasks) return;
          work(task);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<SweepCell> table;
  table.reserve(static_cast<std::size_t>(n_val) * n_alg);
  for (int vi = 0; vi < n_val; ++vi) {
    for (int gi = 0; gi < n_alg; ++gi) {
      const int cell = vi * n_alg + gi;
      double sum = 0.0;
      bool capped = false;
      for (int k = 0; k < spec.iterations; ++k) {
        sum += task_mean[cell * spec.iterations + k];
        capped = capped || task_capped[cell * spec.iterations + k];
      }
      const double mean = sum / spec.iterations;
      double variance = 0.0;
      for (int k = 0; k < spec.iterations; ++k) {
        const double d = task_mean[cell * spec.iterations + k] - mean;
        variance += d * d;
      }
      SweepCell out;
      out.axis = axis_name(spec.axis);
      out.value = spec.values[vi];
      out.algorithm = spec.algorithms[gi];
      out.mean_delay = mean;
      out.std_error = spec.iterations > 1
                          ? std::sqrt(variance / (spec.iterations - 1)) /
                                std::sqrt(static_cast<double>(spec.iterations))
                          : 0.0;
      out.iterations = spec.iterations;
      out.capped = capped;
      table.push_back(out);
    }
  }
  return table;
}

namespace {

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::string csv_string(const std::vector<SweepCell>& table) {
  std::string out = "axis,value,algorithm,mean_delay,stderr,iterations,capped\n";
  for (const SweepCell& cell : table) {
    out += cell.axis;
    out += ',';
    out += fmt6(cell.value);
    out += ',';
    out += algorithm_name(cell.algorithm);
    out += ',';
    out += fmt6(cell.mean_delay);
    out += ',';
    out += fmt6(cell.std_error);
    out += ',';
    out += std::to_string(cell.iterations);
    out += ',';
    out += cell.capped ? '1' : '0';
    out += '\n';
  }
  return out;
}

void emit_csv(const std::vector<SweepCell>& table, const std::string& path) {
  std::ofstream file(path, std::ios::binary);  // binary keeps LF endings
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file << csv_string(table);
  if (!file) throw std::runtime_error("write failed: " + path);
}

std::vector<SweepCell> read_csv(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(file, line))
    throw std::runtime_error("empty CSV: " + path);
  std::vector<SweepCell> table;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    SweepCell cell;
    std::getline(ss, cell.axis, ',');
    std::getline(ss, field, ',');
    cell.value = std::stod(field);
    std::getline(ss, field, ',');
    cell.algorithm = algorithm_from_name(field);
    std::getline(ss, field, ',');
    cell.mean_delay = std::stod(field);
    std::getline(ss, field, ',');
    cell.std_error = std::stod(field);
    std::getline(ss, field, ',');
    cell.iterations = std::stoi(field);
    std::getline(ss, field, ',');
    cell.capped = field == "1";
    table.push_back(cell);
  }
  return table;
}

}  // namespace gidnc
