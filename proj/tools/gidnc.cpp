// Command-line experiment driver: configure a session, optionally sweep one
// axis over a value list and several algorithms, print the aggregated table
// as CSV and optionally write it to a file.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gidnc/sweep.hpp"

namespace {

// "mu=0,0.2,0.4" -> axis + ascending value list.
void parse_sweep(const std::string& text, gidnc::SweepSpec& spec) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw CLI::ValidationError("--sweep", "expected <axis>=<v1,v2,...>");
  spec.axis = gidnc::axis_from_name(text.substr(0, eq));
  spec.values.clear();
  std::string rest = text.substr(eq + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const auto comma = rest.find(',', pos);
    const std::string item = rest.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty())
      throw CLI::ValidationError("--sweep", "empty value in list");
    spec.values.push_back(std::stod(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-IDNC multicast scheduling simulator over two-state"
               " burst-erasure channels with intermittent lossy feedback"};
  app.set_config("--config", "", "flat key=value config file; flags override");

  gidnc::SweepSpec spec;
  std::string sweep_text;
  std::vector<std::string> algorithm_names{"agu-greedy"};
  std::string coupling_name = "reciprocal";
  std::string out_path;

  app.add_option("--receivers", spec.base.receivers, "number of receivers");
  app.add_option("--packets", spec.base.packets, "number of source packets");
  app.add_option("--demand-ratio", spec.base.demand_ratio,
                 "fraction of packets each receiver wants, (0,1]");
  app.add_option("--mu", spec.base.mu, "channel memory factor, [0,1)");
  app.add_option("--t-down", spec.base.t_down, "downlink slots per frame");
  app.add_option("--t-up", spec.base.t_up, "uplink slots per frame");
  app.add_option("--b-min", spec.base.b_min,
                 "lower end of the per-receiver erasure probability range");
  app.add_option("--b-max", spec.base.b_max,
                 "upper end of the per-receiver erasure probability range");
  app.add_option("--coupling", coupling_name,
                 "forward/feedback channel coupling")
      ->check(CLI::IsMember({"independent", "iid", "reciprocal"}));
  app.add_option("--algorithm", algorithm_names,
                 "scheduling algorithms: agu-greedy, agu-exact, fve, sve, opt")
      ->delimiter(',');
  app.add_option("--iterations", spec.iterations, "sessions per cell");
  app.add_option("--seed", spec.seed, "master seed");
  app.add_option("--sweep", sweep_text,
                 "axis sweep, e.g. mu=0,0.2,0.4 (axes: M, N, mu, Tf, L)");
  app.add_option("--out", out_path, "write the result table to this CSV file");
  app.add_flag("--redraw-per-frame", spec.base.redraw_per_frame,
               "redraw per-receiver erasure rates every frame");
  app.add_option("--threads", spec.threads, "worker threads for iterations");

  CLI11_PARSE(app, argc, argv);

  try {
    spec.base.coupling = coupling_name == "independent"
                             ? gidnc::Coupling::Independent
                             : (coupling_name == "iid"
                                    ? gidnc::Coupling::IdenticallyDistributed
                                    : gidnc::Coupling::Reciprocal);
    spec.algorithms.clear();
    for (const auto& name : algorithm_names)
      spec.algorithms.push_back(gidnc::algorithm_from_name(name));
    if (sweep_text.empty()) {
      spec.axis = gidnc::SweepAxis::Receivers;
      spec.values = {static_cast<double>(spec.base.receivers)};
    } else {
      parse_sweep(sweep_text, spec);
    }

    const auto table = gidnc::run_sweep(spec);
    std::cout << gidnc::csv_string(table);
    if (!out_path.empty()) gidnc::emit_csv(table, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
