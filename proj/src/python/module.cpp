// Python bindings for the library: channel math, sender view operations,
// probability estimates, graph construction and clique selection, session
// simulation, and parameter sweeps.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gidnc/channel.hpp"
#include "gidnc/graph.hpp"
#include "gidnc/probability.hpp"
#include "gidnc/rng.hpp"
#include "gidnc/sim.hpp"
#include "gidnc/sweep.hpp"
#include "gidnc/tracking.hpp"

namespace py = pybind11;
using namespace gidnc;

PYBIND11_MODULE(_gidnc, m) {
  m.doc() = "coded multicast scheduling under intermittent lossy feedback";

  // ---- channel ----
  py::class_<GecParams>(m, "GecParams")
      .def(py::init<>())
      .def(py::init([](double to_bad, double to_good) {
             return GecParams{to_bad, to_good};
           }),
           py::arg("to_bad"), py::arg("to_good"))
      .def_readwrite("to_bad", &GecParams::to_bad)
      .def_readwrite("to_good", &GecParams::to_good)
      .def("memory", &GecParams::memory)
      .def("steady_bad", &GecParams::steady_bad)
      .def("steady_good", &GecParams::steady_good);

  py::class_<LinkParams>(m, "LinkParams")
      .def(py::init<>())
      .def(py::init([](GecParams forward, GecParams feedback) {
             return LinkParams{forward, feedback};
           }),
           py::arg("forward"), py::arg("feedback"))
      .def_readwrite("forward", &LinkParams::forward)
      .def_readwrite("feedback", &LinkParams::feedback);

  py::enum_<Coupling>(m, "Coupling")
      .value("Independent", Coupling::Independent)
      .value("IdenticallyDistributed", Coupling::IdenticallyDistributed)
      .value("Reciprocal", Coupling::Reciprocal);

  m.def("k_step_flip_prob", &k_step_flip_prob, py::arg("p_tr"),
        py::arg("memory"), py::arg("steps"));
  m.def("steady_state", &steady_state, py::arg("params"),
        "(good, bad) stationary probabilities");

  // ---- rng ----
  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next", &Rng::next)
      .def("uniform01", &Rng::uniform01)
      .def("bernoulli", &Rng::bernoulli, py::arg("p"))
      .def("below", &Rng::below, py::arg("n"))
      .def("uniform", &Rng::uniform, py::arg("lo"), py::arg("hi"));
  m.def("mix64", &mix64, py::arg("z"));
  m.def("hash_combine", &hash_combine, py::arg("a"), py::arg("b"));

  // ---- tracking ----
  py::class_<FrameSchedule>(m, "FrameSchedule")
      .def(py::init([](int t_down, int t_up) {
             return FrameSchedule{t_down, t_up};
           }),
           py::arg("t_down"), py::arg("t_up"))
      .def_readwrite("t_down", &FrameSchedule::t_down)
      .def_readwrite("t_up", &FrameSchedule::t_up)
      .def("t_frame", &FrameSchedule::t_frame)
      .def("frame_of", &FrameSchedule::frame_of, py::arg("t"))
      .def("is_downlink", &FrameSchedule::is_downlink, py::arg("t"))
      .def("frame_start", &FrameSchedule::frame_start, py::arg("frame"))
      .def("uplink_slot", &FrameSchedule::uplink_slot, py::arg("receiver"))
      .def("feedback_time", &FrameSchedule::feedback_time, py::arg("receiver"),
           py::arg("frame"));

  py::enum_<EntryState>(m, "EntryState")
      .value("Has", EntryState::Has)
      .value("SecondaryLack", EntryState::SecondaryLack)
      .value("Wanted", EntryState::Wanted)
      .value("UncertainWanted", EntryState::UncertainWanted);

  py::class_<SenderView>(m, "SenderView")
      .def(py::init<int, int, FrameSchedule>(), py::arg("receivers"),
           py::arg("packets"), py::arg("schedule"))
      .def("receiver_count", &SenderView::receiver_count)
      .def("packet_count", &SenderView::packet_count)
      .def("schedule", &SenderView::schedule,
           py::return_value_policy::reference_internal)
      .def("set_demand", &SenderView::set_demand, py::arg("receiver"),
           py::arg("wanted_packets"))
      .def("entry", &SenderView::entry, py::arg("receiver"), py::arg("packet"))
      .def("is_wanted", &SenderView::is_wanted, py::arg("receiver"),
           py::arg("packet"))
      .def("wants", &SenderView::wants, py::arg("receiver"))
      .def("wants_empty", &SenderView::wants_empty, py::arg("receiver"))
      .def("all_wants_empty", &SenderView::all_wants_empty)
      .def("record_attempt", &SenderView::record_attempt, py::arg("targets"),
           py::arg("t"))
      .def("apply_feedback", &SenderView::apply_feedback, py::arg("receiver"),
           py::arg("acked"), py::arg("t"))
      .def("close_frame_unheard", &SenderView::close_frame_unheard,
           py::arg("receiver"), py::arg("frame"))
      .def("anchor_packet", &SenderView::anchor_packet, py::arg("receiver"))
      .def("last_heard", &SenderView::last_heard, py::arg("receiver"))
      .def("prev_heard", &SenderView::prev_heard, py::arg("receiver"))
      .def("targeted_in_frame", &SenderView::targeted_in_frame,
           py::arg("receiver"), py::arg("frame"))
      .def("window_attempt_count", &SenderView::window_attempt_count,
           py::arg("receiver"), py::arg("packet"))
      .def("debug_grid", &SenderView::debug_grid);

  // ---- probability ----
  m.def("erasure_prob", &erasure_prob, py::arg("view"), py::arg("forward"),
        py::arg("receiver"), py::arg("t"));
  m.def("feedback_loss_prob", &feedback_loss_prob, py::arg("view"),
        py::arg("feedback"), py::arg("receiver"), py::arg("t"));
  m.def("innovative_prob", &innovative_prob, py::arg("view"), py::arg("params"),
        py::arg("receiver"), py::arg("packet"), py::arg("t"));
  m.def("finish_prob", &finish_prob, py::arg("view"), py::arg("params"),
        py::arg("receiver"), py::arg("t"));

  py::class_<ReceiverClassification>(m, "ReceiverClassification")
      .def_readonly("wants_nonempty", &ReceiverClassification::wants_nonempty)
      .def_readonly("targeted_primary",
                    &ReceiverClassification::targeted_primary)
      .def_readonly("fully_uncertain",
                    &ReceiverClassification::fully_uncertain)
      .def_readonly("target_state_unknown",
                    &ReceiverClassification::target_state_unknown)
      .def_readonly("targeted_packet",
                    &ReceiverClassification::targeted_packet);
  m.def("classify", &classify, py::arg("view"), py::arg("clique"),
        py::arg("receiver"));
  m.def("delay_increment_prob", &delay_increment_prob, py::arg("view"),
        py::arg("params"), py::arg("clique"), py::arg("receiver"),
        py::arg("t"));
  m.def("expected_sum_delay", &expected_sum_delay, py::arg("view"),
        py::arg("params"), py::arg("clique"), py::arg("t"));

  py::enum_<SpecialCase>(m, "SpecialCase")
      .value("PersistentLossyPromptFeedback",
             SpecialCase::PersistentLossyPromptFeedback)
      .value("PersistentPerfectIntermittent",
             SpecialCase::PersistentPerfectIntermittent)
      .value("PersistentPerfectPromptFeedback",
             SpecialCase::PersistentPerfectPromptFeedback)
      .value("MemorylessLossyIntermittent",
             SpecialCase::MemorylessLossyIntermittent)
      .value("MemorylessLossyPromptFeedback",
             SpecialCase::MemorylessLossyPromptFeedback)
      .value("MemorylessPerfectIntermittent",
             SpecialCase::MemorylessPerfectIntermittent)
      .value("MemorylessPerfectPromptFeedback",
             SpecialCase::MemorylessPerfectPromptFeedback);

  py::class_<SpecialCaseInputs>(m, "SpecialCaseInputs")
      .def(py::init<>())
      .def_readwrite("memory", &SpecialCaseInputs::memory)
      .def_readwrite("erasure", &SpecialCaseInputs::erasure)
      .def_readwrite("feedback_loss", &SpecialCaseInputs::feedback_loss)
      .def_readwrite("frame_erasure", &SpecialCaseInputs::frame_erasure)
      .def_readwrite("frame_feedback_loss",
                     &SpecialCaseInputs::frame_feedback_loss)
      .def_readwrite("frame_attempts_total",
                     &SpecialCaseInputs::frame_attempts_total)
      .def_readwrite("frame_attempts_packet",
                     &SpecialCaseInputs::frame_attempts_packet)
      .def_readwrite("current_erasure", &SpecialCaseInputs::current_erasure)
      .def_readwrite("unheard_frames", &SpecialCaseInputs::unheard_frames)
      .def_readwrite("current_attempts", &SpecialCaseInputs::current_attempts);
  m.def("special_case_innovative", &special_case_innovative, py::arg("kind"),
        py::arg("inputs"));

  // ---- graph ----
  py::class_<Vertex>(m, "Vertex")
      .def_readonly("receiver", &Vertex::receiver)
      .def_readonly("packet", &Vertex::packet)
      .def_readonly("primary", &Vertex::primary)
      .def_readonly("base_weight", &Vertex::base_weight)
      .def_readonly("conn_weight", &Vertex::conn_weight)
      .def_readonly("combined_weight", &Vertex::combined_weight);

  py::class_<CliqueMember>(m, "CliqueMember")
      .def_readonly("receiver", &CliqueMember::receiver)
      .def_readonly("packet", &CliqueMember::packet)
      .def_readonly("primary", &CliqueMember::primary);

  py::class_<Clique>(m, "Clique")
      .def(py::init<>())
      .def_readonly("members", &Clique::members)
      .def_readonly("coded_packets", &Clique::coded_packets)
      .def("empty", &Clique::empty)
      .def("member_for",
           [](const Clique& c, int receiver) -> py::object {
             const CliqueMember* m = c.member_for(receiver);
             return m ? py::cast(*m) : py::none();
           },
           py::arg("receiver"));

  py::class_<IdncGraph>(m, "IdncGraph")
      .def("vertices",
           [](const IdncGraph& g) { return g.vertices(); })
      .def("size", &IdncGraph::size)
      .def("edge_count", &IdncGraph::edge_count)
      .def("adjacent", &IdncGraph::adjacent, py::arg("a"), py::arg("b"));

  m.def("build_graph", &build_graph, py::arg("view"));
  m.def("base_weights", &base_weights, py::arg("graph"), py::arg("view"),
        py::arg("params"), py::arg("t"));
  m.def("blind_weights", &blind_weights, py::arg("graph"), py::arg("params"));
  m.def("connectivity_weights", &connectivity_weights, py::arg("graph"));
  m.def("greedy_select", &greedy_select, py::arg("graph"), py::arg("view"));
  m.def("exact_max_weight_clique", &exact_max_weight_clique, py::arg("graph"),
        py::arg("view"));
  m.def("fve_filter", &fve_filter, py::arg("graph"), py::arg("view"));
  m.def("sve_filter", &sve_filter, py::arg("graph"), py::arg("view"),
        py::arg("params"), py::arg("rng"));
  m.def("edge_list_dump", &edge_list_dump, py::arg("graph"));

  // ---- simulation ----
  py::enum_<Algorithm>(m, "Algorithm")
      .value("AguGreedy", Algorithm::AguGreedy)
      .value("AguExact", Algorithm::AguExact)
      .value("Fve", Algorithm::Fve)
      .value("Sve", Algorithm::Sve)
      .value("Opt", Algorithm::Opt);

  py::class_<SessionConfig>(m, "SessionConfig")
      .def(py::init<>())
      .def_readwrite("receivers", &SessionConfig::receivers)
      .def_readwrite("packets", &SessionConfig::packets)
      .def_readwrite("demand_ratio", &SessionConfig::demand_ratio)
      .def_readwrite("b_min", &SessionConfig::b_min)
      .def_readwrite("b_max", &SessionConfig::b_max)
      .def_readwrite("mu", &SessionConfig::mu)
      .def_readwrite("coupling", &SessionConfig::coupling)
      .def_readwrite("t_down", &SessionConfig::t_down)
      .def_readwrite("t_up", &SessionConfig::t_up)
      .def_readwrite("algorithm", &SessionConfig::algorithm)
      .def_readwrite("redraw_per_frame", &SessionConfig::redraw_per_frame)
      .def_readwrite("perfect_prompt_feedback",
                     &SessionConfig::perfect_prompt_feedback)
      .def_readwrite("slot_cap_factor", &SessionConfig::slot_cap_factor);

  py::class_<SessionMetrics>(m, "SessionMetrics")
      .def_readonly("delay", &SessionMetrics::delay)
      .def_readonly("mean_delay", &SessionMetrics::mean_delay)
      .def_readonly("slots", &SessionMetrics::slots)
      .def_readonly("capped", &SessionMetrics::capped);

  m.def("run_session",
        [](const SessionConfig& config, Rng& rng) {
          return run_session(config, rng);
        },
        py::arg("config"), py::arg("rng"));
  m.def("run_session",
        [](const SessionConfig& config, std::uint64_t seed) {
          Rng rng(seed);
          return run_session(config, rng);
        },
        py::arg("config"), py::arg("seed"));
  m.def("opt_baseline",
        [](const SessionConfig& config, Rng& rng) {
          return opt_baseline(config, rng);
        },
        py::arg("config"), py::arg("rng"));

  // ---- sweep ----
  py::enum_<SweepAxis>(m, "SweepAxis")
      .value("Receivers", SweepAxis::Receivers)
      .value("Packets", SweepAxis::Packets)
      .value("Memory", SweepAxis::Memory)
      .value("FrameLen", SweepAxis::FrameLen)
      .value("DemandRatio", SweepAxis::DemandRatio);

  m.def("axis_name", &axis_name, py::arg("axis"));
  m.def("axis_from_name", &axis_from_name, py::arg("name"));
  m.def("algorithm_name", &algorithm_name, py::arg("algorithm"));
  m.def("algorithm_from_name", &algorithm_from_name, py::arg("name"));

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("axis", &SweepSpec::axis)
      .def_readwrite("values", &SweepSpec::values)
      .def_readwrite("base", &SweepSpec::base)
      .def_readwrite("algorithms", &SweepSpec::algorithms)
      .def_readwrite("iterations", &SweepSpec::iterations)
      .def_readwrite("seed", &SweepSpec::seed)
      .def_readwrite("threads", &SweepSpec::threads);

  py::class_<SweepCell>(m, "SweepCell")
      .def_readonly("axis", &SweepCell::axis)
      .def_readonly("value", &SweepCell::value)
      .def_readonly("algorithm", &SweepCell::algorithm)
      .def_readonly("mean_delay", &SweepCell::mean_delay)
      .def_readonly("std_error", &SweepCell::std_error)
      .def_readonly("iterations", &SweepCell::iterations)
      .def_readonly("capped", &SweepCell::capped);

  m.def("apply_axis", &apply_axis, py::arg("base"), py::arg("axis"),
        py::arg("value"));
  m.def("run_sweep", &run_sweep, py::arg("spec"));
  m.def("csv_string", &csv_string, py::arg("table"));
  m.def("emit_csv", &emit_csv, py::arg("table"), py::arg("path"));
  m.def("read_csv", &read_csv, py::arg("path"));
}
