#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "activetime/generator.hpp"
#include "activetime/json_io.hpp"
#include "activetime/reduction.hpp"
#include "activetime/sat.hpp"
#include "activetime/solve.hpp"
#include "activetime/witness.hpp"

namespace py = pybind11;
using namespace activetime;

PYBIND11_MODULE(activetime, m) {
  m.doc() = "Active time scheduling: instance model, solvers, SAT reduction and witnesses";

  py::class_<Job>(m, "Job")
      .def(py::init<>())
      .def(py::init([](std::string id, int release, int deadline, int processing) {
             return Job{std::move(id), release, deadline, processing};
           }),
           py::arg("id"), py::arg("release"), py::arg("deadline"), py::arg("processing"))
      .def_readwrite("id", &Job::id)
      .def_readwrite("release", &Job::release)
      .def_readwrite("deadline", &Job::deadline)
      .def_readwrite("processing", &Job::processing)
      .def("__repr__", [](const Job& job) {
        return "Job(" + job.id + ", [" + std::to_string(job.release) + ", " +
               std::to_string(job.deadline) + "], p=" + std::to_string(job.processing) + ")";
      });

  py::class_<Instance>(m, "Instance")
      .def(py::init<>())
      .def(py::init([](std::vector<Job> jobs, int batch_size, int horizon) {
             return Instance{std::move(jobs), batch_size, horizon};
           }),
           py::arg("jobs"), py::arg("batch_size"), py::arg("horizon"))
      .def_readwrite("jobs", &Instance::jobs)
      .def_readwrite("batch_size", &Instance::batch_size)
      .def_readwrite("horizon", &Instance::horizon)
      .def("validate", &Instance::validate)
      .def("total_processing", &Instance::total_processing);

  py::class_<ActiveSet>(m, "ActiveSet")
      .def(py::init<>())
      .def(py::init([](std::vector<int> slots) { return ActiveSet{std::move(slots)}; }),
           py::arg("slots"))
      .def_readwrite("slots", &ActiveSet::slots)
      .def("contains", &ActiveSet::contains)
      .def("__len__", &ActiveSet::size);

  py::class_<Schedule>(m, "Schedule")
      .def(py::init<>())
      .def(py::init([](std::map<std::string, std::vector<int>> assignments) {
             return Schedule{std::move(assignments)};
           }),
           py::arg("assignments"))
      .def_readwrite("assignments", &Schedule::assignments)
      .def("cost", &Schedule::cost)
      .def("occupied_slots", &Schedule::occupied_slots);

  py::class_<Violation>(m, "Violation")
      .def_property_readonly("kind",
                             [](const Violation& v) { return violation_kind_name(v.kind); })
      .def_readonly("job", &Violation::job)
      .def_readonly("slot", &Violation::slot)
      .def_readonly("detail", &Violation::detail);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("valid", &VerifyReport::valid)
      .def_readonly("cost", &VerifyReport::cost)
      .def_readonly("violations", &VerifyReport::violations);

  py::class_<Solution>(m, "Solution")
      .def_readonly("cost", &Solution::cost)
      .def_readonly("active", &Solution::active)
      .def_readonly("schedule", &Solution::schedule);

  m.def("verify_schedule", &verify_schedule, py::arg("instance"), py::arg("schedule"));
  m.def("feasible_with", &feasible_with, py::arg("instance"), py::arg("active"));
  m.def("solve_exact", &solve_exact, py::arg("instance"), py::arg("budget") = py::none());
  m.def("solve_greedy", &solve_greedy, py::arg("instance"));
  m.def("solve_minimal", &solve_minimal, py::arg("instance"), py::arg("order"));
  m.def("generate_instance", &generate_instance, py::arg("jobs"), py::arg("horizon"),
        py::arg("batch_size"), py::arg("seed"));

  py::class_<sat::Literal>(m, "Literal")
      .def(py::init([](int variable, bool negated) { return sat::Literal{variable, negated}; }),
           py::arg("variable"), py::arg("negated") = false)
      .def_readwrite("variable", &sat::Literal::variable)
      .def_readwrite("negated", &sat::Literal::negated);

  py::class_<sat::CnfFormula>(m, "CnfFormula")
      .def(py::init<>())
      .def_readwrite("num_vars", &sat::CnfFormula::num_vars)
      .def_readwrite("clauses", &sat::CnfFormula::clauses);

  py::class_<sat::Assignment>(m, "Assignment")
      .def(py::init<>())
      .def(py::init([](std::map<int, bool> values) { return sat::Assignment{std::move(values)}; }),
           py::arg("values"))
      .def_readwrite("values", &sat::Assignment::values)
      .def("true_count", &sat::Assignment::true_count);

  m.def("parse_dimacs", py::overload_cast<const std::string&>(&sat::parse_dimacs),
        py::arg("text"));
  m.def("serialize_dimacs", &sat::serialize_dimacs, py::arg("formula"));
  m.def("to_balanced", &sat::to_balanced, py::arg("formula"));
  m.def("brute_sat", &sat::brute_sat, py::arg("formula"));
  m.def("brute_balanced_sat", &sat::brute_balanced_sat, py::arg("formula"));
  m.def("satisfies", &sat::satisfies, py::arg("formula"), py::arg("assignment"));
  m.def("balanced", &sat::balanced, py::arg("assignment"));

  py::class_<reduction::TimelineMap>(m, "TimelineMap")
      .def("__len__", &reduction::TimelineMap::size)
      .def("name", [](const reduction::TimelineMap& timeline, int slot) {
        return reduction::slot_name_string(timeline.names.at(slot));
      });

  py::class_<reduction::ReductionOutput>(m, "ReductionOutput")
      .def_readonly("instance", &reduction::ReductionOutput::instance)
      .def_readonly("target", &reduction::ReductionOutput::target)
      .def_readonly("timeline", &reduction::ReductionOutput::timeline);

  m.def("build_reduction", &reduction::build_reduction, py::arg("formula"));
  m.def("uniform_processing_check", &reduction::uniform_processing_check, py::arg("output"));

  py::class_<witness::RoundTripReport>(m, "RoundTripReport")
      .def_readonly("num_vars", &witness::RoundTripReport::num_vars)
      .def_readonly("num_clauses", &witness::RoundTripReport::num_clauses)
      .def_readonly("target", &witness::RoundTripReport::target)
      .def_readonly("batch_size", &witness::RoundTripReport::batch_size)
      .def_readonly("horizon", &witness::RoundTripReport::horizon)
      .def_readonly("balanced_sat_feasible", &witness::RoundTripReport::balanced_sat_feasible)
      .def_readonly("scheduling_feasible_at_t", &witness::RoundTripReport::scheduling_feasible_at_t)
      .def_readonly("agree", &witness::RoundTripReport::agree)
      .def_readonly("witnesses", &witness::RoundTripReport::witnesses);

  m.def("assignment_to_schedule", &witness::assignment_to_schedule, py::arg("reduction"),
        py::arg("assignment"));
  m.def("schedule_to_assignment", &witness::schedule_to_assignment, py::arg("reduction"),
        py::arg("schedule"));
  m.def("roundtrip_check", &witness::roundtrip_check, py::arg("formula"));

  m.def("instance_to_json", &io::instance_to_json);
  m.def("instance_from_json", &io::instance_from_json);
  m.def("schedule_to_json", &io::schedule_to_json);
  m.def("schedule_from_json", &io::schedule_from_json);
  m.def("reduction_to_json", &io::reduction_to_json);
  m.def("reduction_from_json", &io::reduction_from_json);
}
