#ifndef ACTIVETIME_JSON_IO_HPP
#define ACTIVETIME_JSON_IO_HPP

#include <optional>
#include <string>

#include "activetime/model.hpp"
#include "activetime/reduction.hpp"
#include "activetime/sat.hpp"
#include "activetime/solve.hpp"
#include "activetime/witness.hpp"

// JSON wire formats. Serializers emit a canonical form — fixed key order,
// jobs and assignments sorted by id, two-space indent, trailing newline —
// so identical values always serialize to identical bytes. Loaders accept
// any key order and enforce the type invariants.
namespace activetime::io {

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

std::string schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const std::string& text);

// {"feasible": false} when nullopt.
std::string solution_to_json(const std::optional<Solution>& solution);

std::string verify_report_to_json(const VerifyReport& report);

std::string assignment_to_json(const sat::Assignment& assignment);
sat::Assignment assignment_from_json(const std::string& text);

std::string formula_to_json(const sat::CnfFormula& formula);
sat::CnfFormula formula_from_json(const std::string& text);

// Instance fields plus target, timeline and per-job provenance. Loading
// rebuilds the occurrence table from the clause jobs' window geometry and
// revalidates the timeline structure.
std::string reduction_to_json(const reduction::ReductionOutput& output);
reduction::ReductionOutput reduction_from_json(const std::string& text);

std::string roundtrip_report_to_json(const witness::RoundTripReport& report);

}  // namespace activetime::io

#endif  // ACTIVETIME_JSON_IO_HPP
