#include "activetime/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace activetime::io {

using reduction::JobProvenance;
using reduction::ReductionOutput;
using reduction::SlotName;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& value) { return value.dump(2) + "\n"; }

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("bad JSON: ") + e.what());
  }
}

int require_int(const ordered_json& object, const char* key) {
  if (!object.contains(key) || !object[key].is_number_integer())
    throw std::runtime_error(std::string("missing integer field '") + key + "'");
  return object[key].get<int>();
}

ordered_json instance_to_value(const Instance& instance) {
  std::vector<const Job*> jobs;
  for (const Job& job : instance.jobs) jobs.push_back(&job);
  std::sort(jobs.begin(), jobs.end(),
            [](const Job* a, const Job* b) { return a->id < b->id; });

  ordered_json value;
  value["batch_size"] = instance.batch_size;
  value["horizon"] = instance.horizon;
  value["jobs"] = ordered_json::array();
  for (const Job* job : jobs) {
    value["jobs"].push_back({{"id", job->id},
                             {"release", job->release},
                             {"deadline", job->deadline},
                             {"processing", job->processing}});
  }
  return value;
}

Instance instance_from_value(const ordered_json& value) {
  Instance instance;
  instance.batch_size = require_int(value, "batch_size");
  instance.horizon = require_int(value, "horizon");
  if (!value.contains("jobs") || !value["jobs"].is_array())
    throw std::runtime_error("missing 'jobs' array");
  for (const ordered_json& entry : value["jobs"]) {
    Job job;
    if (!entry.contains("id") || !entry["id"].is_string())
      throw std::runtime_error("job without string 'id'");
    job.id = entry["id"].get<std::string>();
    job.release = require_int(entry, "release");
    job.deadline = require_int(entry, "deadline");
    job.processing = require_int(entry, "processing");
    instance.jobs.push_back(std::move(job));
  }
  instance.validate();
  return instance;
}

ordered_json schedule_to_value(const Schedule& schedule) {
  ordered_json value;
  value["assignments"] = ordered_json::array();
  for (const auto& [id, slots] : schedule.assignments) {
    std::vector<int> sorted = slots;
    std::sort(sorted.begin(), sorted.end());
    value["assignments"].push_back({{"job", id}, {"slots", sorted}});
  }
  return value;
}

Schedule schedule_from_value(const ordered_json& value) {
  Schedule schedule;
  if (!value.contains("assignments") || !value["assignments"].is_array())
    throw std::runtime_error("missing 'assignments' array");
  for (const ordered_json& entry : value["assignments"]) {
    if (!entry.contains("job") || !entry["job"].is_string())
      throw std::runtime_error("assignment without string 'job'");
    std::string id = entry["job"].get<std::string>();
    if (!entry.contains("slots") || !entry["slots"].is_array())
      throw std::runtime_error("assignment without 'slots' array");
    std::vector<int> slots;
    for (const ordered_json& slot : entry["slots"]) {
      if (!slot.is_number_integer()) throw std::runtime_error("non-integer slot");
      slots.push_back(slot.get<int>());
    }
    if (!schedule.assignments.emplace(std::move(id), std::move(slots)).second)
      throw std::runtime_error("duplicate job in schedule");
  }
  return schedule;
}

ordered_json assignment_to_value(const sat::Assignment& assignment) {
  ordered_json values = ordered_json::object();
  for (const auto& [variable, value] : assignment.values)
    values[std::to_string(variable)] = value;
  return ordered_json{{"values", values}};
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  return dump(instance_to_value(instance));
}

Instance instance_from_json(const std::string& text) {
  return instance_from_value(parse(text));
}

std::string schedule_to_json(const Schedule& schedule) {
  return dump(schedule_to_value(schedule));
}

Schedule schedule_from_json(const std::string& text) {
  return schedule_from_value(parse(text));
}

std::string solution_to_json(const std::optional<Solution>& solution) {
  if (!solution) return dump(ordered_json{{"feasible", false}});
  ordered_json value;
  value["feasible"] = true;
  value["cost"] = solution->cost;
  value["active"] = solution->active.slots;
  value["schedule"] = schedule_to_value(solution->schedule);
  return dump(value);
}

std::string verify_report_to_json(const VerifyReport& report) {
  ordered_json value;
  value["valid"] = report.valid;
  value["cost"] = report.cost;
  value["violations"] = ordered_json::array();
  for (const Violation& violation : report.violations) {
    ordered_json entry;
    entry["kind"] = violation_kind_name(violation.kind);
    entry["job"] = violation.job.empty() ? ordered_json(nullptr) : ordered_json(violation.job);
    entry["slot"] = violation.slot < 0 ? ordered_json(nullptr) : ordered_json(violation.slot);
    entry["detail"] = violation.detail;
    value["violations"].push_back(std::move(entry));
  }
  return dump(value);
}

std::string assignment_to_json(const sat::Assignment& assignment) {
  return dump(assignment_to_value(assignment));
}

sat::Assignment assignment_from_json(const std::string& text) {
  ordered_json value = parse(text);
  if (!value.contains("values") || !value["values"].is_object())
    throw std::runtime_error("missing 'values' object");
  sat::Assignment assignment;
  for (const auto& [key, entry] : value["values"].items()) {
    if (!entry.is_boolean()) throw std::runtime_error("non-boolean truth value");
    int variable = 0;
    try {
      variable = std::stoi(key);
    } catch (const std::exception&) {
      throw std::runtime_error("non-integer variable key '" + key + "'");
    }
    if (variable < 1) throw std::runtime_error("variable key must be >= 1");
    assignment.values[variable] = entry.get<bool>();
  }
  return assignment;
}

std::string formula_to_json(const sat::CnfFormula& formula) {
  ordered_json value;
  value["num_vars"] = formula.num_vars;
  value["clauses"] = ordered_json::array();
  for (const sat::Clause& clause : formula.clauses) {
    ordered_json literals = ordered_json::array();
    for (const sat::Literal& literal : clause)
      literals.push_back(literal.negated ? -literal.variable : literal.variable);
    value["clauses"].push_back(std::move(literals));
  }
  return dump(value);
}

sat::CnfFormula formula_from_json(const std::string& text) {
  ordered_json value = parse(text);
  sat::CnfFormula formula;
  formula.num_vars = require_int(value, "num_vars");
  if (formula.num_vars < 0) throw std::runtime_error("num_vars must be >= 0");
  if (!value.contains("clauses") || !value["clauses"].is_array())
    throw std::runtime_error("missing 'clauses' array");
  for (const ordered_json& entry : value["clauses"]) {
    if (!entry.is_array() || entry.empty()) throw std::runtime_error("clause must be a nonempty array");
    sat::Clause clause;
    for (const ordered_json& raw : entry) {
      if (!raw.is_number_integer() || raw.get<int>() == 0)
        throw std::runtime_error("literal must be a nonzero integer");
      int lit = raw.get<int>();
      if (std::abs(lit) > formula.num_vars)
        throw std::runtime_error("literal variable exceeds num_vars");
      clause.push_back({std::abs(lit), lit < 0});
    }
    formula.clauses.push_back(std::move(clause));
  }
  return formula;
}

namespace {

const char* provenance_kind_name(JobProvenance::Kind kind) {
  switch (kind) {
    case JobProvenance::Kind::UnitFiller: return "unit_filler";
    case JobProvenance::Kind::VariableChoice: return "variable_choice";
    case JobProvenance::Kind::ClauseJob: return "clause_job";
    case JobProvenance::Kind::CopyJob: return "copy_job";
  }
  return "unknown";
}

ordered_json provenance_to_value(const JobProvenance& p) {
  ordered_json value;
  value["kind"] = provenance_kind_name(p.kind);
  switch (p.kind) {
    case JobProvenance::Kind::UnitFiller:
      value["slot"] = p.slot;
      break;
    case JobProvenance::Kind::VariableChoice:
      value["variable"] = p.variable;
      value["instance"] = p.instance;
      break;
    case JobProvenance::Kind::ClauseJob:
      value["clause"] = p.clause;
      value["position"] = p.position;
      break;
    case JobProvenance::Kind::CopyJob:
      value["variable"] = p.variable;
      value["segment"] = p.segment;
      break;
  }
  return value;
}

JobProvenance provenance_from_value(const ordered_json& value) {
  if (!value.contains("kind") || !value["kind"].is_string())
    throw std::runtime_error("provenance without 'kind'");
  std::string kind = value["kind"].get<std::string>();
  JobProvenance p;
  if (kind == "unit_filler") {
    p.kind = JobProvenance::Kind::UnitFiller;
    p.slot = require_int(value, "slot");
  } else if (kind == "variable_choice") {
    p.kind = JobProvenance::Kind::VariableChoice;
    p.variable = require_int(value, "variable");
    p.instance = require_int(value, "instance");
  } else if (kind == "clause_job") {
    p.kind = JobProvenance::Kind::ClauseJob;
    p.clause = require_int(value, "clause");
    p.position = require_int(value, "position");
  } else if (kind == "copy_job") {
    p.kind = JobProvenance::Kind::CopyJob;
    p.variable = require_int(value, "variable");
    p.segment = require_int(value, "segment");
  } else {
    throw std::runtime_error("unknown provenance kind '" + kind + "'");
  }
  return p;
}

// The timeline must be the reduction's layout: L first, R last, gadgets as
// adjacent VarPos/VarNeg pairs, every slot named exactly once.
void validate_timeline(const reduction::TimelineMap& timeline, int horizon) {
  if (timeline.size() != horizon) throw std::runtime_error("timeline does not cover the horizon");
  if (horizon < 2) throw std::runtime_error("timeline needs at least L and R");
  if (timeline.names.front().kind != SlotName::Kind::L)
    throw std::runtime_error("slot 0 must be L");
  if (timeline.names.back().kind != SlotName::Kind::R)
    throw std::runtime_error("last slot must be R");
  for (int s = 1; s + 1 < horizon; ++s) {
    const SlotName& name = timeline.names[s];
    if (name.kind == SlotName::Kind::L || name.kind == SlotName::Kind::R)
      throw std::runtime_error("L/R in the timeline interior");
    if (name.kind == SlotName::Kind::VarPos) {
      SlotName partner = name;
      partner.kind = SlotName::Kind::VarNeg;
      if (s + 1 >= horizon - 1 || !(timeline.names[s + 1] == partner))
        throw std::runtime_error("gadget at slot " + std::to_string(s) +
                                 " is missing its right slot");
    }
    if (name.kind == SlotName::Kind::VarNeg) {
      SlotName partner = name;
      partner.kind = SlotName::Kind::VarPos;
      if (s < 1 || !(timeline.names[s - 1] == partner))
        throw std::runtime_error("gadget at slot " + std::to_string(s) +
                                 " is missing its left slot");
    }
  }
}

// Every literal occurrence owns exactly one clause job; its window tells
// the clause (the C endpoint) and the polarity (which side of C).
std::map<int, std::vector<reduction::Occurrence>> rebuild_occurrences(
    const ReductionOutput& out) {
  struct Tag {
    int clause;
    bool negated;
    bool seen = false;
  };
  std::map<std::pair<int, int>, Tag> by_gadget;  // (variable, instance)

  for (const Job& job : out.instance.jobs) {
    auto it = out.provenance.find(job.id);
    if (it == out.provenance.end())
      throw std::runtime_error("job " + job.id + " has no provenance");
    if (it->second.kind != JobProvenance::Kind::ClauseJob) continue;
    const SlotName& at_release = out.timeline.names.at(job.release);
    const SlotName& at_deadline = out.timeline.names.at(job.deadline);
    SlotName gadget;
    bool negated;
    if (at_release.kind == SlotName::Kind::Clause &&
        at_deadline.kind == SlotName::Kind::VarPos) {
      gadget = at_deadline;
      negated = false;
    } else if (at_deadline.kind == SlotName::Kind::Clause &&
               at_release.kind == SlotName::Kind::VarNeg) {
      gadget = at_release;
      negated = true;
    } else {
      throw std::runtime_error("clause job " + job.id + " has a malformed window");
    }
    Tag tag{it->second.clause, negated};
    if (!by_gadget.emplace(std::make_pair(gadget.variable, gadget.instance), tag).second)
      throw std::runtime_error("two clause jobs claim one gadget");
  }

  std::map<int, std::vector<reduction::Occurrence>> occurrences;
  for (const SlotName& name : out.timeline.names) {
    if (name.kind != SlotName::Kind::VarPos) continue;
    auto it = by_gadget.find({name.variable, name.instance});
    if (it == by_gadget.end())
      throw std::runtime_error("gadget " + reduction::slot_name_string(name) +
                               " has no clause job");
    it->second.seen = true;
    auto& list = occurrences[name.variable];
    if (static_cast<int>(list.size()) + 1 != name.instance)
      throw std::runtime_error("gadget instances of variable " +
                               std::to_string(name.variable) + " are not consecutive");
    list.push_back({it->second.clause, it->second.negated});
  }
  for (const auto& [key, tag] : by_gadget)
    if (!tag.seen) throw std::runtime_error("clause job without a gadget");
  return occurrences;
}

}  // namespace

std::string reduction_to_json(const ReductionOutput& output) {
  ordered_json value = instance_to_value(output.instance);
  value["target"] = output.target;
  value["timeline"] = ordered_json::array();
  for (int s = 0; s < output.timeline.size(); ++s) {
    value["timeline"].push_back(
        {{"slot", s}, {"name", reduction::slot_name_string(output.timeline.names[s])}});
  }
  ordered_json provenance = ordered_json::object();
  for (const ordered_json& job : value["jobs"])
    provenance[job["id"].get<std::string>()] =
        provenance_to_value(output.provenance.at(job["id"].get<std::string>()));
  value["provenance"] = std::move(provenance);
  return dump(value);
}

ReductionOutput reduction_from_json(const std::string& text) {
  ordered_json value = parse(text);
  ReductionOutput out;
  out.instance = instance_from_value(value);
  out.target = require_int(value, "target");

  if (!value.contains("timeline") || !value["timeline"].is_array())
    throw std::runtime_error("missing 'timeline' array");
  out.timeline.names.assign(out.instance.horizon, SlotName{});
  std::vector<bool> named(out.instance.horizon, false);
  for (const ordered_json& entry : value["timeline"]) {
    int slot = require_int(entry, "slot");
    if (slot < 0 || slot >= out.instance.horizon)
      throw std::runtime_error("timeline slot outside the horizon");
    if (named[slot]) throw std::runtime_error("timeline names a slot twice");
    if (!entry.contains("name") || !entry["name"].is_string())
      throw std::runtime_error("timeline entry without 'name'");
    named[slot] = true;
    try {
      out.timeline.names[slot] = reduction::parse_slot_name(entry["name"].get<std::string>());
    } catch (const std::exception& e) {
      throw std::runtime_error(e.what());
    }
  }
  for (int s = 0; s < out.instance.horizon; ++s)
    if (!named[s]) throw std::runtime_error("timeline misses slot " + std::to_string(s));
  validate_timeline(out.timeline, out.instance.horizon);

  if (!value.contains("provenance") || !value["provenance"].is_object())
    throw std::runtime_error("missing 'provenance' object");
  for (const auto& [id, entry] : value["provenance"].items()) {
    if (out.instance.find_job(id) == nullptr)
      throw std::runtime_error("provenance for unknown job " + id);
    out.provenance.emplace(id, provenance_from_value(entry));
  }
  out.occurrences = rebuild_occurrences(out);
  return out;
}

std::string roundtrip_report_to_json(const witness::RoundTripReport& report) {
  ordered_json value;
  value["formula"] = {{"num_vars", report.num_vars}, {"num_clauses", report.num_clauses}};
  value["reduction"] = {{"target", report.target},
                        {"batch_size", report.batch_size},
                        {"horizon", report.horizon}};
  value["balanced_sat_feasible"] = report.balanced_sat_feasible;
  value["scheduling_feasible_at_t"] = report.scheduling_feasible_at_t;
  value["agree"] = report.agree;
  if (report.witnesses) {
    value["witnesses"] = {{"assignment", assignment_to_value(report.witnesses->first)},
                          {"schedule", schedule_to_value(report.witnesses->second)}};
  } else {
    value["witnesses"] = nullptr;
  }
  return dump(value);
}

}  // namespace activetime::io
