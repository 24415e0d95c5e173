#include "activetime/reduction.hpp"

#include <algorithm>

namespace activetime::reduction {

std::string slot_name_string(const SlotName& name) {
  switch (name.kind) {
    case SlotName::Kind::L: return "L";
    case SlotName::Kind::R: return "R";
    case SlotName::Kind::Clause: return "C:" + std::to_string(name.clause);
    case SlotName::Kind::VarPos:
      return "V:" + std::to_string(name.variable) + ":" + std::to_string(name.instance) + ":pos";
    case SlotName::Kind::VarNeg:
      return "V:" + std::to_string(name.variable) + ":" + std::to_string(name.instance) + ":neg";
  }
  throw std::logic_error("unreachable slot name kind");
}

SlotName parse_slot_name(const std::string& text) {
  if (text == "L") return {SlotName::Kind::L};
  if (text == "R") return {SlotName::Kind::R};
  auto bad = [&] { return std::invalid_argument("bad slot name: " + text); };
  if (text.rfind("C:", 0) == 0) {
    SlotName name{SlotName::Kind::Clause};
    name.clause = std::stoi(text.substr(2));
    if (name.clause < 1) throw bad();
    return name;
  }
  if (text.rfind("V:", 0) == 0) {
    size_t a = text.find(':', 2);
    size_t b = text.find(':', a + 1);
    if (a == std::string::npos || b == std::string::npos) throw bad();
    SlotName name;
    name.variable = std::stoi(text.substr(2, a - 2));
    name.instance = std::stoi(text.substr(a + 1, b - a - 1));
    std::string side = text.substr(b + 1);
    if (side == "pos")
      name.kind = SlotName::Kind::VarPos;
    else if (side == "neg")
      name.kind = SlotName::Kind::VarNeg;
    else
      throw bad();
    if (name.variable < 1 || name.instance < 1) throw bad();
    return name;
  }
  throw bad();
}

int TimelineMap::index_of(const SlotName& name) const {
  for (int s = 0; s < size(); ++s)
    if (names[s] == name) return s;
  return -1;
}

namespace {

struct LaidOutLiteral {
  sat::Literal literal;
  int instance = 0;   // occurrence index j of literal.variable
  int left_slot = 0;  // VarPos slot; VarNeg is left_slot + 1
  int position = 0;   // q in the canonical negatives-then-positives order
};

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

ReductionOutput build_reduction(const sat::CnfFormula& formula) {
  const int n = formula.num_vars;
  const int m = static_cast<int>(formula.clauses.size());
  require(n % 2 == 0, "reduction needs an even variable count");
  require(sat::all_variables_occur(formula), "reduction needs every variable to occur");

  int total_literals = 0;
  for (const sat::Clause& clause : formula.clauses) {
    require(!clause.empty(), "reduction needs nonempty clauses");
    for (size_t i = 0; i < clause.size(); ++i) {
      require(clause[i].variable >= 1 && clause[i].variable <= n,
              "literal variable outside [1, n]");
      for (size_t j = i + 1; j < clause.size(); ++j)
        require(clause[i].variable != clause[j].variable,
                "reduction needs clauses without repeated variables");
    }
    total_literals += static_cast<int>(clause.size());
  }

  const int batch = 2 * n + 2;
  const int target = m + 2 + total_literals;
  const int horizon = 2 + m + 2 * total_literals;

  ReductionOutput out;
  out.target = target;
  out.instance.batch_size = batch;
  out.instance.horizon = horizon;
  out.timeline.names.resize(horizon);

  auto add_job = [&](std::string id, int release, int deadline, int processing,
                     JobProvenance provenance) {
    out.instance.jobs.push_back({id, release, deadline, processing});
    out.provenance.emplace(std::move(id), provenance);
  };

  auto add_fillers = [&](int slot, int count) {
    std::string base = "fill:" + slot_name_string(out.timeline.names[slot]) + ":";
    for (int i = 0; i < count; ++i) {
      JobProvenance p{JobProvenance::Kind::UnitFiller};
      p.slot = slot;
      add_job(base + std::to_string(i), slot, slot, 1, p);
    }
  };

  // Timeline layout plus the variable-choice jobs, one pass left to right.
  std::vector<int> occurrences_so_far(n + 1, 0);
  std::vector<std::vector<LaidOutLiteral>> layout(m);
  std::vector<int> clause_slot(m + 1, -1);  // 1-based clause -> slot
  int cursor = 0;
  out.timeline.names[cursor++] = {SlotName::Kind::L};

  for (int k = 0; k < m; ++k) {
    const sat::Clause& clause = formula.clauses[k];
    std::vector<const sat::Literal*> canonical;
    for (const sat::Literal& literal : clause)
      if (literal.negated) canonical.push_back(&literal);
    const int negatives = static_cast<int>(canonical.size());
    for (const sat::Literal& literal : clause)
      if (!literal.negated) canonical.push_back(&literal);

    auto place_gadget = [&](const sat::Literal& literal, int position) {
      int j = ++occurrences_so_far[literal.variable];
      SlotName pos{SlotName::Kind::VarPos};
      pos.variable = literal.variable;
      pos.instance = j;
      SlotName neg = pos;
      neg.kind = SlotName::Kind::VarNeg;
      int left = cursor;
      out.timeline.names[cursor++] = pos;
      out.timeline.names[cursor++] = neg;
      layout[k].push_back({literal, j, left, position});
      out.occurrences[literal.variable].push_back({k + 1, literal.negated});

      JobProvenance p{JobProvenance::Kind::VariableChoice};
      p.variable = literal.variable;
      p.instance = j;
      add_job("var:" + std::to_string(literal.variable) + ":" + std::to_string(j),
              left, left + 1, 1, p);
    };

    for (int q = 0; q < negatives; ++q) place_gadget(*canonical[q], q + 1);
    SlotName cname{SlotName::Kind::Clause};
    cname.clause = k + 1;
    clause_slot[k + 1] = cursor;
    out.timeline.names[cursor++] = cname;
    for (int q = negatives; q < static_cast<int>(canonical.size()); ++q)
      place_gadget(*canonical[q], q + 1);
  }
  out.timeline.names[cursor++] = {SlotName::Kind::R};
  require(cursor == horizon, "timeline layout does not fill the horizon");

  // Unit fillers: b - n/2 at L and R, b - n - n_k + 1 at each clause slot.
  add_fillers(0, batch - n / 2);
  add_fillers(horizon - 1, batch - n / 2);
  for (int k = 1; k <= m; ++k) {
    int nk = static_cast<int>(formula.clauses[k - 1].size());
    add_fillers(clause_slot[k], batch - n - nk + 1);
  }

  // Clause jobs: the job for literal position q runs between its gadget
  // and the clause slot; p - q + 1 slots on the negative side, q - p on
  // the positive side (p = number of negative literals).
  for (int k = 0; k < m; ++k) {
    int negatives = 0;
    for (const LaidOutLiteral& lit : layout[k])
      if (lit.literal.negated) ++negatives;
    for (const LaidOutLiteral& lit : layout[k]) {
      JobProvenance p{JobProvenance::Kind::ClauseJob};
      p.clause = k + 1;
      p.position = lit.position;
      std::string id = "clause:" + std::to_string(k + 1) + ":" + std::to_string(lit.position);
      if (lit.position <= negatives) {
        add_job(id, lit.left_slot + 1, clause_slot[k + 1],
                negatives - lit.position + 1, p);
      } else {
        add_job(id, clause_slot[k + 1], lit.left_slot, lit.position - negatives, p);
      }
    }
  }

  // Copy jobs: r+1 segments chaining L, the r gadgets, and R. Processing is
  // 1 + interior full gadgets + interior clause slots; the interior of each
  // window holds only whole gadgets (2 slots) and clause slots (1), so with
  // c interior clause slots the processing is 1 + (span - 1 + c) / 2.
  std::vector<int> clause_slots_sorted(clause_slot.begin() + 1, clause_slot.end());
  std::sort(clause_slots_sorted.begin(), clause_slots_sorted.end());
  auto copy_processing = [&](int release, int deadline) {
    auto lo = std::upper_bound(clause_slots_sorted.begin(), clause_slots_sorted.end(), release);
    auto hi = std::lower_bound(clause_slots_sorted.begin(), clause_slots_sorted.end(), deadline);
    int interior_clause_slots = static_cast<int>(hi - lo);
    int span = deadline - release;
    return 1 + (span - 1 + interior_clause_slots) / 2;
  };

  for (int i = 1; i <= n; ++i) {
    std::vector<int> gadget_left;  // VarPos slots of variable i, ascending
    for (int s = 0; s < horizon; ++s) {
      const SlotName& name = out.timeline.names[s];
      if (name.kind == SlotName::Kind::VarPos && name.variable == i)
        gadget_left.push_back(s);
    }
    const int r = static_cast<int>(gadget_left.size());
    for (int seg = 0; seg <= r; ++seg) {
      int release = seg == 0 ? 0 : gadget_left[seg - 1] + 1;
      int deadline = seg == r ? horizon - 1 : gadget_left[seg];
      JobProvenance p{JobProvenance::Kind::CopyJob};
      p.variable = i;
      p.segment = seg;
      add_job("copy:" + std::to_string(i) + ":" + std::to_string(seg),
              release, deadline, copy_processing(release, deadline), p);
    }
  }

  return out;
}

bool uniform_processing_check(const ReductionOutput& output) {
  const TimelineMap& timeline = output.timeline;
  for (const Job& job : output.instance.jobs) {
    const JobProvenance& p = output.provenance.at(job.id);
    if (p.kind == JobProvenance::Kind::UnitFiller ||
        p.kind == JobProvenance::Kind::VariableChoice)
      continue;

    int interior_clause_slots = 0;
    int interior_full_gadgets = 0;
    for (int s = job.release + 1; s < job.deadline; ++s) {
      const SlotName& name = timeline.names[s];
      if (name.kind == SlotName::Kind::Clause) ++interior_clause_slots;
      if (name.kind == SlotName::Kind::VarPos && s + 1 < job.deadline)
        ++interior_full_gadgets;  // its VarNeg partner is interior too
    }
    if (job.processing != 1 + interior_full_gadgets + interior_clause_slots) return false;
  }
  return true;
}

}  // namespace activetime::reduction
