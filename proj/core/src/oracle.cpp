#include "coplan/solver.hpp"

#include <bit>
#include <optional>

namespace coplan {

namespace {

// Every placement of one task on the grid, ignoring availability: all start
// hours (short) or all increasing day sets (long).
std::vector<ScheduleEntry> all_entries(const ProblemInstance& inst, std::size_t task) {
  std::vector<ScheduleEntry> out;
  const int duration = inst.tasks()[task].duration;
  const int count = inst.slot_count();
  for (std::size_t p = 0; p < inst.participants().size(); ++p) {
    if (inst.category() == Category::Short) {
      for (int s = 0; s + duration <= count; ++s) {
        ScheduleEntry e{task, p, {inst.slot_interval(s).begin, inst.slot_interval(s + duration - 1).end}, {}};
        out.push_back(std::move(e));
      }
      continue;
    }
    for (unsigned bits = 0; bits < (1u << count); ++bits) {
      if (std::popcount(bits) != duration) continue;
      ScheduleEntry e{task, p, {}, {}};
      for (int s = 0; s < count; ++s)
        if (bits & (1u << s)) e.days.push_back(inst.start_date() + Days{s});
      out.push_back(std::move(e));
    }
  }
  return out;
}

bool earlier(const Answer& a, const Answer& b) { return a < b; }

} // namespace

Answer brute_force_oracle(const ProblemInstance& inst) {
  std::vector<std::vector<ScheduleEntry>> options;
  for (std::size_t t = 0; t < inst.tasks().size(); ++t) options.push_back(all_entries(inst, t));

  std::optional<Answer> best;
  Schedule s;
  s.entries.resize(options.size());
  std::vector<std::size_t> index(options.size(), 0);
  while (true) {
    for (std::size_t t = 0; t < options.size(); ++t) s.entries[t] = options[t][index[t]];
    if (is_feasible(inst, s)) {
      const Answer c = completion(inst, s);
      if (!best || earlier(c, *best)) best = c;
    }
    std::size_t t = 0;
    while (t < options.size() && ++index[t] == options[t].size()) index[t++] = 0;
    if (t == options.size()) break;
  }
  if (!best) throw InfeasibleError("no schedule completes within the horizon");
  return *best;
}

} // namespace coplan
