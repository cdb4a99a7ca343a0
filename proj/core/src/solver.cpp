#include "coplan/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>

namespace coplan {

namespace {

using Mask = std::uint32_t;

int first_slot(Mask m) { return std::countr_zero(m); }
int last_slot(Mask m) { return 31 - std::countl_zero(m); }

struct Candidate {
  Mask slots = 0;
  std::size_t participant = 0;
};

// Slot masks a task of `duration` slots may occupy in a grid of `count` slots,
// ordered by start, then lexicographically by the remaining slots.
std::vector<Mask> placements(Category category, int duration, int count) {
  std::vector<Mask> out;
  if (category == Category::Short) {
    for (int s = 0; s + duration <= count; ++s) out.push_back(((Mask{1} << duration) - 1) << s);
    return out;
  }
  // k-combinations in lexicographic order of their sorted slot lists.
  std::vector<int> pick(duration);
  for (int i = 0; i < duration; ++i) pick[i] = i;
  while (true) {
    Mask m = 0;
    for (int s : pick) m |= Mask{1} << s;
    out.push_back(m);
    int i = duration - 1;
    while (i >= 0 && pick[i] == count - duration + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < duration; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Longest run of consecutive set bits.
int longest_run(Mask m) {
  int best = 0;
  while (m) {
    const int start = std::countr_zero(m);
    const int len = std::countr_one(m >> start);
    best = std::max(best, len);
    m &= ~(((len >= 32) ? ~Mask{0} : ((Mask{1} << len) - 1)) << start);
  }
  return best;
}

// Smallest idle gap between two consecutive runs, or a large value.
int shortest_gap(Mask m) {
  int best = std::numeric_limits<int>::max();
  int prev_end = -1;
  while (m) {
    const int start = std::countr_zero(m);
    const int len = std::countr_one(m >> start);
    if (prev_end >= 0) best = std::min(best, start - prev_end);
    prev_end = start + len;
    m &= ~(((Mask{1} << len) - 1) << start);
  }
  return best;
}

class Search {
public:
  explicit Search(const ProblemInstance& inst) : inst_(inst) {
    const auto& tasks = inst.tasks();
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      auto& list = candidates_[t];
      for (Mask m : placements(inst.category(), tasks[t].duration, inst.slot_count()))
        for (std::size_t p = 0; p < inst.participants().size(); ++p)
          if ((m & ~inst.availability_mask(p)) == 0) list.push_back({m, p});
      // (start, participant, remaining slots)
      std::stable_sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) {
        return std::pair(first_slot(a.slots), a.participant) < std::pair(first_slot(b.slots), b.participant);
      });
      preds_[t] = inst.dependencies().predecessors(t);
    }
  }

  bool run() {
    descend(0, 0);
    return best_end_ <= inst_.slot_count();
  }

  int best_end() const { return best_end_; }
  const std::array<Candidate, kTaskCount>& best() const { return best_; }

private:
  void descend(std::size_t task, int end_so_far) {
    if (task == kTaskCount) {
      for (std::size_t p = 0; p < kParticipantCount; ++p) {
        const auto& ba = inst_.participants()[p].break_after;
        if (ba && shortest_gap(busy_[p]) < ba->rest) return;
      }
      best_end_ = end_so_far;
      best_ = chosen_;
      return;
    }
    int earliest = 0;
    for (auto pred : preds_[task]) earliest = std::max(earliest, last_slot(chosen_[pred].slots) + 1);

    for (const auto& c : candidates_[task]) {
      if (first_slot(c.slots) < earliest) continue;
      const int end = std::max(end_so_far, last_slot(c.slots) + 1);
      if (end >= best_end_) continue;
      const auto p = c.participant;
      if (busy_[p] & c.slots) continue;
      if (!breaks_ok(p, c.slots)) continue;

      chosen_[task] = c;
      busy_[p] |= c.slots;
      owned_[p][count_[p]++] = c.slots;
      descend(task + 1, end);
      --count_[p];
      busy_[p] &= ~c.slots;
    }
  }

  bool breaks_ok(std::size_t p, Mask slots) const {
    const auto& who = inst_.participants()[p];
    if (who.break_between) {
      for (int i = 0; i < count_[p]; ++i) {
        const Mask other = owned_[p][i];
        const int gap = first_slot(slots) > last_slot(other) ? first_slot(slots) - last_slot(other) - 1
                                                             : first_slot(other) - last_slot(slots) - 1;
        if (gap < *who.break_between) return false;
      }
    }
    // Runs only grow as work is added, so an over-long run can be pruned now;
    // rest gaps can still be filled later and are checked at the leaf.
    if (who.break_after && longest_run(busy_[p] | slots) > who.break_after->max_consecutive) return false;
    return true;
  }

  const ProblemInstance& inst_;
  std::array<std::vector<Candidate>, kTaskCount> candidates_;
  std::array<std::vector<std::size_t>, kTaskCount> preds_;
  std::array<Candidate, kTaskCount> chosen_{};
  std::array<Mask, kParticipantCount> busy_{};
  std::array<std::array<Mask, kTaskCount>, kParticipantCount> owned_{};
  std::array<int, kParticipantCount> count_{};
  std::array<Candidate, kTaskCount> best_{};
  int best_end_ = std::numeric_limits<int>::max();
};

} // namespace

Solution solve_optimal(const ProblemInstance& inst) {
  static_assert(kTaskCount <= 32 && kParticipantCount >= 1);
  Search search(inst);
  if (!search.run()) throw InfeasibleError("no schedule completes within the horizon");

  Schedule witness;
  for (std::size_t t = 0; t < kTaskCount; ++t) {
    const auto& c = search.best()[t];
    ScheduleEntry e;
    e.task = t;
    e.participant = c.participant;
    if (inst.category() == Category::Short) {
      e.span = {inst.slot_interval(first_slot(c.slots)).begin, inst.slot_interval(last_slot(c.slots)).end};
    } else {
      for (int s = 0; s < inst.slot_count(); ++s)
        if (c.slots & (Mask{1} << s)) e.days.push_back(inst.start_date() + Days{s});
    }
    witness.entries.push_back(std::move(e));
  }
  return {completion(inst, witness), std::move(witness)};
}

} // namespace coplan
