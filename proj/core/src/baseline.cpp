#include "coplan/baseline.hpp"

#include <random>
#include <stdexcept>

namespace coplan {

std::vector<Answer> guess_candidates(const ProblemInstance& instance) {
  std::vector<Answer> out;
  for (int i = 0; i < instance.slot_count(); ++i) {
    const Interval slot = instance.slot_interval(i);
    if (instance.category() == Category::Short)
      out.emplace_back(slot.end);
    else
      out.emplace_back(date_of(slot.begin));
  }
  return out;
}

double random_baseline(const std::vector<BaselineItem>& items, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("random baseline needs at least one trial");
  if (items.empty()) throw std::invalid_argument("random baseline needs at least one gold answer");
  for (const auto& item : items)
    if (item.candidates.empty()) throw std::invalid_argument("random baseline item without candidates");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> which(0, items.size() - 1);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& item = items[which(rng)];
    std::uniform_int_distribution<std::size_t> guess(0, item.candidates.size() - 1);
    if (item.candidates[guess(rng)] == item.gold) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(trials);
}

double random_baseline(Category category, const std::vector<InstanceRecord>& gold, std::size_t trials,
                       std::uint64_t seed) {
  std::vector<BaselineItem> items;
  for (const auto& r : gold) {
    if (r.category != category) continue;
    const ProblemInstance inst = instance_of(r);
    items.push_back({parse_answer(r.answer, category), guess_candidates(inst)});
  }
  return random_baseline(items, trials, seed);
}

} // namespace coplan
