#pragma once

#include "coplan/record.hpp"

#include <cstdint>
#include <vector>

namespace coplan {

/// The answers a uniform guesser chooses from: the 24 hour marks after the
/// project start (short) or the 7 dates of the horizon (long).
std::vector<Answer> guess_candidates(const ProblemInstance& instance);

struct BaselineItem {
  Answer gold;
  std::vector<Answer> candidates;
};

/// Monte-Carlo accuracy in percent: each trial draws an item and a candidate
/// uniformly and scores an exact match. Requires trials >= 1 and a non-empty
/// candidate list per item.
double random_baseline(const std::vector<BaselineItem>& items, std::size_t trials, std::uint64_t seed);

/// Same, over the records of one category in `gold`.
double random_baseline(Category category, const std::vector<InstanceRecord>& gold, std::size_t trials,
                       std::uint64_t seed);

} // namespace coplan
