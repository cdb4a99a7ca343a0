#pragma once

// Final-answer extraction from free-form model output.
//
// Order of preference:
//   1. the contents of the last \boxed{...};
//   2. the text after the last "final answer" / "answer is" / "Answer:" marker;
//   3. the whole text.
// Within a marker segment the first well-formed token wins; in the whole text
// the last one does. Short answers accept "YYYY-MM-DD HH:MM", bare clock
// times, 12-hour clocks ("3 PM", "3:00 p.m.") and a trailing zone label from
// the zone table (GMT and UTC are the same). Long answers accept ISO dates,
// "Sept 14", "14 September 2021", "09-14" and "9/14/2021". Anything without
// a year or date is placed inside the horizon that starts at `project_start`.

#include "coplan/model.hpp"
#include "coplan/zones.hpp"

#include <optional>
#include <string_view>

namespace coplan {

std::optional<Answer> extract_answer(std::string_view text, Category category,
                                     std::optional<Instant> project_start = std::nullopt,
                                     const ZoneTable& zones = ZoneTable::builtin());

} // namespace coplan
