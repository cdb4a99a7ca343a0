#pragma once

// GMT-anchored calendar and clock arithmetic. Everything is integer minutes;
// zone offsets are fixed whole hours with no daylight-saving rules.

#include <chrono>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coplan {

using Minutes = std::chrono::minutes;
using Days = std::chrono::days;

/// A point in time, minutes since 1970-01-01 00:00 GMT.
using Instant = std::chrono::sys_time<Minutes>;

/// A proleptic Gregorian calendar date.
using DayDate = std::chrono::sys_days;

using Weekday = std::chrono::weekday;

inline constexpr int kMinutesPerHour = 60;
inline constexpr int kMinutesPerDay = 24 * kMinutesPerHour;

enum class Category { Short, Long };

std::string_view to_string(Category c);
Category parse_category(std::string_view text);

/// Fixed offset from GMT in whole hours, east positive.
class ZoneOffset {
public:
  static constexpr int kMinHours = -12;
  static constexpr int kMaxHours = 14;

  constexpr ZoneOffset() = default;
  explicit ZoneOffset(int hours_east);

  constexpr int hours() const { return hours_; }
  constexpr Minutes offset() const { return Minutes{hours_ * kMinutesPerHour}; }

  auto operator<=>(const ZoneOffset&) const = default;

private:
  int hours_ = 0;
};

/// "GMT+10", "GMT-5", "GMT+0".
std::string format_offset(ZoneOffset z);

/// A recurring local clock interval [start, end) in minutes of day. A window
/// whose end is not after its start runs past local midnight.
class ClockWindow {
public:
  constexpr ClockWindow() = default;
  ClockWindow(int start_minute, int end_minute);

  static ClockWindow hours(int start_hour, int end_hour) {
    return ClockWindow(start_hour * kMinutesPerHour, end_hour * kMinutesPerHour);
  }

  constexpr int start() const { return start_; }
  constexpr int end() const { return end_; }
  constexpr bool wraps() const { return end_ <= start_; }
  int length() const;

  /// True when every minute of `other` lies inside this window.
  bool covers(const ClockWindow& other) const;

  auto operator<=>(const ClockWindow&) const = default;

private:
  int start_ = 0;
  int end_ = kMinutesPerDay;
};

/// Half-open absolute interval [begin, end).
struct Interval {
  Instant begin;
  Instant end;

  Minutes length() const { return end - begin; }
  bool contains(const Interval& other) const { return begin <= other.begin && other.end <= end; }
  bool overlaps(const Interval& other) const { return begin < other.end && other.begin < end; }

  auto operator<=>(const Interval&) const = default;
};

/// Absolute GMT image of `window` as observed on local calendar day
/// `local_date` in zone `zone`. Split at GMT midnight, so the result holds
/// one interval, or two on adjacent GMT days.
std::vector<Interval> to_gmt_window(const ClockWindow& window, ZoneOffset zone, DayDate local_date);

/// The recurring daily GMT clock image of a local window, folded onto a single
/// GMT day and sorted: 11:00-19:00 at +10 gives [01:00-09:00]; 08:00-16:00 at
/// +10 gives [00:00-06:00, 22:00-24:00].
std::vector<ClockWindow> gmt_clock_image(const ClockWindow& window, ZoneOffset zone);

/// Inverse of to_gmt_window: reassembles the local window from its GMT pieces.
ClockWindow to_local_window(const std::vector<Interval>& gmt_pieces, ZoneOffset zone);

/// All absolute GMT intervals of a daily recurring local window that intersect
/// `range`, clipped to it, merged and sorted.
std::vector<Interval> recurring_gmt_intervals(const ClockWindow& window, ZoneOffset zone, const Interval& range);

/// Sorts and merges touching or overlapping intervals.
std::vector<Interval> merge_intervals(std::vector<Interval> intervals);

Weekday weekday_of(DayDate d);
bool is_weekend(DayDate d);

std::string_view weekday_name(Weekday w);

/// GMT calendar date of an instant.
DayDate date_of(Instant t);

/// Minute of the GMT day, in [0, 1440).
int minute_of_day(Instant t);

Instant start_of(DayDate d);

/// Ordered, GMT-anchored slots covering the project horizon: 24 one-hour slots
/// for the short category, 7 one-day slots for the long category. Throws
/// std::invalid_argument for any other horizon.
std::vector<Interval> slot_grid(Category category, Instant project_start, Minutes horizon);

Minutes horizon_of(Category category);
Minutes slot_length(Category category);

// Textual forms.
// "HH:MM" (or "H:MM"); "24:00" is accepted as end of day.
int parse_clock(std::string_view text);
/// "9:00", "11:00"; leading zero on the hour only when `pad_hour`.
std::string format_clock(int minute_of_day, bool pad_hour = true);
DayDate parse_date(std::string_view text);
std::string format_date(DayDate d);
/// "YYYY-MM-DD HH:MM GMT" (the "GMT"/"UTC" suffix is optional on input).
Instant parse_instant(std::string_view text);
std::string format_instant(Instant t);

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace coplan
