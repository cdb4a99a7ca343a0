#include "coplan/temporal.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace coplan {

namespace {

int floor_mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

} // namespace

std::string_view to_string(Category c) { return c == Category::Short ? "short" : "long"; }

Category parse_category(std::string_view text) {
  if (text == "short") return Category::Short;
  if (text == "long") return Category::Long;
  throw ParseError("unknown category '" + std::string(text) + "'");
}

ZoneOffset::ZoneOffset(int hours_east) : hours_(hours_east) {
  if (hours_east < kMinHours || hours_east > kMaxHours)
    throw std::invalid_argument("zone offset out of range: " + std::to_string(hours_east));
}

std::string format_offset(ZoneOffset z) {
  std::string s = "GMT";
  s += z.hours() < 0 ? '-' : '+';
  s += std::to_string(std::abs(z.hours()));
  return s;
}

ClockWindow::ClockWindow(int start_minute, int end_minute) : start_(start_minute), end_(end_minute) {
  if (start_minute < 0 || start_minute > kMinutesPerDay || end_minute < 0 || end_minute > kMinutesPerDay)
    throw std::invalid_argument("clock window bounds must lie in [00:00, 24:00]");
  if (start_minute == end_minute) throw std::invalid_argument("clock window must not be empty");
  start_ = start_minute % kMinutesPerDay;
  end_ = end_minute == 0 ? kMinutesPerDay : end_minute;
}

int ClockWindow::length() const { return wraps() ? end_ + kMinutesPerDay - start_ : end_ - start_; }

bool ClockWindow::covers(const ClockWindow& other) const {
  // Offset of other's start inside this window, measured from our start.
  const int rel = floor_mod(other.start_ - start_, kMinutesPerDay);
  return rel + other.length() <= length();
}

std::vector<Interval> to_gmt_window(const ClockWindow& window, ZoneOffset zone, DayDate local_date) {
  const Instant begin = start_of(local_date) + Minutes{window.start()} - zone.offset();
  const Instant end = begin + Minutes{window.length()};
  const Instant midnight = start_of(date_of(begin)) + Days{1};
  if (end <= midnight) return {{begin, end}};
  return {{begin, midnight}, {midnight, end}};
}

std::vector<ClockWindow> gmt_clock_image(const ClockWindow& window, ZoneOffset zone) {
  const int begin = floor_mod(window.start() - zone.hours() * kMinutesPerHour, kMinutesPerDay);
  const int end = begin + window.length();
  if (end <= kMinutesPerDay) return {ClockWindow(begin, end)};
  return {ClockWindow(0, end - kMinutesPerDay), ClockWindow(begin, kMinutesPerDay)};
}

ClockWindow to_local_window(const std::vector<Interval>& gmt_pieces, ZoneOffset zone) {
  if (gmt_pieces.empty()) throw std::invalid_argument("no GMT pieces to convert");
  const auto merged = merge_intervals(gmt_pieces);
  if (merged.size() != 1) throw std::invalid_argument("GMT pieces are not contiguous");
  const Instant local_begin = merged.front().begin + zone.offset();
  const int start = minute_of_day(local_begin);
  const int len = static_cast<int>(merged.front().length().count());
  if (len <= 0 || len >= kMinutesPerDay) throw std::invalid_argument("window length out of range");
  const int end = start + len;
  return ClockWindow(start, end > kMinutesPerDay ? end - kMinutesPerDay : end);
}

std::vector<Interval> merge_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end());
  std::vector<Interval> out;
  for (const auto& iv : intervals) {
    if (iv.end <= iv.begin) continue;
    if (!out.empty() && iv.begin <= out.back().end)
      out.back().end = std::max(out.back().end, iv.end);
    else
      out.push_back(iv);
  }
  return out;
}

std::vector<Interval> recurring_gmt_intervals(const ClockWindow& window, ZoneOffset zone, const Interval& range) {
  std::vector<Interval> pieces;
  // A local day's window can start up to 14h before or 12h after the GMT day,
  // and may run a full day past its start; two days of slack covers all cases.
  const DayDate first = date_of(range.begin) - Days{2};
  const DayDate last = date_of(range.end) + Days{2};
  for (DayDate d = first; d <= last; d += Days{1}) {
    for (auto iv : to_gmt_window(window, zone, d)) {
      iv.begin = std::max(iv.begin, range.begin);
      iv.end = std::min(iv.end, range.end);
      if (iv.begin < iv.end) pieces.push_back(iv);
    }
  }
  return merge_intervals(std::move(pieces));
}

Weekday weekday_of(DayDate d) { return Weekday{d}; }

bool is_weekend(DayDate d) {
  const auto w = weekday_of(d);
  return w == std::chrono::Saturday || w == std::chrono::Sunday;
}

std::string_view weekday_name(Weekday w) {
  static constexpr std::string_view names[] = {"Sunday",   "Monday", "Tuesday", "Wednesday",
                                               "Thursday", "Friday", "Saturday"};
  return names[w.c_encoding()];
}

DayDate date_of(Instant t) { return std::chrono::floor<Days>(t); }

int minute_of_day(Instant t) { return static_cast<int>((t - start_of(date_of(t))).count()); }

Instant start_of(DayDate d) { return Instant{d}; }

Minutes horizon_of(Category category) {
  return category == Category::Short ? Minutes{24 * kMinutesPerHour} : Minutes{7 * kMinutesPerDay};
}

Minutes slot_length(Category category) {
  return category == Category::Short ? Minutes{kMinutesPerHour} : Minutes{kMinutesPerDay};
}

std::vector<Interval> slot_grid(Category category, Instant project_start, Minutes horizon) {
  if (horizon != horizon_of(category)) throw std::invalid_argument("horizon must be 24 hours (short) or 7 days (long)");
  if (category == Category::Long && minute_of_day(project_start) != 0)
    throw std::invalid_argument("long projects start at a day boundary");
  if (category == Category::Short && minute_of_day(project_start) % kMinutesPerHour != 0)
    throw std::invalid_argument("short projects start on the hour");
  const Minutes step = slot_length(category);
  std::vector<Interval> slots;
  for (Instant t = project_start; t < project_start + horizon; t += step) slots.push_back({t, t + step});
  return slots;
}

int parse_clock(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  int h = 0, m = 0;
  if (colon == std::string_view::npos || colon == 0 || colon > 2 || !parse_int(text.substr(0, colon), h) ||
      text.size() - colon - 1 != 2 || !parse_int(text.substr(colon + 1), m))
    throw ParseError("malformed clock time '" + std::string(text) + "'");
  if (h < 0 || m < 0 || m >= 60 || h > 24 || (h == 24 && m != 0))
    throw ParseError("clock time out of range '" + std::string(text) + "'");
  return h * kMinutesPerHour + m;
}

std::string format_clock(int minute_of_day, bool pad_hour) {
  char buf[16];
  std::snprintf(buf, sizeof buf, pad_hour ? "%02d:%02d" : "%d:%02d", minute_of_day / kMinutesPerHour,
                minute_of_day % kMinutesPerHour);
  return buf;
}

DayDate parse_date(std::string_view text) {
  text = trim(text);
  int y = 0, mo = 0, d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' || !parse_int(text.substr(0, 4), y) ||
      !parse_int(text.substr(5, 2), mo) || !parse_int(text.substr(8, 2), d))
    throw ParseError("malformed date '" + std::string(text) + "'");
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(mo)},
                                        std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) throw ParseError("invalid calendar date '" + std::string(text) + "'");
  return DayDate{ymd};
}

std::string format_date(DayDate d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

Instant parse_instant(std::string_view text) {
  text = trim(text);
  for (std::string_view suffix : {"GMT", "UTC"}) {
    if (text.size() > suffix.size() && text.substr(text.size() - suffix.size()) == suffix) {
      text = trim(text.substr(0, text.size() - suffix.size()));
      break;
    }
  }
  const auto space = text.find(' ');
  if (space == std::string_view::npos) throw ParseError("malformed instant '" + std::string(text) + "'");
  const DayDate d = parse_date(text.substr(0, space));
  const int m = parse_clock(text.substr(space + 1));
  return start_of(d) + Minutes{m};
}

std::string format_instant(Instant t) {
  return format_date(date_of(t)) + " " + format_clock(minute_of_day(t)) + " GMT";
}

} // namespace coplan
