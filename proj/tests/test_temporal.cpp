#include "coplan/temporal.hpp"

#include <doctest.h>

#include <random>

using namespace coplan;

namespace {

Instant at(const char* text) { return parse_instant(text); }

// Day count from 1970-01-01 by summing calendar lengths, no chrono involved.
long days_since_epoch(int y, int m, int d) {
  auto leap = [](int year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; };
  static const int month_len[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  long n = 0;
  if (y >= 1970) {
    for (int yy = 1970; yy < y; ++yy) n += leap(yy) ? 366 : 365;
  } else {
    for (int yy = y; yy < 1970; ++yy) n -= leap(yy) ? 366 : 365;
  }
  for (int mm = 1; mm < m; ++mm) n += month_len[mm - 1] + (mm == 2 && leap(y) ? 1 : 0);
  return n + d - 1;
}

} // namespace

TEST_CASE("local windows map to GMT") {
  const DayDate day = parse_date("2014-12-17");

  SUBCASE("AEST 11:00-19:00 is 01:00-09:00 GMT") {
    auto gmt = to_gmt_window(ClockWindow::hours(11, 19), ZoneOffset{10}, day);
    REQUIRE(gmt.size() == 1);
    CHECK(gmt[0].begin == at("2014-12-17 01:00"));
    CHECK(gmt[0].end == at("2014-12-17 09:00"));
  }
  SUBCASE("zero offset is the identity") {
    auto gmt = to_gmt_window(ClockWindow::hours(10, 18), ZoneOffset{0}, day);
    REQUIRE(gmt.size() == 1);
    CHECK(gmt[0].begin == at("2014-12-17 10:00"));
    CHECK(gmt[0].end == at("2014-12-17 18:00"));
  }
  SUBCASE("CET 10:00-18:00 is 09:00-17:00 GMT") {
    auto gmt = to_gmt_window(ClockWindow::hours(10, 18), ZoneOffset{1}, day);
    REQUIRE(gmt.size() == 1);
    CHECK(gmt[0].begin == at("2014-12-17 09:00"));
    CHECK(gmt[0].end == at("2014-12-17 17:00"));
  }
  SUBCASE("a window crossing GMT midnight splits across adjacent days") {
    auto gmt = to_gmt_window(ClockWindow::hours(8, 16), ZoneOffset{10}, day);
    REQUIRE(gmt.size() == 2);
    CHECK(gmt[0].begin == at("2014-12-16 22:00"));
    CHECK(gmt[0].end == at("2014-12-17 00:00"));
    CHECK(gmt[1].begin == at("2014-12-17 00:00"));
    CHECK(gmt[1].end == at("2014-12-17 06:00"));
  }
  SUBCASE("the daily GMT image folds onto one day") {
    auto image = gmt_clock_image(ClockWindow::hours(8, 16), ZoneOffset{10});
    REQUIRE(image.size() == 2);
    CHECK(image[0] == ClockWindow::hours(0, 6));
    CHECK(image[1] == ClockWindow::hours(22, 24));
  }
}

TEST_CASE("window conversion round-trips and preserves duration for every offset") {
  const DayDate day = parse_date("2021-03-14");
  for (int z = ZoneOffset::kMinHours; z <= ZoneOffset::kMaxHours; ++z) {
    for (int start = 0; start < 24; ++start) {
      for (int length = 1; length < 24; ++length) {
        const ClockWindow w = ClockWindow::hours(start, (start + length) % 24);
        const auto gmt = to_gmt_window(w, ZoneOffset{z}, day);
        Minutes total{0};
        for (const auto& iv : gmt) total += iv.length();
        CHECK(total == Minutes{length * kMinutesPerHour});
        CHECK(to_local_window(gmt, ZoneOffset{z}) == w);
      }
    }
  }
}

TEST_CASE("ClockWindow rejects empty windows and normalizes midnight") {
  CHECK_THROWS_AS(ClockWindow(600, 600), std::invalid_argument);
  CHECK(ClockWindow(0, 1440).length() == 1440);
  CHECK(ClockWindow::hours(22, 6).wraps());
  CHECK(ClockWindow::hours(22, 6).length() == 8 * 60);
  CHECK(ClockWindow::hours(9, 17).covers(ClockWindow::hours(12, 13)));
  CHECK_FALSE(ClockWindow::hours(9, 17).covers(ClockWindow::hours(16, 18)));
}

TEST_CASE("zone offsets are bounded") {
  CHECK_NOTHROW(ZoneOffset{-12});
  CHECK_NOTHROW(ZoneOffset{14});
  CHECK_THROWS(ZoneOffset{15});
  CHECK_THROWS(ZoneOffset{-13});
  CHECK(format_offset(ZoneOffset{10}) == "GMT+10");
  CHECK(format_offset(ZoneOffset{-5}) == "GMT-5");
  CHECK(format_offset(ZoneOffset{0}) == "GMT+0");
}

TEST_CASE("weekday_of") {
  CHECK(weekday_of(parse_date("2014-04-02")) == std::chrono::Wednesday);
  CHECK(weekday_of(parse_date("2014-04-05")) == std::chrono::Saturday);
  CHECK(weekday_of(parse_date("2000-01-01")) == std::chrono::Saturday);
  CHECK(weekday_of(parse_date("2021-09-11")) == std::chrono::Saturday);
  CHECK(weekday_name(std::chrono::Monday) == "Monday");
  CHECK(is_weekend(parse_date("2021-09-12")));
  CHECK_FALSE(is_weekend(parse_date("2021-09-13")));
}

TEST_CASE("weekday_of agrees with an independent day count on 1000 random dates") {
  std::mt19937 rng(20240514);
  std::uniform_int_distribution<int> year(1900, 2100), month(1, 12), day(1, 28);
  for (int i = 0; i < 1000; ++i) {
    const int y = year(rng), m = month(rng), d = day(rng);
    char text[16];
    std::snprintf(text, sizeof text, "%04d-%02d-%02d", y, m, d);
    const long n = days_since_epoch(y, m, d);
    const unsigned expected = static_cast<unsigned>(((4 + n) % 7 + 7) % 7); // 1970-01-01 was a Thursday
    CHECK_MESSAGE(weekday_of(parse_date(text)).c_encoding() == expected, text);
  }
}

TEST_CASE("slot grids") {
  const Instant start = at("2014-12-17 00:00 GMT");
  const auto hours = slot_grid(Category::Short, start, std::chrono::hours{24});
  REQUIRE(hours.size() == 24);
  CHECK(hours.front().begin == start);
  CHECK(hours.front().end == at("2014-12-17 01:00"));
  CHECK(hours.back().begin == at("2014-12-17 23:00"));
  CHECK(hours.back().end == at("2014-12-18 00:00"));
  for (std::size_t i = 1; i < hours.size(); ++i) CHECK(hours[i].begin == hours[i - 1].end);

  const auto days = slot_grid(Category::Long, start_of(parse_date("2021-09-11")), Days{7});
  REQUIRE(days.size() == 7);
  CHECK(date_of(days.front().begin) == parse_date("2021-09-11"));
  CHECK(date_of(days.back().begin) == parse_date("2021-09-17"));

  CHECK_THROWS_AS(slot_grid(Category::Short, start, std::chrono::hours{25}), std::invalid_argument);
  CHECK_THROWS_AS(slot_grid(Category::Long, start, std::chrono::hours{24}), std::invalid_argument);
}

TEST_CASE("text formats") {
  CHECK(format_instant(at("2014-12-17 15:00 GMT")) == "2014-12-17 15:00 GMT");
  CHECK(at("2014-12-17 15:00 UTC") == at("2014-12-17 15:00"));
  CHECK(parse_clock("9:00") == 540);
  CHECK(parse_clock("24:00") == 1440);
  CHECK(format_clock(540, false) == "9:00");
  CHECK(format_clock(540) == "09:00");
  CHECK(format_date(parse_date("2021-09-14")) == "2021-09-14");
  CHECK_THROWS_AS(parse_clock("25:00"), ParseError);
  CHECK_THROWS_AS(parse_date("2021-02-30"), ParseError);
  CHECK_THROWS_AS(parse_instant("2014-12-17"), ParseError);
  CHECK(parse_category("short") == Category::Short);
  CHECK_THROWS_AS(parse_category("medium"), ParseError);
}

TEST_CASE("recurring intervals are clipped to the range and merged") {
  const Interval day{at("2014-12-17 00:00"), at("2014-12-18 00:00")};
  const auto ivs = recurring_gmt_intervals(ClockWindow::hours(8, 16), ZoneOffset{10}, day);
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0] == Interval{at("2014-12-17 00:00"), at("2014-12-17 06:00")});
  CHECK(ivs[1] == Interval{at("2014-12-17 22:00"), at("2014-12-18 00:00")});

  const auto merged = merge_intervals({{at("2014-12-17 01:00"), at("2014-12-17 03:00")},
                                       {at("2014-12-17 03:00"), at("2014-12-17 04:00")},
                                       {at("2014-12-17 06:00"), at("2014-12-17 07:00")}});
  REQUIRE(merged.size() == 2);
  CHECK(merged[0] == Interval{at("2014-12-17 01:00"), at("2014-12-17 04:00")});
}
