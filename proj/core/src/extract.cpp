#include "coplan/extract.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>
#include <string>
#include <vector>

namespace coplan {

namespace {

struct Token {
  std::size_t begin = 0;
  std::size_t end = 0;
  Answer value;
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Picks the segment that the answer should come from.
struct Segment {
  std::string text;
  bool marked = false;
};

std::vector<Segment> segments_of(std::string_view text) {
  std::vector<Segment> out;
  const std::string s(text);
  if (auto pos = s.rfind("\\boxed{"); pos != std::string::npos) {
    const std::size_t open = pos + 7;
    int depth = 1;
    std::size_t i = open;
    for (; i < s.size() && depth > 0; ++i) {
      if (s[i] == '{') ++depth;
      if (s[i] == '}') --depth;
    }
    out.push_back({s.substr(open, (depth == 0 ? i - 1 : s.size()) - open), true});
  }
  const std::string low = lower(s);
  std::size_t best = std::string::npos;
  std::size_t best_end = 0;
  for (std::string_view marker : {"final answer", "answer is", "answer:"}) {
    const auto pos = low.rfind(marker);
    if (pos != std::string::npos && (best == std::string::npos || pos > best)) {
      best = pos;
      best_end = pos + marker.size();
    }
  }
  if (best != std::string::npos) {
    auto stop = s.find('\n', best_end);
    // Allow the answer to sit on the line after "Final answer:".
    if (stop != std::string::npos && s.find_first_not_of(" :*\t", best_end) == stop) stop = s.find('\n', stop + 1);
    out.push_back({s.substr(best_end, stop == std::string::npos ? std::string::npos : stop - best_end), true});
  }
  out.push_back({s, false});
  return out;
}

bool valid_date(int y, int m, int d) {
  return std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                     std::chrono::day{static_cast<unsigned>(d)}}
      .ok();
}

DayDate make_date(int y, int m, int d) {
  return std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                     std::chrono::day{static_cast<unsigned>(d)}};
}

// Hour/minute from regex groups; -1 when out of range.
int clock_minutes(const std::string& hour, const std::string& minute, const std::string& meridiem) {
  int h = std::stoi(hour);
  const int m = minute.empty() ? 0 : std::stoi(minute);
  if (m >= 60) return -1;
  if (!meridiem.empty()) {
    if (h < 1 || h > 12) return -1;
    const bool pm = std::tolower(static_cast<unsigned char>(meridiem[0])) == 'p';
    if (h == 12) h = 0;
    if (pm) h += 12;
  }
  if (h > 24 || (h == 24 && m != 0)) return -1;
  return h * kMinutesPerHour + m;
}

std::optional<int> zone_minutes(const std::string& label, const std::string& shift, const ZoneTable& zones) {
  if (label.empty()) return 0;
  int hours = 0;
  if (label == "Z") {
    hours = 0;
  } else if (auto z = zones.find(label)) {
    hours = z->hours();
  } else {
    return std::nullopt;
  }
  if (!shift.empty()) hours += std::stoi(shift);
  return hours * kMinutesPerHour;
}

bool digit_before(const std::string& s, std::size_t pos) {
  return pos > 0 && (std::isdigit(static_cast<unsigned char>(s[pos - 1])) || s[pos - 1] == ':' || s[pos - 1] == '-' ||
                     s[pos - 1] == '/');
}

const std::string kMeridiem = R"(([AaPp])\.?\s?[Mm]\b\.?)";
const std::string kZone = R"((?:\s*\(?\s*(GMT|UTC|Z|[A-Z]{2,5})([+-]\d{1,2})?\)?)?)";

std::vector<Token> short_tokens(const std::string& s, std::optional<Instant> start, const ZoneTable& zones) {
  static const std::regex dated(R"((\d{4})-(\d{1,2})-(\d{1,2})(?:T|,?\s+(?:at\s+)?)(\d{1,2})(?::(\d{2}))?(?:\s*)" +
                                kMeridiem + ")?" + kZone);
  static const std::regex time_then_date(R"(\b(\d{1,2})(?::(\d{2}))?(?:\s*)" + kMeridiem + ")?" + kZone +
                                         R"((?:\s+on|,)?\s+(\d{4})-(\d{1,2})-(\d{1,2}))");
  static const std::regex bare(R"(\b(\d{1,2})(?::(\d{2}))?(?:\s*)" + kMeridiem + ")?" + kZone);

  std::vector<Token> out;
  auto absolute = [&](int y, int mo, int d, int minute, const std::string& label, const std::string& shift,
                      std::size_t b, std::size_t e) {
    if (minute < 0 || !valid_date(y, mo, d)) return;
    const auto z = zone_minutes(label, shift, zones);
    if (!z) return;
    out.push_back({b, e, Instant{start_of(make_date(y, mo, d)) + Minutes{minute - *z}}});
  };

  for (auto it = std::sregex_iterator(s.begin(), s.end(), dated); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const auto pos = static_cast<std::size_t>(m.position());
    if (m[5].length() == 0 && m[6].length() == 0) continue; // "2014-12-17 3" is not a time
    absolute(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), clock_minutes(m[4], m[5], m[6]), m[7], m[8], pos,
             pos + static_cast<std::size_t>(m.length()));
  }
  for (auto it = std::sregex_iterator(s.begin(), s.end(), time_then_date); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const auto pos = static_cast<std::size_t>(m.position());
    if (digit_before(s, pos) || (m[2].length() == 0 && m[3].length() == 0)) continue;
    absolute(std::stoi(m[6]), std::stoi(m[7]), std::stoi(m[8]), clock_minutes(m[1], m[2], m[3]), m[4], m[5], pos,
             pos + static_cast<std::size_t>(m.length()));
  }
  const std::vector<Token> anchored = out;
  auto covered = [&](std::size_t b, std::size_t e) {
    return std::any_of(anchored.begin(), anchored.end(), [&](const Token& t) { return t.begin < e && b < t.end; });
  };
  if (start) {
    for (auto it = std::sregex_iterator(s.begin(), s.end(), bare); it != std::sregex_iterator(); ++it) {
      const auto& m = *it;
      const auto pos = static_cast<std::size_t>(m.position());
      const auto end = pos + static_cast<std::size_t>(m.length());
      if (digit_before(s, pos) || covered(pos, end)) continue;
      if (m[2].length() == 0 && m[3].length() == 0) continue;
      if (end < s.size() && (s[end] == '-' || s[end] == '/')) continue;
      const int minute = clock_minutes(m[1], m[2], m[3]);
      const auto z = zone_minutes(m[4], m[5], zones);
      if (minute < 0 || !z) continue;
      // The unique instant in (start, start + 24 h] with this GMT clock time.
      const int gmt = ((minute - *z) % kMinutesPerDay + kMinutesPerDay) % kMinutesPerDay;
      const int from = minute_of_day(*start);
      int delta = ((gmt - from) % kMinutesPerDay + kMinutesPerDay) % kMinutesPerDay;
      if (delta == 0) delta = kMinutesPerDay;
      out.push_back({pos, end, *start + Minutes{delta}});
    }
  }
  return out;
}

int month_number(const std::string& name) {
  static const std::array<const char*, 12> names{"jan", "feb", "mar", "apr", "may", "jun",
                                                 "jul", "aug", "sep", "oct", "nov", "dec"};
  const std::string low = lower(name).substr(0, 3);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (low == names[i]) return static_cast<int>(i) + 1;
  return 0;
}

std::vector<Token> long_tokens(const std::string& s, std::optional<Instant> start) {
  static const std::string kMonth =
      R"((Jan(?:uary)?|Feb(?:ruary)?|Mar(?:ch)?|Apr(?:il)?|May|June?|July?|Aug(?:ust)?|Sept?(?:ember)?|Oct(?:ober)?|Nov(?:ember)?|Dec(?:ember)?)\.?)";
  static const std::regex iso(R"((\d{4})-(\d{1,2})-(\d{1,2}))");
  static const std::regex us(R"((\d{1,2})/(\d{1,2})/(\d{4}))");
  static const std::regex month_day(kMonth + R"(\s+(\d{1,2})(?:st|nd|rd|th)?\b(?:,?\s+(\d{4}))?)", std::regex::icase);
  static const std::regex day_month(R"(\b(\d{1,2})(?:st|nd|rd|th)?\s+(?:of\s+)?)" + kMonth + R"((?:,?\s+(\d{4}))?)",
                                    std::regex::icase);
  static const std::regex month_dash_day(R"(\b(\d{1,2})-(\d{1,2})\b)");

  std::vector<Token> out;
  auto add = [&](std::optional<int> year, int month, int day, std::size_t b, std::size_t e) {
    if (month < 1 || month > 12 || day < 1 || day > 31) return;
    if (year) {
      if (valid_date(*year, month, day)) out.push_back({b, e, make_date(*year, month, day)});
      return;
    }
    if (!start) return;
    const DayDate first = date_of(*start);
    const int y0 = static_cast<int>(std::chrono::year_month_day{first}.year());
    for (int y : {y0, y0 + 1, y0 - 1}) {
      if (!valid_date(y, month, day)) continue;
      const DayDate d = make_date(y, month, day);
      if (d >= first && d < first + Days{7}) {
        out.push_back({b, e, d});
        return;
      }
    }
    if (valid_date(y0, month, day)) out.push_back({b, e, make_date(y0, month, day)});
  };

  std::vector<std::pair<std::size_t, std::size_t>> spans;
  auto taken = [&](std::size_t b, std::size_t e) {
    return std::any_of(spans.begin(), spans.end(), [&](const auto& p) { return p.first < e && b < p.second; });
  };
  auto scan = [&](const std::regex& re, auto&& handle) {
    std::vector<std::pair<std::size_t, std::size_t>> found;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it) {
      const auto& m = *it;
      const auto b = static_cast<std::size_t>(m.position());
      const auto e = b + static_cast<std::size_t>(m.length());
      if (taken(b, e)) continue;
      if (handle(m, b, e)) found.emplace_back(b, e);
    }
    spans.insert(spans.end(), found.begin(), found.end());
  };

  scan(iso, [&](const std::smatch& m, std::size_t b, std::size_t e) {
    if (digit_before(s, b)) return false;
    add(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), b, e);
    return true;
  });
  scan(us, [&](const std::smatch& m, std::size_t b, std::size_t e) {
    if (digit_before(s, b)) return false;
    add(std::stoi(m[3]), std::stoi(m[1]), std::stoi(m[2]), b, e);
    return true;
  });
  scan(month_day, [&](const std::smatch& m, std::size_t b, std::size_t e) {
    add(m[3].matched ? std::optional<int>(std::stoi(m[3])) : std::nullopt, month_number(m[1]), std::stoi(m[2]), b, e);
    return true;
  });
  scan(day_month, [&](const std::smatch& m, std::size_t b, std::size_t e) {
    add(m[3].matched ? std::optional<int>(std::stoi(m[3])) : std::nullopt, month_number(m[2]), std::stoi(m[1]), b, e);
    return true;
  });
  scan(month_dash_day, [&](const std::smatch& m, std::size_t b, std::size_t e) {
    if (digit_before(s, b)) return false;
    add(std::nullopt, std::stoi(m[1]), std::stoi(m[2]), b, e);
    return true;
  });
  return out;
}

} // namespace

std::optional<Answer> extract_answer(std::string_view text, Category category, std::optional<Instant> project_start,
                                     const ZoneTable& zones) {
  for (const auto& seg : segments_of(text)) {
    std::vector<Token> tokens = category == Category::Short ? short_tokens(seg.text, project_start, zones)
                                                            : long_tokens(seg.text, project_start);
    if (tokens.empty()) continue;
    auto by_position = [](const Token& a, const Token& b) { return a.begin < b.begin; };
    return seg.marked ? std::min_element(tokens.begin(), tokens.end(), by_position)->value
                      : std::max_element(tokens.begin(), tokens.end(), by_position)->value;
  }
  return std::nullopt;
}

} // namespace coplan
