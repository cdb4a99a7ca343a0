#include "coplan/dialogue.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace coplan {

namespace {

const char* const kDash = "\xE2\x80\x93"; // en dash between clock times

std::string unit_word(TimeUnit u) { return u == TimeUnit::Hour ? "hour(s)" : "day(s)"; }
std::string plural_unit(TimeUnit u) { return u == TimeUnit::Hour ? "hours" : "days"; }

std::string dated(DayDate d) { return format_date(d) + " (" + std::string(weekday_name(weekday_of(d))) + ")"; }

std::string clock_text(int minute) { return format_clock(minute, false); }

std::string participant_line(const ProblemInstance& inst, const Participant& p) {
  const TimeUnit u = inst.unit();
  std::ostringstream os;
  os << p.name << ":";
  if (inst.category() == Category::Short) {
    const auto& c = *p.clock;
    os << " My working hours are " << clock_text(c.working.start()) << kDash << clock_text(c.working.end()) << " in "
       << c.zone_label << " (" << format_offset(c.zone) << ").";
    if (c.meal)
      os << " I take a meal break from " << clock_text(c.meal->start()) << " to " << clock_text(c.meal->end()) << ".";
  } else {
    os << (p.working_days == WorkingDays::Weekdays ? " I work only on weekdays." : " I can work on any day.");
  }
  if (p.break_between)
    os << " I need a break of at least " << *p.break_between << ' ' << unit_word(u)
       << " between any two tasks I perform.";
  if (p.break_after)
    os << " I can work up to " << p.break_after->max_consecutive << " consecutive " << plural_unit(u)
       << ", then must rest at least " << p.break_after->rest << ' ' << unit_word(u) << " before working again.";
  for (const auto& iv : p.unavailable_intervals)
    os << " I am unavailable from " << format_instant(iv.begin) << " to " << format_instant(iv.end) << ".";
  for (auto d : p.unavailable_dates) os << " I am unavailable on " << dated(d) << ".";
  return os.str();
}

} // namespace

std::string render_dialogue(const ProblemInstance& inst) {
  const auto& tasks = inst.tasks();
  const auto& people = inst.participants();
  const std::string& first = people[0].name;
  const std::string& second = people[1].name;
  std::ostringstream os;

  os << second << ": The project";
  if (!inst.scenario().empty()) os << " \"" << inst.scenario() << "\"";
  if (inst.category() == Category::Short)
    os << " will start at " << format_instant(inst.project_start()) << ".\n";
  else
    os << " will start on " << dated(inst.start_date()) << ".\n";

  os << first << ": How is the project decomposed? I remember we discussed this before.\n";

  os << second << ": As discussed before, the whole project consists of several tasks: ";
  for (std::size_t i = 0; i < tasks.size(); ++i) os << (i ? ", " : "") << tasks[i].name;
  os << ".\n";

  os << first << ": Task durations are: ";
  for (std::size_t i = 0; i < tasks.size(); ++i)
    os << (i ? ", " : "") << tasks[i].name << " takes " << tasks[i].duration << ' ' << unit_word(inst.unit());
  os << ".\n";

  os << second << ":";
  for (const auto& e : inst.dependencies().edges())
    os << ' ' << tasks[e.after].name << " must begin only after " << tasks[e.before].name << " is completed.";
  os << '\n';

  for (const auto& p : people) os << participant_line(inst, p) << '\n';
  return os.str();
}

std::string render_question(const ProblemInstance& inst) {
  if (inst.category() == Category::Short)
    return "Given the dialogue above, what is the earliest time (in GMT) at which the whole project can be "
           "completed? Give the answer in the format YYYY-MM-DD HH:MM GMT.";
  return "Given the dialogue above, what is the earliest date on which the whole project can be completed? "
         "Give the answer in the format YYYY-MM-DD.";
}

namespace {

struct Line {
  std::string speaker;
  std::vector<std::string> sentences;
};

std::vector<std::string> split(const std::string& text, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(text.substr(pos));
      return out;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

Line read_line(const std::string& raw, std::size_t number) {
  const auto colon = raw.find(": ");
  if (colon == std::string::npos || colon == 0)
    throw ParseError("line " + std::to_string(number) + ": expected 'Speaker: text'");
  std::string body = raw.substr(colon + 2);
  if (body.empty() || body.back() != '.') throw ParseError("line " + std::to_string(number) + ": missing final period");
  body.pop_back();
  return {raw.substr(0, colon), split(body, ". ")};
}

TimeUnit unit_from(const std::string& word) { return word.rfind("hour", 0) == 0 ? TimeUnit::Hour : TimeUnit::Day; }

int number(const std::string& digits) { return std::stoi(digits); }

DayDate checked_date(const std::string& date, const std::string& weekday) {
  const DayDate d = parse_date(date);
  if (weekday_name(weekday_of(d)) != weekday)
    throw ParseError(date + " is a " + std::string(weekday_name(weekday_of(d))) + ", not a " + weekday);
  return d;
}

ZoneOffset offset_from(const std::string& text) {
  try {
    return ZoneOffset{std::stoi(text)};
  } catch (const std::invalid_argument&) {
    throw ParseError("bad zone offset 'GMT" + text + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("bad zone offset 'GMT" + text + "'");
  }
}

ClockWindow window_from(const std::string& a, const std::string& b) {
  try {
    return ClockWindow(parse_clock(a), parse_clock(b));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

RawParticipant parse_participant(const Line& line, Category category, std::string label) {
  static const std::regex working(
      R"(My working hours are (\d{1,2}:\d{2})\xE2\x80\x93(\d{1,2}:\d{2}) in (\S+) \(GMT([+-]\d+)\))");
  static const std::regex meal(R"(I take a meal break from (\d{1,2}:\d{2}) to (\d{1,2}:\d{2}))");
  static const std::regex between(
      R"(I need a break of at least (\d+) (hour|day)\(s\) between any two tasks I perform)");
  static const std::regex after(
      R"(I can work up to (\d+) consecutive (hours|days), then must rest at least (\d+) (hour|day)\(s\) before working again)");
  static const std::regex off_interval(
      R"(I am unavailable from (\d{4}-\d{2}-\d{2} \d{1,2}:\d{2} GMT) to (\d{4}-\d{2}-\d{2} \d{1,2}:\d{2} GMT))");
  static const std::regex off_date(R"(I am unavailable on (\d{4}-\d{2}-\d{2}) \((\w+)\))");

  RawParticipant p;
  p.label = std::move(label);
  p.name = line.speaker;
  std::smatch m;
  for (const auto& s : line.sentences) {
    if (category == Category::Short && std::regex_match(s, m, working)) {
      if (p.clock) throw ParseError(p.name + ": working hours stated twice");
      p.clock = ClockAvailability{m[3], offset_from(m[4]), window_from(m[1], m[2]), std::nullopt};
    } else if (category == Category::Short && std::regex_match(s, m, meal)) {
      if (!p.clock) throw ParseError(p.name + ": meal break before working hours");
      p.clock->meal = window_from(m[1], m[2]);
    } else if (category == Category::Long && s == "I work only on weekdays") {
      p.working_days = WorkingDays::Weekdays;
    } else if (category == Category::Long && s == "I can work on any day") {
      p.working_days = WorkingDays::Any;
    } else if (std::regex_match(s, m, between)) {
      p.break_between = Quantity{number(m[1]), unit_from(m[2])};
    } else if (std::regex_match(s, m, after)) {
      p.break_after = RawBreakAfter{{number(m[1]), unit_from(m[2])}, {number(m[3]), unit_from(m[4])}};
    } else if (category == Category::Short && std::regex_match(s, m, off_interval)) {
      p.unavailable_intervals.push_back({parse_instant(m[1].str()), parse_instant(m[2].str())});
    } else if (category == Category::Long && std::regex_match(s, m, off_date)) {
      p.unavailable_dates.push_back(checked_date(m[1], m[2]));
    } else {
      throw ParseError(p.name + ": unrecognized sentence '" + s + "'");
    }
  }
  if (category == Category::Short && !p.clock) throw ParseError(p.name + ": no working hours");
  if (category == Category::Long && !p.working_days) throw ParseError(p.name + ": no working-day rule");
  return p;
}

} // namespace

RawInstance parse_dialogue(const std::string& text) {
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    for (std::size_t n = 1; std::getline(in, raw); ++n) {
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.empty()) continue;
      lines.push_back(read_line(raw, n));
    }
  }
  if (lines.size() != 5 + kParticipantCount)
    throw ParseError("expected " + std::to_string(5 + kParticipantCount) + " lines, got " +
                     std::to_string(lines.size()));

  auto single = [&](std::size_t i) -> const std::string& {
    if (lines[i].sentences.size() != 1) throw ParseError("line " + std::to_string(i + 1) + ": expected one sentence");
    return lines[i].sentences.front();
  };

  RawInstance raw;
  static const std::regex start_short(
      R"re(The project(?: "([^"]*)")? will start at (\d{4}-\d{2}-\d{2} \d{1,2}:\d{2} GMT))re");
  static const std::regex start_long(R"re(The project(?: "([^"]*)")? will start on (\d{4}-\d{2}-\d{2}) \((\w+)\))re");
  std::smatch m;
  const std::string& opening = single(0);
  if (std::regex_match(opening, m, start_short)) {
    raw.category = Category::Short;
    raw.project_start = parse_instant(m[2].str());
  } else if (std::regex_match(opening, m, start_long)) {
    raw.category = Category::Long;
    raw.project_start = start_of(checked_date(m[2], m[3]));
  } else {
    throw ParseError("line 1: unrecognized project start '" + opening + "'");
  }
  raw.scenario = m[1].str();
  const TimeUnit unit = unit_of(raw.category);
  raw.horizon = Quantity{static_cast<int>(horizon_of(raw.category) / slot_length(raw.category)), unit};

  if (single(1) != "How is the project decomposed? I remember we discussed this before")
    throw ParseError("line 2: unrecognized decomposition question");

  const std::string list_prefix = "As discussed before, the whole project consists of several tasks: ";
  const std::string& listing = single(2);
  if (listing.rfind(list_prefix, 0) != 0) throw ParseError("line 3: unrecognized task list");
  std::map<std::string, std::string> label_of;
  for (const auto& name : split(listing.substr(list_prefix.size()), ", ")) {
    const std::string label = std::string("Task ") + static_cast<char>('A' + raw.tasks.size());
    if (!label_of.emplace(name, label).second) throw ParseError("line 3: task '" + name + "' listed twice");
    raw.tasks.push_back({label, name, {}});
  }

  const std::string dur_prefix = "Task durations are: ";
  const std::string& durations = single(3);
  if (durations.rfind(dur_prefix, 0) != 0) throw ParseError("line 4: unrecognized durations");
  static const std::regex takes(R"((.+) takes (\d+) (hour|day)\(s\))");
  std::vector<bool> seen(raw.tasks.size(), false);
  for (const auto& item : split(durations.substr(dur_prefix.size()), ", ")) {
    if (!std::regex_match(item, m, takes)) throw ParseError("line 4: unrecognized duration '" + item + "'");
    auto it = label_of.find(m[1]);
    if (it == label_of.end()) throw ParseError("line 4: unknown task '" + m[1].str() + "'");
    const std::size_t index = static_cast<std::size_t>(it->second.back() - 'A');
    if (seen[index]) throw ParseError("line 4: duration of '" + m[1].str() + "' stated twice");
    seen[index] = true;
    raw.tasks[index].duration = Quantity{number(m[2]), unit_from(m[3])};
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw ParseError("line 4: no duration for '" + raw.tasks[i].name + "'");

  static const std::regex after_rule(R"((.+) must begin only after (.+) is completed)");
  std::vector<Edge> edges;
  for (const auto& s : lines[4].sentences) {
    if (!std::regex_match(s, m, after_rule)) throw ParseError("line 5: unrecognized dependency '" + s + "'");
    auto succ = label_of.find(m[1]);
    auto pred = label_of.find(m[2]);
    if (succ == label_of.end() || pred == label_of.end()) throw ParseError("line 5: unknown task in '" + s + "'");
    raw.dependencies.emplace_back(pred->second, succ->second);
    edges.push_back(
        {static_cast<std::size_t>(pred->second.back() - 'A'), static_cast<std::size_t>(succ->second.back() - 'A')});
  }
  std::sort(edges.begin(), edges.end());
  bool matched = false;
  for (auto t : kDependencyTypes) {
    auto expected = topology_edges(t);
    std::sort(expected.begin(), expected.end());
    if (expected == edges) {
      raw.dependency_type = t;
      matched = true;
    }
  }
  if (!matched) throw ParseError("line 5: dependencies match no known topology");

  if (lines[0].speaker != lines[2].speaker || lines[0].speaker != lines[4].speaker ||
      lines[1].speaker != lines[3].speaker)
    throw ParseError("speakers alternate inconsistently");
  for (std::size_t i = 0; i < kParticipantCount; ++i) {
    const Line& line = lines[5 + i];
    raw.participants.push_back(parse_participant(line, raw.category, "Agent" + std::to_string(i + 1)));
  }
  if (raw.participants[0].name != lines[1].speaker || raw.participants[1].name != lines[0].speaker)
    throw ParseError("availability lines do not match the speakers");
  return raw;
}

} // namespace coplan
