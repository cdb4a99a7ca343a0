#include "coplan/generator.hpp"

#include "coplan/dialogue.hpp"
#include "coplan/solver.hpp"
#include "coplan/zones.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace coplan {

GenerationConfig GenerationConfig::defaults(Category category) {
  GenerationConfig c;
  c.category = category;
  if (category == Category::Long) {
    c.break_between = {1, 2};
    c.break_after_cap = {2, 3};
  }
  return c;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument("generation config: " + message);
}

void require_range(const IntRange& r, int floor, const std::string& name) {
  require(r.min >= floor && r.min <= r.max, name + " must satisfy " + std::to_string(floor) + " <= min <= max");
}

void require_probability(double p, const std::string& name) {
  require(p >= 0.0 && p <= 1.0, name + " must lie in [0, 1]");
}

bool even_mix(const GenerationConfig& c) {
  return c.dependency_mix[0] == c.dependency_mix[1] && c.dependency_mix[1] == c.dependency_mix[2];
}

} // namespace

void GenerationConfig::validate() const {
  const int slots = static_cast<int>(horizon_of(category) / slot_length(category));
  require(count >= 1, "count must be positive");
  require(std::all_of(dependency_mix.begin(), dependency_mix.end(), [](double w) { return w >= 0.0; }) &&
              dependency_mix[0] + dependency_mix[1] + dependency_mix[2] > 0.0,
          "dependency mix weights must be non-negative and not all zero");
  if (even_mix(*this)) require(count % kDependencyTypes.size() == 0, "count must be divisible by 3 for an even mix");
  require_range(duration, 1, "duration");
  require(duration.max <= slots, "duration exceeds the horizon");
  require(static_cast<int>(kTaskCount) * duration.max <= static_cast<int>(kParticipantCount) * slots,
          "total work can exceed the horizon");
  require_probability(p_break_between, "p_break_between");
  require_range(break_between, 1, "break_between");
  require_probability(p_break_after, "p_break_after");
  require_range(break_after_cap, 1, "break_after_cap");
  require_range(break_after_rest, 1, "break_after_rest");
  require(!domains.empty(), "no domains");
  require(first_start_date <= last_start_date, "start date range is empty");
  require(max_retries >= 1, "max_retries must be positive");
  if (category == Category::Short) {
    require(!zones.empty(), "no zones");
    for (const auto& z : zones) require(ZoneTable::builtin().find(z).has_value(), "unknown zone '" + z + "'");
    require_range(window_start_hour, 0, "window_start_hour");
    require(window_start_hour.max <= 23, "window_start_hour beyond 23");
    require_range(window_length_hours, 1, "window_length_hours");
    require(window_length_hours.max <= 23, "window_length_hours must be below 24");
    require_probability(p_meal_break, "p_meal_break");
    require_range(meal_length_hours, 1, "meal_length_hours");
    require(p_meal_break == 0.0 || meal_length_hours.max + 2 <= window_length_hours.min,
            "meal break must fit strictly inside the shortest window");
    require_probability(p_unavailable_interval, "p_unavailable_interval");
  } else {
    require_probability(p_weekdays_only, "p_weekdays_only");
    require_probability(p_unavailable_date, "p_unavailable_date");
  }
}

DependencyType dependency_type_for(const GenerationConfig& config, std::size_t index) {
  constexpr std::size_t kinds = kDependencyTypes.size();
  if (even_mix(config)) return kDependencyTypes[index % kinds];
  if (index >= config.count) throw std::out_of_range("index beyond config.count");

  // Largest-remainder quotas over the whole batch.
  const double total = config.dependency_mix[0] + config.dependency_mix[1] + config.dependency_mix[2];
  std::array<std::size_t, kinds> quota{};
  std::array<double, kinds> remainder{};
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < kinds; ++k) {
    const double exact = config.dependency_mix[k] / total * static_cast<double>(config.count);
    quota[k] = static_cast<std::size_t>(exact);
    remainder[k] = exact - static_cast<double>(quota[k]);
    assigned += quota[k];
  }
  while (assigned < config.count) {
    const auto k = static_cast<std::size_t>(std::max_element(remainder.begin(), remainder.end()) - remainder.begin());
    ++quota[k];
    remainder[k] = -1.0;
    ++assigned;
  }

  // Smooth weighted round robin interleaves the quotas.
  std::array<long long, kinds> current{};
  const long long sum = static_cast<long long>(config.count);
  std::size_t pick = 0;
  for (std::size_t i = 0; i <= index; ++i) {
    for (std::size_t k = 0; k < kinds; ++k) current[k] += static_cast<long long>(quota[k]);
    pick = static_cast<std::size_t>(std::max_element(current.begin(), current.end()) - current.begin());
    current[pick] -= sum;
  }
  return kDependencyTypes[pick];
}

namespace {

class Sampler {
public:
  Sampler(std::uint64_t seed, Category category, std::size_t index) {
    const auto idx = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(category == Category::Short ? 0x5u : 0x1u),
                      static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
    rng_.seed(seq);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  int uniform(const IntRange& r) { return uniform(r.min, r.max); }
  bool chance(double p) { return p > 0.0 && std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1))];
  }

private:
  std::mt19937_64 rng_;
};

RawInstance draw(const GenerationConfig& config, DependencyType type, Sampler& s) {
  const bool is_short = config.category == Category::Short;
  const TimeUnit unit = unit_of(config.category);
  const int slots = static_cast<int>(horizon_of(config.category) / slot_length(config.category));

  RawInstance raw;
  raw.category = config.category;
  const int span = static_cast<int>((config.last_start_date - config.first_start_date).count());
  raw.project_start = start_of(config.first_start_date + Days{s.uniform(0, span)});
  raw.horizon = Quantity{slots, unit};
  raw.dependency_type = type;
  for (std::size_t i = 0; i < kTaskCount; ++i) {
    const std::string label = std::string("Task ") + static_cast<char>('A' + i);
    raw.tasks.push_back({label, label, {s.uniform(config.duration), unit}});
  }
  for (const auto& e : topology_edges(type))
    raw.dependencies.emplace_back(raw.tasks[e.before].label, raw.tasks[e.after].label);

  for (std::size_t i = 0; i < kParticipantCount; ++i) {
    RawParticipant p;
    p.label = "Agent" + std::to_string(i + 1);
    p.name = p.label;
    if (is_short) {
      const std::string& zone = s.pick(config.zones);
      const int start = s.uniform(config.window_start_hour);
      const int length = s.uniform(config.window_length_hours);
      ClockAvailability clock{zone, ZoneTable::builtin().at(zone), ClockWindow::hours(start, (start + length) % 24),
                              std::nullopt};
      if (s.chance(config.p_meal_break)) {
        const int meal = s.uniform(config.meal_length_hours);
        const int offset = s.uniform(1, length - meal - 1);
        clock.meal = ClockWindow::hours((start + offset) % 24, (start + offset + meal) % 24);
      }
      p.clock = clock;
      if (s.chance(config.p_unavailable_interval)) {
        const int from = s.uniform(0, slots - 2);
        const int hours = s.uniform(1, 2);
        p.unavailable_intervals.push_back({raw.project_start + Minutes{from * kMinutesPerHour},
                                           raw.project_start + Minutes{(from + hours) * kMinutesPerHour}});
      }
    } else {
      p.working_days = s.chance(config.p_weekdays_only) ? WorkingDays::Weekdays : WorkingDays::Any;
      if (s.chance(config.p_unavailable_date))
        p.unavailable_dates.push_back(date_of(raw.project_start) + Days{s.uniform(0, slots - 1)});
    }
    if (s.chance(config.p_break_between)) p.break_between = Quantity{s.uniform(config.break_between), unit};
    if (s.chance(config.p_break_after))
      p.break_after =
          RawBreakAfter{{s.uniform(config.break_after_cap), unit}, {s.uniform(config.break_after_rest), unit}};
    raw.participants.push_back(std::move(p));
  }
  return raw;
}

} // namespace

Prototype generate_prototype(const GenerationConfig& config, std::size_t index) {
  config.validate();
  const DependencyType type = dependency_type_for(config, index);
  Sampler sampler(config.seed, config.category, index);
  for (std::size_t attempt = 0; attempt < config.max_retries; ++attempt) {
    RawInstance raw = draw(config, type, sampler);
    raw.domain = config.domains[index % config.domains.size()];
    raw.seed = config.seed;
    ProblemInstance instance = build_instance(raw);
    try {
      Solution solution = solve_optimal(instance);
      Prototype p{instance,        render_dialogue(instance),  render_question(instance), metadata_of(instance),
                  solution.answer, std::move(solution.witness)};
      return p;
    } catch (const InfeasibleError&) {
      continue;
    }
  }
  throw GenerationExhausted("no feasible instance for index " + std::to_string(index) + " after " +
                            std::to_string(config.max_retries) + " draws");
}

std::string record_id(Category category, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04zu", index);
  return std::string(to_string(category)) + "-" + buf;
}

InstanceRecord to_record(const Prototype& p, const std::string& id, std::uint64_t seed) {
  InstanceRecord r;
  r.id = id;
  r.category = p.instance.category();
  r.domain = p.instance.domain();
  r.dependency_type = p.instance.dependencies().type();
  r.seed = seed;
  r.dialogue = p.dialogue;
  r.question = p.question;
  r.metadata = p.metadata;
  r.answer = format_answer(p.answer);
  return r;
}

std::vector<InstanceRecord> generate_batch(const GenerationConfig& config, unsigned threads) {
  config.validate();
  std::vector<InstanceRecord> out(config.count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) {
      try {
        out[i] = to_record(generate_prototype(config, i), record_id(config.category, i), config.seed);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
        next = config.count;
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(config.count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

} // namespace coplan
