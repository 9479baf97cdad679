#include "brauer/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace brauer {

CheckRecord check_equal(std::string name, const std::string& expected, const std::string& computed) {
  return {std::move(name), expected, computed, expected == computed};
}

CheckRecord check_true(std::string name, bool condition, const std::string& detail) {
  return {std::move(name), "true", condition ? "true" : (detail.empty() ? "false" : detail), condition};
}

bool all_pass(const Report& r) {
  return std::all_of(r.begin(), r.end(), [](const CheckRecord& c) { return c.pass; });
}

std::size_t failure_count(const Report& r) {
  return static_cast<std::size_t>(
      std::count_if(r.begin(), r.end(), [](const CheckRecord& c) { return !c.pass; }));
}

void append(Report& into, const Report& from) { into.insert(into.end(), from.begin(), from.end()); }

void to_json(nlohmann::json& j, const CheckRecord& c) {
  j = nlohmann::json{{"case", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
}

}  // namespace brauer
