#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace brauer {

// One verified statement: what was expected, what came out.
struct CheckRecord {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

using Report = std::vector<CheckRecord>;

CheckRecord check_equal(std::string name, const std::string& expected, const std::string& computed);
CheckRecord check_true(std::string name, bool condition, const std::string& detail = "");

bool all_pass(const Report& r);
std::size_t failure_count(const Report& r);
void append(Report& into, const Report& from);

void to_json(nlohmann::json& j, const CheckRecord& c);

}  // namespace brauer
