#pragma once

#include <string>
#include <vector>

#include "brauer/functor.hpp"
#include "brauer/report.hpp"

namespace brauer {

struct SuiteOptions {
  int jobs = 1;
  // Also run the optional larger instances (E_p for m = 4, 5).
  bool extended = false;
};

Report relations_suite(const SuiteOptions& opt = {});
Report roundtrip_suite(const SuiteOptions& opt = {});
Report presentation_suite(const SuiteOptions& opt = {});
Report sigma_suite(const SuiteOptions& opt = {});
Report phi_suite(const SuiteOptions& opt = {});
Report ep_suite(const SuiteOptions& opt = {});
Report kernel_suite(const SuiteOptions& opt = {});
Report fullness_suite(const SuiteOptions& opt = {});
Report trace_suite(const SuiteOptions& opt = {});
Report charp_suite(const SuiteOptions& opt = {});
Report functor_suite(const SuiteOptions& opt = {});
// P, C-hat and C-check for one group.
Report pau_suite(const GroupSpec& spec);

struct Suite {
  std::string name;
  std::string title;
  Report (*run)(const SuiteOptions&);
};

// In acceptance order.
const std::vector<Suite>& suites();
// Throws ValidationError for an unknown name.
const Suite& find_suite(const std::string& name);

}  // namespace brauer
