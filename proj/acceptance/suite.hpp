// The fourteen acceptance criteria as callable checks. `acceptance` runs them at full size;
// `wof selftest --quick` runs them with fewer random instances.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wof::suite {

struct Result {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  bool quick = false;
  std::uint64_t seed = 1;
};

inline constexpr int kCriteria = 14;

Result run(int id, const Options& opt);
// Runs 1..kCriteria in order, calling on_result after each.
std::vector<Result> run_all(const Options& opt, const std::function<void(const Result&)>& on_result = {});

// Criteria whose literal statement cannot hold (see README); a FAIL there is expected.
bool known_failure(int id);

std::string format_line(const Result& r);

}  // namespace wof::suite
