#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace qsd {

/// Outcome of a verification suite. Only the first `kMaxStored` failures are kept verbatim.
struct Report {
  struct Failure {
    std::string input, lhs, rhs;
  };
  static constexpr std::size_t kMaxStored = 50;

  std::string suite;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::vector<Failure> failures;

  explicit Report(std::string name = {}) : suite(std::move(name)) {}

  bool passed() const { return failed == 0; }

  void pass() { ++cases; }
  void fail(std::string input, std::string lhs, std::string rhs) {
    ++cases;
    ++failed;
    if (failures.size() < kMaxStored)
      failures.push_back({std::move(input), std::move(lhs), std::move(rhs)});
  }
  template <class T>
  void check(bool ok, std::string input, const T& lhs, const T& rhs) {
    if (ok) pass();
    else fail(std::move(input), lhs.str(), rhs.str());
  }

  void merge(const Report& o) {
    cases += o.cases;
    failed += o.failed;
    for (const auto& f : o.failures)
      if (failures.size() < kMaxStored) failures.push_back(f);
  }

  nlohmann::json to_json() const {
    auto fs = nlohmann::json::array();
    for (const auto& f : failures) fs.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return {{"suite", suite}, {"cases", cases}, {"failed", failed}, {"failures", fs}};
  }
};

}  // namespace qsd
