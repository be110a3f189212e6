#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include <json.hpp>

namespace armatch {

/// Machine-checkable record of a verified claim.
struct Certificate {
  std::string claim;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t search_size = 0;
  bool verdict = false;
  double elapsed_ms = 0.0;
};

void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace armatch
