#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace opgraph {

using ojson = nlohmann::ordered_json;

// Machine-readable outcome of one verification harness. `pass` is always a
// pure function of `residuals` against the thresholds recorded in
// `parameters`; `runtime_ms` is the only field allowed to vary between
// identical invocations.
struct Report {
  std::string check;
  ojson parameters = ojson::object();
  std::map<std::string, double> residuals;  // sorted keys, deterministic dump
  ojson tables = ojson::object();
  bool pass = false;
  std::int64_t runtime_ms = 0;

  ojson to_json() const;
  static Report from_json(const ojson& j);
  std::string dump() const { return to_json().dump(2) + "\n"; }
};

// Wall-clock helper for Report::runtime_ms.
class ReportTimer {
 public:
  ReportTimer() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace opgraph
