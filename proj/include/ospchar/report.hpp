#pragma once

// Uniform result record for identity verifiers: every check reports its
// name, parameters, pass/fail, a witness on failure, and wall time.

#include <chrono>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace ospchar {

struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order kept
  bool pass = true;
  std::string detail;  // failure witness; may carry a short summary on pass
  double elapsed_seconds = 0.0;

  void param(const std::string& name, long long value) {
    params.emplace_back(name, std::to_string(value));
  }
  void param(const std::string& name, const std::string& value) {
    params.emplace_back(name, value);
  }

  // Records the first failure's witness; later calls only flip nothing.
  void fail(const std::string& witness) {
    if (pass) {
      pass = false;
      detail = witness;
    }
  }

  // with_time=false keeps the line byte-deterministic across runs.
  std::string to_line(bool with_time = true) const {
    std::string s = pass ? "[PASS] " : "[FAIL] ";
    s += check;
    if (!params.empty()) {
      s += " (";
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ", ";
        s += params[i].first + "=" + params[i].second;
      }
      s += ")";
    }
    if (with_time) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.3fs", elapsed_seconds);
      s += buf;
    }
    if (!pass && !detail.empty()) s += "\n       " + detail;
    return s;
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace ospchar
