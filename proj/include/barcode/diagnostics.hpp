#pragma once

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace barcode {

// A single invariant failure. Violations are data, not exceptions: validators
// return the full list so callers can report every problem at once.
struct Violation {
  std::string code;    // stable machine-readable tag, e.g. "non-decreasing-edge"
  std::string detail;  // human-readable description naming the offending item
};

inline std::string join_violations(const std::vector<Violation>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += "; ";
    out += v.code + ": " + v.detail;
  }
  return out;
}

// Domain-level rejection (invalid graph, complex, or code). CLI exit 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : std::runtime_error(join_violations(violations)),
        violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Malformed input (JSON syntax, missing fields, unreadable file). CLI exit 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling ran out of attempts. CLI exit 1.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

// Shortest round-trip decimal form of a double; "inf" for +infinity.
inline std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace barcode
