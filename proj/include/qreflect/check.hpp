#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qreflect {

// Base class for all validation failures raised by constructors and
// precondition checks. Law checks that are expected to fail on some inputs
// return a Report instead of throwing.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownElement : Error {
  using Error::Error;
};
struct AntisymmetryViolation : Error {
  using Error::Error;
};
struct AssociativityViolation : Error {
  using Error::Error;
};
struct CompatibilityViolation : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};
struct NucleusInvalid : Error {
  using Error::Error;
};
struct NotMarkedQuantale : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};
struct HypothesisFailed : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line(line) {}
  int line;
};

enum class Outcome { pass, fail, vacuous, note };

struct Check {
  std::string name;
  Outcome outcome = Outcome::pass;
  std::string detail;  // witness on failure, commentary otherwise

  bool passed() const { return outcome != Outcome::fail; }
};

// A flat list of named checks. `ok()` ignores notes and vacuous entries;
// printing order is insertion order, which every caller keeps deterministic.
class Report {
 public:
  void add(std::string name, bool pass, std::string detail = {}) {
    checks_.push_back({std::move(name), pass ? Outcome::pass : Outcome::fail,
                       std::move(detail)});
  }
  void add(std::string name, Outcome outcome, std::string detail = {}) {
    checks_.push_back({std::move(name), outcome, std::move(detail)});
  }
  void note(std::string name, std::string detail = {}) {
    checks_.push_back({std::move(name), Outcome::note, std::move(detail)});
  }
  void merge(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (c.outcome == Outcome::fail) return false;
    return true;
  }
  const std::vector<Check>& checks() const { return checks_; }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& c : checks_) {
      switch (c.outcome) {
        case Outcome::pass: out += "[PASS] "; break;
        case Outcome::fail: out += "[FAIL] "; break;
        case Outcome::vacuous: out += "[VACUOUS] "; break;
        case Outcome::note: out += "[NOTE] "; break;
      }
      out += c.name;
      if (!c.detail.empty()) {
        out += ": ";
        out += c.detail;
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<Check> checks_;
};

// Default cap on carriers that get 2^n subset enumeration.
inline constexpr int kDefaultCap = 16;

}  // namespace qreflect
