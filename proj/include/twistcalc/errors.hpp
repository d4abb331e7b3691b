#pragma once
#include <stdexcept>
#include <string>

namespace twistcalc {

// All engine failures carry a stable machine-readable code ("DimensionMismatch",
// "NoIntegralTwist", ...) next to the human message; the CLI maps any Error to
// exit status 1 and echoes the code in the report.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Three-valued answer used by every oracle query. Unknown is a value, not a
// failure; it propagates upward as Undecided verdicts.
enum class Trilean { False = 0, True = 1, Unknown = 2 };

inline Trilean tri_and(Trilean a, Trilean b) {
  if (a == Trilean::False || b == Trilean::False) return Trilean::False;
  if (a == Trilean::True && b == Trilean::True) return Trilean::True;
  return Trilean::Unknown;
}

inline Trilean tri_or(Trilean a, Trilean b) {
  if (a == Trilean::True || b == Trilean::True) return Trilean::True;
  if (a == Trilean::False && b == Trilean::False) return Trilean::False;
  return Trilean::Unknown;
}

inline Trilean tri_not(Trilean a) {
  if (a == Trilean::Unknown) return Trilean::Unknown;
  return a == Trilean::True ? Trilean::False : Trilean::True;
}

inline const char* to_string(Trilean t) {
  switch (t) {
    case Trilean::True: return "true";
    case Trilean::False: return "false";
    default: return "unknown";
  }
}

}  // namespace twistcalc
