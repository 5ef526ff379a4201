// One function per acceptance criterion. Each returns whether it passed and
// a one-line summary of what it measured.

#pragma once

#include <chrono>
#include <filesystem>
#include <string>

namespace acceptance {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Context {
  std::filesystem::path data;
};

Outcome student_pipeline(const Context& ctx);
Outcome validation_oracle(const Context& ctx);
Outcome round_trip(const Context& ctx);
Outcome gamma_values(const Context& ctx);
Outcome filter_axioms(const Context& ctx);
Outcome path_rewrites(const Context& ctx);
Outcome infinity_gadgets(const Context& ctx);
Outcome domino_gadgets(const Context& ctx);
Outcome classification_table(const Context& ctx);
Outcome containment(const Context& ctx);

using Seconds = std::chrono::duration<double>;

// Runtime limits, in seconds.
inline constexpr double kStudentLimit = 1.0;
inline constexpr double kOracleLimit = 30.0;
inline constexpr double kRoundTripLimit = 60.0;
inline constexpr double kGadgetLimit = 300.0;
inline constexpr double kContainmentLimit = 10.0;

}  // namespace acceptance
