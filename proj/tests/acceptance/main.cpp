#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <exception>
#include <set>
#include <vector>

#include "harness.hpp"

using namespace acceptance;

namespace {

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)(const Context&);
};

// Criteria whose failure is a known defect of the construction under test,
// analysed in the project notes. They still print FAIL.
const std::set<int> kKnownFailures = {7, 8};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  Context ctx;
  std::vector<int> only;
  app.add_option("--data", ctx.data, "Directory with the student documents")->required()->check(CLI::ExistingDirectory);
  app.add_option("--only", only, "Run just these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "student example pipeline", student_pipeline},
      {2, "validation through translation", validation_oracle},
      {3, "back-translation round trip", round_trip},
      {4, "gamma values", gamma_values},
      {5, "filter axiomatization", filter_axioms},
      {6, "path rewrites and subformula naming", path_rewrites},
      {7, "no-finite-model gadgets", infinity_gadgets},
      {8, "domino gadgets", domino_gadgets},
      {9, "classification table", classification_table},
      {10, "containment", containment},
  };

  int passed = 0, unexpected = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = Seconds(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %-38s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (o.pass) ++passed;
    else if (!kKnownFailures.count(c.id)) ++unexpected;
  }
  std::printf("%d passed, %d unexpected failures\n", passed, unexpected);
  return unexpected == 0 ? 0 : 1;
}
