#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlcox {

// Graphs shipped under graphs/ and embedded here so the self-test does not
// depend on the working directory.
struct ExampleGraph {
  const char* name;
  const char* text;
};

const std::vector<ExampleGraph>& example_graphs();

// Runs the acceptance suite, printing one PASS/FAIL line per criterion and a
// summary; returns the number of failed criteria.
int run_selftest(std::ostream& out);

}  // namespace nlcox
