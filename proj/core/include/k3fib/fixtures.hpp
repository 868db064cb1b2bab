#pragma once

// Bundled reference data: twenty worked K3 models with their expected
// singular-fiber loci and types, plus the reference fiber-configuration
// lists for p = 5, 7, 11.  The JSON lives in core/data/fixtures.json and a
// copy is compiled into the library; alternate files with the same schema
// can be loaded for comparison runs.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3fib/enumerate.hpp"
#include "k3fib/tate.hpp"
#include "k3fib/weierstrass.hpp"

namespace k3fib {

// Expected fibers over one locus.  The locus is the monic polynomial in t
// cutting out the (Galois orbit of) base points; count is its degree, the
// number of geometric fibers.  Absent locus means the place at infinity.
struct locus_expectation {
  std::string label;
  std::optional<poly> locus;
  int count;
  kodaira_fiber fiber;
};

struct example_fixture {
  std::string id;        // e.g. "7-(4)"
  std::string equation;  // display form
  weierstrass_model model;
  std::vector<locus_expectation> expected;
};

struct fixture_set {
  std::vector<example_fixture> models;
  std::map<long long, std::vector<wild_config>> configurations;
};

std::string_view builtin_fixture_json();
fixture_set parse_fixtures(std::string_view json_text);  // throws parse_error
const fixture_set& builtin_fixtures();

struct example_verdict {
  std::string id;
  bool pass;
  std::vector<std::string> details;  // human-readable mismatches, empty on pass
};

// Classify every fixture model and compare against its expectations:
// each expected locus must be covered by classified places of matching
// type whose degrees sum to the expected count, with nothing left over.
// `only` filters by exact id ("" = all).
std::vector<example_verdict> verify_examples(const fixture_set& fx,
                                             const std::string& only = "");

struct flagged_config {
  wild_config config;
  bool in_reference;  // appears in the bundled reference list
};

// Mark which enumerated configurations appear in the reference list.
std::vector<flagged_config> flag_against_reference(
    const std::vector<wild_config>& found,
    const std::vector<wild_config>& reference);

}  // namespace k3fib
