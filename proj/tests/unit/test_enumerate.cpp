#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "k3fib/enumerate.hpp"
#include "k3fib/fixtures.hpp"

using namespace k3fib;

namespace {

kodaira_fiber I(int n) { return kodaira_fiber(fiber_kind::I_n, n); }
kodaira_fiber Istar(int n) { return kodaira_fiber(fiber_kind::I_n_star, n); }

// Independent recomputation of max_contribution_sum: recursion over the
// remaining Euler and component budgets, scanning every (a, i) pair per
// fiber instead of partitioning up front.
rational brute_max(long long p, long long euler_left, long long comps_left) {
  rational best(0);
  for (long long a = 1; p * a <= euler_left; ++a) {
    if (p * a - 1 > comps_left) continue;
    for (long long i = 1; i < p; ++i) {
      rational v = rational(i * (p - i) * a, p) +
                   brute_max(p, euler_left - p * a, comps_left - (p * a - 1));
      best = std::max(best, v);
    }
  }
  return best;
}

std::vector<std::string> displays(const std::vector<wild_config>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.display());
  return out;
}

}  // namespace

TEST_CASE("wild fixed-fiber candidates") {
  auto p11 = wild_fixed_fiber_candidates(11);
  REQUIRE(p11.size() == 1);
  CHECK(p11[0] == kodaira_fiber(fiber_kind::II));

  auto p7 = wild_fixed_fiber_candidates(7);
  REQUIRE(p7.size() == 2);
  CHECK(p7[0] == kodaira_fiber(fiber_kind::II_star));
  CHECK(p7[1] == kodaira_fiber(fiber_kind::III));

  auto p5 = wild_fixed_fiber_candidates(5);
  REQUIRE(p5.size() == 2);
  CHECK(p5[0] == kodaira_fiber(fiber_kind::III_star));
  CHECK(p5[1] == kodaira_fiber(fiber_kind::IV));

  CHECK_THROWS_AS(wild_fixed_fiber_candidates(13), std::invalid_argument);
  CHECK_THROWS_AS(wild_fixed_fiber_candidates(3), std::invalid_argument);
}

TEST_CASE("wild_config arithmetic and display") {
  wild_config c{7, kodaira_fiber(fiber_kind::II_star), {kodaira_fiber(fiber_kind::II)}};
  CHECK(c.euler_sum() == 10 + 7 * 2);
  CHECK(c.trivial_lattice_rank() == 2 + 8);
  CHECK(c.display() == "E_8 + 7A_0^**");

  wild_config quad{5, kodaira_fiber(fiber_kind::IV), {I(1), I(1), I(1), I(1)}};
  CHECK(quad.euler_sum() == 24);
  CHECK(quad.trivial_lattice_rank() == 4);
  CHECK(quad.display() == "A_2^* + 20A_0^*");

  // equal orbit types group into one term with the geometric fiber count
  wild_config pair{5, kodaira_fiber(fiber_kind::IV),
                   {kodaira_fiber(fiber_kind::II), kodaira_fiber(fiber_kind::II)}};
  CHECK(pair.display() == "A_2^* + 10A_0^**");

  wild_config mixed{5, kodaira_fiber(fiber_kind::IV), {I(2), I(1), I(1)}};
  CHECK(mixed.display() == "A_2^* + 5A_1 + 10A_0^*");
}

TEST_CASE("enumeration for p = 11") {
  auto configs = enumerate_wild_configs(11);
  std::vector<std::string> expected = {
      "A_0^** + 11A_0^**",
      "A_0^** + 22A_0^*",
  };
  CHECK(displays(configs) == expected);
  for (const auto& c : configs) CHECK(validate_wild_config(c));
}

TEST_CASE("enumeration for p = 7") {
  auto configs = enumerate_wild_configs(7);
  std::vector<std::string> expected = {
      "E_8 + 7A_0^**",
      "E_8 + 14A_0^*",
      "A_1^* + 7A_1^*",
      "A_1^* + 7A_0^** + 7A_0^*",
      "A_1^* + 7A_1 + 7A_0^*",
      "A_1^* + 21A_0^*",
  };
  CHECK(displays(configs) == expected);
  for (const auto& c : configs) CHECK(validate_wild_config(c));
}

TEST_CASE("enumeration for p = 5") {
  auto configs = enumerate_wild_configs(5);
  std::vector<std::string> expected = {
      "E_7 + 5A_1^*",
      "E_7 + 5A_0^** + 5A_0^*",
      "E_7 + 5A_1 + 5A_0^*",
      "E_7 + 15A_0^*",
      "A_2^* + 5A_2^*",
      "A_2^* + 5A_1^* + 5A_0^*",
      "A_2^* + 5A_2 + 5A_0^*",
      "A_2^* + 10A_0^**",
      "A_2^* + 5A_0^** + 5A_1",
      "A_2^* + 5A_0^** + 10A_0^*",
      "A_2^* + 10A_1",
      "A_2^* + 5A_1 + 10A_0^*",
      "A_2^* + 20A_0^*",
  };
  CHECK(displays(configs) == expected);
  for (const auto& c : configs) CHECK(validate_wild_config(c));
  CHECK_THROWS_AS(enumerate_wild_configs(13), std::invalid_argument);
}

TEST_CASE("enumeration is deterministic") {
  for (long long p : {5LL, 7LL, 11LL}) {
    auto a = enumerate_wild_configs(p);
    auto b = enumerate_wild_configs(p);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    CHECK(std::is_sorted(a.begin(), a.end(), wild_config_less));
  }
}

TEST_CASE("bundled reference configurations are admissible and reproduced") {
  const auto& fx = builtin_fixtures();
  for (const auto& [p, refs] : fx.configurations) {
    auto found = enumerate_wild_configs(p);
    for (const auto& ref : refs) {
      CHECK(validate_wild_config(ref));
      CHECK(std::find(found.begin(), found.end(), ref) != found.end());
    }
  }
}

TEST_CASE("validation rejects inadmissible configurations") {
  kodaira_fiber ii(fiber_kind::II);
  // fixed fiber not in the table for p = 11
  CHECK_FALSE(validate_wild_config(
      {11, kodaira_fiber(fiber_kind::III), {I(1), I(1)}}));
  // no free orbit
  CHECK_FALSE(validate_wild_config({11, ii, {}}));
  // smooth orbit representative
  CHECK_FALSE(validate_wild_config({11, ii, {I(0)}}));
  // Euler sum misses 24
  CHECK_FALSE(validate_wild_config({11, ii, {I(1)}}));
  // Euler and rank fine, but no rational elliptic quotient:
  // a completing fiber of Euler 10 needs at least 9 components,
  // 2 + 9 + 1 > 10
  wild_config no_quotient{11, ii, {I(2)}};
  CHECK(no_quotient.euler_sum() == 24);
  CHECK(no_quotient.trivial_lattice_rank() == 13);
  CHECK_FALSE(validate_wild_config(no_quotient));
  // bad p propagates from the fixed-fiber table
  CHECK_THROWS_AS(validate_wild_config({13, ii, {I(1)}}),
                  std::invalid_argument);
}

TEST_CASE("exact contribution maxima") {
  struct row {
    long long p;
    rational expected;
  };
  const row rows[] = {
      {5, rational(24, 5)},  {7, rational(36, 7)},  {11, rational(60, 11)},
      {13, rational(42, 13)}, {17, rational(72, 17)}, {19, rational(90, 19)},
      {23, rational(0)},
  };
  for (const auto& r : rows) {
    rational got = max_contribution_sum(r.p);
    CHECK(got == r.expected);
    CHECK(got == brute_max(r.p, 24, 20));
    CHECK(got < rational(6));
  }
  CHECK_THROWS_AS(max_contribution_sum(3), std::invalid_argument);
}

TEST_CASE("p = 3 contribution maximum") {
  rational got = max_contribution_sum_p3();
  CHECK(got == rational(16, 3));
  CHECK(got < rational(6));

  // independent triple loop over (IV count, IV* count, multiplicative total)
  rational best(0);
  for (int s = 0; 4 * s <= 24; ++s) {
    for (int t = 0; 4 * s + 8 * t <= 24; ++t) {
      for (int total = 0; 4 * s + 8 * t + 3 * total <= 24; ++total) {
        for (int fibers = std::min(total, 1); fibers <= total; ++fibers) {
          if (2 * s + 6 * t + 3 * total - fibers > 20) continue;
          best = std::max(best, rational(2 * s + 4 * t + 2 * total, 3));
        }
      }
    }
  }
  CHECK(got == best);
}

TEST_CASE("torsion feasibility scan") {
  auto rows = torsion_bound_scan(50);
  std::vector<long long> seen;
  for (const auto& row : rows) {
    seen.push_back(row.p);
    CHECK(row.feasible == (row.p <= 19));
    CHECK(row.feasible == (row.case_small_additive || row.case_large_additive));

    // recompute both cases directly
    bool small = false;
    const int extras_e[] = {0, 2, 3, 4};
    for (int e1 : extras_e) {
      for (int e2 : extras_e) {
        int em = (e1 > 0 ? e1 - 2 : 0) + (e2 > 0 ? e2 - 2 : 0);
        for (long long total = 1; row.p * total + e1 + e2 <= 24; ++total) {
          if (row.p * total - total + em <= 20) small = true;
        }
      }
    }
    bool large = false;
    std::vector<int> additive_comps;
    for (int m = 0; m <= 14; ++m) additive_comps.push_back(m + 5);
    additive_comps.insert(additive_comps.end(), {7, 8, 9});
    for (int mc : additive_comps) {
      for (long long total = 1; row.p * total <= 24; ++total) {
        if (row.p * total - total + (mc - 1) <= 20) large = true;
      }
    }
    CHECK(row.case_small_additive == small);
    CHECK(row.case_large_additive == large);
  }
  CHECK(seen == std::vector<long long>{5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                       41, 43, 47});

  // q = 23 fails on components, not on the Euler count
  const auto& q23 = rows[6];
  REQUIRE(q23.p == 23);
  CHECK_FALSE(q23.feasible);
  CHECK(q23.note.find("22 extra components") != std::string::npos);

  // q >= 29 fails the Euler count outright
  const auto& q29 = rows[7];
  REQUIRE(q29.p == 29);
  CHECK(q29.note.find("Euler count 24 already rules out") != std::string::npos);
}

TEST_CASE("multiplicative parity check") {
  auto entry = [](kodaira_fiber f) {
    return fiber_entry{place::at_infinity(), f};
  };
  fiber_configuration even{{entry(I(2)), entry(I(4)),
                            entry(kodaira_fiber(fiber_kind::II)),
                            entry(Istar(3))}};
  CHECK(parity_check(even));
  fiber_configuration odd{{entry(I(2)), entry(I(3))}};
  CHECK_FALSE(parity_check(odd));
  fiber_configuration single{{entry(I(1))}};
  CHECK_FALSE(parity_check(single));
  fiber_configuration smooth_only{{entry(I(0))}};
  CHECK(parity_check(smooth_only));
  CHECK(parity_check(fiber_configuration{}));
}

TEST_CASE("orbit-count pairs") {
  auto pairs = oguiso_pairs(50, 10);
  std::vector<std::pair<long long, int>> expected = {
      {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}, {11, 2}, {13, 2},
      {17, 2}, {19, 2}, {23, 2}, {29, 2}, {31, 2}, {37, 2}, {41, 2},
      {43, 2}, {47, 2}};
  CHECK(pairs == expected);
  for (const auto& [p, n] : pairs) CHECK(p * (n - 2) <= 2 * n - 2);

  // n_max truncation
  CHECK(oguiso_pairs(3, 3) ==
        std::vector<std::pair<long long, int>>{{3, 2}, {3, 3}});
  CHECK(oguiso_pairs(2, 10).empty());
}
