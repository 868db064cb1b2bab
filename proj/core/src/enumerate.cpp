#include "k3fib/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace k3fib {

namespace {

constexpr int kK3Euler = 24;
constexpr int kK3PicardMax = 20;
constexpr int kRationalEuler = 12;
constexpr int kRationalPicard = 10;

// All fiber types with the given Euler number (candidates for the fiber
// completing a rational elliptic surface).
std::vector<kodaira_fiber> fiber_types_with_euler(int e) {
  std::vector<kodaira_fiber> out;
  if (e >= 0) out.emplace_back(fiber_kind::I_n, e);
  if (e == 2) out.emplace_back(fiber_kind::II);
  if (e == 3) out.emplace_back(fiber_kind::III);
  if (e == 4) out.emplace_back(fiber_kind::IV);
  if (e >= 6) out.emplace_back(fiber_kind::I_n_star, e - 6);
  if (e == 8) out.emplace_back(fiber_kind::IV_star);
  if (e == 9) out.emplace_back(fiber_kind::III_star);
  if (e == 10) out.emplace_back(fiber_kind::II_star);
  return out;
}

// Degenerate types an orbit representative can take, Euler number capped.
std::vector<kodaira_fiber> orbit_type_universe(int max_euler) {
  std::vector<kodaira_fiber> out;
  for (int n = 1; n <= max_euler; ++n) out.emplace_back(fiber_kind::I_n, n);
  if (max_euler >= 2) out.emplace_back(fiber_kind::II);
  if (max_euler >= 3) out.emplace_back(fiber_kind::III);
  if (max_euler >= 4) out.emplace_back(fiber_kind::IV);
  for (int n = 0; n + 6 <= max_euler; ++n)
    out.emplace_back(fiber_kind::I_n_star, n);
  if (max_euler >= 8) out.emplace_back(fiber_kind::IV_star);
  if (max_euler >= 9) out.emplace_back(fiber_kind::III_star);
  if (max_euler >= 10) out.emplace_back(fiber_kind::II_star);
  return out;
}

bool orbit_list_less(const std::vector<kodaira_fiber>& a,
                     const std::vector<kodaira_fiber>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      fiber_less);
}

// Can types {reps} together with one more fiber of Euler number
// 12 - sum e(rep) sit on a rational elliptic surface within Picard 10?
bool quotient_surface_exists(const std::vector<kodaira_fiber>& reps) {
  int rep_euler = 0;
  int rep_comps = 0;
  for (const auto& f : reps) {
    rep_euler += f.euler();
    rep_comps += f.components() - 1;
  }
  int v0_euler = kRationalEuler - rep_euler;
  if (v0_euler < 0) return false;
  for (const auto& v0 : fiber_types_with_euler(v0_euler)) {
    if (2 + (v0.components() - 1) + rep_comps <= kRationalPicard) return true;
  }
  return false;
}

// All multisets (nondecreasing in universe order) of orbit types with the
// exact Euler sum.
void extend_orbit_multiset(const std::vector<kodaira_fiber>& universe,
                           size_t start, int remaining,
                           std::vector<kodaira_fiber>& cur,
                           const std::function<void()>& emit) {
  if (remaining == 0) {
    if (!cur.empty()) emit();
    return;
  }
  for (size_t i = start; i < universe.size(); ++i) {
    if (universe[i].euler() > remaining) continue;
    cur.push_back(universe[i]);
    extend_orbit_multiset(universe, i, remaining - universe[i].euler(), cur,
                          emit);
    cur.pop_back();
  }
}

// Positive-integer multisets (nonincreasing) with sum <= max_sum, empty
// multiset included.
void for_each_partition_upto(int max_sum,
                             const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    visit(parts);
    for (int next = std::min(cap, remaining); next >= 1; --next) {
      parts.push_back(next);
      rec(remaining - next, next);
      parts.pop_back();
    }
  };
  rec(max_sum, max_sum);
}

}  // namespace

// ---------------------------------------------------------------------------
// wild_config

int wild_config::euler_sum() const {
  int e = fixed.euler();
  for (const auto& f : orbits) e += static_cast<int>(p) * f.euler();
  return e;
}

int wild_config::trivial_lattice_rank() const {
  int r = 2 + (fixed.components() - 1);
  for (const auto& f : orbits)
    r += static_cast<int>(p) * (f.components() - 1);
  return r;
}

std::string wild_config::display() const {
  std::string s = fixed.ade();
  for (size_t i = 0; i < orbits.size();) {
    size_t j = i;
    while (j < orbits.size() && orbits[j] == orbits[i]) ++j;
    s += " + " + std::to_string(p * static_cast<long long>(j - i)) +
         orbits[i].ade();
    i = j;
  }
  return s;
}

bool operator==(const wild_config& a, const wild_config& b) {
  return a.p == b.p && a.fixed == b.fixed && a.orbits == b.orbits;
}

bool wild_config_less(const wild_config& a, const wild_config& b) {
  if (a.p != b.p) return a.p < b.p;
  if (!(a.fixed == b.fixed)) return fiber_less(a.fixed, b.fixed);
  return orbit_list_less(a.orbits, b.orbits);
}

std::vector<kodaira_fiber> wild_fixed_fiber_candidates(long long p) {
  switch (p) {
    case 11: return {kodaira_fiber(fiber_kind::II)};
    case 7:
      return {kodaira_fiber(fiber_kind::II_star),
              kodaira_fiber(fiber_kind::III)};
    case 5:
      return {kodaira_fiber(fiber_kind::III_star),
              kodaira_fiber(fiber_kind::IV)};
    default:
      throw std::invalid_argument(
          "no wild fixed-fiber table for p = " + std::to_string(p));
  }
}

std::vector<wild_config> enumerate_wild_configs(long long p) {
  std::vector<wild_config> out;
  for (const auto& fixed : wild_fixed_fiber_candidates(p)) {
    int rem = kK3Euler - fixed.euler();
    if (rem <= 0 || rem % p != 0) continue;
    int target = rem / static_cast<int>(p);
    auto universe = orbit_type_universe(target);
    std::vector<kodaira_fiber> cur;
    extend_orbit_multiset(universe, 0, target, cur, [&]() {
      wild_config c{p, fixed, cur};
      std::sort(c.orbits.begin(), c.orbits.end(), fiber_less);
      if (c.trivial_lattice_rank() > kK3PicardMax) return;
      if (!quotient_surface_exists(c.orbits)) return;
      out.push_back(std::move(c));
    });
  }
  std::sort(out.begin(), out.end(), wild_config_less);
  return out;
}

bool validate_wild_config(const wild_config& c) {
  auto allowed = wild_fixed_fiber_candidates(c.p);  // throws on bad p
  if (std::find(allowed.begin(), allowed.end(), c.fixed) == allowed.end())
    return false;
  if (c.orbits.empty()) return false;
  for (const auto& f : c.orbits)
    if (f.is_smooth()) return false;
  if (c.euler_sum() != kK3Euler) return false;
  if (c.trivial_lattice_rank() > kK3PicardMax) return false;
  return quotient_surface_exists(c.orbits);
}

// ---------------------------------------------------------------------------
// exact bounds

rational max_contribution_sum(long long p) {
  if (p < 5) throw std::invalid_argument("needs p >= 5");
  // The best single-fiber numerator; i is scanned, not solved for.
  long long best_i = 0;
  for (long long i = 1; i < p; ++i) best_i = std::max(best_i, i * (p - i));
  rational best(0);
  for_each_partition_upto(static_cast<int>(kK3Euler / p),
                          [&](const std::vector<int>& a) {
    long long total = std::accumulate(a.begin(), a.end(), 0LL);
    if (p * total > kK3Euler) return;
    if (p * total - static_cast<long long>(a.size()) > kK3PicardMax) return;
    rational value(0);
    for (int av : a) value += rational(best_i * av, p);
    best = std::max(best, value);
  });
  return best;
}

rational max_contribution_sum_p3() {
  rational best(0);
  for (int s = 0; 4 * s <= kK3Euler; ++s) {
    for (int t = 0; 4 * s + 8 * t <= kK3Euler; ++t) {
      int budget = (kK3Euler - 4 * s - 8 * t) / 3;
      for_each_partition_upto(budget, [&](const std::vector<int>& a) {
        long long total = std::accumulate(a.begin(), a.end(), 0LL);
        if (4 * s + 8 * t + 3 * total > kK3Euler) return;
        if (2 * s + 6 * t + 3 * total - static_cast<long long>(a.size()) >
            kK3PicardMax)
          return;
        // i in {1, 2} both give i(3 - i) = 2
        rational value = rational(2 * s, 3) + rational(4 * t, 3) +
                         rational(2 * total, 3);
        best = std::max(best, value);
      });
    }
  }
  return best;
}

std::vector<torsion_feasibility> torsion_bound_scan(long long p_max) {
  std::vector<torsion_feasibility> out;
  for (long long q = 5; q <= p_max; ++q) {
    if (!is_prime(q)) continue;
    torsion_feasibility row{q, false, false, false, ""};

    // Small-additive case: n >= 1 orbits of I_{aq} plus 0..2 fibers from
    // {II, III, IV}.  Both counts include every fiber.
    bool small_euler_ok = false;
    int small_types[] = {0, 2, 3, 4};  // Euler numbers; 0 = absent slot
    for (int e1 : small_types) {
      for (int e2 : small_types) {
        int extra_e = e1 + e2;
        int extra_m = (e1 > 0 ? e1 - 2 : 0) + (e2 > 0 ? e2 - 2 : 0);
        // m - 1 is 0, 1, 2 for II, III, IV, i.e. e - 2
        for (long long total = 1; q * total + extra_e <= kK3Euler; ++total) {
          small_euler_ok = true;
          // splitting total into more orbits only lowers the component
          // count; the best split is all parts equal to 1
          long long comps = q * total - total + extra_m;
          if (comps <= kK3PicardMax) row.case_small_additive = true;
        }
      }
    }

    // Large-additive case: n >= 1 orbits of I_{aq} plus one fiber from
    // {I_m*, IV*, III*, II*}; the coarse Euler count tracks only the
    // multiplicative part.
    bool large_euler_ok = false;
    std::vector<kodaira_fiber> large;
    for (int m = 0; m <= 14; ++m) large.emplace_back(fiber_kind::I_n_star, m);
    large.emplace_back(fiber_kind::IV_star);
    large.emplace_back(fiber_kind::III_star);
    large.emplace_back(fiber_kind::II_star);
    for (const auto& add : large) {
      for (long long total = 1; q * total <= kK3Euler; ++total) {
        large_euler_ok = true;
        long long comps = q * total - total + (add.components() - 1);
        if (comps <= kK3PicardMax) row.case_large_additive = true;
      }
    }

    row.feasible = row.case_small_additive || row.case_large_additive;
    if (row.feasible) {
      row.note = "admits a configuration within the Euler and component counts";
    } else if (small_euler_ok || large_euler_ok) {
      row.note = "Euler count admits one I_" + std::to_string(q) +
                 " (A_" + std::to_string(q - 1) + ") fiber, but its " +
                 std::to_string(q - 1) +
                 " extra components exceed the 20 allowed";
    } else {
      row.note = "Euler count 24 already rules out any I_" +
                 std::to_string(q) + " fiber";
    }
    out.push_back(std::move(row));
  }
  return out;
}

bool parity_check(const fiber_configuration& c) {
  for (const auto& entry : c.entries) {
    if (entry.fiber.is_multiplicative() && entry.fiber.index() % 2 != 0)
      return false;
  }
  return true;
}

std::vector<std::pair<long long, int>> oguiso_pairs(long long p_max,
                                                    int n_max) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 3; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    for (int n = 2; n <= n_max; ++n) {
      if (p * (n - 2) <= 2 * n - 2) out.emplace_back(p, n);
    }
  }
  return out;
}

}  // namespace k3fib
