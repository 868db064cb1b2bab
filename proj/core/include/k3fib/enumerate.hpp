#pragma once

// Combinatorics of singular-fiber configurations on elliptic K3 surfaces
// carrying an order-p automorphism that acts on the base with a single
// fixed point (p = char k), plus the exact counting bounds that rule such
// automorphisms out for large p.

#include <string>
#include <utility>
#include <vector>

#include "k3fib/rational.hpp"
#include "k3fib/tate.hpp"

namespace k3fib {

// One fixed fiber plus free orbits of size p; each orbit contributes p
// geometric fibers of its representative type.
struct wild_config {
  long long p;
  kodaira_fiber fixed;
  std::vector<kodaira_fiber> orbits;  // representatives, canonical order

  int euler_sum() const;            // e(fixed) + p * sum e(rep)
  int trivial_lattice_rank() const; // 2 + (m(fixed)-1) + p * sum (m(rep)-1)
  std::string display() const;      // "E_8 + 14A_0^*"
};

bool operator==(const wild_config& a, const wild_config& b);
bool wild_config_less(const wild_config& a, const wild_config& b);

// Fixed fiber types the characteristic allows: p=11: II; p=7: III, II*;
// p=5: IV, III*.  Throws for other p.
std::vector<kodaira_fiber> wild_fixed_fiber_candidates(long long p);

// Every configuration passing the admissibility chain:
//   (1) Euler numbers sum to 24,
//   (2) fixed fiber from wild_fixed_fiber_candidates(p),
//   (3) at least one free orbit,
//   (4) trivial lattice rank at most 20 (Picard bound),
//   (5) the quotient supports a minimal rational elliptic surface: some
//       type V0 with e(V0) = 12 - sum e(rep) satisfies
//       2 + (m(V0) - 1) + sum (m(rep) - 1) <= 10.
// Output is deterministic: fixed fibers by descending Euler number, then
// orbit lists lexicographically.
std::vector<wild_config> enumerate_wild_configs(long long p);

// Straight re-check of (1)-(5); used against the generator in tests.
bool validate_wild_config(const wild_config& c);

// Exact maximum of sum_v i_v (p - i_v) a_v / p over all finite multisets
// {a_v >= 1} with sum p a_v <= 24 and sum (p a_v - 1) <= 20, i_v ranging
// over [1, p-1].  These are the counts available to a p-torsion section
// meeting I_{a_v p} fibers.  Exhaustive; 0 when nothing is feasible
// (p = 23).  The downstream argument only needs the value to stay below 6.
rational max_contribution_sum(long long p);

// p = 3 analogue, where IV and IV* fibers also contribute: maximize
// 2s/3 + 4t/3 + sum i_v (3 - i_v) a_v / 3 subject to
// 4s + 8t + 3 sum a_v <= 24 and 2s + 6t + sum (3 a_v - 1) <= 20.
rational max_contribution_sum_p3();

struct torsion_feasibility {
  long long p;
  bool feasible;
  // multiplicative fibers I_{ap} plus at most two of {II, III, IV}
  bool case_small_additive;
  // multiplicative fibers I_{ap} plus exactly one of {I_n*, IV*, III*, II*}
  bool case_large_additive;
  std::string note;
};

// For each prime 5 <= q <= p_max: can an elliptic K3 carry a section of
// exact order q, judged by the Euler count (<= 24) and the component
// count (<= 20) in the two cases above (each needs at least one I_{aq})?
// Feasible exactly for q <= 19; q = 23 passes the Euler count in the
// large-additive case but a single I_23 fiber already has 22 extra
// components.
std::vector<torsion_feasibility> torsion_bound_scan(long long p_max);

// Characteristic-2 constraint: every multiplicative fiber in the
// configuration has an even number of components.
bool parity_check(const fiber_configuration& c);

// Candidate (prime order, orbit count) pairs (p, N) with p odd,
// 2 <= N <= n_max, satisfying p(N - 2) <= 2N - 2.
std::vector<std::pair<long long, int>> oguiso_pairs(long long p_max,
                                                    int n_max);

}  // namespace k3fib
