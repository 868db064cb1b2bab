#pragma once

// Shioda height pairing of a section on an elliptic K3 surface:
//   <P, P> = 4 + 2 P.O - sum_v contr_v(P),
// where 4 = 2 * chi(O_X) and contr_v depends only on the fiber type and on
// which component the section meets.  Everything is exact rational.

#include <vector>

#include "k3fib/rational.hpp"
#include "k3fib/tate.hpp"

namespace k3fib {

// Local correction term for a section meeting component k of fiber f.
// Component indexing: k = 0 is the identity component (contribution 0).
//   I_m       cyclic of order m, k taken mod m:  k(m - k)/m
//   III       k = 1:  1/2          III*  k = 1:  3/2
//   IV        k in {1, 2}:  2/3    IV*   k in {1, 2}:  4/3
//   I_n*      k = 1 (near): 1;  k in {2, 3} (far): 1 + n/4
// Additive types reject k outside [0, component group order).
rational contr(const kodaira_fiber& f, int k);

// One fiber the section meets away from the identity component:
// `multiplicity` counts how many geometric fibers share this (type, k),
// e.g. a full orbit of size p.
struct fiber_meeting {
  kodaira_fiber fiber;
  int component;     // k as in contr
  int multiplicity;  // >= 1
};

// Where a section sits relative to the zero section and the bad fibers.
struct section_incidence {
  long long po = 0;  // intersection number P.O, >= 0
  std::vector<fiber_meeting> met;
};

rational height_pairing(const section_incidence& s);

// Torsion sections are exactly the ones of height zero.
bool is_torsion_candidate(const section_incidence& s);

}  // namespace k3fib
