#include "k3fib/height.hpp"

#include <stdexcept>

namespace k3fib {

rational contr(const kodaira_fiber& f, int k) {
  if (k < 0) throw std::out_of_range("component index must be >= 0");
  if (f.kind() == fiber_kind::I_n) {
    long long m = f.components();  // 1 for I_0, else n
    long long kk = k % m;
    return rational(kk * (m - kk), m);
  }
  if (k >= f.component_group_order()) {
    throw std::out_of_range("component index " + std::to_string(k) +
                            " out of range for " + f.symbol());
  }
  if (k == 0) return rational(0);
  switch (f.kind()) {
    case fiber_kind::III: return rational(1, 2);
    case fiber_kind::III_star: return rational(3, 2);
    case fiber_kind::IV: return rational(2, 3);
    case fiber_kind::IV_star: return rational(4, 3);
    case fiber_kind::I_n_star:
      return k == 1 ? rational(1) : rational(1) + rational(f.index(), 4);
    default: break;  // II, II* have trivial component group; k == 0 only
  }
  throw std::logic_error("unhandled fiber kind in contr");
}

rational height_pairing(const section_incidence& s) {
  if (s.po < 0) throw std::invalid_argument("P.O must be >= 0");
  rational h = rational(4) + rational(2 * s.po);
  for (const auto& m : s.met) {
    if (m.multiplicity < 1) {
      throw std::invalid_argument("meeting multiplicity must be >= 1");
    }
    h -= rational(m.multiplicity) * contr(m.fiber, m.component);
  }
  return h;
}

bool is_torsion_candidate(const section_incidence& s) {
  return height_pairing(s) == rational(0);
}

}  // namespace k3fib
