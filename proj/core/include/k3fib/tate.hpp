#pragma once

// Kodaira fiber types, their numeric attributes, the A-D-E dictionary and
// the valuation cascade classifying the fiber of a model at a place.  With
// p >= 5 reduction is tame, so the valuations of (c4, c6, disc) decide the
// type and the Euler number of a fiber equals the minimal discriminant
// valuation.

#include <string>
#include <string_view>
#include <vector>

#include "k3fib/weierstrass.hpp"

namespace k3fib {

enum class fiber_kind {
  I_n,       // multiplicative for n >= 1; I_0 is the smooth fiber
  II,
  III,
  IV,
  I_n_star,  // I_n^* for n >= 0
  IV_star,
  III_star,
  II_star,
};

// A Kodaira fiber symbol plus its standard attributes.
class kodaira_fiber {
 public:
  // index is the n of I_n / I_n^*; must be 0 for the other kinds.
  explicit kodaira_fiber(fiber_kind kind, int index = 0);

  fiber_kind kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }

  bool is_smooth() const noexcept {
    return kind_ == fiber_kind::I_n && index_ == 0;
  }
  bool is_multiplicative() const noexcept {
    return kind_ == fiber_kind::I_n && index_ >= 1;
  }
  bool is_additive() const noexcept {
    return kind_ != fiber_kind::I_n;
  }

  int euler() const noexcept;             // e: I_n -> n, II -> 2, ..., II* -> 10
  int components() const noexcept;        // m: irreducible components
  int component_group_order() const noexcept;

  std::string symbol() const;  // "I_5", "I_0*", "IV", "II*"
  std::string ade() const;     // "A_4", "D_4", "A_2^*", "E_8"

  static kodaira_fiber from_symbol(std::string_view s);  // throws parse_error
  static kodaira_fiber from_ade(std::string_view s);     // throws parse_error

  friend bool operator==(const kodaira_fiber&, const kodaira_fiber&) = default;

 private:
  fiber_kind kind_;
  int index_;
};

// Sort key used everywhere a deterministic fiber order is needed:
// descending Euler number, then symbol.
bool fiber_less(const kodaira_fiber& a, const kodaira_fiber& b);

enum class smooth_policy {
  lenient,  // smooth place classifies as I_0
  strict,   // smooth place is an error
};

// Fiber type of m at v.  The infinite place is handled through the chart
// at infinity.  Non-minimal models restart the cascade after the valuation
// shift (4, 6, 12), so the answer is always the type of the minimal model.
kodaira_fiber tate_local(const weierstrass_model& m, const place& v,
                         smooth_policy policy = smooth_policy::lenient);

struct fiber_entry {
  place at;
  kodaira_fiber fiber;

  // geometric fibers of this type over the place
  int count() const noexcept { return at.degree(); }
};

struct fiber_configuration {
  std::vector<fiber_entry> entries;

  // sum of degree * euler over all entries; 24 for a K3 model
  int euler_sum() const noexcept;
};

// All singular fibers of m in the deterministic place order.  Places whose
// minimal fiber is smooth (possible on non-minimal input) are dropped.
fiber_configuration classify_fibration(const weierstrass_model& m);

}  // namespace k3fib
