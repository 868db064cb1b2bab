#pragma once

// Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with
// coefficients a_i in F_p[t], deg a_i <= i*n, describing an elliptic
// surface over P^1.  n = 2 is the K3 case.  Characteristic 2 and 3 are
// rejected at construction.

#include <optional>
#include <string>
#include <vector>

#include "k3fib/errors.hpp"
#include "k3fib/ffpoly.hpp"

namespace k3fib {

// The b-, c- and discriminant quantities attached to a model.  j is kept
// as the exact pair (c4^3, disc) to avoid rational functions.
struct model_invariants {
  poly b2, b4, b6, b8;
  poly c4, c6;
  poly disc;
  poly j_num;  // c4^3
  poly j_den;  // disc
};

class weierstrass_model {
 public:
  // Throws unsupported_characteristic for p in {2, 3}, degenerate_model if
  // the discriminant vanishes, std::invalid_argument on degree overflow or
  // mixed moduli.
  weierstrass_model(prime_field field, poly a1, poly a2, poly a3, poly a4,
                    poly a6, int n);

  const prime_field& field() const noexcept { return field_; }
  long long p() const noexcept { return field_.modulus(); }
  int n() const noexcept { return n_; }
  const poly& a1() const noexcept { return a1_; }
  const poly& a2() const noexcept { return a2_; }
  const poly& a3() const noexcept { return a3_; }
  const poly& a4() const noexcept { return a4_; }
  const poly& a6() const noexcept { return a6_; }
  const model_invariants& invariants() const noexcept { return inv_; }

  friend bool operator==(const weierstrass_model& a,
                         const weierstrass_model& b);

 private:
  prime_field field_;
  int n_;
  poly a1_, a2_, a3_, a4_, a6_;
  model_invariants inv_;
};

// Place of P^1 over F_p: either a monic irreducible of F_p[t] or the point
// at infinity.  A place of degree d carries d geometric points.
class place {
 public:
  static place at_infinity();
  static place finite(poly pi);  // validates monic irreducible

  bool is_infinite() const noexcept { return !pi_.has_value(); }
  int degree() const noexcept { return pi_ ? pi_->degree() : 1; }
  const poly& uniformizer() const;  // throws for the infinite place

  // Stable key: "inf" or the ascending coefficient list, e.g. "[0, 1]".
  std::string key() const;
  // Human form: "inf" or the monic polynomial, e.g. "t^2 + 3".
  std::string pretty() const;

 private:
  std::optional<poly> pi_;
  explicit place(std::optional<poly> pi) : pi_(std::move(pi)) {}
};

bool operator==(const place& a, const place& b);
bool operator!=(const place& a, const place& b);
// Infinite place first, then by (degree, coefficient list).
bool place_less(const place& a, const place& b);

// Substitute t = 1/s and clear denominators: a_i'(s) = s^(i*n) a_i(1/s).
// The fiber of the result at s = 0 is the fiber of the input at t = inf.
// An involution on models.
weierstrass_model chart_at_infinity(const weierstrass_model& m);

// t |-> t + c on the base.
weierstrass_model translate_t(const weierstrass_model& m, long long c);

// Places where the discriminant vanishes, infinite place included when the
// chart at infinity has singular fiber at s = 0.  Deterministic order:
// infinity first, then finite places by (degree, coefficient list).
std::vector<place> singular_places(const weierstrass_model& m);

}  // namespace k3fib
