#pragma once

// Exact arithmetic over the prime field F_p, the univariate ring F_p[t],
// and residue fields F_p[t]/(pi), together with complete factorization
// into monic irreducibles.  Every object is an immutable value and every
// function is pure; mixing values over different moduli is a hard error,
// never a coercion.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace k3fib {

bool is_prime(long long n) noexcept;

// Element of F_p.  `value` is always the reduced representative in [0, p).
struct fp_element {
  long long value;
  long long modulus;

  bool is_zero() const noexcept { return value == 0; }
};

bool operator==(fp_element a, fp_element b);
bool operator!=(fp_element a, fp_element b);
fp_element operator+(fp_element a, fp_element b);
fp_element operator-(fp_element a, fp_element b);
fp_element operator-(fp_element a);
fp_element operator*(fp_element a, fp_element b);
fp_element operator/(fp_element a, fp_element b);  // throws on b == 0
fp_element inverse(fp_element a);                  // throws on a == 0
fp_element pow(fp_element base, long long e);      // e >= 0

// Handle for F_p.  Primality is checked once here; elements and polynomials
// built through the handle inherit the guarantee.
class prime_field {
 public:
  explicit prime_field(long long p);

  long long modulus() const noexcept { return p_; }
  fp_element element(long long value) const noexcept;  // reduces mod p
  fp_element zero() const noexcept { return {0, p_}; }
  fp_element one() const noexcept { return {1 % p_, p_}; }

  friend bool operator==(const prime_field&, const prime_field&) = default;

 private:
  long long p_;
};

// Dense polynomial over F_p in one variable.  Coefficients are stored in
// ascending degree with no trailing zeros; the zero polynomial has an empty
// coefficient list and degree() == -1.
class poly {
 public:
  explicit poly(prime_field field) : field_(field) {}
  poly(prime_field field, const std::vector<long long>& coeffs);

  static poly constant(prime_field field, long long c);
  static poly variable(prime_field field);  // the monomial t

  const prime_field& field() const noexcept { return field_; }
  long long modulus() const noexcept { return field_.modulus(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  // Reduced coefficient of t^i (0 beyond the degree).
  long long at(int i) const noexcept;
  fp_element coeff(int i) const noexcept { return {at(i), modulus()}; }
  fp_element leading() const;  // throws on the zero polynomial
  const std::vector<long long>& coefficients() const noexcept { return c_; }

  fp_element evaluate(fp_element x) const;
  fp_element evaluate(long long x) const;
  poly derivative() const;
  poly monic() const;  // throws on the zero polynomial
  poly shifted(int k) const;  // multiply by t^k

  // "[c0, c1, ...]" in ascending degree; "[]" for zero.  Stable form used
  // by model records and place keys.
  std::string coeff_string() const;
  // Human form such as "t^2 + 4t + 1" with the given variable name.
  std::string pretty(const std::string& var = "t") const;

 private:
  prime_field field_;
  std::vector<long long> c_;

  void trim() noexcept;
};

bool operator==(const poly& a, const poly& b);
bool operator!=(const poly& a, const poly& b);
poly operator+(const poly& a, const poly& b);
poly operator-(const poly& a, const poly& b);
poly operator-(const poly& a);
poly operator*(const poly& a, const poly& b);
poly operator*(const poly& a, fp_element s);
poly operator*(fp_element s, const poly& a);

// Euclidean division: f = q*g + r with deg r < deg g.  Throws on g == 0.
std::pair<poly, poly> divmod(const poly& f, const poly& g);
poly operator/(const poly& f, const poly& g);
poly operator%(const poly& f, const poly& g);

// Monic gcd; gcd(0, 0) == 0.
poly gcd(poly a, poly b);
poly compose(const poly& f, const poly& g);  // f(g(t))
poly pow(const poly& base, int e);
poly powmod(const poly& base, long long e, const poly& mod);

// Largest k with pi^k | f.  Requires f != 0 and deg pi >= 1.
int valuation(const poly& f, const poly& pi);

struct poly_factor {
  poly base;         // monic irreducible
  int multiplicity;  // >= 1
};

// unit * prod(base^multiplicity) == the factored polynomial; factors are
// sorted by degree, then by coefficient lists lexicographically, so the
// decomposition is deterministic.
struct factorization {
  fp_element unit;
  std::vector<poly_factor> factors;

  poly reassemble() const;
};

// Complete factorization into monic irreducibles (squarefree split,
// distinct-degree split, then equal-degree split with a fixed-seed
// generator, so results never vary between runs).  Throws on f == 0.
factorization factor(const poly& f);

bool is_irreducible(const poly& f);

// F_p[t]/(pi) for monic irreducible pi.  Elements are reduced polynomials
// of degree < deg pi.
class residue_field {
 public:
  explicit residue_field(poly pi);  // re-verifies irreducibility

  const poly& modulus_poly() const noexcept { return pi_; }
  long long characteristic() const noexcept { return pi_.modulus(); }
  int degree() const noexcept { return pi_.degree(); }

  poly reduce(const poly& f) const;
  poly add(const poly& a, const poly& b) const;
  poly sub(const poly& a, const poly& b) const;
  poly mul(const poly& a, const poly& b) const;
  poly inverse(const poly& a) const;  // throws if a reduces to 0
  poly pow(const poly& a, long long e) const;
  bool is_zero(const poly& a) const { return reduce(a).is_zero(); }

 private:
  poly pi_;
};

// Canonical image of f in F_p[t]/(pi), i.e. f mod pi.
poly residue_image(const poly& f, const poly& pi);

}  // namespace k3fib
