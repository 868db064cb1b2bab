#include "k3fib/ffpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace k3fib {

namespace {

void check_same_modulus(long long a, long long b) {
  if (a != b) {
    throw std::invalid_argument(
        "mixed moduli: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

long long reduce_mod(long long v, long long p) noexcept {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

bool is_prime(long long n) noexcept {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// F_p elements

bool operator==(fp_element a, fp_element b) {
  check_same_modulus(a.modulus, b.modulus);
  return a.value == b.value;
}

bool operator!=(fp_element a, fp_element b) { return !(a == b); }

fp_element operator+(fp_element a, fp_element b) {
  check_same_modulus(a.modulus, b.modulus);
  return {(a.value + b.value) % a.modulus, a.modulus};
}

fp_element operator-(fp_element a, fp_element b) {
  check_same_modulus(a.modulus, b.modulus);
  return {reduce_mod(a.value - b.value, a.modulus), a.modulus};
}

fp_element operator-(fp_element a) {
  return {reduce_mod(-a.value, a.modulus), a.modulus};
}

fp_element operator*(fp_element a, fp_element b) {
  check_same_modulus(a.modulus, b.modulus);
  return {(a.value * b.value) % a.modulus, a.modulus};
}

fp_element inverse(fp_element a) {
  if (a.value == 0) {
    throw std::domain_error("inverse of 0 in F_" + std::to_string(a.modulus));
  }
  // Extended Euclid on (value, p); p prime so the gcd is 1.
  long long r0 = a.modulus, r1 = a.value, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return {reduce_mod(s0, a.modulus), a.modulus};
}

fp_element operator/(fp_element a, fp_element b) {
  check_same_modulus(a.modulus, b.modulus);
  return a * inverse(b);
}

fp_element pow(fp_element base, long long e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  fp_element acc{1 % base.modulus, base.modulus};
  fp_element sq = base;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    sq = sq * sq;
    e >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// prime_field

prime_field::prime_field(long long p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
}

fp_element prime_field::element(long long value) const noexcept {
  return {reduce_mod(value, p_), p_};
}

// ---------------------------------------------------------------------------
// poly

poly::poly(prime_field field, const std::vector<long long>& coeffs)
    : field_(field) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.push_back(reduce_mod(v, field.modulus()));
  trim();
}

poly poly::constant(prime_field field, long long c) {
  return poly(field, {c});
}

poly poly::variable(prime_field field) { return poly(field, {0, 1}); }

void poly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long long poly::at(int i) const noexcept {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

fp_element poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of 0");
  return {c_.back(), modulus()};
}

fp_element poly::evaluate(fp_element x) const {
  check_same_modulus(x.modulus, modulus());
  long long p = modulus();
  long long acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = (acc * x.value + *it) % p;
  }
  return {acc, p};
}

fp_element poly::evaluate(long long x) const {
  return evaluate(field_.element(x));
}

poly poly::derivative() const {
  poly d(field_);
  long long p = modulus();
  for (size_t i = 1; i < c_.size(); ++i) {
    d.c_.push_back((c_[i] * (static_cast<long long>(i) % p)) % p);
  }
  d.trim();
  return d;
}

poly poly::monic() const {
  return *this * inverse(leading());
}

poly poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return *this;
  poly r(field_);
  r.c_.assign(static_cast<size_t>(k), 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

std::string poly::coeff_string() const {
  std::string s = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(c_[i]);
  }
  s += "]";
  return s;
}

std::string poly::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    long long c = at(i);
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || c != 1) s += std::to_string(c);
    if (i >= 1) {
      if (c != 1) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

bool operator==(const poly& a, const poly& b) {
  check_same_modulus(a.modulus(), b.modulus());
  return a.coefficients() == b.coefficients();
}

bool operator!=(const poly& a, const poly& b) { return !(a == b); }

poly operator+(const poly& a, const poly& b) {
  check_same_modulus(a.modulus(), b.modulus());
  std::vector<long long> c(std::max(a.coefficients().size(),
                                    b.coefficients().size()));
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = a.at(static_cast<int>(i)) + b.at(static_cast<int>(i));
  }
  return poly(a.field(), c);
}

poly operator-(const poly& a, const poly& b) { return a + (-b); }

poly operator-(const poly& a) {
  std::vector<long long> c(a.coefficients());
  for (auto& v : c) v = -v;
  return poly(a.field(), c);
}

poly operator*(const poly& a, const poly& b) {
  check_same_modulus(a.modulus(), b.modulus());
  if (a.is_zero() || b.is_zero()) return poly(a.field());
  long long p = a.modulus();
  std::vector<long long> c(a.coefficients().size() + b.coefficients().size() - 1,
                           0);
  for (size_t i = 0; i < a.coefficients().size(); ++i) {
    long long ai = a.coefficients()[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < b.coefficients().size(); ++j) {
      c[i + j] = (c[i + j] + ai * b.coefficients()[j]) % p;
    }
  }
  return poly(a.field(), c);
}

poly operator*(const poly& a, fp_element s) {
  check_same_modulus(a.modulus(), s.modulus);
  std::vector<long long> c(a.coefficients());
  for (auto& v : c) v = v * s.value;
  return poly(a.field(), c);
}

poly operator*(fp_element s, const poly& a) { return a * s; }

std::pair<poly, poly> divmod(const poly& f, const poly& g) {
  check_same_modulus(f.modulus(), g.modulus());
  if (g.is_zero()) throw std::domain_error("polynomial division by 0");
  prime_field k = f.field();
  if (f.degree() < g.degree()) return {poly(k), f};
  long long p = k.modulus();
  fp_element lg_inv = inverse(g.leading());
  std::vector<long long> rem(f.coefficients());
  std::vector<long long> quo(
      static_cast<size_t>(f.degree() - g.degree() + 1), 0);
  for (int d = f.degree(); d >= g.degree();) {
    long long c = (rem[static_cast<size_t>(d)] * lg_inv.value) % p;
    int shift = d - g.degree();
    quo[static_cast<size_t>(shift)] = c;
    if (c != 0) {
      for (int i = 0; i <= g.degree(); ++i) {
        auto& r = rem[static_cast<size_t>(i + shift)];
        r = reduce_mod(r - c * g.at(i), p);
      }
    }
    --d;
    while (d >= g.degree() && rem[static_cast<size_t>(d)] == 0) --d;
  }
  rem.resize(static_cast<size_t>(std::max(g.degree(), 0)));
  return {poly(k, quo), poly(k, rem)};
}

poly operator/(const poly& f, const poly& g) { return divmod(f, g).first; }
poly operator%(const poly& f, const poly& g) { return divmod(f, g).second; }

poly gcd(poly a, poly b) {
  check_same_modulus(a.modulus(), b.modulus());
  while (!b.is_zero()) {
    poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

poly compose(const poly& f, const poly& g) {
  check_same_modulus(f.modulus(), g.modulus());
  poly acc(f.field());
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * g + poly::constant(f.field(), f.at(i));
  }
  return acc;
}

poly pow(const poly& base, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  poly acc = poly::constant(base.field(), 1);
  poly sq = base;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    sq = sq * sq;
    e >>= 1;
  }
  return acc;
}

poly powmod(const poly& base, long long e, const poly& mod) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  poly acc = poly::constant(base.field(), 1) % mod;
  poly sq = base % mod;
  while (e > 0) {
    if (e & 1) acc = (acc * sq) % mod;
    sq = (sq * sq) % mod;
    e >>= 1;
  }
  return acc;
}

int valuation(const poly& f, const poly& pi) {
  if (f.is_zero()) throw std::invalid_argument("valuation of 0");
  if (pi.degree() < 1) throw std::invalid_argument("valuation at a constant");
  int v = 0;
  poly cur = f;
  for (;;) {
    auto [q, r] = divmod(cur, pi);
    if (!r.is_zero()) return v;
    ++v;
    cur = std::move(q);
  }
}

// ---------------------------------------------------------------------------
// factorization

namespace {

bool factor_less(const poly_factor& a, const poly_factor& b) {
  if (a.base.degree() != b.base.degree())
    return a.base.degree() < b.base.degree();
  return a.base.coefficients() < b.base.coefficients();
}

// f with f' == 0 is a p-th power g(t)^p and g has the same coefficients
// moved down: coefficient of t^(pi) becomes coefficient of t^i (Frobenius
// fixes the prime field).
poly pth_root(const poly& f) {
  long long p = f.modulus();
  std::vector<long long> c;
  for (int i = 0; i * p <= f.degree(); ++i) c.push_back(f.at(static_cast<int>(i * p)));
  return poly(f.field(), c);
}

// Yun-style squarefree split adapted to characteristic p: the part of the
// gcd chain left untouched is a p-th power and recurses through pth_root.
void squarefree_decompose(const poly& f, int outer, std::vector<poly_factor>& out) {
  long long p = f.modulus();
  poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), outer * static_cast<int>(p), out);
    return;
  }
  poly c = gcd(f, d);
  poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    poly y = gcd(w, c);
    poly z = w / y;
    if (!z.is_one()) out.push_back({z.monic(), outer * i});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one()) {
    squarefree_decompose(pth_root(c), outer * static_cast<int>(p), out);
  }
}

poly random_poly(prime_field k, int max_deg, std::mt19937_64& rng) {
  std::vector<long long> c(static_cast<size_t>(max_deg) + 1);
  for (auto& v : c)
    v = static_cast<long long>(rng() % static_cast<unsigned long long>(k.modulus()));
  return poly(k, c);
}

// Equal-degree split of monic squarefree h whose irreducible factors all
// have degree d.  Cantor-Zassenhaus; the norm N(r) = prod r^(p^i) keeps
// exponents no larger than p.  p == 2 uses the trace map instead.
void equal_degree(const poly& h, int d, std::mt19937_64& rng,
                  std::vector<poly>& out) {
  if (h.degree() == d) {
    out.push_back(h);
    return;
  }
  prime_field k = h.field();
  long long p = k.modulus();
  for (;;) {
    poly r = random_poly(k, 2 * d - 1, rng);
    if (r.degree() < 1) continue;
    poly b(k);
    if (p == 2) {
      // trace: r + r^2 + ... + r^(2^(d-1))
      poly acc = r % h;
      b = acc;
      for (int i = 1; i < d; ++i) {
        acc = (acc * acc) % h;
        b = (b + acc) % h;
      }
    } else {
      poly nr = r % h;
      poly acc = nr;
      for (int i = 1; i < d; ++i) {
        acc = powmod(acc, p, h);
        nr = (nr * acc) % h;
      }
      b = powmod(nr, (p - 1) / 2, h) - poly::constant(k, 1);
    }
    poly g = gcd(b, h);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(h / g, d, rng, out);
      return;
    }
  }
}

// Distinct-degree split of monic squarefree g, then equal-degree on each
// part.  Appends (irreducible, mult) pairs.
void factor_squarefree(poly g, int mult, std::mt19937_64& rng,
                       std::vector<poly_factor>& out) {
  long long p = g.modulus();
  poly x = poly::variable(g.field());
  poly h = x % g;  // x^(p^d) mod g, advanced once per round
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powmod(h, p, g);
    poly gd = gcd(h - x, g);
    if (gd.degree() > 0) {
      std::vector<poly> parts;
      equal_degree(gd, d, rng, parts);
      for (auto& irr : parts) out.push_back({irr, mult});
      g = g / gd;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.push_back({g, mult});
}

}  // namespace

poly factorization::reassemble() const {
  prime_field k(unit.modulus);
  poly acc = poly::constant(k, unit.value);
  for (const auto& f : factors) acc = acc * pow(f.base, f.multiplicity);
  return acc;
}

factorization factor(const poly& f) {
  if (f.is_zero()) throw std::domain_error("factorization of 0");
  factorization out{f.leading(), {}};
  if (f.degree() == 0) return out;
  // Fixed seed: the split is a pure function of the input.
  std::mt19937_64 rng(0x6b33f1b5c0ffee01ULL);
  std::vector<poly_factor> square_free;
  squarefree_decompose(f.monic(), 1, square_free);
  for (const auto& part : square_free) {
    factor_squarefree(part.base, part.multiplicity, rng, out.factors);
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

bool is_irreducible(const poly& f) {
  if (f.degree() < 1) return false;
  factorization fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

// ---------------------------------------------------------------------------
// residue_field

residue_field::residue_field(poly pi) : pi_(std::move(pi)) {
  if (!pi_.is_monic() || !is_irreducible(pi_)) {
    throw std::invalid_argument("residue field modulus must be monic irreducible");
  }
}

poly residue_field::reduce(const poly& f) const { return f % pi_; }

poly residue_field::add(const poly& a, const poly& b) const {
  return (a + b) % pi_;
}

poly residue_field::sub(const poly& a, const poly& b) const {
  return (a - b) % pi_;
}

poly residue_field::mul(const poly& a, const poly& b) const {
  return (a * b) % pi_;
}

poly residue_field::inverse(const poly& a) const {
  poly r = reduce(a);
  if (r.is_zero()) throw std::domain_error("inverse of 0 in residue field");
  // Extended Euclid in F_p[t]: s*r + t*pi == gcd == constant.
  prime_field k = pi_.field();
  poly r0 = pi_, r1 = r;
  poly s0(k), s1 = poly::constant(k, 1);
  while (!r1.is_zero()) {
    auto [q, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return (s0 * ::k3fib::inverse(r0.leading())) % pi_;
}

poly residue_field::pow(const poly& a, long long e) const {
  if (e < 0) return pow(inverse(a), -e);
  return powmod(a, e, pi_);
}

poly residue_image(const poly& f, const poly& pi) {
  if (pi.degree() < 1) throw std::invalid_argument("residue at a constant");
  return f % pi;
}

}  // namespace k3fib
