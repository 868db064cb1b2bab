#include "k3fib/weierstrass.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3fib {

namespace {

model_invariants compute_invariants(const poly& a1, const poly& a2,
                                    const poly& a3, const poly& a4,
                                    const poly& a6) {
  prime_field k = a1.field();
  auto c = [&](long long v) { return poly::constant(k, v); };
  model_invariants inv{
      /*b2=*/a1 * a1 + c(4) * a2,
      /*b4=*/c(2) * a4 + a1 * a3,
      /*b6=*/a3 * a3 + c(4) * a6,
      /*b8=*/a1 * a1 * a6 + c(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 -
          a4 * a4,
      poly(k), poly(k), poly(k), poly(k), poly(k)};
  inv.c4 = inv.b2 * inv.b2 - c(24) * inv.b4;
  inv.c6 = -(inv.b2 * inv.b2 * inv.b2) + c(36) * inv.b2 * inv.b4 -
           c(216) * inv.b6;
  inv.disc = -(inv.b2 * inv.b2) * inv.b8 - c(8) * (inv.b4 * inv.b4 * inv.b4) -
             c(27) * (inv.b6 * inv.b6) + c(9) * inv.b2 * inv.b4 * inv.b6;
  inv.j_num = inv.c4 * inv.c4 * inv.c4;
  inv.j_den = inv.disc;
  return inv;
}

}  // namespace

weierstrass_model::weierstrass_model(prime_field field, poly a1, poly a2,
                                     poly a3, poly a4, poly a6, int n)
    : field_(field),
      n_(n),
      a1_(std::move(a1)),
      a2_(std::move(a2)),
      a3_(std::move(a3)),
      a4_(std::move(a4)),
      a6_(std::move(a6)),
      inv_(compute_invariants(a1_, a2_, a3_, a4_, a6_)) {
  if (field_.modulus() == 2 || field_.modulus() == 3) {
    throw unsupported_characteristic(
        "characteristic " + std::to_string(field_.modulus()) +
        " is not supported (needs p >= 5)");
  }
  if (n_ < 1) throw std::invalid_argument("n must be >= 1");
  const poly* as[] = {&a1_, &a2_, &a3_, &a4_, &a6_};
  const int weights[] = {1, 2, 3, 4, 6};
  for (int i = 0; i < 5; ++i) {
    if (as[i]->modulus() != field_.modulus()) {
      throw std::invalid_argument("coefficient modulus differs from the field");
    }
    if (as[i]->degree() > weights[i] * n_) {
      throw std::invalid_argument(
          "deg a" + std::to_string(weights[i]) + " = " +
          std::to_string(as[i]->degree()) + " exceeds bound " +
          std::to_string(weights[i] * n_));
    }
  }
  if (inv_.disc.is_zero()) {
    throw degenerate_model("discriminant vanishes identically");
  }
}

bool operator==(const weierstrass_model& a, const weierstrass_model& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.a1_ == b.a1_ &&
         a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
}

// ---------------------------------------------------------------------------
// place

place place::at_infinity() { return place(std::nullopt); }

place place::finite(poly pi) {
  if (!pi.is_monic() || !is_irreducible(pi)) {
    throw std::invalid_argument("finite place needs a monic irreducible");
  }
  return place(std::optional<poly>(std::move(pi)));
}

const poly& place::uniformizer() const {
  if (!pi_) throw std::domain_error("infinite place has no uniformizer");
  return *pi_;
}

std::string place::key() const {
  return pi_ ? pi_->coeff_string() : std::string("inf");
}

std::string place::pretty() const {
  return pi_ ? pi_->pretty() : std::string("inf");
}

bool operator==(const place& a, const place& b) {
  if (a.is_infinite() || b.is_infinite())
    return a.is_infinite() == b.is_infinite();
  return a.uniformizer() == b.uniformizer();
}

bool operator!=(const place& a, const place& b) { return !(a == b); }

bool place_less(const place& a, const place& b) {
  if (a.is_infinite() != b.is_infinite()) return a.is_infinite();
  if (a.is_infinite()) return false;
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.uniformizer().coefficients() < b.uniformizer().coefficients();
}

// ---------------------------------------------------------------------------
// model transforms

weierstrass_model chart_at_infinity(const weierstrass_model& m) {
  // reverse within the degree budget: sum a_ij t^j |-> sum a_ij s^(i*n - j)
  auto flip = [&](const poly& a, int weight) {
    std::vector<long long> c(static_cast<size_t>(weight * m.n()) + 1, 0);
    for (int j = 0; j <= a.degree(); ++j) {
      c[static_cast<size_t>(weight * m.n() - j)] = a.at(j);
    }
    return poly(m.field(), c);
  };
  return weierstrass_model(m.field(), flip(m.a1(), 1), flip(m.a2(), 2),
                           flip(m.a3(), 3), flip(m.a4(), 4), flip(m.a6(), 6),
                           m.n());
}

weierstrass_model translate_t(const weierstrass_model& m, long long c) {
  poly shift = poly(m.field(), {c, 1});  // t + c
  return weierstrass_model(m.field(), compose(m.a1(), shift),
                           compose(m.a2(), shift), compose(m.a3(), shift),
                           compose(m.a4(), shift), compose(m.a6(), shift),
                           m.n());
}

std::vector<place> singular_places(const weierstrass_model& m) {
  std::vector<place> out;
  weierstrass_model at_inf = chart_at_infinity(m);
  if (at_inf.invariants().disc.at(0) == 0) out.push_back(place::at_infinity());
  factorization fac = factor(m.invariants().disc);
  for (const auto& f : fac.factors) out.push_back(place::finite(f.base));
  // factor() already sorts by (degree, coefficients); infinity leads.
  return out;
}

}  // namespace k3fib
