#include "k3fib/tate.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "k3fib/errors.hpp"

namespace k3fib {

// ---------------------------------------------------------------------------
// kodaira_fiber

kodaira_fiber::kodaira_fiber(fiber_kind kind, int index)
    : kind_(kind), index_(index) {
  bool indexed = kind == fiber_kind::I_n || kind == fiber_kind::I_n_star;
  if (indexed ? index < 0 : index != 0) {
    throw std::invalid_argument("bad fiber index " + std::to_string(index));
  }
}

int kodaira_fiber::euler() const noexcept {
  switch (kind_) {
    case fiber_kind::I_n: return index_;
    case fiber_kind::II: return 2;
    case fiber_kind::III: return 3;
    case fiber_kind::IV: return 4;
    case fiber_kind::I_n_star: return index_ + 6;
    case fiber_kind::IV_star: return 8;
    case fiber_kind::III_star: return 9;
    case fiber_kind::II_star: return 10;
  }
  return 0;
}

int kodaira_fiber::components() const noexcept {
  switch (kind_) {
    case fiber_kind::I_n: return index_ > 0 ? index_ : 1;
    case fiber_kind::II: return 1;
    case fiber_kind::III: return 2;
    case fiber_kind::IV: return 3;
    case fiber_kind::I_n_star: return index_ + 5;
    case fiber_kind::IV_star: return 7;
    case fiber_kind::III_star: return 8;
    case fiber_kind::II_star: return 9;
  }
  return 0;
}

int kodaira_fiber::component_group_order() const noexcept {
  switch (kind_) {
    case fiber_kind::I_n: return index_ > 0 ? index_ : 1;
    case fiber_kind::II: return 1;
    case fiber_kind::III: return 2;
    case fiber_kind::IV: return 3;
    case fiber_kind::I_n_star: return 4;
    case fiber_kind::IV_star: return 3;
    case fiber_kind::III_star: return 2;
    case fiber_kind::II_star: return 1;
  }
  return 0;
}

std::string kodaira_fiber::symbol() const {
  switch (kind_) {
    case fiber_kind::I_n: return "I_" + std::to_string(index_);
    case fiber_kind::II: return "II";
    case fiber_kind::III: return "III";
    case fiber_kind::IV: return "IV";
    case fiber_kind::I_n_star: return "I_" + std::to_string(index_) + "*";
    case fiber_kind::IV_star: return "IV*";
    case fiber_kind::III_star: return "III*";
    case fiber_kind::II_star: return "II*";
  }
  return "?";
}

std::string kodaira_fiber::ade() const {
  switch (kind_) {
    case fiber_kind::I_n:
      if (index_ == 0) return "A_0";
      if (index_ == 1) return "A_0^*";
      return "A_" + std::to_string(index_ - 1);
    case fiber_kind::II: return "A_0^**";
    case fiber_kind::III: return "A_1^*";
    case fiber_kind::IV: return "A_2^*";
    case fiber_kind::I_n_star: return "D_" + std::to_string(index_ + 4);
    case fiber_kind::IV_star: return "E_6";
    case fiber_kind::III_star: return "E_7";
    case fiber_kind::II_star: return "E_8";
  }
  return "?";
}

namespace {

int parse_index(std::string_view digits, std::string_view whole) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 0) {
    throw parse_error("bad fiber label '" + std::string(whole) + "'");
  }
  return n;
}

}  // namespace

kodaira_fiber kodaira_fiber::from_symbol(std::string_view s) {
  if (s == "II") return kodaira_fiber(fiber_kind::II);
  if (s == "III") return kodaira_fiber(fiber_kind::III);
  if (s == "IV") return kodaira_fiber(fiber_kind::IV);
  if (s == "IV*") return kodaira_fiber(fiber_kind::IV_star);
  if (s == "III*") return kodaira_fiber(fiber_kind::III_star);
  if (s == "II*") return kodaira_fiber(fiber_kind::II_star);
  if (s.size() > 2 && s.substr(0, 2) == "I_") {
    std::string_view rest = s.substr(2);
    if (rest.size() > 1 && rest.back() == '*') {
      return kodaira_fiber(fiber_kind::I_n_star,
                           parse_index(rest.substr(0, rest.size() - 1), s));
    }
    return kodaira_fiber(fiber_kind::I_n, parse_index(rest, s));
  }
  throw parse_error("unknown Kodaira symbol '" + std::string(s) + "'");
}

kodaira_fiber kodaira_fiber::from_ade(std::string_view s) {
  if (s == "A_0") return kodaira_fiber(fiber_kind::I_n, 0);
  if (s == "A_0^*") return kodaira_fiber(fiber_kind::I_n, 1);
  if (s == "A_0^**") return kodaira_fiber(fiber_kind::II);
  if (s == "A_1^*") return kodaira_fiber(fiber_kind::III);
  if (s == "A_2^*") return kodaira_fiber(fiber_kind::IV);
  if (s == "E_6") return kodaira_fiber(fiber_kind::IV_star);
  if (s == "E_7") return kodaira_fiber(fiber_kind::III_star);
  if (s == "E_8") return kodaira_fiber(fiber_kind::II_star);
  if (s.size() > 2 && s.substr(0, 2) == "A_") {
    int k = parse_index(s.substr(2), s);
    if (k >= 1) return kodaira_fiber(fiber_kind::I_n, k + 1);
  }
  if (s.size() > 2 && s.substr(0, 2) == "D_") {
    int k = parse_index(s.substr(2), s);
    if (k >= 4) return kodaira_fiber(fiber_kind::I_n_star, k - 4);
  }
  throw parse_error("unknown A-D-E label '" + std::string(s) + "'");
}

bool fiber_less(const kodaira_fiber& a, const kodaira_fiber& b) {
  if (a.euler() != b.euler()) return a.euler() > b.euler();
  return a.symbol() < b.symbol();
}

// ---------------------------------------------------------------------------
// local classification

namespace {

constexpr int kValInfinity = std::numeric_limits<int>::max() / 2;

int valuation_or_inf(const poly& f, const poly& pi) {
  return f.is_zero() ? kValInfinity : valuation(f, pi);
}

kodaira_fiber classify_valuations(int vc4, int vdisc) {
  if (vdisc == 0) return kodaira_fiber(fiber_kind::I_n, 0);
  if (vc4 == 0) return kodaira_fiber(fiber_kind::I_n, vdisc);
  switch (vdisc) {
    case 2: return kodaira_fiber(fiber_kind::II);
    case 3: return kodaira_fiber(fiber_kind::III);
    case 4: return kodaira_fiber(fiber_kind::IV);
    case 6: return kodaira_fiber(fiber_kind::I_n_star, 0);
    default: break;
  }
  if (vc4 == 2 && vdisc >= 7) {
    return kodaira_fiber(fiber_kind::I_n_star, vdisc - 6);
  }
  switch (vdisc) {
    case 8: return kodaira_fiber(fiber_kind::IV_star);
    case 9: return kodaira_fiber(fiber_kind::III_star);
    case 10: return kodaira_fiber(fiber_kind::II_star);
    default: break;
  }
  throw std::logic_error("impossible valuation pattern (vc4 = " +
                         std::to_string(vc4) + ", vdisc = " +
                         std::to_string(vdisc) + ")");
}

kodaira_fiber tate_at_finite(const weierstrass_model& m, const poly& pi,
                             smooth_policy policy) {
  const model_invariants& inv = m.invariants();
  int vc4 = valuation_or_inf(inv.c4, pi);
  int vdisc = valuation(inv.disc, pi);  // disc != 0 by construction
  // Minimality restarts: dividing (c4, c6, disc) by pi^(4, 6, 12) only
  // shifts valuations, so no actual division is needed.  c6 tags along via
  // 1728 disc = c4^3 - c6^2: vc4 >= 4 and vdisc >= 12 force vc6 >= 6.
  int guard = vdisc / 12 + 1;
  while (vc4 >= 4 && vdisc >= 12) {
    if (--guard < 0) throw std::logic_error("minimality loop ran away");
    if (vc4 < kValInfinity) vc4 -= 4;
    vdisc -= 12;
  }
  kodaira_fiber f = classify_valuations(vc4, vdisc);
  if (f.is_smooth() && policy == smooth_policy::strict) {
    throw std::invalid_argument("fiber at " + pi.pretty() +
                                " is smooth after minimalization");
  }
  return f;
}

}  // namespace

kodaira_fiber tate_local(const weierstrass_model& m, const place& v,
                         smooth_policy policy) {
  if (v.is_infinite()) {
    weierstrass_model flipped = chart_at_infinity(m);
    return tate_at_finite(flipped, poly::variable(m.field()), policy);
  }
  if (v.uniformizer().modulus() != m.p()) {
    throw std::invalid_argument("place and model over different fields");
  }
  return tate_at_finite(m, v.uniformizer(), policy);
}

int fiber_configuration::euler_sum() const noexcept {
  int s = 0;
  for (const auto& e : entries) s += e.at.degree() * e.fiber.euler();
  return s;
}

fiber_configuration classify_fibration(const weierstrass_model& m) {
  fiber_configuration out;
  for (const place& v : singular_places(m)) {
    kodaira_fiber f = tate_local(m, v, smooth_policy::lenient);
    if (f.is_smooth()) continue;  // non-minimal model artifact
    out.entries.push_back({v, f});
  }
  return out;
}

}  // namespace k3fib
