#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "doctest.h"
#include "k3fib/errors.hpp"
#include "k3fib/fixtures.hpp"
#include "k3fib/tate.hpp"

using namespace k3fib;

namespace {

const example_fixture& fixture(const std::string& id) {
  for (const auto& ex : builtin_fixtures().models)
    if (ex.id == id) return ex;
  throw std::logic_error("missing fixture " + id);
}

kodaira_fiber at_finite(const weierstrass_model& m, long long root) {
  poly pi = poly::variable(m.field()) - poly::constant(m.field(), root);
  return tate_local(m, place::finite(pi));
}

}  // namespace

TEST_CASE("fiber attribute tables") {
  struct row {
    const char* symbol;
    int e;
    int m;
    int cg;
    const char* ade;
  };
  const row rows[] = {
      {"I_0", 0, 1, 1, "A_0"},     {"I_1", 1, 1, 1, "A_0^*"},
      {"I_2", 2, 2, 2, "A_1"},     {"I_7", 7, 7, 7, "A_6"},
      {"II", 2, 1, 1, "A_0^**"},   {"III", 3, 2, 2, "A_1^*"},
      {"IV", 4, 3, 3, "A_2^*"},    {"I_0*", 6, 5, 4, "D_4"},
      {"I_1*", 7, 6, 4, "D_5"},    {"I_4*", 10, 9, 4, "D_8"},
      {"IV*", 8, 7, 3, "E_6"},     {"III*", 9, 8, 2, "E_7"},
      {"II*", 10, 9, 1, "E_8"},
  };
  for (const auto& r : rows) {
    kodaira_fiber f = kodaira_fiber::from_symbol(r.symbol);
    CHECK(f.euler() == r.e);
    CHECK(f.components() == r.m);
    CHECK(f.component_group_order() == r.cg);
    CHECK(f.symbol() == r.symbol);
    CHECK(f.ade() == r.ade);
    CHECK(kodaira_fiber::from_ade(r.ade) == f);
  }
}

TEST_CASE("euler vs component count distinguishes additive from multiplicative") {
  std::vector<kodaira_fiber> all;
  for (int n = 0; n <= 12; ++n) all.emplace_back(fiber_kind::I_n, n);
  for (int n = 0; n <= 8; ++n) all.emplace_back(fiber_kind::I_n_star, n);
  all.emplace_back(fiber_kind::II);
  all.emplace_back(fiber_kind::III);
  all.emplace_back(fiber_kind::IV);
  all.emplace_back(fiber_kind::IV_star);
  all.emplace_back(fiber_kind::III_star);
  all.emplace_back(fiber_kind::II_star);
  for (const auto& f : all) {
    if (f.is_smooth()) {
      CHECK(f.euler() == 0);
      CHECK(f.components() == 1);
    } else if (f.is_additive()) {
      CHECK(f.euler() == f.components() + 1);
    } else {
      CHECK(f.euler() == f.components());
    }
    CHECK(f.component_group_order() <= f.components());
    CHECK(kodaira_fiber::from_symbol(f.symbol()) == f);
    CHECK(kodaira_fiber::from_ade(f.ade()) == f);
  }
}

TEST_CASE("fiber construction and parsing reject bad input") {
  CHECK_THROWS_AS(kodaira_fiber(fiber_kind::I_n, -1), std::invalid_argument);
  CHECK_THROWS_AS(kodaira_fiber(fiber_kind::II, 1), std::invalid_argument);
  CHECK_THROWS_AS(kodaira_fiber(fiber_kind::I_n_star, -2),
                  std::invalid_argument);
  CHECK_THROWS_AS(kodaira_fiber::from_symbol("V"), parse_error);
  CHECK_THROWS_AS(kodaira_fiber::from_symbol("I_x"), parse_error);
  CHECK_THROWS_AS(kodaira_fiber::from_symbol("I_-3"), parse_error);
  CHECK_THROWS_AS(kodaira_fiber::from_symbol(""), parse_error);
  CHECK_THROWS_AS(kodaira_fiber::from_ade("A_-1"), parse_error);
  CHECK_THROWS_AS(kodaira_fiber::from_ade("D_3"), parse_error);
  CHECK_THROWS_AS(kodaira_fiber::from_ade("E_9"), parse_error);
  CHECK_THROWS_AS(kodaira_fiber::from_ade("A_0^***"), parse_error);
  CHECK(kodaira_fiber::from_ade("D_4") ==
        kodaira_fiber(fiber_kind::I_n_star, 0));
  CHECK(kodaira_fiber::from_ade("A_11") == kodaira_fiber(fiber_kind::I_n, 12));
}

TEST_CASE("fiber ordering: descending euler, then symbol") {
  kodaira_fiber two_star(fiber_kind::II_star);
  kodaira_fiber i10(fiber_kind::I_n, 10);
  kodaira_fiber ii(fiber_kind::II);
  kodaira_fiber i2(fiber_kind::I_n, 2);
  CHECK(fiber_less(two_star, i10));   // euler tie at 10: "II*" < "I_10"
  CHECK(fiber_less(i10, ii));         // 10 > 2, larger euler first
  CHECK(fiber_less(ii, i2));          // euler tie at 2: "II" < "I_2"
  CHECK_FALSE(fiber_less(i2, ii));
  CHECK_FALSE(fiber_less(ii, ii));
}

TEST_CASE("local classification matches worked models") {
  // y^2 = x^3 + u over F_7: II at each root of u, II* at infinity
  const auto& m72 = fixture("7-(2)").model;
  CHECK(at_finite(m72, 0) == kodaira_fiber(fiber_kind::II));
  CHECK(at_finite(m72, 3) == kodaira_fiber(fiber_kind::II));
  CHECK(tate_local(m72, place::at_infinity()) ==
        kodaira_fiber(fiber_kind::II_star));

  // y^2 = x^3 + ux over F_5: III at each root of u, III* at infinity
  const auto& m51 = fixture("5-(1)").model;
  CHECK(at_finite(m51, 0) == kodaira_fiber(fiber_kind::III));
  CHECK(tate_local(m51, place::at_infinity()) ==
        kodaira_fiber(fiber_kind::III_star));

  // y^2 = x^3 + u^2 over F_5: IV everywhere including infinity
  const auto& m55 = fixture("5-(5)").model;
  CHECK(at_finite(m55, 0) == kodaira_fiber(fiber_kind::IV));
  CHECK(tate_local(m55, place::at_infinity()) ==
        kodaira_fiber(fiber_kind::IV));

  // y^2 = x^3 + x^2 + u over F_11: I_1 at each root of u
  CHECK(at_finite(fixture("11-(1)").model, 0) ==
        kodaira_fiber(fiber_kind::I_n, 1));

  // y^2 = x^3 + x^2 + ux over F_7: I_2 at each root of u
  CHECK(at_finite(fixture("7-(5)").model, 0) ==
        kodaira_fiber(fiber_kind::I_n, 2));
}

TEST_CASE("starred I_n fibers from crafted valuations") {
  // a4 = t^2, a6 = t^3(2 + t) over F_7: v(c4) = 2, v(disc) = 7 at t = 0
  prime_field k7(7);
  poly t7 = poly::variable(k7);
  poly z7(k7);
  weierstrass_model m_star(k7, z7, z7, z7, t7 * t7,
                           pow(t7, 3) * (poly::constant(k7, 2) + t7), 1);
  CHECK(valuation(m_star.invariants().disc, t7) == 7);
  CHECK(tate_local(m_star, place::finite(t7)) ==
        kodaira_fiber(fiber_kind::I_n_star, 1));

  // a4 = t^2, a6 = t^3(1 + t) over F_5: v(c4) = 2, v(disc) = 6 at t = 0
  prime_field k5(5);
  poly t5 = poly::variable(k5);
  poly z5(k5);
  weierstrass_model m_zero(k5, z5, z5, z5, t5 * t5,
                           pow(t5, 3) * (poly::constant(k5, 1) + t5), 1);
  CHECK(valuation(m_zero.invariants().disc, t5) == 6);
  CHECK(tate_local(m_zero, place::finite(t5)) ==
        kodaira_fiber(fiber_kind::I_n_star, 0));
}

TEST_CASE("smooth policy") {
  const auto& m = fixture("7-(3)").model;
  prime_field k = m.field();
  poly t = poly::variable(k);
  // t^2 + 1 is irreducible over F_7 and does not divide the discriminant
  place v = place::finite(t * t + poly::constant(k, 1));
  CHECK_FALSE((m.invariants().disc % v.uniformizer()).is_zero());
  CHECK(tate_local(m, v, smooth_policy::lenient).is_smooth());
  CHECK_THROWS_AS(tate_local(m, v, smooth_policy::strict),
                  std::invalid_argument);
}

TEST_CASE("non-minimal models are reduced before classification") {
  // a6 = t^6 over F_5, n = 2: disc = -432 t^12, minimal model is smooth
  prime_field k(5);
  poly z(k);
  weierstrass_model m(k, z, z, z, z, pow(poly::variable(k), 6), 2);
  CHECK(tate_local(m, place::finite(poly::variable(k))).is_smooth());
  fiber_configuration cfg = classify_fibration(m);
  CHECK(cfg.entries.empty());
  CHECK(cfg.euler_sum() == 0);
}

TEST_CASE("euler number equals the discriminant valuation on minimal models") {
  for (const auto& ex : builtin_fixtures().models) {
    const poly& disc = ex.model.invariants().disc;
    fiber_configuration cfg = classify_fibration(ex.model);
    int finite_euler = 0;
    for (const auto& entry : cfg.entries) {
      if (entry.at.is_infinite()) continue;
      CHECK(entry.fiber.euler() ==
            valuation(disc, entry.at.uniformizer()));
      finite_euler += entry.count() * entry.fiber.euler();
    }
    // what is left over sits at infinity
    CHECK(cfg.euler_sum() - finite_euler == 24 - disc.degree());
  }
}

TEST_CASE("j-invariant consistency: multiplicative iff v(c4) = 0 < v(disc)") {
  for (const auto& ex : builtin_fixtures().models) {
    const auto& inv = ex.model.invariants();
    for (const auto& entry : classify_fibration(ex.model).entries) {
      if (entry.at.is_infinite()) continue;
      const poly& pi = entry.at.uniformizer();
      bool pole_of_j = !(inv.c4 % pi).is_zero();  // v(c4) = 0, v(disc) > 0
      CHECK(entry.fiber.is_multiplicative() == pole_of_j);
    }
  }
}

TEST_CASE("classification commutes with base translation") {
  const auto& m = fixture("7-(4)").model;
  prime_field k = m.field();
  poly t = poly::variable(k);
  long long c = 2;
  weierstrass_model moved = translate_t(m, c);

  std::multiset<std::pair<std::string, std::string>> before, after;
  for (const auto& e : classify_fibration(m).entries) {
    std::string key = e.at.is_infinite()
                          ? e.at.key()
                          : compose(e.at.uniformizer(),
                                    t + poly::constant(k, c))
                                .monic()
                                .coeff_string();
    before.insert({key, e.fiber.symbol()});
  }
  for (const auto& e : classify_fibration(moved).entries)
    after.insert({e.at.key(), e.fiber.symbol()});
  CHECK(before == after);
}
