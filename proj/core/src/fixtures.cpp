#include "k3fib/fixtures.hpp"

#include <algorithm>

#include "json.hpp"
#include "k3fib/errors.hpp"
#include "k3fib/fixture_data.hpp"

namespace k3fib {

namespace {

using nlohmann::json;

// Coefficient entry: integer, or "num/den" string reduced mod p.
fp_element fp_from_json(const json& j, const prime_field& k) {
  if (j.is_number_integer()) return k.element(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        return k.element(std::stoll(s));
      }
      long long num = std::stoll(s.substr(0, slash));
      long long den = std::stoll(s.substr(slash + 1));
      if (den % k.modulus() == 0) {
        throw parse_error("denominator of '" + s + "' vanishes mod " +
                          std::to_string(k.modulus()));
      }
      return k.element(num) / k.element(den);
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception&) {
      throw parse_error("bad coefficient '" + s + "'");
    }
  }
  throw parse_error("coefficient must be an integer or a 'num/den' string");
}

poly poly_from_json(const json& j, const prime_field& k) {
  if (!j.is_array()) throw parse_error("polynomial must be a JSON array");
  std::vector<long long> c;
  c.reserve(j.size());
  for (const auto& item : j) c.push_back(fp_from_json(item, k).value);
  return poly(k, c);
}

example_fixture parse_model(const json& j) {
  if (!j.contains("id") || !j.contains("p") || !j.contains("n")) {
    throw parse_error("model entry needs id, p, n");
  }
  std::string id = j.at("id").get<std::string>();
  prime_field k(j.at("p").get<long long>());
  int n = j.at("n").get<int>();
  // u = t^p - t; coefficient lists are polynomials in u
  std::vector<long long> uc(static_cast<size_t>(k.modulus()) + 1, 0);
  uc[1] = -1;
  uc[static_cast<size_t>(k.modulus())] = 1;
  poly u(k, uc);
  auto coeff = [&](const char* key) {
    if (!j.contains(key)) return poly(k);
    return compose(poly_from_json(j.at(key), k), u);
  };
  weierstrass_model model(k, coeff("a1"), coeff("a2"), coeff("a3"),
                          coeff("a4"), coeff("a6"), n);
  example_fixture fx{id, j.value("equation", std::string{}), model, {}};
  if (!j.contains("expected") || !j.at("expected").is_array()) {
    throw parse_error(id + ": missing expected fiber list");
  }
  bool seen_inf = false;
  for (const auto& row : j.at("expected")) {
    locus_expectation x{row.value("label", std::string{}), std::nullopt,
                        row.at("count").get<int>(),
                        kodaira_fiber::from_ade(row.at("ade").get<std::string>())};
    if (row.contains("u")) {
      x.locus = compose(poly_from_json(row.at("u"), k), u);
      if (!x.locus->is_monic()) {
        throw parse_error(id + ": locus '" + x.label + "' is not monic");
      }
      if (x.locus->degree() != x.count) {
        throw parse_error(id + ": locus '" + x.label + "' has degree " +
                          std::to_string(x.locus->degree()) + " but count " +
                          std::to_string(x.count));
      }
    } else if (row.value("at", std::string{}) == "inf") {
      if (seen_inf) throw parse_error(id + ": duplicate infinity row");
      seen_inf = true;
      if (x.count != 1) throw parse_error(id + ": infinity row must have count 1");
    } else {
      throw parse_error(id + ": expected row needs 'u' or 'at': 'inf'");
    }
    fx.expected.push_back(std::move(x));
  }
  // loci must be pairwise coprime for the cover check to be a partition
  for (size_t i = 0; i < fx.expected.size(); ++i) {
    for (size_t l = i + 1; l < fx.expected.size(); ++l) {
      if (fx.expected[i].locus && fx.expected[l].locus &&
          gcd(*fx.expected[i].locus, *fx.expected[l].locus).degree() > 0) {
        throw parse_error(id + ": expected loci share a factor");
      }
    }
  }
  return fx;
}

wild_config parse_reference_config(const json& j, long long p) {
  wild_config c{p, kodaira_fiber::from_ade(j.at("fixed").get<std::string>()), {}};
  for (const auto& o : j.at("orbits")) {
    c.orbits.push_back(kodaira_fiber::from_ade(o.get<std::string>()));
  }
  std::sort(c.orbits.begin(), c.orbits.end(), fiber_less);
  return c;
}

}  // namespace

std::string_view builtin_fixture_json() { return detail::kFixtureJson; }

fixture_set parse_fixtures(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("fixture JSON: ") + e.what());
  }
  fixture_set fx;
  try {
    for (const auto& m : root.at("models")) fx.models.push_back(parse_model(m));
    if (root.contains("configurations")) {
      for (const auto& [key, list] : root.at("configurations").items()) {
        long long p = std::stoll(key);
        for (const auto& c : list) {
          fx.configurations[p].push_back(parse_reference_config(c, p));
        }
      }
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("fixture JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    // malformed content (composite p, degree bound, bad keys); model-level
    // domain errors (characteristic, degeneracy) still propagate as is
    throw parse_error(std::string("fixture JSON: ") + e.what());
  }
  return fx;
}

const fixture_set& builtin_fixtures() {
  static const fixture_set fx = parse_fixtures(builtin_fixture_json());
  return fx;
}

std::vector<example_verdict> verify_examples(const fixture_set& fx,
                                             const std::string& only) {
  std::vector<example_verdict> out;
  for (const auto& ex : fx.models) {
    if (!only.empty() && ex.id != only) continue;
    example_verdict v{ex.id, true, {}};
    fiber_configuration cfg = classify_fibration(ex.model);
    std::vector<bool> used(cfg.entries.size(), false);
    for (const auto& x : ex.expected) {
      int degree_sum = 0;
      for (size_t i = 0; i < cfg.entries.size(); ++i) {
        const auto& entry = cfg.entries[i];
        bool here = x.locus
                        ? (!entry.at.is_infinite() &&
                           (*x.locus % entry.at.uniformizer()).is_zero())
                        : entry.at.is_infinite();
        if (!here) continue;
        used[i] = true;
        degree_sum += entry.at.degree();
        if (!(entry.fiber == x.fiber)) {
          v.details.push_back("locus '" + x.label + "': fiber at " +
                              entry.at.pretty() + " is " +
                              entry.fiber.symbol() + " (" + entry.fiber.ade() +
                              "), expected " + x.fiber.ade());
        }
      }
      if (degree_sum != x.count) {
        v.details.push_back("locus '" + x.label + "': " +
                            std::to_string(degree_sum) +
                            " geometric fibers found, expected " +
                            std::to_string(x.count));
      }
    }
    for (size_t i = 0; i < cfg.entries.size(); ++i) {
      if (!used[i]) {
        v.details.push_back("unexpected singular fiber " +
                            cfg.entries[i].fiber.symbol() + " at " +
                            cfg.entries[i].at.pretty());
      }
    }
    if (cfg.euler_sum() != 24) {
      v.details.push_back("Euler numbers sum to " +
                          std::to_string(cfg.euler_sum()) + ", expected 24");
    }
    v.pass = v.details.empty();
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<flagged_config> flag_against_reference(
    const std::vector<wild_config>& found,
    const std::vector<wild_config>& reference) {
  std::vector<flagged_config> out;
  out.reserve(found.size());
  for (const auto& c : found) {
    bool hit = std::any_of(reference.begin(), reference.end(),
                           [&](const wild_config& r) { return r == c; });
    out.push_back({c, hit});
  }
  return out;
}

}  // namespace k3fib
