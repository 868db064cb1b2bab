#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "k3fib/enumerate.hpp"
#include "k3fib/errors.hpp"
#include "k3fib/fixtures.hpp"
#include "k3fib/height.hpp"
#include "k3fib/model_io.hpp"
#include "k3fib/rational.hpp"
#include "k3fib/tate.hpp"

namespace k3fib::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsage = 2;
constexpr int kBadCharacteristic = 3;
constexpr int kDegenerate = 4;

fixture_set load_fixture_set(const std::string& path) {
  if (path.empty()) return builtin_fixtures();
  std::ifstream f(path);
  if (!f) throw parse_error("cannot open fixture file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_fixtures(ss.str());
}

// ---- analyze --------------------------------------------------------------

int cmd_analyze(const std::string& input, bool json_out, std::istream& in,
                std::ostream& out) {
  weierstrass_model m = [&] {
    if (input == "-") return parse_model_record(in);
    std::ifstream f(input);
    if (!f) throw parse_error("cannot open '" + input + "'");
    return parse_model_record(f);
  }();
  fiber_configuration cfg = classify_fibration(m);
  bool k3 = m.n() == 2 && cfg.euler_sum() == 24;
  if (json_out) {
    json fibers = json::array();
    for (const auto& e : cfg.entries) {
      fibers.push_back({{"place", e.at.key()},
                        {"degree", e.at.degree()},
                        {"kodaira", e.fiber.symbol()},
                        {"ade", e.fiber.ade()},
                        {"e", e.fiber.euler()},
                        {"m", e.fiber.components()}});
    }
    json doc{{"p", m.p()},
             {"n", m.n()},
             {"fibers", std::move(fibers)},
             {"euler_sum", cfg.euler_sum()},
             {"k3", k3}};
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "p = " << m.p() << ", n = " << m.n() << "\n";
  out << "singular fibers:\n";
  for (const auto& e : cfg.entries) {
    out << "  " << e.fiber.symbol() << " at " << e.at.pretty() << " ("
        << e.fiber.ade() << "): degree " << e.at.degree() << ", e = "
        << e.fiber.euler() << ", m = " << e.fiber.components() << "\n";
  }
  out << "Euler sum: " << cfg.euler_sum() << (k3 ? " (K3)" : "") << "\n";
  return kOk;
}

// ---- verify-examples -------------------------------------------------------

int cmd_verify(const std::string& only, const std::string& fixture_path,
               bool json_out, std::ostream& out) {
  fixture_set fx = load_fixture_set(fixture_path);
  auto verdicts = verify_examples(fx, only);
  if (verdicts.empty()) {
    throw parse_error(only.empty() ? "fixture set has no models"
                                   : "no example with id '" + only + "'");
  }
  bool all = true;
  for (const auto& v : verdicts) all = all && v.pass;
  if (json_out) {
    json rows = json::array();
    for (const auto& v : verdicts) {
      rows.push_back({{"id", v.id}, {"pass", v.pass}, {"details", v.details}});
    }
    out << json{{"results", std::move(rows)}, {"all_pass", all}}.dump(2)
        << "\n";
  } else {
    for (const auto& v : verdicts) {
      out << v.id << ": " << (v.pass ? "PASS" : "FAIL") << "\n";
      for (const auto& d : v.details) out << "    " << d << "\n";
    }
    out << (all ? "all examples verified" : "verification failed") << "\n";
  }
  return all ? kOk : kVerifyFailure;
}

// ---- enumerate ---------------------------------------------------------

int cmd_enumerate(long long p, const std::string& fixture_path, bool json_out,
                  std::ostream& out) {
  fixture_set fx = load_fixture_set(fixture_path);
  auto found = enumerate_wild_configs(p);
  std::vector<wild_config> reference;
  if (auto it = fx.configurations.find(p); it != fx.configurations.end()) {
    reference = it->second;
  }
  auto flagged = flag_against_reference(found, reference);
  if (json_out) {
    json rows = json::array();
    for (const auto& f : flagged) {
      json orbits = json::array();
      for (const auto& o : f.config.orbits) orbits.push_back(o.ade());
      rows.push_back({{"display", f.config.display()},
                      {"fixed", f.config.fixed.ade()},
                      {"orbits", std::move(orbits)},
                      {"euler_sum", f.config.euler_sum()},
                      {"trivial_lattice_rank", f.config.trivial_lattice_rank()},
                      {"flag", f.in_reference ? "paper" : "extra"}});
    }
    out << json{{"p", p}, {"count", flagged.size()}, {"configs", std::move(rows)}}
               .dump(2)
        << "\n";
  } else {
    out << "admissible configurations for p = " << p << ":\n";
    for (const auto& f : flagged) {
      out << "  " << f.config.display() << "  ["
          << (f.in_reference ? "paper" : "extra") << "]\n";
    }
    out << flagged.size() << " total\n";
  }
  return kOk;
}

// ---- bounds ---------------------------------------------------------------

int cmd_bounds(long long max_p, int max_n, bool json_out, std::ostream& out) {
  const long long contribution_primes[] = {5, 7, 11, 13, 17, 19, 23};
  rational p3 = max_contribution_sum_p3();
  auto scan = torsion_bound_scan(max_p);
  auto pairs = oguiso_pairs(max_p, max_n);
  bool below6 = p3 < rational(6);
  std::vector<std::pair<long long, rational>> maxima;
  for (long long q : contribution_primes) {
    maxima.emplace_back(q, max_contribution_sum(q));
    below6 = below6 && maxima.back().second < rational(6);
  }
  if (json_out) {
    json jm = json::array();
    for (const auto& [q, r] : maxima) {
      jm.push_back({{"p", q}, {"max", to_string(r)}});
    }
    json js = json::array();
    for (const auto& row : scan) {
      js.push_back({{"p", row.p},
                    {"feasible", row.feasible},
                    {"case_small_additive", row.case_small_additive},
                    {"case_large_additive", row.case_large_additive},
                    {"note", row.note}});
    }
    json jp = json::array();
    for (const auto& [q, nn] : pairs) jp.push_back({q, nn});
    out << json{{"contribution_maxima", std::move(jm)},
                {"p3_max", to_string(p3)},
                {"all_below_6", below6},
                {"torsion_scan", std::move(js)},
                {"orbit_pairs", std::move(jp)}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "torsion contribution maxima (bound: < 6):\n";
  for (const auto& [q, r] : maxima) {
    out << "  p = " << q << ": " << to_string(r) << "\n";
  }
  out << "  p = 3 variant: " << to_string(p3) << "\n";
  out << "torsion feasibility by characteristic:\n";
  for (const auto& row : scan) {
    out << "  p = " << row.p << ": "
        << (row.feasible ? "feasible" : "infeasible") << " (" << row.note
        << ")\n";
  }
  out << "admissible (order, orbit count) pairs up to (" << max_p << ", "
      << max_n << "): ";
  for (size_t i = 0; i < pairs.size(); ++i) {
    out << (i ? ", " : "") << "(" << pairs[i].first << ", " << pairs[i].second
        << ")";
  }
  out << "\n";
  return kOk;
}

// ---- height -----------------------------------------------------------------

fiber_meeting parse_meeting(const std::string& spec) {
  size_t c1 = spec.find(':');
  size_t c2 = c1 == std::string::npos ? std::string::npos
                                      : spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw parse_error("--met expects TYPE:component:multiplicity, got '" +
                      spec + "'");
  }
  try {
    kodaira_fiber f = kodaira_fiber::from_symbol(spec.substr(0, c1));
    int k = std::stoi(spec.substr(c1 + 1, c2 - c1 - 1));
    int mult = std::stoi(spec.substr(c2 + 1));
    return {f, k, mult};
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("bad --met value '" + spec + "'");
  }
}

int cmd_height(long long po, const std::vector<std::string>& met_specs,
               bool json_out, std::ostream& out) {
  section_incidence s{po, {}};
  for (const auto& spec : met_specs) s.met.push_back(parse_meeting(spec));
  rational h = height_pairing(s);
  if (json_out) {
    json met = json::array();
    for (const auto& m : s.met) {
      met.push_back({{"fiber", m.fiber.symbol()},
                     {"component", m.component},
                     {"contr", to_string(contr(m.fiber, m.component))},
                     {"multiplicity", m.multiplicity}});
    }
    out << json{{"po", po},
                {"met", std::move(met)},
                {"height", to_string(h)},
                {"torsion_candidate", is_torsion_candidate(s)}}
               .dump(2)
        << "\n";
  } else {
    out << "height = " << to_string(h) << "\n";
    out << "torsion candidate: " << (is_torsion_candidate(s) ? "yes" : "no")
        << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"exact singular-fiber analysis of elliptic K3 surfaces over F_p"};
  app.set_version_flag("--version", "k3fib 1.0.0");
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand(
      "analyze", "classify the singular fibers of a Weierstrass model record");
  std::string analyze_input = "-";
  bool analyze_json = false;
  analyze->add_option("input", analyze_input,
                      "model record file, or '-' for stdin");
  analyze->add_flag("--json", analyze_json, "emit JSON");

  auto* verify = app.add_subcommand(
      "verify-examples", "check the bundled worked examples end to end");
  std::string verify_only, verify_fixture;
  bool verify_json = false;
  verify->add_option("--only", verify_only, "restrict to one example id");
  verify->add_option("--fixture", verify_fixture,
                     "alternate fixture JSON file");
  verify->add_flag("--json", verify_json, "emit JSON");

  auto* enumerate = app.add_subcommand(
      "enumerate", "admissible wild fiber configurations for p in {5, 7, 11}");
  long long enum_p = 0;
  std::string enum_fixture;
  bool enum_json = false;
  enumerate->add_option("--p", enum_p, "characteristic")->required();
  enumerate->add_option("--fixture", enum_fixture,
                        "alternate fixture JSON file");
  enumerate->add_flag("--json", enum_json, "emit JSON");

  auto* bounds = app.add_subcommand(
      "bounds", "exact contribution maxima, torsion feasibility, orbit pairs");
  long long bounds_max_p = 50;
  int bounds_max_n = 10;
  bool bounds_json = false;
  bounds->add_option("--max-p", bounds_max_p, "largest prime to scan");
  bounds->add_option("--max-n", bounds_max_n, "largest orbit count");
  bounds->add_flag("--json", bounds_json, "emit JSON");

  auto* height = app.add_subcommand(
      "height", "Shioda height of a section from its incidence data");
  long long height_po = 0;
  std::vector<std::string> height_met;
  bool height_json = false;
  height->add_option("--po", height_po, "intersection number P.O");
  height->add_option("--met", height_met,
                     "fiber meeting TYPE:component:multiplicity (repeatable)");
  height->add_flag("--json", height_json, "emit JSON");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("k3fib");
  for (const auto& a : args) argv_store.push_back(a);
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (analyze->parsed()) {
      return cmd_analyze(analyze_input, analyze_json, in, out);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_only, verify_fixture, verify_json, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(enum_p, enum_fixture, enum_json, out);
    }
    if (bounds->parsed()) {
      return cmd_bounds(bounds_max_p, bounds_max_n, bounds_json, out);
    }
    if (height->parsed()) {
      return cmd_height(height_po, height_met, height_json, out);
    }
  } catch (const unsupported_characteristic& e) {
    err << "error: " << e.what() << "\n";
    return kBadCharacteristic;
  } catch (const degenerate_model& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace k3fib::cli
