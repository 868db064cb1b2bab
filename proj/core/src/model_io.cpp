#include "k3fib/model_io.hpp"

#include <istream>
#include <map>
#include <optional>
#include <sstream>

#include "k3fib/errors.hpp"

namespace k3fib {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& s, const std::string& context) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw parse_error("");
    return v;
  } catch (const std::exception&) {
    throw parse_error("bad integer '" + s + "' in " + context);
  }
}

std::vector<long long> parse_coeff_list(const std::string& s,
                                        const std::string& key) {
  std::string t = strip(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw parse_error("value of " + key + " must be a [..] coefficient list");
  }
  std::string body = strip(t.substr(1, t.size() - 2));
  std::vector<long long> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_int(strip(item), key));
  }
  return out;
}

}  // namespace

weierstrass_model parse_model_record(std::istream& in) {
  std::optional<long long> p;
  std::optional<int> n;
  std::map<std::string, std::vector<long long>> coeffs;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw parse_error("expected 'key = value', got '" + t + "'");
    }
    std::string key = strip(t.substr(0, eq));
    std::string value = strip(t.substr(eq + 1));
    if (key == "p") {
      p = parse_int(value, "p");
    } else if (key == "n") {
      n = static_cast<int>(parse_int(value, "n"));
    } else if (key == "a1" || key == "a2" || key == "a3" || key == "a4" ||
               key == "a6") {
      coeffs[key] = parse_coeff_list(value, key);
    } else {
      throw parse_error("unknown key '" + key + "'");
    }
  }
  if (!p) throw parse_error("missing p");
  if (!n) throw parse_error("missing n");
  if (!is_prime(*p)) throw parse_error("p = " + std::to_string(*p) + " is not prime");
  prime_field k(*p);
  auto get = [&](const char* key) {
    auto it = coeffs.find(key);
    return it == coeffs.end() ? poly(k) : poly(k, it->second);
  };
  try {
    return weierstrass_model(k, get("a1"), get("a2"), get("a3"), get("a4"),
                             get("a6"), *n);
  } catch (const std::invalid_argument& e) {
    // degree overflow etc. counts as malformed input
    throw parse_error(e.what());
  }
}

weierstrass_model parse_model_record(const std::string& text) {
  std::istringstream in(text);
  return parse_model_record(in);
}

std::string print_model_record(const weierstrass_model& m) {
  std::string s;
  s += "p = " + std::to_string(m.p()) + "\n";
  s += "n = " + std::to_string(m.n()) + "\n";
  s += "a1 = " + m.a1().coeff_string() + "\n";
  s += "a2 = " + m.a2().coeff_string() + "\n";
  s += "a3 = " + m.a3().coeff_string() + "\n";
  s += "a4 = " + m.a4().coeff_string() + "\n";
  s += "a6 = " + m.a6().coeff_string() + "\n";
  return s;
}

}  // namespace k3fib
