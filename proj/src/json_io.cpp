#include "ewb/io/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ewb {

namespace {

std::string join(const std::vector<std::string>& issues) {
  std::string s = "malformed input";
  for (const auto& i : issues) s += "\n  " + i;
  return s;
}

struct Collector {
  std::vector<std::string> issues;
  void add(const std::string& pointer, const std::string& message) {
    issues.push_back((pointer.empty() ? std::string("/") : pointer) + ": " + message);
  }
  void throw_if_any() const {
    if (!issues.empty()) throw SchemaError(issues);
  }
};

bool require_int(Collector& c, const json& obj, const std::string& key, const std::string& ptr, int& out) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    c.add(ptr, "missing field '" + key + "'");
    return false;
  }
  if (!it->is_number_integer()) {
    c.add(ptr + "/" + key, "expected an integer");
    return false;
  }
  out = it->get<int>();
  return true;
}

bool require_rational(Collector& c, const json& obj, const std::string& key, const std::string& ptr, Rational& out) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    c.add(ptr, "missing field '" + key + "'");
    return false;
  }
  if (!it->is_string()) {
    c.add(ptr + "/" + key, "expected a rational string \"p/q\"");
    return false;
  }
  try {
    out = Rational::parse(it->get<std::string>());
  } catch (const std::exception& e) {
    c.add(ptr + "/" + key, e.what());
    return false;
  }
  return true;
}

}  // namespace

SchemaError::SchemaError(std::vector<std::string> issues) : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

json to_json(const Divisor& d) {
  json support = json::array();
  for (const auto& [t, c] : d.terms()) support.push_back({{"t1", t.t1}, {"t2", t.t2}, {"coeff", c.to_string()}});
  return {{"N", d.modulus()}, {"support", support}};
}

Divisor divisor_from_json(const json& j) {
  Collector c;
  if (!j.is_object()) c.add("", "expected an object");
  c.throw_if_any();
  int N = 0;
  if (require_int(c, j, "N", "", N) && N < 3) c.add("/N", "modulus must be >= 3");
  const auto sup = j.find("support");
  if (sup == j.end())
    c.add("", "missing field 'support'");
  else if (!sup->is_array())
    c.add("/support", "expected an array");
  c.throw_if_any();

  Divisor d(N);
  std::set<TorsionPoint> seen;
  for (std::size_t i = 0; i < sup->size(); ++i) {
    const std::string ptr = "/support/" + std::to_string(i);
    const json& e = (*sup)[i];
    if (!e.is_object()) {
      c.add(ptr, "expected an object");
      continue;
    }
    int t1 = 0, t2 = 0;
    Rational q;
    const bool ok1 = require_int(c, e, "t1", ptr, t1);
    const bool ok2 = require_int(c, e, "t2", ptr, t2);
    const bool ok3 = require_rational(c, e, "coeff", ptr, q);
    if (ok1 && (t1 < 0 || t1 >= N)) c.add(ptr + "/t1", "must lie in [0, " + std::to_string(N) + ")");
    if (ok2 && (t2 < 0 || t2 >= N)) c.add(ptr + "/t2", "must lie in [0, " + std::to_string(N) + ")");
    if (!(ok1 && ok2 && ok3) || t1 < 0 || t1 >= N || t2 < 0 || t2 >= N) continue;
    if (t1 == 0 && t2 == 0) {
      c.add(ptr, "support must exclude the point (0,0)");
      continue;
    }
    if (!seen.insert({t1, t2}).second) {
      c.add(ptr, "duplicate point (" + std::to_string(t1) + "," + std::to_string(t2) + ")");
      continue;
    }
    d.set({t1, t2}, q);
  }
  c.throw_if_any();
  return d;
}

json to_json(const ModMatrix& g) { return {{"N", g.modulus()}, {"rows", {{g.a(), g.b()}, {g.c(), g.d()}}}}; }

ModMatrix matrix_from_json(const json& j) {
  Collector c;
  if (!j.is_object()) c.add("", "expected an object");
  c.throw_if_any();
  int N = 0;
  require_int(c, j, "N", "", N);
  const auto rows = j.find("rows");
  int e[4] = {0, 0, 0, 0};
  if (rows == j.end()) {
    c.add("", "missing field 'rows'");
  } else if (!rows->is_array() || rows->size() != 2) {
    c.add("/rows", "expected a 2x2 array");
  } else {
    for (std::size_t r = 0; r < 2; ++r) {
      const json& row = (*rows)[r];
      if (!row.is_array() || row.size() != 2) {
        c.add("/rows/" + std::to_string(r), "expected an array of 2 integers");
        continue;
      }
      for (std::size_t k = 0; k < 2; ++k) {
        if (!row[k].is_number_integer())
          c.add("/rows/" + std::to_string(r) + "/" + std::to_string(k), "expected an integer");
        else
          e[r * 2 + k] = row[k].get<int>();
      }
    }
  }
  c.throw_if_any();
  try {
    return ModMatrix::make(N, e[0], e[1], e[2], e[3]);
  } catch (const std::invalid_argument& ex) {
    throw SchemaError({"/: " + std::string(ex.what())});
  }
}

json to_json(const IsomFunction& f) {
  json out = json::array();
  const auto& reps = coset_representatives(f.modulus());
  for (std::size_t i = 0; i < reps.size(); ++i)
    out.push_back({{"representative", to_json(reps[i])}, {"value", f.values()[i].to_string()}});
  return out;
}

json to_json(const LieElement& x) {
  json terms = json::array();
  for (int i = 0; i < x.basis().size(); ++i)
    if (!x.coefficient(i).is_zero())
      terms.push_back({{"hall", x.basis().bracket_string(i)}, {"coeff", x.coefficient(i).to_string()}});
  return {{"D", x.truncation()}, {"terms", terms}};
}

LieElement lie_from_json(const json& j) {
  Collector c;
  if (!j.is_object()) c.add("", "expected an object");
  c.throw_if_any();
  int D = 0;
  if (require_int(c, j, "D", "", D) && (D < 1 || D > kMaxTruncation))
    c.add("/D", "must lie in [1, " + std::to_string(kMaxTruncation) + "]");
  const auto terms = j.find("terms");
  if (terms == j.end())
    c.add("", "missing field 'terms'");
  else if (!terms->is_array())
    c.add("/terms", "expected an array");
  c.throw_if_any();
  LieElement x = LieElement::zero(D);
  VectorQ coords = x.coordinates();
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const std::string ptr = "/terms/" + std::to_string(i);
    const json& e = (*terms)[i];
    if (!e.is_object() || !e.contains("hall") || !e["hall"].is_string()) {
      c.add(ptr, "expected an object with string field 'hall'");
      continue;
    }
    Rational q;
    if (!require_rational(c, e, "coeff", ptr, q)) continue;
    try {
      coords(x.basis().parse_bracket(e["hall"].get<std::string>())) += q;
    } catch (const std::invalid_argument& ex) {
      c.add(ptr + "/hall", ex.what());
    }
  }
  c.throw_if_any();
  return LieElement::from_coordinates(D, std::move(coords));
}

json to_json(const PolbarCoordinates& p) {
  json z = json::array();
  for (const auto& c : p.z_e1) z.push_back(c.to_string());
  return {{"e2", p.e2.to_string()}, {"z_e1", z}};
}

json to_json(const RationalPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

namespace {

template <typename Combo>
json combo_json(const Combo& c, const std::string& symbol) {
  json terms = json::array();
  for (const auto& [u, q] : c.coefficients)
    terms.push_back({{"u", u}, {"coeff", q.to_string()}, {"symbol", symbol + "(zeta^" + std::to_string(u) + ")"}});
  return {{"N", c.N}, {"k", c.k}, {"terms", terms}, {"residue_zero_hypothesis", c.residue_zero_hypothesis},
          {"warnings", c.warnings}};
}

}  // namespace

json to_json(const CyclotomicCombo& c) { return combo_json(c, "c^" + std::to_string(c.k)); }

json to_json(const LiCombo& c) { return combo_json(c, "Li_" + std::to_string(c.k + 1)); }

int report_digits(long precision_bits) { return decimal_digits(precision_bits); }

json to_json(const BigComplex& z, int digits) {
  return {{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}, {"error_budget", z.error.to_string(3)}};
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError({"/: cannot read file '" + path.string() + "'"});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError({"/: " + std::string(e.what())});
  }
}

Divisor load_divisor(const std::filesystem::path& path) { return divisor_from_json(load_json(path)); }

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

void save_report(const json& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << dump_report(report);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace ewb
