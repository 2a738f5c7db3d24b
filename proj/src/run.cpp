#include "ewb/cli/run.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include <gmp.h>
#include <mpfr.h>

#include "ewb/exact/bernoulli.hpp"
#include "ewb/lie/group_word.hpp"
#include "ewb/lie/sym_tensor.hpp"
#include "ewb/lie/torsion_residue.hpp"
#include "ewb/modular/horospherical.hpp"
#include "ewb/numeric/polylog.hpp"
#include "ewb/numeric/regulator.hpp"

namespace ewb {

namespace {

constexpr const char* kVersion = "1.0.0";

class Suite {
 public:
  Suite(std::string name, json params) : name_(std::move(name)), params_(std::move(params)) {}

  void add(json params, bool pass, json detail = json::object()) {
    detail["params"] = std::move(params);
    detail["verdict"] = pass ? "pass" : "fail";
    cases_.push_back(std::move(detail));
    (pass ? passed_ : failed_) += 1;
  }

  json finish() const {
    return {{"suite", name_},
            {"params", params_},
            {"cases", cases_},
            {"summary", {{"total", passed_ + failed_}, {"passed", passed_}, {"failed", failed_}}},
            {"verdict", failed_ == 0 ? "pass" : "fail"}};
  }

 private:
  std::string name_;
  json params_;
  json cases_ = json::array();
  int passed_ = 0;
  int failed_ = 0;
};

// Reduction of raw engine output keeps the stream identical on every platform,
// unlike the standard distributions.
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Divisor random_divisor(std::mt19937_64& rng, int N) {
  Divisor d(N);
  for (const auto& t : nonzero_points(N))
    if (draw(rng, 0, 1) == 1) d.set(t, Rational(draw(rng, -9, 9), draw(rng, 1, 9)));
  if (d.is_zero()) d.set({1, 0}, Rational(1));
  return d;
}

const ModMatrix& random_group_element(std::mt19937_64& rng, int N) {
  const auto& g = coset_table(N).group;
  return g[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(g.size()) - 1))];
}

LieElement random_lie(std::mt19937_64& rng, int D, bool in_ideal_of_e1) {
  const auto basis = hall_basis_table(D);
  VectorQ c = zero_vector(basis->size());
  for (int i = 0; i < basis->size(); ++i) {
    if (in_ideal_of_e1 && i == 1) continue;
    if (draw(rng, 0, 2) == 0) c(i) = Rational(draw(rng, -5, 5), draw(rng, 1, 4));
  }
  return LieElement::from_coordinates(D, std::move(c));
}

BigFloat tolerance(const char* text) { return BigFloat::parse(text, 64); }

// ---------------------------------------------------------------------------

json bernoulli_suite(const CommandRequest& r) {
  Suite s("bernoulli", {{"k", r.k}});
  const auto B = bernoulli_polynomial(r.k);
  const bool endpoint = B(Rational(1)) - B(Rational(0)) == Rational(r.k == 1 ? 1 : 0);
  const bool derivative = r.k == 0 || B.derivative() == bernoulli_polynomial(r.k - 1) * Rational(r.k);
  s.add({{"check", "polynomial"}, {"k", r.k}}, B.degree() == r.k && endpoint && derivative,
        {{"coefficients", to_json(B)}});

  const Rational xs[] = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(2, 5)};
  for (int k = 0; k <= 12; ++k)
    for (int m = 1; m <= 6; ++m)
      for (const auto& x : xs) {
        const auto c = distribution_relation_check(k, m, x);
        s.add({{"check", "distribution"}, {"k", k}, {"m", m}, {"x", x.to_string()}}, c.holds,
              {{"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}});
      }
  for (int N = 1; N <= 8; ++N)
    for (int a = 0; a < N; ++a) {
      const auto [lhs, rhs] = residue_generating_series(a, N, 20);
      s.add({{"check", "residue_series"}, {"N", N}, {"a", a}, {"order", 20}}, lhs == rhs,
            {{"constant_term", lhs[0].to_string()}});
    }
  return s.finish();
}

struct HoroChecks {
  bool literal = true;
  bool p_invariant = true;
  bool parity = true;
  bool equivariant = true;
  bool all() const { return literal && p_invariant && parity && equivariant; }
};

HoroChecks horospherical_checks(int k, const Divisor& psi, std::mt19937_64& rng) {
  const int N = psi.modulus();
  const auto& table = coset_table(N);
  const Rational sign(k % 2 == 0 ? 1 : -1);
  HoroChecks c;
  for (const auto& g : table.representatives) {
    const Rational v = horospherical_value(k, psi, g);
    c.literal = c.literal && horospherical_value_literal(k, psi, g) == v;
    for (const auto& u : table.parabolic) c.p_invariant = c.p_invariant && horospherical_value(k, psi, u * g) == v;
    c.parity = c.parity && horospherical_value(k, psi, -g) == sign * v;
  }
  for (int i = 0; i < 20; ++i) {
    const ModMatrix& h = random_group_element(rng, N);
    const Divisor moved = psi.translated(h);
    for (const auto& g : table.representatives)
      c.equivariant = c.equivariant && horospherical_value(k, moved, g) == horospherical_value(k, psi, g * h);
  }
  return c;
}

json horo_detail(const HoroChecks& c) {
  return {{"literal_form_agrees", c.literal},
          {"p_invariant", c.p_invariant},
          {"parity", c.parity},
          {"equivariant", c.equivariant}};
}

json horospherical_suite(const CommandRequest& r) {
  Suite s("horospherical", {{"N", r.N}, {"k", r.k}, {"trials", r.trials}, {"seed", r.seed}});
  std::mt19937_64 rng(r.seed);
  if (r.input) {
    const Divisor psi = load_divisor(*r.input);
    if (psi.modulus() != r.N) throw std::invalid_argument("input divisor has modulus " + std::to_string(psi.modulus()) + ", expected N=" + std::to_string(r.N));
    const auto c = horospherical_checks(r.k, psi, rng);
    json detail = horo_detail(c);
    detail["value"] = to_json(horospherical(r.k, psi));
    detail["divisor"] = to_json(psi);
    s.add({{"check", "input"}}, c.all(), detail);
  }
  for (int t = 0; t < r.trials; ++t) {
    const Divisor psi = random_divisor(rng, r.N);
    const auto c = horospherical_checks(r.k, psi, rng);
    s.add({{"check", "properties"}, {"trial", t}}, c.all(), horo_detail(c));
  }
  const auto rep = surjectivity_report(r.k, r.N);
  s.add({{"check", "surjectivity"}}, rep.surjective_degree_zero(),
        {{"rank_full", rep.rank_full},
         {"rank_degree_zero", rep.rank_degree_zero},
         {"target_dimension", rep.target},
         {"surjective_full", rep.surjective_full()},
         {"surjective_degree_zero", rep.surjective_degree_zero()}});
  return s.finish();
}

json kernel_suite(const CommandRequest& r) {
  Suite s("kernel", {{"N", r.N}, {"k", r.k}});
  const auto rep = surjectivity_report(r.k, r.N);
  const auto n = static_cast<int>(nonzero_points(r.N).size());
  for (bool deg0 : {false, true}) {
    const auto basis = kernel_basis(r.k, r.N, deg0);
    const int expected = deg0 ? (n - 1) - rep.rank_degree_zero : n - rep.rank_full;
    const char* space = deg0 ? "degree_zero" : "full";
    s.add({{"check", "dimension"}, {"space", space}}, static_cast<int>(basis.size()) == expected,
          {{"dimension", basis.size()}, {"expected", expected}});
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& psi = basis[i];
      const bool in_kernel = horospherical(r.k, psi).is_zero();
      const bool degree_ok = !deg0 || psi.degree().is_zero();
      json detail = {{"divisor", to_json(psi)}, {"degree", psi.degree().to_string()}};
      if (r.k >= 1) {
        detail["dir_l"] = to_json(dir_l_coefficients(r.k, psi));
        detail["hodge"] = to_json(hodge_coefficients(r.k, psi));
      }
      s.add({{"check", "kernel_element"}, {"space", space}, {"index", i}}, in_kernel && degree_ok, detail);
    }
  }
  return s.finish();
}

json psi_u_suite(const CommandRequest& r) {
  Suite s("psi-u", {{"N", r.N}, {"k", r.k}, {"u", r.u}});
  const Divisor psi = psi_u(r.k, r.u, r.N);
  const int u = mod(r.u, r.N);
  const bool residue_zero = is_in_isom_minus_infinity(horospherical(r.k, psi));
  const auto dir = dir_l_coefficients(r.k, psi);
  const auto hodge = hodge_coefficients(r.k, psi);
  const std::map<int, Rational> dir_expected{{u, (Rational(r.N).pow(r.k) * factorial(r.k)).inverse()}};
  const std::map<int, Rational> hodge_expected{{u, Rational(1)}};
  s.add({{"check", "psi_u"}},
        residue_zero && dir.coefficients == dir_expected && hodge.coefficients == hodge_expected,
        {{"divisor", to_json(psi)},
         {"degree", psi.degree().to_string()},
         {"residue_zero", residue_zero},
         {"dir_l", to_json(dir)},
         {"hodge", to_json(hodge)}});
  return s.finish();
}

int witt_number(int n) {
  auto mobius = [](int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p != 0) continue;
      m /= p;
      if (m % p == 0) return 0;
      result = -result;
    }
    return m > 1 ? -result : result;
  };
  long sum = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) sum += mobius(d) * (1L << (n / d));
  return static_cast<int>(sum / n);
}

json lie_suite(const CommandRequest& r) {
  const int D = r.D;
  const int N = r.N;
  Suite s("lie-verify", {{"D", D}, {"N", N}, {"seed", r.seed}});
  std::mt19937_64 rng(r.seed);

  {
    std::vector<int> counts(static_cast<std::size_t>(D + 1), 0);
    for (const auto& h : hall_basis(D)) counts[static_cast<std::size_t>(h.degree())] += 1;
    bool ok = true;
    json per_degree = json::array();
    for (int n = 1; n <= D; ++n) {
      ok = ok && counts[static_cast<std::size_t>(n)] == witt_number(n);
      per_degree.push_back(counts[static_cast<std::size_t>(n)]);
    }
    s.add({{"check", "hall_dimensions"}}, ok, {{"per_degree", per_degree}});
  }
  {
    const auto x = LieElement::generator(D, 1);
    const auto y = LieElement::generator(D, 2);
    const auto z = bch(x, y);
    const bool ok = z.coefficient("e1") == Rational(1) && z.coefficient("e2") == Rational(1) &&
                    z.coefficient("[e1,e2]") == Rational(1, 2) && z.coefficient("[e1,[e1,e2]]") == Rational(1, 12) &&
                    z.coefficient("[[e1,e2],e2]") == Rational(1, 12);
    // [[e1,e2],e2] = -[e2,[e1,e2]]: the coefficient of [Y,[X,Y]] is -1/12
    s.add({{"check", "bch_low_degree"}}, ok, {{"bch", to_json(z.homogeneous_part(1) + z.homogeneous_part(2) + z.homogeneous_part(3))}});
  }
  for (int i = 0; i < 20; ++i) {
    const auto U = random_lie(rng, D, false);
    const auto V = random_lie(rng, D, true);
    const auto c = verify_shift_identity(U, V);
    s.add({{"check", "shift_identity"}, {"trial", i}}, c.equal, {{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
  }
  for (auto id : {PolbarIdentity::LogPhi0, PolbarIdentity::MonodromyE2}) {
    const auto c = verify_polbar_identity(id, 0, N, D);
    s.add({{"check", to_string(id)}}, c.equal, {{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
  }
  for (int a = 0; a < N; ++a) {
    const auto c = verify_polbar_identity(PolbarIdentity::MonodromyTorsion, a, N, D);
    s.add({{"check", to_string(PolbarIdentity::MonodromyTorsion)}, {"a", a}}, c.equal,
          {{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
  }
  {
    const auto phi0 = GroupWord::phi0();
    const auto t = monodromy_T(phi0, N);
    s.add({{"check", "monodromy_phi0"}}, log_of_word(t, D) == log_of_word(phi0, D), {{"T_phi0", t.to_string()}});
    const auto e = log_of_word(monodromy_T(GroupWord::gamma2(), N), D).homogeneous_part(1);
    const auto expected = LieElement::generator(D, 2) + LieElement::generator(D, 1) * Rational(N);
    s.add({{"check", "monodromy_degree_one"}}, e == expected, {{"T_e2", to_json(e)}});
  }
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (a == 0 && b == 0) continue;
      const auto u = u_tilde(a, b, N, D);
      const bool leading = u.value.homogeneous_part(2) == bracket(LieElement::generator(D, 1), LieElement::generator(D, 2));
      // e^{-(a/N) z}(1 - e^z)
      const auto expected = PowerSeries::exponential(Rational(-a, N), D) *
                            (PowerSeries::constant(Rational(1), D) - PowerSeries::exponential(Rational(1), D));
      const auto coords = polbar_coordinates(u.value);
      bool polbar = coords.e2.is_zero();
      for (int i = 0; i < D; ++i) polbar = polbar && coords.z_e1[static_cast<std::size_t>(i)] == expected[i];
      const bool invariant = u_tilde_invariant(a, b, N, D);
      s.add({{"check", "u_tilde"}, {"a", a}, {"b", b}}, leading && polbar && invariant,
            {{"leading_term", leading}, {"polbar_form", polbar}, {"invariant", invariant}});
    }
  {
    bool ok = true;
    for (int m = 0; m <= 10; ++m)
      for (int i = 0; i <= m; ++i) {
        const auto x = SymTensor::monomial(i, m - i);
        ok = ok && pr_project(mu_dual(x)) == x;
      }
    for (int k = 0; k <= 10; ++k)
      ok = ok && pr_project(2, SymTensor::monomial(0, k + 1)) == SymTensor::monomial(0, k, Rational(k + 1, k + 2));
    s.add({{"check", "pr_section"}, {"max_weight", 10}}, ok);
  }
  return s.finish();
}

json residue_suite(const CommandRequest& r) {
  if (r.D < r.k + 3)
    throw std::invalid_argument("residue: D=" + std::to_string(r.D) + " too small for k=" + std::to_string(r.k) +
                                ", need D >= k+3");
  Suite s("residue", {{"N", r.N}, {"k", r.k}, {"D", r.D}});
  const int first = r.a.value_or(0);
  const int last = r.a.value_or(r.N - 1);
  for (int a = first; a <= last; ++a) {
    const auto t = residue_at_torsion(r.k, a, r.N, r.D);
    s.add({{"a", a}}, t.equal,
          {{"value", t.lie_value.to_string()},
           {"closed_form", t.closed_form.to_string()},
           {"closed_form_with_B_k", t.alternative.to_string()},
           {"matches_B_k_variant", t.matches_alternative}});
  }
  return s.finish();
}

json regulator_suite(const CommandRequest& r) {
  const long p = r.precision;
  const int digits = report_digits(p);
  Suite s("regulator", {{"N", r.N}, {"k", r.k}, {"precision_bits", p}});
  const BigFloat spot_tol = tolerance(kSpotTolerance);
  const BigFloat tol = tolerance(kResidualTolerance);
  const BigFloat pi = BigFloat::pi(p + 32);
  {
    const auto li = li_at_root_of_unity(2, 1, 2, p);
    const BigFloat expected = -(pi * pi) / BigFloat(12, p + 32);
    const BigFloat diff = hypot(li.re - expected, li.im);
    s.add({{"check", "Li2(-1)"}}, diff < spot_tol,
          {{"value", to_json(li, digits)}, {"closed_form", expected.to_string(digits)}, {"difference", diff.to_string(3)}});
  }
  {
    const auto z = hurwitz_zeta(2, Rational(1, 2), p);
    const BigFloat expected = pi * pi / BigFloat(2, p + 32);
    const BigFloat diff = abs(z.re - expected);
    s.add({{"check", "zeta(2,1/2)"}}, diff < spot_tol,
          {{"value", to_json(z, digits)}, {"closed_form", expected.to_string(digits)}, {"difference", diff.to_string(3)}});
  }
  for (int u = 1; u < r.N; ++u)
    for (const auto& sigma : embeddings(r.N)) {
      const auto c = verify_psi_u_regulator(r.k, u, r.N, sigma, p);
      s.add({{"check", "psi_u_regulator"}, {"u", u}, {"embedding", sigma.j()}}, c.difference + c.error_budget < tol,
            {{"lhs", to_json(c.lhs, digits)},
             {"rhs", to_json(c.rhs, digits)},
             {"difference", c.difference.to_string(3)},
             {"error_budget", c.error_budget.to_string(3)}});
    }
  return s.finish();
}

json kernel_relations_suite(const CommandRequest& r) {
  if (r.k < 1) throw std::invalid_argument("kernel-relations: k must be >= 1");
  const long p = r.precision;
  const int digits = report_digits(p);
  const int twist = r.twist.value_or(r.k);
  Suite s("kernel-relations", {{"N", r.N}, {"k", r.k}, {"precision_bits", p}, {"twist", twist}});
  const BigFloat tol = tolerance(kResidualTolerance);
  const auto basis = kernel_basis(r.k, r.N, false);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& sigma : embeddings(r.N)) {
      const auto res = kernel_relation_residual(r.k, basis[i], sigma, p, twist);
      json detail = {{"k", r.k},
                     {"N", r.N},
                     {"embedding", sigma.j()},
                     {"value_re", res.value.re.to_string(digits)},
                     {"value_im", res.value.im.to_string(digits)},
                     {"residual", res.residual.to_string(3)},
                     {"precision_bits", p},
                     {"error_budget", res.error_budget.to_string(3)}};
      if (twist != r.k + 1) {
        // informational only: the same combination taken modulo R(k+1)
        const auto alt = kernel_relation_residual(r.k, basis[i], sigma, p, r.k + 1);
        detail["diagnostic_residual_mod_R(k+1)"] = alt.residual.to_string(3);
      }
      s.add({{"kernel_index", i}, {"embedding", sigma.j()}}, res.residual + res.error_budget < tol, detail);
    }
  if (!basis.empty()) {
    Divisor perturbed = basis.front();
    perturbed.add({1, 0}, Rational(1));
    const EmbeddingIndex sigma(1, r.N);
    const auto res = li_combination_residual(r.k, perturbed, sigma, p, twist);
    s.add({{"check", "negative_control"}}, tolerance(kControlFloor) < res.residual - res.error_budget,
          {{"residual", res.residual.to_string(3)}, {"error_budget", res.error_budget.to_string(3)}});
  }
  return s.finish();
}

json consistency_suite(const CommandRequest& r) {
  Suite s("consistency", {{"N", r.N}, {"k", r.k}, {"seed", r.seed}});
  std::mt19937_64 rng(r.seed);
  for (int t = 0; t < 20; ++t) {
    const Divisor psi = random_divisor(rng, r.N);
    bool ok = true;
    for (const auto& g : coset_representatives(r.N)) ok = ok && residue_consistency_check(r.k, psi, g).holds;
    s.add({{"trial", t}}, ok, {{"support_size", psi.terms().size()}});
  }
  return s.finish();
}

using SuiteFn = std::function<json(const CommandRequest&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"bernoulli", bernoulli_suite},       {"horospherical", horospherical_suite},
      {"kernel", kernel_suite},             {"psi-u", psi_u_suite},
      {"lie-verify", lie_suite},            {"residue", residue_suite},
      {"regulator", regulator_suite},       {"kernel-relations", kernel_relations_suite},
      {"consistency", consistency_suite},
  };
  return table;
}

json request_params(const CommandRequest& r) {
  json p = {{"N", r.N}, {"k", r.k}, {"D", r.D}, {"u", r.u}, {"precision_bits", r.precision},
            {"trials", r.trials}, {"seed", r.seed}};
  if (r.a) p["a"] = *r.a;
  if (r.twist) p["twist"] = *r.twist;
  if (r.input) p["input"] = r.input->generic_string();
  return p;
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, _] : suites()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

void validate(const CommandRequest& r) {
  const auto& names = subcommand_names();
  if (std::find(names.begin(), names.end(), r.subcommand) == names.end())
    throw std::invalid_argument("unknown subcommand '" + r.subcommand + "'");
  if (r.N < 3 || r.N > 12) throw std::invalid_argument("N must lie in [3, 12], got " + std::to_string(r.N));
  if (r.k < 0 || r.k > 30) throw std::invalid_argument("k must lie in [0, 30], got " + std::to_string(r.k));
  if (r.D < 3 || r.D > kMaxTruncation)
    throw std::invalid_argument("D must lie in [3, " + std::to_string(kMaxTruncation) + "], got " + std::to_string(r.D));
  if (r.precision < 64 || r.precision > 4096)
    throw std::invalid_argument("precision must lie in [64, 4096] bits, got " + std::to_string(r.precision));
  if (r.trials < 1 || r.trials > 10000) throw std::invalid_argument("trials must lie in [1, 10000]");
  const bool needs_positive_k = r.subcommand == "psi-u" || r.subcommand == "regulator" ||
                                r.subcommand == "kernel-relations" || r.subcommand == "all";
  if (needs_positive_k && r.k < 1) throw std::invalid_argument(r.subcommand + " requires k >= 1");
  if ((r.subcommand == "psi-u" || r.subcommand == "all") && mod(r.u, r.N) == 0)
    throw std::invalid_argument("u must be nonzero mod N");
  if ((r.subcommand == "residue" || r.subcommand == "all") && r.D < r.k + 3)
    throw std::invalid_argument("residue requires D >= k+3");
  if (r.a && (*r.a < 0 || *r.a >= r.N)) throw std::invalid_argument("a must lie in [0, N)");
  if (r.input && r.subcommand != "horospherical" && r.subcommand != "all")
    throw std::invalid_argument("--input is only used by the horospherical suite");
}

RunResult run(const CommandRequest& r) {
  validate(r);
  json report = {{"command", r.subcommand}, {"params", request_params(r)}, {"toolchain", toolchain_stamp()}};
  bool pass = true;
  if (r.subcommand == "all") {
    json list = json::array();
    int passed = 0;
    for (const auto& [name, fn] : suites()) {
      json suite = fn(r);
      const bool ok = suite["verdict"] == "pass";
      passed += ok ? 1 : 0;
      pass = pass && ok;
      list.push_back(std::move(suite));
    }
    report["suites"] = std::move(list);
    report["summary"] = {{"suites", suites().size()}, {"passed", passed}, {"failed", static_cast<int>(suites().size()) - passed}};
  } else {
    for (const auto& [name, fn] : suites())
      if (name == r.subcommand) {
        json suite = fn(r);
        pass = suite["verdict"] == "pass";
        report["suites"] = json::array({std::move(suite)});
      }
  }
  report["verdict"] = pass ? "pass" : "fail";
  return {std::move(report), pass ? kExitPass : kExitVerificationFailure};
}

std::string toolchain_stamp() {
  return std::string("ewb ") + kVersion + "; gmp " + gmp_version + "; mpfr " + mpfr_get_version();
}

}  // namespace ewb
