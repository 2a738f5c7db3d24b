// Acceptance runner: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ewb/cli/run.hpp"
#include "ewb/exact/bernoulli.hpp"
#include "ewb/lie/torsion_residue.hpp"
#include "ewb/modular/horospherical.hpp"
#include "ewb/numeric/polylog.hpp"
#include "ewb/numeric/regulator.hpp"
#include "oracle.hpp"

using namespace ewb;

namespace {

constexpr long kBits = 200;
const char* const kResidual = "1e-35";
const char* const kSpot = "1e-40";
const char* const kControl = "1e-3";

BigFloat tol(const char* s) { return BigFloat::parse(s, 64); }

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<std::string> info;

bool suite_passes(const CommandRequest& r) { return run(r).report["verdict"] == "pass"; }

CommandRequest request(const std::string& sub, int N, int k) {
  CommandRequest r;
  r.subcommand = sub;
  r.N = N;
  r.k = k;
  return r;
}

Outcome criterion1() {
  int bad = 0;
  const Rational xs[] = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(2, 5)};
  for (int k = 0; k <= 12; ++k)
    for (int m = 1; m <= 6; ++m)
      for (const auto& x : xs) bad += distribution_relation_check(k, m, x).holds ? 0 : 1;
  for (int N = 1; N <= 8; ++N)
    for (int a = 0; a < N; ++a) {
      const auto [l, r] = residue_generating_series(a, N, 20);
      bad += l == r ? 0 : 1;
    }
  return {bad == 0, std::to_string(bad) + " failing identities"};
}

Outcome criterion2() {
  bool props = true, surj = true;
  std::string ranks;
  for (int N : {3, 4, 5})
    for (int k = 0; k <= 4; ++k) {
      CommandRequest r = request("horospherical", N, k);
      r.trials = 50;
      const json suite = run(r).report["suites"][0];
      for (const auto& c : suite["cases"]) {
        if (c["params"]["check"] == "surjectivity") {
          const bool ok = c["verdict"] == "pass";
          surj = surj && ok;
          if (!ok)
            ranks += " N=" + std::to_string(N) + ",k=" + std::to_string(k) + ":" +
                     std::to_string(c["rank_degree_zero"].get<int>()) + "/" + std::to_string(c["target_dimension"].get<int>());
          info.push_back("criterion 2: N=" + std::to_string(N) + " k=" + std::to_string(k) +
                         " rank(full)=" + std::to_string(c["rank_full"].get<int>()) +
                         " rank(degree 0)=" + std::to_string(c["rank_degree_zero"].get<int>()) +
                         " target=" + std::to_string(c["target_dimension"].get<int>()));
        } else {
          props = props && c["verdict"] == "pass";
        }
      }
    }
  return {props && surj, std::string("invariance/parity/equivariance ") + (props ? "exact" : "FAILED") +
                             "; surjectivity " + (surj ? "ok" : "rank deficit at" + ranks)};
}

Outcome criterion3() {
  int bad = 0;
  for (int N = 3; N <= 7; ++N)
    for (int u = 1; u < N; ++u)
      for (int k = 1; k <= 4; ++k) bad += is_in_isom_minus_infinity(horospherical(k, psi_u(k, u, N))) ? 0 : 1;
  return {bad == 0, std::to_string(bad) + " failing (N,u,k)"};
}

Outcome criterion4() {
  std::mt19937_64 rng(20240601);
  const int D = 6;
  int bad_shift = 0;
  const auto basis = hall_basis_table(D);
  for (int t = 0; t < 20; ++t) {
    VectorQ u = zero_vector(basis->size()), v = zero_vector(basis->size());
    for (int i = 0; i < basis->size(); ++i) {
      if (rng() % 3 == 0) u(i) = Rational(static_cast<std::int64_t>(rng() % 11) - 5, 1 + static_cast<std::int64_t>(rng() % 4));
      if (i != 1 && rng() % 3 == 0) v(i) = Rational(static_cast<std::int64_t>(rng() % 11) - 5, 1 + static_cast<std::int64_t>(rng() % 4));
    }
    bad_shift += verify_shift_identity(LieElement::from_coordinates(D, u), LieElement::from_coordinates(D, v)).equal ? 0 : 1;
  }
  int bad_polbar = 0;
  for (int N : {3, 4, 5}) {
    bad_polbar += verify_polbar_identity(PolbarIdentity::LogPhi0, 0, N, 8).equal ? 0 : 1;
    bad_polbar += verify_polbar_identity(PolbarIdentity::MonodromyE2, 0, N, 8).equal ? 0 : 1;
    for (int a = 0; a < N; ++a) bad_polbar += verify_polbar_identity(PolbarIdentity::MonodromyTorsion, a, N, 8).equal ? 0 : 1;
  }
  using namespace ewb::oracle;
  const Poly X{{"X", Rational(1)}}, Y{{"Y", Rational(1)}};
  const Poly z = series_log(mul(series_exp(X, 3), series_exp(Y, 3), 3), 3);
  const auto lie = bch(LieElement::generator(3, 1), LieElement::generator(3, 2));
  // [X,[X,Y]] contributes XXY once; -[Y,[X,Y]] contributes XYY once
  const Rational xxy = z.at("XXY"), yxy = -z.at("XYY");
  const bool bch_ok = xxy == Rational(1, 12) && yxy == Rational(-1, 12) &&
                      lie.coefficient("[e1,[e1,e2]]") == xxy && -lie.coefficient("[[e1,e2],e2]") == yxy;
  return {bad_shift == 0 && bad_polbar == 0 && bch_ok,
          "shift identity failures " + std::to_string(bad_shift) + ", polbar identity failures " + std::to_string(bad_polbar) + ", BCH " +
              xxy.to_string() + " " + yxy.to_string()};
}

Outcome criterion5() {
  int bad = 0, alt = 0;
  for (int k = 0; k <= 5; ++k)
    for (int N = 1; N <= 7; ++N)
      for (int a = 0; a < N; ++a) {
        const auto r = residue_at_torsion(k, a, N, k + 3);
        bad += r.lie_value == r.closed_form ? 0 : 1;
        alt += r.matches_alternative ? 1 : 0;
      }
  const Rational s1 = residue_at_torsion(1, 1, 3, 4).lie_value;
  const Rational s0 = residue_at_torsion(0, 1, 3, 3).lie_value;
  info.push_back("criterion 5: the B_k variant of the closed form agrees in " + std::to_string(alt) + " cases");
  return {bad == 0 && s1 == Rational(-1, 27) && s0 == Rational(1, 12),
          std::to_string(bad) + " mismatches; spot values " + s1.to_string() + ", " + s0.to_string()};
}

Outcome criterion6() {
  bool ok = true;
  for (int N : {3, 4})
    for (int k = 0; k <= 3; ++k) ok = ok && suite_passes(request("consistency", N, k));
  return {ok, ok ? "exact" : "mismatch"};
}

Outcome criterion7() {
  const BigFloat spot = tol(kSpot);
  const auto li = li_at_root_of_unity(2, 1, 2, kBits);
  const BigFloat li_err = hypot(li.re + oracle::eta(2, kBits + 64), li.im);
  const auto z = hurwitz_zeta(2, Rational(1, 2), kBits);
  // zeta(2,1/2) = 3 zeta(2) = 6 eta(2)
  const BigFloat z_err = abs(z.re - oracle::eta(2, kBits + 64) * BigFloat(6, kBits));
  BigFloat worst(0, 64);
  for (int N : {3, 5})
    for (int k : {1, 2})
      for (int u = 1; u < N; ++u)
        for (const auto& sigma : embeddings(N)) {
          const auto c = verify_psi_u_regulator(k, u, N, sigma, kBits);
          worst = max(worst, c.difference + c.error_budget);
        }
  return {li_err < spot && z_err < spot && worst < tol(kResidual),
          "Li2(-1) err " + li_err.to_string(3) + ", zeta(2,1/2) err " + z_err.to_string(3) + ", psi_u regulator max " +
              worst.to_string(3)};
}

Outcome criterion8() {
  const BigFloat limit = tol(kResidual);
  BigFloat worst(0, 64), worst_alt(0, 64), weakest_control(1000, 64);
  int failing = 0, total = 0;
  for (int N : {3, 4, 5})
    for (int k = 1; k <= 3; ++k) {
      const auto basis = kernel_basis(k, N, false);
      for (const auto& psi : basis)
        for (const auto& sigma : embeddings(N)) {
          const auto r = kernel_relation_residual(k, psi, sigma, kBits);
          const BigFloat bound = r.residual + r.error_budget;
          worst = max(worst, bound);
          ++total;
          failing += bound < limit ? 0 : 1;
          const auto alt = kernel_relation_residual(k, psi, sigma, kBits, k + 1);
          worst_alt = max(worst_alt, alt.residual + alt.error_budget);
        }
      if (!basis.empty()) {
        Divisor perturbed = basis.front();
        perturbed.add({1, 0}, Rational(1));
        const auto c = li_combination_residual(k, perturbed, EmbeddingIndex(1, N), kBits, k);
        const BigFloat lower = c.residual - c.error_budget;
        if (lower < weakest_control) weakest_control = lower;
      }
    }
  info.push_back("criterion 8: projecting modulo R(k+1) instead, max residual " + worst_alt.to_string(3));
  return {failing == 0 && tol(kControl) < weakest_control,
          std::to_string(failing) + "/" + std::to_string(total) + " residuals above " + kResidual + " (max " +
              worst.to_string(3) + "); negative control min " + weakest_control.to_string(3)};
}

Outcome criterion9() {
  CommandRequest r;
  r.subcommand = "all";
  const auto a = run(r);
  const auto b = run(r);
  const bool same = dump_report(a.report) == dump_report(b.report);
  std::string failed;
  for (const auto& s : a.report["suites"])
    if (s["verdict"] != "pass") failed += " " + s["suite"].get<std::string>();
  return {a.exit_code == kExitPass && same, "exit " + std::to_string(a.exit_code) +
                                                (same ? ", byte-identical" : ", reports differ") +
                                                (failed.empty() ? "" : "; failing suites:" + failed)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "bernoulli identities", 5, criterion1},
      {2, "horospherical map", 30, criterion2},
      {3, "psi_u residue-zero", 30, criterion3},
      {4, "lie identities", 120, criterion4},
      {5, "torsion residue closed form", 120, criterion5},
      {6, "residue consistency", 30, criterion6},
      {7, "numeric regulator", 120, criterion7},
      {8, "kernel relations", 180, criterion8},
      {9, "cli determinism", 1e9, criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] criterion %d (%s): %s; %.2f s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                in_time ? "" : " (over budget)");
    std::fflush(stdout);
  }
  for (const auto& line : info) std::printf("info: %s\n", line.c_str());
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
