#include <iostream>

#include <CLI11.hpp>

#include "ewb/cli/run.hpp"

namespace {

const char* describe(const std::string& name) {
  if (name == "bernoulli") return "Bernoulli polynomials, distribution relations, residue series";
  if (name == "horospherical") return "horospherical map: invariance, parity, equivariance, surjectivity";
  if (name == "kernel") return "kernel of the horospherical map with its polylogarithm combinations";
  if (name == "psi-u") return "the explicit kernel element psi_u";
  if (name == "lie-verify") return "Hall basis, BCH, quotient identities and the u-tilde element";
  if (name == "residue") return "torsion residues against their closed form";
  if (name == "regulator") return "high-precision polylogarithm checks";
  if (name == "kernel-relations") return "numeric relations for kernel elements";
  if (name == "consistency") return "residue consistency of the horospherical map";
  return "run every suite";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for Eisenstein classes and polylogarithms", "ewb"};
  app.set_version_flag("--version", ewb::toolchain_stamp());
  app.require_subcommand(1);
  app.fallthrough();

  ewb::CommandRequest req;
  std::string input, output;
  int twist = 0, a = 0;
  app.add_option("-N", req.N, "level N >= 3")->capture_default_str();
  app.add_option("-k", req.k, "weight k")->capture_default_str();
  app.add_option("-D", req.D, "Lie truncation degree")->capture_default_str();
  auto* a_opt = app.add_option("-a", a, "residue: single torsion index in [0, N) (default all)");
  app.add_option("-u", req.u, "index u, nonzero mod N")->capture_default_str();
  app.add_option("--precision", req.precision, "working precision in bits")->capture_default_str();
  auto* twist_opt = app.add_option("--twist", twist, "projection weight for kernel-relations (default k)");
  app.add_option("--seed", req.seed, "random seed")->capture_default_str();
  app.add_option("--trials", req.trials, "random trials")->capture_default_str();
  app.add_option("--input", input, "divisor JSON for the horospherical suite");
  app.add_option("--output", output, "write the report here instead of stdout");

  for (const auto& name : ewb::subcommand_names()) app.add_subcommand(name, describe(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ewb::kExitUsage;
  }

  req.subcommand = app.get_subcommands().front()->get_name();
  if (*twist_opt) req.twist = twist;
  if (*a_opt) req.a = a;
  if (!input.empty()) req.input = input;
  if (!output.empty()) req.output = output;

  try {
    const auto result = ewb::run(req);
    if (req.output)
      ewb::save_report(result.report, *req.output);
    else
      std::cout << ewb::dump_report(result.report);
    std::cerr << req.subcommand << ": " << result.report["verdict"].get<std::string>() << "\n";
    return result.exit_code;
  } catch (const ewb::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ewb::kExitMalformedInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return ewb::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return ewb::kExitVerificationFailure;
  }
}
