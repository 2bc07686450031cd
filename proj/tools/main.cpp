// adgraph: girth classification, cycle witnesses, certificates and
// finite-field oracle runs for real monomial graphs.
//
// Exit codes: 0 success, 2 usage or precondition error, 3 verification failure.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "adg/cli.hpp"
#include "adg/core.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"girth classification and cycle witnesses for real monomial graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  adg::RunConfig cfg;
  std::string format = "json";
  app.add_option("--tol", cfg.residual_tol, "adjacency residual tolerance");
  app.add_option("--root-tol", cfg.root_tol, "root-finding tolerance");
  app.add_option("--seed", cfg.seed, "RNG seed for sampled checks")
      ->envname("ADG_SEED");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--max-exp", cfg.max_exp, "exponent cap")
      ->check(CLI::Range(1, adg::kMaxExponentDefault));

  int s = 1, t = 1, u = 1, v = 1;
  const auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("s", s, "X-exponent of f2")->required();
    cmd->add_option("t", t, "Y-exponent of f2")->required();
    cmd->add_option("u", u, "X-exponent of f3")->required();
    cmd->add_option("v", v, "Y-exponent of f3")->required();
  };

  auto* c_classify = app.add_subcommand("classify", "girth class of one pair");
  add_pair(c_classify);

  int table_max = 6;
  auto* c_table = app.add_subcommand("table", "classification sweep as CSV");
  c_table->add_option("--max-exp", table_max, "sweep bound")->required();

  auto* c_witness = app.add_subcommand("witness", "build and verify a cycle witness");
  add_pair(c_witness);

  std::string verify_path;
  auto* c_verify = app.add_subcommand("verify", "re-verify a witness JSON record");
  c_verify->add_option("file", verify_path, "witness JSON file, or - for stdin")
      ->required();

  int trials = 100;
  auto* c_certify = app.add_subcommand("certify8", "no-6-cycle certificate");
  add_pair(c_certify);
  c_certify->add_option("--trials", trials, "sampling trials");

  int oq = 3, omax = 3;
  auto* c_oracle = app.add_subcommand("oracle", "finite-field BFS vs Delta brute force");
  c_oracle->add_option("q", oq, "field prime")->required();
  c_oracle->add_option("max_exp", omax, "sweep bound")->required();

  int prop = 4, cj = 0, ck = 0, cm = 0, cn = 1, csteps = 100;
  double clo = -3.0, chi = 0.0;
  auto* c_curve = app.add_subcommand("curve", "sample a case root function");
  c_curve->add_option("--prop", prop, "case: 4, 5 or 6")->required();
  c_curve->add_option("--j", cj, "half-exponent j");
  c_curve->add_option("--k", ck, "half-exponent k");
  c_curve->add_option("--m", cm, "half-exponent m");
  c_curve->add_option("--n", cn, "half-exponent n");
  c_curve->add_option("--lo", clo, "interval start")->required();
  c_curve->add_option("--hi", chi, "interval end")->required();
  c_curve->add_option("--steps", csteps, "sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  cfg.format = format == "csv" ? adg::OutFormat::Csv : adg::OutFormat::Json;

  try {
    if (*c_classify) {
      std::cout << adg::classify_record(adg::MonomialPair::checked(s, t, u, v, cfg.max_exp), cfg);
    } else if (*c_table) {
      std::cout << adg::table_csv(table_max);
    } else if (*c_witness) {
      std::cout << adg::witness_record(adg::MonomialPair::checked(s, t, u, v, cfg.max_exp), cfg);
    } else if (*c_verify) {
      bool pass = false;
      const auto w = adg::witness_from_json(read_all(verify_path));
      std::cout << adg::verify_record(w, cfg, &pass);
      if (!pass) return 3;
    } else if (*c_certify) {
      const auto rec = adg::certify8_record(
          adg::MonomialPair::checked(s, t, u, v, cfg.max_exp), trials, cfg);
      std::cout << rec;
      if (rec.find("\"pass\":true") == std::string::npos) return 3;
    } else if (*c_oracle) {
      bool agree = true;
      std::cout << adg::oracle_csv(oq, omax, &agree);
      if (!agree) return 3;
    } else if (*c_curve) {
      std::cout << adg::curve_csv(prop, cj, ck, cm, cn, clo, chi, csteps);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
