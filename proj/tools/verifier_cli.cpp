// Command-line front end: pencil analysis, lattice tables, single h^0
// computations, and the full vanishing certificate.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "enriques/interpolation.hpp"
#include "enriques/lattice.hpp"
#include "enriques/pencil.hpp"
#include "enriques/verifier.hpp"

namespace {

using namespace enriques;

Json load_config_json(const std::string& path) {
  if (path.empty() || path == "-") return default_config_json();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  return Json::parse(in);
}

PointConfig build_from(const VerifierConfig& vc) {
  return build_config(vc.h1, vc.h2, vc.e0, vc.swap_nodes);
}

std::string poly_str(const UniPoly& f) {
  std::string s;
  for (int k = f.degree(); k >= 0; --k) {
    Rat c = f.coeff(k);
    if (c == 0) continue;
    if (!s.empty()) s += (c > 0 ? " + " : " - ");
    else if (c < 0)
      s += "-";
    Rat a = c > 0 ? c : Rat(-c);
    if (a != 1 || k == 0) s += a.get_str();
    if (k >= 1) {
      if (a != 1) s += "*";
      s += "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

int run_analyze(const std::string& config_path) {
  VerifierConfig vc = parse_config(load_config_json(config_path));
  PointConfig cfg = build_from(vc);
  std::cout << "pencil analysis\n";
  std::cout << "  node1 (B1): " << cfg.node1.str() << "\n";
  std::cout << "  node2 (B2): " << cfg.node2.str() << "\n";
  std::cout << "  e9 (rational base point): " << cfg.e9.str() << "\n";
  std::cout << "  e0 (extra point): " << cfg.e0.str() << "\n";
  std::cout << "  conjugate block: degree " << cfg.orbit.degree()
            << ", chart z=1\n";
  std::cout << "  minimal polynomial: " << poly_str(cfg.orbit.minpoly.primitive())
            << "\n";
  std::cout << "  colinear(e9, e0, node1): "
            << (colinear(cfg.e9, cfg.e0, cfg.node1) ? "true" : "false") << "\n";
  std::cout << "  colinear(e9, node1, node2): "
            << (colinear(cfg.e9, cfg.node1, cfg.node2) ? "true" : "false")
            << "\n";
  return 0;
}

int run_lattice() {
  static const char* names[5] = {"Q^g", "l_i^g", "l_j^g", "B1^g", "E0^g"};
  auto t = component_table();
  std::cout << "component intersection table (i != j):\n";
  std::cout << "       ";
  for (const char* n : names) std::cout << "\t" << n;
  std::cout << "\n";
  for (int a = 0; a < 5; ++a) {
    std::cout << "  " << names[a];
    for (int b = 0; b < 5; ++b) std::cout << "\t" << t[a][b];
    std::cout << "\n";
  }
  auto gram = gram_and_KS_check();
  std::cout << "Gram matrix of D_1^g..D_11^g:\n";
  for (int a = 0; a < 11; ++a) {
    std::cout << " ";
    for (int b = 0; b < 11; ++b) std::cout << " " << gram.gram[a][b];
    std::cout << "\n";
  }
  std::cout << "K_S relation (sum D_1..D_10 - 3 D_11 = E0, numerically): "
            << (gram.ks_relation_holds ? "holds" : "FAILS") << "\n";
  return 0;
}

int run_h0(const std::string& config_path, const std::vector<long>& coords,
           bool use_oracle) {
  VerifierConfig vc = parse_config(load_config_json(config_path));
  PointConfig cfg = build_from(vc);
  DivisorClass d;
  for (int k = 0; k < 13; ++k) d[k] = coords[k];
  FatPointSystem sys = divisor_to_system(d, cfg);
  int value = h0(sys);
  std::cout << "h0 = " << value << "\n";
  if (use_oracle) {
    auto orc = h0_modular_oracle(sys);
    std::cout << "modular oracle: " << orc.value
              << (orc.primes_agree ? "" : " (primes disagree)") << "\n";
    if (orc.value != value) {
      std::cerr << "exact and modular h0 disagree\n";
      return 1;
    }
  }
  return 0;
}

int run_verify(const std::string& config_path, const std::string& json_out,
               const std::string& oracle_mode) {
  VerifierConfig vc = parse_config(load_config_json(config_path));
  PointConfig cfg = build_from(vc);
  Report report = verify_all(cfg, vc.rep_overrides);

  if (oracle_mode == "modular") {
    // recheck every interpolation-backed bound with the modular oracle
    for (const auto& e : report.entries) {
      if (e.method != "SemicontinuityBound" || !e.representative) continue;
      FatPointSystem sys = divisor_to_system(*e.representative, cfg);
      if (h0_modular_oracle(sys).value != h0(sys)) {
        std::cerr << "modular oracle disagrees on " << e.task.str() << "\n";
        return 1;
      }
    }
  }

  Json j = report_json(report, vc.echo);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw std::invalid_argument("cannot write report: " + json_out);
    out << j.dump(2) << "\n";
  }
  const auto& summary = j["summary"];
  std::cout << "tasks: " << summary["tasks"] << "\n";
  std::cout << "methods: " << summary["methods"].dump() << "\n";
  std::cout << "verdicts: " << summary["verdicts"].dump() << "\n";
  std::cout << "chi closure: "
            << (report.chi_closure_all_zero ? "all zero" : "FAILURE") << "\n";
  for (const auto& f : report.findings)
    std::cout << "finding [" << f.kind << "] " << f.detail << "\n";
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional-collection vanishing verifier"};
  app.require_subcommand(1);

  std::string config_path;
  auto* analyze = app.add_subcommand("analyze", "pencil geometry report");
  analyze->add_option("config", config_path, "JSON config file ('-' for built-in)");

  auto* lattice = app.add_subcommand("lattice", "intersection tables and K_S relation");

  std::string h0_config;
  std::vector<long> h0_coords;
  bool h0_oracle = false;
  auto* h0cmd = app.add_subcommand("h0", "h^0 of a divisor class");
  h0cmd->add_option("config", h0_config, "JSON config file ('-' for built-in)");
  h0cmd->add_option("divisor", h0_coords, "13 coordinates (H, E0, E1..E9, B1, B2)")
      ->expected(13);
  h0cmd->add_flag("--oracle", h0_oracle, "cross-check with the modular oracle");

  std::string v_config, v_json, v_oracle = "modular";
  auto* verify = app.add_subcommand("verify", "full vanishing certificate");
  verify->add_option("config", v_config, "JSON config file ('-' for built-in)");
  verify->add_option("--json", v_json, "write the JSON report here");
  verify->add_option("--oracle", v_oracle, "modular|off")
      ->check(CLI::IsMember({"modular", "off"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(config_path);
    if (*lattice) return run_lattice();
    if (*h0cmd) return run_h0(h0_config, h0_coords, h0_oracle);
    if (*verify) return run_verify(v_config, v_json, v_oracle);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const enriques::PencilError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
