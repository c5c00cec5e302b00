#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "onepoint/cli.hpp"
#include "onepoint/rational.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact 1-point invariants and 1-point recursions of weighted "
               "Hurwitz problems"};
  app.require_subcommand(1);

  onepoint::RunConfig cfg;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "json | table | pretty");
    cmd->add_option("--out", out_path, "write output to a file");
  };

  auto* inv = app.add_subcommand("invariants", "exact n_g(d) table");
  inv->add_option("--problem", cfg.problem, "catalog name or problem file")
      ->required();
  inv->add_option("--d-max", cfg.d_max);
  inv->add_option("--g-max", cfg.g_max);
  add_common(inv);

  auto* guess = app.add_subcommand("guess", "discover a 1-point recursion");
  guess->add_option("--problem", cfg.problem)->required();
  guess->add_option("--order", cfg.order, "max shift R");
  guess->add_option("--degree", cfg.degree, "max degree D of the ansatz");
  guess->add_option("--n", cfg.n, "series terms to generate");
  guess->add_option("--buffer", cfg.buffer, "held-out verification points");
  add_common(guess);

  auto* verify = app.add_subcommand("verify", "check a recursion against data");
  verify->add_option("--problem", cfg.problem)->required();
  verify->add_option("--recursion", cfg.recursion_file, "relation JSON file")
      ->required();
  verify->add_option("--d-max", cfg.d_max);
  add_common(verify);

  auto* demo = app.add_subcommand("closure-demo", "holonomic pipeline demo");
  demo->add_option("--name", cfg.demo, "demo name (monotone)");
  add_common(demo);

  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration");
  oracle->add_option("--kind", cfg.oracle_kind, "ribbon|monotone|dessin|bms")
      ->required();
  oracle->add_option("--d", cfg.oracle_d)->required();
  oracle->add_option("--g", cfg.oracle_g);
  oracle->add_option("--m", cfg.oracle_m);
  add_common(oracle);

  auto* cat = app.add_subcommand("catalog", "named problems and recursions");
  add_common(cat);

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    onepoint::RunResult res = onepoint::run(cfg);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << R"({"error":{"code":"cli/bad-config","message":"cannot write output file"}})"
                  << "\n";
        return 1;
      }
      out << res.output;
    } else {
      std::cout << res.output;
    }
    return res.status;
  } catch (const onepoint::Error& e) {
    nlohmann::json err;
    err["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = {{"code", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
}
