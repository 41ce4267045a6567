// mcxc energy|convergence|rotation|torque --config <path> [--out <path>]

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "mcxc/commands.hpp"
#include "mcxc/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Multi-collinear exchange-correlation energies, fields and torques"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  const std::pair<const char*, const char*> commands[] = {
      {"energy", "MC energy with locally collinear, closed-form and t-integral references"},
      {"convergence", "angular quadrature error against a reference energy"},
      {"rotation", "energy change under global spin rotations"},
      {"torque", "per-point m, B^xc and torque plus the global torque"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "key = value run description")->required();
    sub->add_option("--out", out_path, "CSV destination (default: output.path, else stdout)");
  }
  CLI11_PARSE(app, argc, argv);

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    const mcxc::RunConfig config = mcxc::load_config(config_path);
    const std::string dest = out_path.empty() ? config.output_path : out_path;

    std::ostringstream report;
    mcxc::run_command(command, config, report);
    if (dest.empty()) {
      std::cout << report.str();
    } else {
      std::ofstream file(dest, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write '" + dest + "'");
      file << report.str();
    }
  } catch (const std::exception& e) {
    std::cerr << "mcxc: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
