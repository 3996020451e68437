// nilverify <command> --config <file> [--json] [--orientation standard|flipped]
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 invalid input.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "nilverify/config.hpp"
#include "nilverify/error.hpp"
#include "nilverify/expression.hpp"
#include "nilverify/report.hpp"

namespace {

constexpr int kInputError = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace nilverify;

  CLI::App app{"Exact verification of nilmanifold cohomology, symplectic and fixed-locus data"};
  app.name("nilverify");

  std::string command;
  std::string config_path;
  bool json = false;
  std::string orientation = "standard";
  std::string omega, kernel;
  long power = 1;

  app.add_option("command", command, "check | cohomology | invariants | symplectic-check | complex-check | lefschetz | "
                                     "fixed-locus | singular-locus | verify-all")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--config", config_path, "manifold description")->required();
  app.add_flag("--json", json, "emit the report as JSON");
  app.add_option("--orientation", orientation, "reference volume convention")
      ->check(CLI::IsMember({"standard", "flipped"}));
  auto* omega_opt = app.add_option("--omega", omega, "lefschetz: symplectic class to test (default: form 'omega')");
  auto* kernel_opt = app.add_option("--universal-kernel", kernel,
                                    "lefschetz: certify a class in the kernel of every L (default: form 'beta')");
  omega_opt->excludes(kernel_opt);
  app.add_option("--power", power, "fixed-locus: power k of rho")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  ReportOptions opts;
  opts.orientation = orientation == "flipped" ? Orientation::flipped : Orientation::standard;
  opts.config_name = std::filesystem::path(config_path).filename().string();
  if (*omega_opt) opts.omega = omega;
  if (*kernel_opt) opts.universal_kernel = kernel;
  opts.power = power;

  try {
    const ManifoldConfig cfg = load_config(config_path);
    const Report report = run_command(command, cfg, opts);
    if (json)
      std::cout << report.to_json().dump(2) << "\n";
    else
      std::cout << report.to_text();
    return report.exit_status();
  } catch (const ConfigError& e) {
    std::cerr << "nilverify: config error: " << config_path << ": " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "nilverify: invalid expression (column " << e.column() + 1 << "): " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "nilverify: " << e.what() << "\n";
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "nilverify: internal consistency failure: " << e.what() << "\n";
    return 1;
  }
}
