#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using specht::cli::OutputFormat;
  using specht::cli::RunConfig;

  CLI::App app{"Gram matrices of Specht modules for Iwahori-Hecke algebras of type A"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  bool no_cache = false;
  app.add_option("--cache-dir", cfg.cache_dir, "Gram matrix cache directory (default: $SPECHT_CACHE_DIR)");
  app.add_flag("--no-cache", no_cache, "Always recompute Gram matrices");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--time-budget", cfg.time_budget_seconds, "Seconds per obstruction search")
      ->check(CLI::PositiveNumber);

  auto* gram = app.add_subcommand("gram", "Gram matrix G(lambda)");
  gram->add_option("-p,--partition", cfg.partitions, "Partition, e.g. 3,2")->required();

  auto* snf = app.add_subcommand("snf", "Elementary divisors of G(lambda)");
  snf->add_option("-p,--partition", cfg.partitions, "Partition, e.g. 3,2")->required();
  snf->add_option("--ring", cfg.ring, "Q, Fp:<p>, or Z (q = 1)");

  auto* table = app.add_subcommand("table", "Reproduce the reference table of elementary divisors");
  table->add_option("--n-max", cfg.n_max, "Largest n")->required();

  auto* hooks = app.add_subcommand("hooks", "Hook shapes (n-k, 1^k): certificate and predicted divisors");
  hooks->add_option("--n", cfg.n, "n")->required();
  hooks->add_option("--k", cfg.k, "k")->required();

  auto* dual = app.add_subcommand("dual", "Conjugate duality of elementary divisors");
  dual->add_option("-p,--partition", cfg.partitions, "Partition")->required();

  auto* obstruct = app.add_subcommand("obstruct", "Obstructions to diagonalizability over Z_(p)[q, q^-1]");
  obstruct->add_option("-p,--partition", cfg.partitions, "Partition")->required();
  obstruct->add_option("--prime", cfg.primes, "Prime(s)")->required();

  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--n-max", cfg.n_max, "Largest n")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : specht::cli::kExitUsage;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  cfg.use_cache = !no_cache;
  return specht::cli::run_command(cfg, std::cout, std::cerr);
}
