// centra: centralizer-lattice analysis of finite groups.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "centra/cli.hpp"

namespace {

using centra::cli::GroupSpec;

struct SpecOptions {
  std::string builtin, gens, table, product;

  void attach(CLI::App* cmd) {
    auto* group = cmd->add_option_group("group", "exactly one group source");
    group->add_option("--builtin", builtin, "family[:n]: cyclic:n, dihedral:2n, quaternion8, symmetric:n, heisenberg:p");
    group->add_option("--gens", gens, "permutation generator file");
    group->add_option("--table", table, "Cayley table file");
    group->add_option("--product", product, "<spec>,<spec> where spec is a builtin, gens:<path> or table:<path>");
    group->require_option(1);
  }

  GroupSpec spec() const {
    if (!builtin.empty()) return {GroupSpec::Kind::builtin, builtin};
    if (!gens.empty()) return {GroupSpec::Kind::gens, gens};
    if (!table.empty()) return {GroupSpec::Kind::table, table};
    return {GroupSpec::Kind::product, product};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centralizer lattices, element-center Möbius functions and commuting graphs of finite groups"};
  app.require_subcommand(1);

  SpecOptions analyze_spec, verify_spec, emit_spec;
  std::string format = "json";
  auto* analyze = app.add_subcommand("analyze", "full report for one group");
  analyze_spec.attach(analyze);
  analyze->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string suite = "all";
  centra::VerifyOptions vopts;
  std::size_t prime = 0;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify_spec.attach(verify);
  verify->add_option("--suite", suite, "algebra, lattice, partition, moebius, graphs or all")
      ->check(CLI::IsMember({"algebra", "lattice", "partition", "moebius", "graphs", "all"}));
  verify->add_option("--trials", vopts.random_trials, "random subsets per property above order 8");
  verify->add_option("--seed", vopts.seed, "random seed");
  verify->add_option("--prime", prime, "prime for mod-p checks (default: inferred from the order)");
  verify->add_flag("--order2187", vopts.expect_order2187, "check the order-2187 Möbius facts (automatic at order 2187)");

  std::string artifact, path;
  auto* emit = app.add_subcommand("emit", "write a DOT/CSV/table artifact");
  emit_spec.attach(emit);
  emit->add_option("artifact", artifact, "artifact kind")->required()->check(CLI::IsMember(centra::cli::emit_artifacts()));
  emit->add_option("path", path, "output path, or - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : centra::cli::kUsage;
  }

  if (*analyze) return centra::cli::cmd_analyze(analyze_spec.spec(), format, std::cout, std::cerr);
  if (*verify) {
    if (prime != 0) vopts.prime = prime;
    return centra::cli::cmd_verify(verify_spec.spec(), suite, vopts, std::cout, std::cerr);
  }
  return centra::cli::cmd_emit(emit_spec.spec(), artifact, path, std::cerr);
}
