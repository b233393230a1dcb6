#include <iostream>

#include "CLI11.hpp"
#include "schurring/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over elementary abelian groups of order q^2 from partitions of lines"};
  app.require_subcommand(1);

  schurring::RunConfig config;
  std::string field, partition, format, output;
  const std::map<std::string, std::string> blurbs{
      {"verify-schur-ring", "check the Schur ring axioms and line identities"},
      {"check-condition", "singleton slopes, the singleton-slope condition and Mobius normalization"},
      {"structure-constants", "emit the structure-constant tensor"},
      {"schurian-test", "run the automorphism oracle against the criterion"},
      {"invariant-slopes", "invariant slopes of maps fixing the reference lines or preserving a partition"},
      {"cross-validate", "census with the oracle; fails on any inconsistency"},
      {"census", "enumerate partitions and evaluate the criterion"},
  };
  for (const auto& name : schurring::command_names()) {
    CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
    sub->add_option("--field", field, "field literal p^e");
    sub->add_option("--partition", partition, "partition JSON file")->check(CLI::ExistingFile);
    sub->add_option("--oracle-cap", config.oracle_cap, "largest q^2 for the automorphism oracle")->capture_default_str();
    sub->add_option("--gl-cap", config.gl_cap, "largest |GL(2e,p)| to enumerate")->capture_default_str();
    sub->add_option("--census-cap", config.census_cap, "largest q+1 for partition enumeration")->capture_default_str();
    sub->add_option("--workers", config.workers, "worker threads, 0 for all cores")->capture_default_str();
    sub->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--output", output, "write the report here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return schurring::kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!field.empty()) config.field = field;
  if (!partition.empty()) config.partition_path = partition;
  if (!format.empty()) config.format = schurring::parse_format(format);
  if (!output.empty()) config.output = output;
  return schurring::run(config, std::cout, std::cerr);
}
