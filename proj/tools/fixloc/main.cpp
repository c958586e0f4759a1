#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using fixloc::cli::OutputFormat;
  CLI::App app{"fixloc: equivariant rank-2 data, parabolic stability and fixed-locus reports"};
  app.require_subcommand(1, 1);

  fixloc::cli::CommandConfig config;
  std::string path, format = "json";
  long g = 0, n = 0, deg_delta = 0, genus_y = 0;
  unsigned long long seed = 0;

  const char* names[] = {"kernel", "factor", "lambda", "weights", "bijection-check", "zeta2",
                         "orbits", "decompose", "hyperelliptic", "census", "stability"};
  for (const char* name : names) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--file", path, "input JSON document");
    sub->add_option("--g", g, "genus of the hyperelliptic curve");
    sub->add_option("--n", n, "order of the cover");
    sub->add_option("--deg-delta", deg_delta, "degree of the determinant on X");
    sub->add_option("--genus-y", genus_y, "genus of the quotient curve");
    sub->add_option("--format", format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--seed", seed, "seed for randomised runs");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fixloc::cli::kExitSchema;
  }

  auto* sub = app.get_subcommands().front();
  config.subcommand = sub->get_name();
  if (sub->count("--file")) config.input_path = path;
  if (sub->count("--g")) config.g = g;
  if (sub->count("--n")) config.n = n;
  if (sub->count("--deg-delta")) config.deg_delta = deg_delta;
  if (sub->count("--genus-y")) config.genus_y = genus_y;
  if (sub->count("--seed")) config.seed = seed;
  static const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"text", OutputFormat::Text}, {"dot", OutputFormat::Dot}};
  config.format = formats.at(format);
  return fixloc::cli::run(config, std::cout, std::cerr);
}
