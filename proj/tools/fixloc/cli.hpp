#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace fixloc::cli {

enum class OutputFormat { Json, Text, Dot };

struct CommandConfig {
  std::string subcommand;
  std::optional<std::string> input_path;
  std::optional<long> g;
  std::optional<long> n;
  std::optional<long> deg_delta;
  std::optional<long> genus_y;
  OutputFormat format = OutputFormat::Json;
  std::optional<unsigned long long> seed;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitDomain = 3;

int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

} // namespace fixloc::cli
