#pragma once

#include <cstdint>
#include <string>

namespace cmzv {

// Runtime defaults; a fixed seed makes every report byte-identical.
struct Config {
  long cutoff = 1000;
  double tol = 1e-2;
  int max_weight = 6;
  std::string format = "text";  // "text", "json" or "csv"
  int jobs = 1;
  uint64_t seed = 20240801;
  int max_blocks = 3;

  static Config load(const std::string& path);  // JSON file
  // Reads the path from the CMZV_CONFIG environment variable if set,
  // otherwise returns defaults.
  static Config from_env();
};

}  // namespace cmzv
