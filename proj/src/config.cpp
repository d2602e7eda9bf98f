#include "cmzv/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cmzv {

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot read '" + path + "'");
  nlohmann::json j;
  in >> j;
  Config c;
  c.cutoff = j.value("cutoff", c.cutoff);
  c.tol = j.value("tol", c.tol);
  c.max_weight = j.value("max_weight", c.max_weight);
  c.format = j.value("format", c.format);
  c.jobs = j.value("jobs", c.jobs);
  c.seed = j.value("seed", c.seed);
  c.max_blocks = j.value("max_blocks", c.max_blocks);
  return c;
}

Config Config::from_env() {
  const char* path = std::getenv("CMZV_CONFIG");
  if (path && *path) return load(path);
  return Config{};
}

}  // namespace cmzv
