#pragma once

#include <string>

#include "rabu/diagram.hpp"

namespace rabu {

struct Config {
  CoxeterDiagram diagram;
  Caps caps;
};

// Parses and validates a JSON config. Keys: generators, coxeter,
// thickness, local_groups, caps (optional). Errors carry the offending
// field path. Throws InputError.
Config parse_config_file(const std::string& path);
Config parse_config_text(const std::string& text);

}  // namespace rabu
