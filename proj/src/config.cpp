#include "rabu/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rabu/errors.hpp"

namespace rabu {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError("config error at " + path + ": " + message);
}

const json& require(const json& j, const std::string& key) {
  if (!j.contains(key)) fail(key, "missing");
  return j.at(key);
}

}  // namespace

Config parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config is not valid JSON: ") + e.what());
  }

  const json& jgens = require(j, "generators");
  if (!jgens.is_array() || jgens.empty()) fail("generators", "expected a nonempty array");
  std::vector<std::string> names;
  for (const json& g : jgens) {
    if (!g.is_string()) fail("generators", "expected strings");
    names.push_back(g.get<std::string>());
  }
  const int n = static_cast<int>(names.size());
  auto index_of = [&](const std::string& name, const std::string& where) {
    for (int i = 0; i < n; ++i) {
      if (names[i] == name) return i;
    }
    fail(where, "unknown generator '" + name + "'");
  };

  // Coxeter matrix over unordered pairs; every pair must be present once.
  std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) matrix[i][i] = 1;
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  const json& jcox = require(j, "coxeter");
  if (!jcox.is_object()) fail("coxeter", "expected an object");
  for (const auto& [key, value] : jcox.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) fail("coxeter." + key, "key must be 'a,b'");
    const int a = index_of(key.substr(0, comma), "coxeter." + key);
    const int b = index_of(key.substr(comma + 1), "coxeter." + key);
    if (a == b) fail("coxeter." + key, "pair must name distinct generators");
    if (given[a][b]) fail("coxeter." + key, "pair given twice");
    given[a][b] = given[b][a] = true;
    int entry;
    if (value.is_number_integer() && value.get<int>() == 2) {
      entry = 2;
    } else if (value.is_string() && value.get<std::string>() == "inf") {
      entry = CoxeterDiagram::kInfinity;
    } else {
      fail("coxeter." + key, "entry must be 2 or \"inf\"");
    }
    matrix[a][b] = matrix[b][a] = entry;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!given[a][b]) fail("coxeter." + names[a] + "," + names[b], "missing");
    }
  }

  const json& jthick = require(j, "thickness");
  if (!jthick.is_object()) fail("thickness", "expected an object");
  std::vector<int> thickness(n, 0);
  for (const auto& [key, value] : jthick.items()) {
    const int s = index_of(key, "thickness." + key);
    if (!value.is_number_integer() || value.get<int>() < 2) {
      fail("thickness." + key, "expected an integer >= 2");
    }
    thickness[s] = value.get<int>();
  }
  for (int s = 0; s < n; ++s) {
    if (thickness[s] == 0) fail("thickness." + names[s], "missing");
  }

  const json& jlocal = require(j, "local_groups");
  if (!jlocal.is_object()) fail("local_groups", "expected an object");
  std::vector<PermGroup> groups;
  groups.reserve(n);
  for (int s = 0; s < n; ++s) {
    const std::string path = "local_groups." + names[s];
    if (!jlocal.contains(names[s])) fail(path, "missing");
    const json& jg = jlocal.at(names[s]);
    if (!jg.contains("degree") || !jg.at("degree").is_number_integer()) {
      fail(path + ".degree", "expected an integer");
    }
    const int degree = jg.at("degree").get<int>();
    if (degree != thickness[s]) {
      fail(path + ".degree", "degree " + std::to_string(degree) +
                                 " does not match thickness " +
                                 std::to_string(thickness[s]));
    }
    if (!jg.contains("generators") || !jg.at("generators").is_array()) {
      fail(path + ".generators", "expected an array of permutation strings");
    }
    std::vector<Permutation> gens;
    int k = 0;
    for (const json& perm : jg.at("generators")) {
      const std::string where = path + ".generators[" + std::to_string(k++) + "]";
      if (!perm.is_string()) fail(where, "expected a string");
      try {
        gens.push_back(parse_permutation(perm.get<std::string>(), degree));
      } catch (const InputError& e) {
        fail(where, e.what());
      }
    }
    groups.emplace_back(degree, std::move(gens));
  }

  Caps caps;
  if (j.contains("caps")) {
    const json& jcaps = j.at("caps");
    if (!jcaps.is_object()) fail("caps", "expected an object");
    if (jcaps.contains("radius")) caps.radius = jcaps.at("radius").get<int>();
    if (jcaps.contains("ball_size")) {
      caps.ball_size = jcaps.at("ball_size").get<std::uint64_t>();
    }
    if (jcaps.contains("enum")) {
      caps.enumeration = jcaps.at("enum").get<std::uint64_t>();
    }
  }

  return Config{CoxeterDiagram(std::move(names), std::move(matrix),
                               std::move(thickness), std::move(groups)),
                caps};
}

Config parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace rabu
