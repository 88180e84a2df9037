#include "charvar/cli/config.hpp"

#include <fstream>
#include <functional>
#include <map>

#include "charvar/types.hpp"

namespace charvar::cli {

using nlohmann::json;

namespace {

template <typename T>
T get_as(const json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ValidationError("config key '" + key + "' has the wrong type");
  }
}

int get_int(const json& value, const std::string& key) {
  if (!value.is_number_integer()) throw ValidationError("config key '" + key + "' must be an integer");
  return get_as<int>(value, key);
}

double get_double(const json& value, const std::string& key) {
  if (!value.is_number()) throw ValidationError("config key '" + key + "' must be a number");
  return value.get<double>();
}

std::string get_string(const json& value, const std::string& key) {
  if (!value.is_string()) throw ValidationError("config key '" + key + "' must be a string");
  return value.get<std::string>();
}

using Setter = std::function<void(RunConfig&, const json&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table{
      {"group", [](RunConfig& c, const json& v, const std::string& k) { c.group = get_string(v, k); }},
      {"rank", [](RunConfig& c, const json& v, const std::string& k) { c.rank = get_int(v, k); }},
      {"seed",
       [](RunConfig& c, const json& v, const std::string& k) {
         if (!v.is_number_unsigned()) throw ValidationError("config key 'seed' must be a nonnegative integer");
         c.seed = get_as<std::uint64_t>(v, k);
       }},
      {"scale", [](RunConfig& c, const json& v, const std::string& k) { c.scale = get_double(v, k); }},
      {"steps", [](RunConfig& c, const json& v, const std::string& k) { c.steps = get_int(v, k); }},
      {"tol", [](RunConfig& c, const json& v, const std::string& k) { c.tol = get_double(v, k); }},
      {"out", [](RunConfig& c, const json& v, const std::string& k) { c.out = get_string(v, k); }},
      {"input", [](RunConfig& c, const json& v, const std::string& k) { c.input = get_string(v, k); }},
      {"step", [](RunConfig& c, const json& v, const std::string& k) { c.step = get_double(v, k); }},
      {"max_iters", [](RunConfig& c, const json& v, const std::string& k) { c.max_iters = get_int(v, k); }},
      {"trace_every",
       [](RunConfig& c, const json& v, const std::string& k) { c.trace_every = get_int(v, k); }},
      {"trace", [](RunConfig& c, const json& v, const std::string& k) { c.trace = get_string(v, k); }},
      {"tag", [](RunConfig& c, const json& v, const std::string& k) { c.tag = get_string(v, k); }},
      {"r_min", [](RunConfig& c, const json& v, const std::string& k) { c.r_min = get_int(v, k); }},
      {"r_max", [](RunConfig& c, const json& v, const std::string& k) { c.r_max = get_int(v, k); }},
      {"format", [](RunConfig& c, const json& v, const std::string& k) { c.format = get_string(v, k); }},
      {"figure", [](RunConfig& c, const json& v, const std::string& k) { c.figure = get_string(v, k); }},
      {"grid", [](RunConfig& c, const json& v, const std::string& k) { c.grid = get_int(v, k); }},
      {"extent", [](RunConfig& c, const json& v, const std::string& k) { c.extent = get_double(v, k); }},
      {"point",
       [](RunConfig& c, const json& v, const std::string& k) {
         if (!v.is_array() || v.size() != 3) {
           throw ValidationError("config key 'point' must be an array of three numbers");
         }
         c.point = std::array<double, 3>{get_double(v[0], k), get_double(v[1], k), get_double(v[2], k)};
       }},
  };
  return table;
}

}  // namespace

json to_json(const RunConfig& c) {
  json j{
      {"group", c.group},   {"rank", c.rank},   {"seed", c.seed},
      {"scale", c.scale},   {"steps", c.steps}, {"tol", c.tol},
      {"out", c.out},       {"input", c.input}, {"step", c.step},
      {"max_iters", c.max_iters}, {"trace_every", c.trace_every}, {"trace", c.trace},
      {"tag", c.tag},       {"format", c.format}, {"figure", c.figure},
      {"grid", c.grid},     {"extent", c.extent},
  };
  if (c.r_min) j["r_min"] = *c.r_min;
  if (c.r_max) j["r_max"] = *c.r_max;
  if (c.point) j["point"] = *c.point;
  return j;
}

RunConfig overlay_json(const json& j, RunConfig base) {
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  const auto& table = setters();
  for (const auto& [key, value] : j.items()) {
    auto it = table.find(key);
    if (it == table.end()) throw ValidationError("unknown config key '" + key + "'");
    it->second(base, value, key);
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return overlay_json(j, std::move(base));
}

}  // namespace charvar::cli
