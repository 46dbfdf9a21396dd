#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hosvd3/cli.hpp"

namespace hosvd3::cli {

using nlohmann::json;

StateFile parse_state_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("state file must be a JSON object");

  StateFile s;
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
    throw InputError("state file needs a nonempty \"dims\" array");
  }
  std::size_t expected = 1;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1) throw InputError("dims must be positive integers");
    s.dims.push_back(d.get<std::size_t>());
    expected *= s.dims.back();
  }

  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw InputError("state file needs an \"amplitudes\" array");
  }
  for (const auto& a : doc["amplitudes"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
      throw InputError("each amplitude must be a [re, im] pair of numbers");
    }
    const double re = a[0].get<double>();
    const double im = a[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw InputError("amplitudes must be finite");
    s.amplitudes.emplace_back(re, im);
  }
  if (s.amplitudes.size() != expected) {
    throw InputError("dims require " + std::to_string(expected) + " amplitudes, file has " +
                     std::to_string(s.amplitudes.size()));
  }

  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw InputError("label must be a string");
    s.label = doc["label"].get<std::string>();
  }
  return s;
}

StateFile load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_file(buf.str());
}

json to_json(const StateFile& s) {
  json amps = json::array();
  for (const auto& a : s.amplitudes) amps.push_back({a.real(), a.imag()});
  return {{"dims", s.dims}, {"amplitudes", amps}, {"label", s.label}};
}

double resolve_tol(std::optional<double> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HOSVD3_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      throw InputError(std::string("HOSVD3_TOL is not a positive number: ") + env);
    }
    return v;
  }
  return kDefaultTol;
}

}  // namespace hosvd3::cli
