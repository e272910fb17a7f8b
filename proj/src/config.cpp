#include "yjunction/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace yjunction {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key)) throw ConfigError("unknown field '" + where + "." + key + "'");
}

const json& require_object(const json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError("field '" + field + "' must be an object");
  return j;
}

double parse_number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError("field '" + field + "' must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ConfigError("field '" + field + "' must be finite");
  return x;
}

double parse_angle(const json& j, const std::string& field) {
  if (j.is_string()) return parse_angle_text(j.get<std::string>(), field);
  return parse_number(j, field);
}

int parse_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ConfigError("field '" + field + "' must be an integer");
  return j.get<int>();
}

std::string parse_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError("field '" + field + "' must be a string");
  return j.get<std::string>();
}

JunctionParams parse_junction(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_keys(j, {"theta", "alpha", "beta", "gamma", "delta", "a", "b", "L0"}, where);

  std::array<double, 3> theta{};
  if (j.contains("theta")) {
    const json& t = j["theta"];
    if (!t.is_array() || t.size() != 3)
      throw ConfigError("field '" + where + ".theta' must be an array of three angles");
    for (std::size_t i = 0; i < 3; ++i)
      theta[i] = parse_angle(t[i], where + ".theta[" + std::to_string(i) + "]");
  }
  auto angle = [&](const char* key) {
    return j.contains(key) ? parse_angle(j[key], where + "." + key) : 0.0;
  };
  const EulerAngles euler{angle("alpha"), angle("beta"), angle("gamma"),
                          angle("delta"), angle("a"),    angle("b")};
  const double L0 = j.contains("L0") ? parse_number(j["L0"], where + ".L0") : 1.0;
  if (!(L0 > 0.0)) throw ConfigError("field '" + where + ".L0' must be positive");
  return JunctionParams(theta, euler, L0);
}

}  // namespace

const JunctionParams& Config::junction(const std::string& name) const {
  for (const auto& [key, params] : junctions)
    if (key == name) return params;
  throw ConfigError("unknown junction '" + name + "'");
}

double parse_angle_text(const std::string& text, const std::string& field) {
  const bool pi_multiple = text.rfind("pi:", 0) == 0;
  const std::string number = pi_multiple ? text.substr(3) : text;
  std::istringstream in(number);
  in.imbue(std::locale::classic());
  double x = 0.0;
  in >> x;
  if (number.empty() || in.fail() || !in.eof() || !std::isfinite(x))
    throw ConfigError("field '" + field + "' is not an angle: '" + text + "'");
  return pi_multiple ? x * std::numbers::pi : x;
}

ResonanceKind parse_kind(const std::string& text, const std::string& field) {
  if (text == "transmission") return ResonanceKind::PerfectTransmission;
  if (text == "reflection") return ResonanceKind::PerfectReflection;
  throw ConfigError("field '" + field + "' must be 'transmission' or 'reflection', got '" + text +
                    "'");
}

Orientation parse_orientation(const std::string& text, const std::string& field) {
  if (text == "in" || text == "inward") return Orientation::Inward;
  if (text == "out" || text == "outward") return Orientation::Outward;
  throw ConfigError("field '" + field + "' must be 'in' or 'out', got '" + text + "'");
}

Config parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  require_object(root, "<root>");
  reject_unknown_keys(root, {"junctions", "ring", "task"}, "<root>");

  Config cfg;
  if (!root.contains("junctions")) throw ConfigError("missing field 'junctions'");
  const json& js = require_object(root["junctions"], "junctions");
  if (js.empty()) throw ConfigError("field 'junctions' must define at least one junction");
  for (const auto& [name, body] : js.items()) {
    try {
      cfg.junctions.emplace_back(name, parse_junction(body, "junctions." + name));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("junctions." + name + ": " + e.what());
    }
  }

  if (root.contains("ring")) {
    const json& r = require_object(root["ring"], "ring");
    reject_unknown_keys(r, {"left", "mode", "right", "xi1", "xi2"}, "ring");
    for (const char* key : {"left", "mode", "xi1", "xi2"})
      if (!r.contains(key)) throw ConfigError(std::string("missing field 'ring.") + key + "'");
    const JunctionParams& left = cfg.junction(parse_string(r["left"], "ring.left"));
    const std::string mode_text = parse_string(r["mode"], "ring.mode");
    SymmetryMode mode;
    if (mode_text == "symmetric") {
      mode = Symmetric{};
    } else if (mode_text == "antisymmetric" || mode_text == "anti-symmetric") {
      mode = AntiSymmetric{};
    } else if (mode_text == "general") {
      if (!r.contains("right")) throw ConfigError("field 'ring.right' is required for mode general");
      mode = General{cfg.junction(parse_string(r["right"], "ring.right"))};
    } else {
      throw ConfigError("field 'ring.mode' must be symmetric, antisymmetric or general, got '" +
                        mode_text + "'");
    }
    if (mode_text != "general" && r.contains("right"))
      throw ConfigError("field 'ring.right' is only allowed for mode general");
    const double xi1 = parse_number(r["xi1"], "ring.xi1");
    const double xi2 = parse_number(r["xi2"], "ring.xi2");
    if (!(xi1 > xi2)) throw ConfigError("field 'ring.xi1' must be greater than 'ring.xi2'");
    cfg.ring.emplace(left, mode, xi1, xi2);
  }

  if (root.contains("task")) {
    const json& t = require_object(root["task"], "task");
    reject_unknown_keys(
        t, {"k", "k_min", "k_max", "n", "tol", "kind", "junction", "xi", "orientation", "scan_n"},
        "task");
    Task& task = cfg.task;
    if (t.contains("k")) task.k = parse_number(t["k"], "task.k");
    if (t.contains("k_min")) task.k_min = parse_number(t["k_min"], "task.k_min");
    if (t.contains("k_max")) task.k_max = parse_number(t["k_max"], "task.k_max");
    if (t.contains("n")) task.n = parse_int(t["n"], "task.n");
    if (t.contains("tol")) task.tol = parse_number(t["tol"], "task.tol");
    if (t.contains("kind")) task.kind = parse_kind(parse_string(t["kind"], "task.kind"), "task.kind");
    if (t.contains("junction")) {
      task.junction = parse_string(t["junction"], "task.junction");
      cfg.junction(*task.junction);
    }
    if (t.contains("xi")) task.xi = parse_number(t["xi"], "task.xi");
    if (t.contains("orientation"))
      task.orientation =
          parse_orientation(parse_string(t["orientation"], "task.orientation"), "task.orientation");
    if (t.contains("scan_n")) task.scan_n = parse_int(t["scan_n"], "task.scan_n");
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace yjunction
