// Copyright 2026 the corrbath authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corrbath/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "corrbath/errors.hpp"

namespace corrbath::config {

namespace {

using nlohmann::json;

// Walks one JSON object, recording every problem with its path and
// flagging keys nobody asked for.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path,
               std::vector<std::string>& errs)
      : obj_(obj), path_(std::move(path)), errs_(errs) {
    if (!obj_.is_object()) {
      errs_.push_back(path_ + ": expected an object");
      broken_ = true;
    }
  }

  bool has(const std::string& key) {
    if (broken_) return false;
    seen_.insert(key);
    return obj_.contains(key);
  }

  double number(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const json& v = obj_.at(key);
    if (!v.is_number()) {
      fail(key, "expected a number");
      return fallback;
    }
    return v.get<double>();
  }

  // beta-style field: a number or the string "inf".
  double number_or_inf(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const json& v = obj_.at(key);
    if (v.is_string() && v.get<std::string>() == "inf") {
      return std::numeric_limits<double>::infinity();
    }
    if (v.is_number()) return v.get<double>();
    fail(key, "expected a number or \"inf\"");
    return fallback;
  }

  int integer(const std::string& key, int fallback) {
    if (!has(key)) return fallback;
    const json& v = obj_.at(key);
    if (!v.is_number_integer()) {
      fail(key, "expected an integer");
      return fallback;
    }
    return v.get<int>();
  }

  std::string text(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    const json& v = obj_.at(key);
    if (!v.is_string()) {
      fail(key, "expected a string");
      return fallback;
    }
    return v.get<std::string>();
  }

  std::vector<double> number_list(const std::string& key) {
    std::vector<double> out;
    if (!has(key)) return out;
    const json& v = obj_.at(key);
    if (!v.is_array()) {
      fail(key, "expected an array of numbers");
      return out;
    }
    for (const auto& e : v) {
      if (!e.is_number()) {
        fail(key, "expected an array of numbers");
        return {};
      }
      out.push_back(e.get<double>());
    }
    return out;
  }

  const json* object(const std::string& key) {
    if (!has(key)) return nullptr;
    return &obj_.at(key);
  }

  void fail(const std::string& key, const std::string& msg) {
    errs_.push_back(path_ + "." + key + ": " + msg);
  }

  // Call last: rejects everything not consumed above.
  void finish() {
    if (broken_) return;
    for (const auto& [key, value] : obj_.items()) {
      (void)value;
      if (!seen_.contains(key)) {
        errs_.push_back(path_ + "." + key + ": unknown key");
      }
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::vector<std::string>& errs_;
  std::set<std::string> seen_;
  bool broken_ = false;
};

void parse_model(const json& j, model::ModelSpec& spec,
                 std::vector<std::string>& errs) {
  ObjectReader r(j, "model", errs);
  spec.n_spins = r.integer("n_spins", spec.n_spins);
  spec.omega0 = r.number("omega0", spec.omega0);
  spec.r1 = r.number("r1", spec.r1);
  spec.bath_spacing = r.number("bath_spacing", spec.bath_spacing);
  spec.bath_hopping = r.number("bath_hopping", spec.bath_hopping);
  spec.lamb_j0 = r.number("lamb_j0", spec.lamb_j0);
  spec.lamb_k0 = r.number("lamb_k0", spec.lamb_k0);

  const bool has_beta = r.has("beta");
  const bool has_temp = r.has("temperature");
  if (has_beta && has_temp) {
    errs.push_back("model: give exactly one of beta or temperature");
  } else if (!has_beta && !has_temp) {
    errs.push_back("model: one of beta or temperature is required");
  } else if (has_beta) {
    spec.beta = r.number_or_inf("beta", spec.beta);
  } else {
    const double t = r.number("temperature", 1.0);
    if (!(t >= 0.0)) {
      errs.push_back("model.temperature: must be >= 0");
    } else {
      spec.beta = t == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / t;
    }
  }

  if (r.has("alpha_override")) {
    spec.alpha_override = r.number("alpha_override", 0.0);
  }
  if (r.has("uniform_separation")) {
    spec.uniform_separation = r.number("uniform_separation", 0.0);
  }
  spec.positions = r.number_list("positions");
  r.finish();

  for (auto& e : spec.validate()) errs.push_back("model: " + e);
}

void parse_numeric(const json& j, NumericBlock& num,
                   std::vector<std::string>& errs) {
  ObjectReader r(j, "numeric", errs);
  num.tol_abs = r.number("tol_abs", num.tol_abs);
  num.tol_rel = r.number("tol_rel", num.tol_rel);
  num.kernel_tol = r.number("kernel_tol", num.kernel_tol);
  num.dt = r.number("dt", num.dt);
  num.t_max = r.number("t_max", num.t_max);
  num.time_points = r.integer("time_points", num.time_points);
  r.finish();
  if (num.tol_abs < 0 || num.tol_rel < 0 || num.kernel_tol < 0) {
    errs.push_back("numeric: tolerances must be >= 0");
  }
  if (num.dt < 0) errs.push_back("numeric.dt: must be >= 0");
  if (!(num.t_max > 0)) errs.push_back("numeric.t_max: must be > 0");
  if (num.time_points < 2) {
    errs.push_back("numeric.time_points: must be >= 2");
  }
}

void parse_initial_state(const json& j, InitialStateBlock& init,
                         std::vector<std::string>& errs) {
  ObjectReader r(j, "initial_state", errs);
  const std::string name = r.text("preset", "maximally_mixed");
  try {
    init.preset = dynamics::preset_from_name(name);
  } catch (const ValidationError&) {
    errs.push_back("initial_state.preset: unknown preset \"" + name + "\"");
  }
  if (r.has("bloch")) {
    const json& b = j.at("bloch");
    bool ok = b.is_array();
    if (ok) {
      for (const auto& row : b) {
        if (!row.is_array() || row.size() != 3 ||
            !std::all_of(row.begin(), row.end(),
                         [](const json& x) { return x.is_number(); })) {
          ok = false;
          break;
        }
        init.bloch_vectors.emplace_back(row[0].get<double>(),
                                        row[1].get<double>(),
                                        row[2].get<double>());
      }
    }
    if (!ok) {
      errs.push_back("initial_state.bloch: expected [[x, y, z], ...]");
    }
  }
  r.finish();
}

void parse_sweep(const json& j, SweepBlock& sweep,
                 std::vector<std::string>& errs) {
  ObjectReader r(j, "sweep", errs);
  sweep.t_start = r.number("t_start", sweep.t_start);
  sweep.t_min = r.number("t_min", sweep.t_min);
  sweep.points = r.integer("points", sweep.points);
  sweep.scale = r.text("scale", sweep.scale);
  sweep.factor = r.number("factor", sweep.factor);
  r.finish();
  if (!(sweep.t_start > 0)) errs.push_back("sweep.t_start: must be > 0");
  if (!(sweep.t_min > 0)) errs.push_back("sweep.t_min: must be > 0");
  if (sweep.points < 2) errs.push_back("sweep.points: must be >= 2");
  if (sweep.scale != "geometric" && sweep.scale != "linear") {
    errs.push_back("sweep.scale: must be \"geometric\" or \"linear\"");
  }
  if (!(sweep.factor > 1.0)) errs.push_back("sweep.factor: must be > 1");
}

void parse_entropy(const json& j, EntropyScanBlock& scan,
                   std::vector<std::string>& errs) {
  ObjectReader r(j, "entropy_scan", errs);
  scan.n_min = r.integer("n_min", scan.n_min);
  scan.n_max = r.integer("n_max", scan.n_max);
  scan.alpha_compare = r.number("alpha_compare", scan.alpha_compare);
  scan.t_end = r.number("t_end", scan.t_end);
  scan.dt = r.number("dt", scan.dt);
  r.finish();
  if (scan.n_min < 1 || scan.n_max < scan.n_min) {
    errs.push_back("entropy_scan: need 1 <= n_min <= n_max");
  }
  if (scan.n_max > 7) {
    errs.push_back("entropy_scan.n_max: capacity ends at 7");
  }
  if (!(scan.alpha_compare >= 0 && scan.alpha_compare < 1)) {
    errs.push_back("entropy_scan.alpha_compare: must lie in [0, 1)");
  }
}

void parse_spectrum(const json& j, SpectrumBlock& spec,
                    std::vector<std::string>& errs) {
  ObjectReader r(j, "spectrum", errs);
  if (r.has("alphas")) {
    spec.alphas = r.number_list("alphas");
  }
  r.finish();
  if (spec.alphas.empty()) {
    errs.push_back("spectrum.alphas: must not be empty");
  }
  for (double a : spec.alphas) {
    if (!(a >= 0.0 && a <= 1.0)) {
      errs.push_back("spectrum.alphas: entries must lie in [0, 1]");
      break;
    }
  }
}

void parse_output(const json& j, OutputBlock& out,
                  std::vector<std::string>& errs) {
  ObjectReader r(j, "output", errs);
  out.directory = r.text("directory", out.directory);
  out.format = r.text("format", out.format);
  out.precision = r.integer("precision", out.precision);
  r.finish();
  if (out.format != "csv" && out.format != "json") {
    errs.push_back("output.format: must be \"csv\" or \"json\"");
  }
  if (out.precision < 1 || out.precision > 17) {
    errs.push_back("output.precision: must lie in [1, 17]");
  }
}

}  // namespace

RunConfig parse_config_text(const std::string& text,
                            const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(origin + ": " + e.what());
  }

  RunConfig cfg;
  std::vector<std::string> errs;
  ObjectReader top(doc, "config", errs);

  if (top.has("subcommand")) {
    cfg.subcommand = top.text("subcommand", "");
  }
  if (const json* m = top.object("model")) {
    parse_model(*m, cfg.model, errs);
  } else {
    errs.push_back("config.model: required block is missing");
  }
  if (const json* b = top.object("numeric")) parse_numeric(*b, cfg.numeric, errs);
  if (const json* b = top.object("initial_state")) {
    parse_initial_state(*b, cfg.initial_state, errs);
  }
  if (const json* b = top.object("sweep")) parse_sweep(*b, cfg.sweep, errs);
  if (const json* b = top.object("entropy_scan")) {
    parse_entropy(*b, cfg.entropy_scan, errs);
  }
  if (const json* b = top.object("spectrum")) {
    parse_spectrum(*b, cfg.spectrum, errs);
  }
  if (const json* b = top.object("output")) parse_output(*b, cfg.output, errs);
  top.finish();

  if (!errs.empty()) throw ValidationError(std::move(errs));
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config file not readable: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string echo_config(const RunConfig& cfg) {
  json j;
  if (!cfg.subcommand.empty()) j["subcommand"] = cfg.subcommand;

  json m;
  m["n_spins"] = cfg.model.n_spins;
  m["omega0"] = cfg.model.omega0;
  if (std::isinf(cfg.model.beta)) {
    m["beta"] = "inf";
  } else {
    m["beta"] = cfg.model.beta;
  }
  m["r1"] = cfg.model.r1;
  if (cfg.model.alpha_override) {
    m["alpha_override"] = *cfg.model.alpha_override;
  } else {
    m["bath_spacing"] = cfg.model.bath_spacing;
    m["bath_hopping"] = cfg.model.bath_hopping;
    if (cfg.model.uniform_separation) {
      m["uniform_separation"] = *cfg.model.uniform_separation;
    }
    if (!cfg.model.positions.empty()) m["positions"] = cfg.model.positions;
  }
  if (cfg.model.lamb_j0 != 0.0) m["lamb_j0"] = cfg.model.lamb_j0;
  if (cfg.model.lamb_k0 != 0.0) m["lamb_k0"] = cfg.model.lamb_k0;
  j["model"] = m;

  j["numeric"] = {{"tol_abs", cfg.numeric.tol_abs},
                  {"tol_rel", cfg.numeric.tol_rel},
                  {"kernel_tol", cfg.numeric.kernel_tol},
                  {"dt", cfg.numeric.dt},
                  {"t_max", cfg.numeric.t_max},
                  {"time_points", cfg.numeric.time_points}};

  json init;
  init["preset"] = dynamics::preset_name(cfg.initial_state.preset);
  if (!cfg.initial_state.bloch_vectors.empty()) {
    json b = json::array();
    for (const auto& v : cfg.initial_state.bloch_vectors) {
      b.push_back({v.x(), v.y(), v.z()});
    }
    init["bloch"] = b;
  }
  j["initial_state"] = init;

  j["sweep"] = {{"t_start", cfg.sweep.t_start},
                {"t_min", cfg.sweep.t_min},
                {"points", cfg.sweep.points},
                {"scale", cfg.sweep.scale},
                {"factor", cfg.sweep.factor}};
  j["entropy_scan"] = {{"n_min", cfg.entropy_scan.n_min},
                       {"n_max", cfg.entropy_scan.n_max},
                       {"alpha_compare", cfg.entropy_scan.alpha_compare},
                       {"t_end", cfg.entropy_scan.t_end},
                       {"dt", cfg.entropy_scan.dt}};
  j["spectrum"] = {{"alphas", cfg.spectrum.alphas}};
  j["output"] = {{"directory", cfg.output.directory},
                 {"format", cfg.output.format},
                 {"precision", cfg.output.precision}};
  return j.dump();
}

}  // namespace corrbath::config
