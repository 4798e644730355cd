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

#include "corrbath/output.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "corrbath/errors.hpp"

namespace corrbath::output {

std::string format_double(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

std::string render_csv(const Table& table) {
  std::string out;
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

Manifest::Manifest(std::string subcommand, std::string config_echo_json)
    : subcommand_(std::move(subcommand)),
      config_echo_(std::move(config_echo_json)) {}

void Manifest::write_file(const std::string& dir, const std::string& name,
                          const std::string& content, size_t rows) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << content;
  out.close();
  files_.push_back({name, content.size(), fnv1a64_hex(content), rows});
}

void Manifest::note(const std::string& key, const std::string& value) {
  notes_.emplace_back(key, value);
}

void Manifest::note(const std::string& key, double value) {
  notes_.emplace_back(key, format_double(value, 17));
}

void Manifest::finalize(const std::string& dir, double wall_seconds) {
  nlohmann::json j;
  j["artifact"] = "corrbath";
  j["version"] = "0.1.0";
  j["schema_version"] = 1;
  const auto now = std::chrono::system_clock::now();
  j["created_unix"] =
      std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
          .count();
  j["subcommand"] = subcommand_;
  j["config"] = nlohmann::json::parse(config_echo_);
  j["wall_seconds"] = wall_seconds;
  for (const auto& [k, v] : notes_) j["notes"][k] = v;
  for (const auto& f : files_) {
    j["files"].push_back({{"name", f.name},
                          {"bytes", f.bytes},
                          {"fnv1a64", f.checksum},
                          {"rows", f.rows}});
  }
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::ofstream out(fs::path(dir) / "manifest.json", std::ios::binary);
  if (!out) throw ValidationError("cannot write manifest.json in " + dir);
  out << j.dump(2) << '\n';
}

}  // namespace corrbath::output
