// Copyright 2026 The emojilab Authors.
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

// Run manifests: everything needed to reproduce a report.
//
// A manifest records the command line, the effective configuration, the
// master seed, SHA-256 digests of every input file, the Unicode data
// version and the toolkit version. The wall-clock duration is the only
// field allowed to differ between two runs of the same manifest.
//
// Digests use OpenSSL's EVP interface, so this header needs libcrypto.

#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>
#include <openssl/evp.h>

#include "emojilab/error.hpp"
#include "emojilab/unicode/properties.hpp"

namespace emojilab::report {

inline constexpr const char* kToolkitVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Lower-case hex SHA-256 of a file's bytes.
inline std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error("sha256: digest initialisation failed");
  }
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0 &&
        EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount())) != 1) {
      throw Error("sha256: digest update failed");
    }
  }
  if (in.bad()) throw InputError("read error on " + path);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md;
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw Error("sha256: digest finalisation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[md[i] >> 4]);
    hex.push_back(kHex[md[i] & 15]);
  }
  return hex;
}

struct InputDigest {
  std::string path;
  std::string sha256;
};

struct RunManifest {
  std::vector<std::string> command;  // arguments after the program name
  Json config = Json::object();
  std::uint64_t seed = 0;
  std::vector<InputDigest> inputs;
  std::string unicode_version = unicode::kUnicodeVersion;
  std::string toolkit_version = kToolkitVersion;
  std::optional<double> wall_clock_seconds;

  void add_input(const std::string& path) { inputs.push_back({path, sha256_file(path)}); }

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["config"] = config;
    j["seed"] = seed;
    Json in = Json::array();
    for (const auto& d : inputs) in.push_back({{"path", d.path}, {"sha256", d.sha256}});
    j["inputs"] = std::move(in);
    j["unicode_version"] = unicode_version;
    j["toolkit_version"] = toolkit_version;
    j["wall_clock_seconds"] =
        wall_clock_seconds ? Json(*wall_clock_seconds) : Json(nullptr);
    return j;
  }

  static RunManifest from_json(const Json& j) {
    try {
      RunManifest m;
      m.command = j.at("command").get<std::vector<std::string>>();
      m.config = j.value("config", Json::object());
      m.seed = j.at("seed").get<std::uint64_t>();
      for (const auto& d : j.at("inputs")) {
        m.inputs.push_back({d.at("path").get<std::string>(), d.at("sha256").get<std::string>()});
      }
      m.unicode_version = j.at("unicode_version").get<std::string>();
      m.toolkit_version = j.at("toolkit_version").get<std::string>();
      if (j.contains("wall_clock_seconds") && j["wall_clock_seconds"].is_number()) {
        m.wall_clock_seconds = j["wall_clock_seconds"].get<double>();
      }
      return m;
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed manifest: ") + e.what());
    }
  }

  /// Throws InputError naming the first input whose bytes changed, or when
  /// the manifest was written by another toolkit or data version.
  void verify_inputs() const {
    if (toolkit_version != kToolkitVersion) {
      throw InputError("manifest written by toolkit " + toolkit_version + ", this is " +
                       kToolkitVersion);
    }
    if (unicode_version != unicode::kUnicodeVersion) {
      throw InputError("manifest uses Unicode " + unicode_version + ", this build has " +
                       unicode::kUnicodeVersion);
    }
    for (const auto& d : inputs) {
      if (sha256_file(d.path) != d.sha256) {
        throw InputError("input " + d.path + " changed since the report was written");
      }
    }
  }
};

/// The report with its wall-clock field blanked, for reproducibility checks.
inline Json without_wall_clock(Json report) {
  if (report.contains("manifest")) report["manifest"]["wall_clock_seconds"] = nullptr;
  return report;
}

}  // namespace emojilab::report
