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

// Embedding file pair.
//
//   PREFIX.mat        16-byte header, then rows * dim little-endian float32
//                     values in row-major order. Header: "EMB1", u32 rows,
//                     u32 dim, u32 reserved (written as 0, ignored on read).
//   PREFIX.idx.jsonl  one {"post_id": str, "row": int} per line. A leading
//                     line without "post_id" is metadata (e.g. pooling).

#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "emojilab/error.hpp"

namespace emojilab {

/// Post vectors keyed by post id. Row i of `values` belongs to ids[i].
struct EmbeddingStore {
  std::size_t dim = 0;
  std::vector<std::string> ids;
  std::vector<float> values;  // ids.size() * dim
  nlohmann::json metadata;

  std::unordered_map<std::string, std::size_t> index() const {
    std::unordered_map<std::string, std::size_t> out;
    out.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) out.emplace(ids[i], i);
    return out;
  }

  const float* row(std::size_t i) const { return values.data() + i * dim; }

  void validate() const {
    if (dim < 1) throw InputError("embedding dim must be at least 1");
    if (values.size() != ids.size() * dim) {
      throw InputError("embedding matrix size does not match ids x dim");
    }
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!seen.emplace(ids[i], i).second) {
        throw InputError("duplicate embedding post id '" + ids[i] + "'");
      }
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!std::isfinite(values[i])) {
        throw InputError("non-finite embedding value in row " +
                         std::to_string(i / dim) + " (post " + ids[i / dim] + ")");
      }
    }
  }
};

namespace detail {

inline constexpr std::array<char, 4> kEmbMagic = {'E', 'M', 'B', '1'};

inline void put_u32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                     static_cast<char>((v >> 16) & 0xff),
                     static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

inline std::uint32_t get_u32(const unsigned char* b) {
  return std::uint32_t{b[0]} | std::uint32_t{b[1]} << 8 |
         std::uint32_t{b[2]} << 16 | std::uint32_t{b[3]} << 24;
}

}  // namespace detail

inline std::string matrix_path(const std::string& prefix) { return prefix + ".mat"; }
inline std::string index_path(const std::string& prefix) {
  return prefix + ".idx.jsonl";
}

/// Writes the matrix of `store` in EMB1 layout and the id index.
inline void write_embeddings(const std::string& prefix, const EmbeddingStore& store) {
  store.validate();
  std::ofstream mat(matrix_path(prefix), std::ios::binary);
  if (!mat) throw InputError("cannot write " + matrix_path(prefix));
  mat.write(detail::kEmbMagic.data(), 4);
  detail::put_u32(mat, static_cast<std::uint32_t>(store.ids.size()));
  detail::put_u32(mat, static_cast<std::uint32_t>(store.dim));
  detail::put_u32(mat, 0);
  for (float f : store.values) {
    detail::put_u32(mat, std::bit_cast<std::uint32_t>(f));
  }
  std::ofstream idx(index_path(prefix));
  if (!idx) throw InputError("cannot write " + index_path(prefix));
  if (!store.metadata.is_null()) idx << store.metadata.dump() << '\n';
  for (std::size_t i = 0; i < store.ids.size(); ++i) {
    nlohmann::ordered_json j;
    j["post_id"] = store.ids[i];
    j["row"] = i;
    idx << j.dump() << '\n';
  }
}

/// Reads an embedding file pair. Rows not listed in the index are dropped;
/// index entries must reference distinct, in-range rows.
inline EmbeddingStore read_embeddings(const std::string& prefix) {
  const std::string mpath = matrix_path(prefix);
  std::ifstream mat(mpath, std::ios::binary);
  if (!mat) throw InputError("cannot open " + mpath);
  unsigned char header[16];
  if (!mat.read(reinterpret_cast<char*>(header), 16)) {
    throw InputError(mpath + ": truncated header");
  }
  if (std::memcmp(header, detail::kEmbMagic.data(), 4) != 0) {
    throw InputError(mpath + ": bad magic (expected EMB1)");
  }
  const std::uint32_t rows = detail::get_u32(header + 4);
  const std::uint32_t dim = detail::get_u32(header + 8);
  if (dim == 0) throw InputError(mpath + ": dim is 0");
  std::vector<unsigned char> raw(static_cast<std::size_t>(rows) * dim * 4);
  if (!mat.read(reinterpret_cast<char*>(raw.data()),
                static_cast<std::streamsize>(raw.size()))) {
    throw InputError(mpath + ": expected " + std::to_string(rows) + " x " +
                     std::to_string(dim) + " float32 values");
  }
  std::vector<float> all(static_cast<std::size_t>(rows) * dim);
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = std::bit_cast<float>(detail::get_u32(raw.data() + 4 * i));
  }

  const std::string ipath = index_path(prefix);
  std::ifstream idx(ipath);
  if (!idx) throw InputError("cannot open " + ipath);
  EmbeddingStore store;
  store.dim = dim;
  std::vector<bool> used(rows, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(idx, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(ipath + ": line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.is_object()) {
      throw InputError(ipath + ": line " + std::to_string(line_no) + ": not an object");
    }
    if (!j.contains("post_id")) {
      if (store.ids.empty() && store.metadata.is_null()) {
        store.metadata = std::move(j);
        continue;
      }
      throw InputError(ipath + ": line " + std::to_string(line_no) +
                       ": missing \"post_id\"");
    }
    const auto& id = j["post_id"];
    const auto& row = j.value("row", nlohmann::json());
    if (!(id.is_string() || id.is_number_integer()) || !row.is_number_integer()) {
      throw InputError(ipath + ": line " + std::to_string(line_no) +
                       ": expected {\"post_id\": str, \"row\": int}");
    }
    const auto r = row.get<long long>();
    if (r < 0 || r >= static_cast<long long>(rows)) {
      throw InputError(ipath + ": line " + std::to_string(line_no) + ": row " +
                       std::to_string(r) + " out of range");
    }
    if (used[static_cast<std::size_t>(r)]) {
      throw InputError(ipath + ": line " + std::to_string(line_no) + ": row " +
                       std::to_string(r) + " listed twice");
    }
    used[static_cast<std::size_t>(r)] = true;
    store.ids.push_back(id.is_string() ? id.get<std::string>()
                                       : std::to_string(id.get<long long>()));
    const float* src = all.data() + static_cast<std::size_t>(r) * dim;
    store.values.insert(store.values.end(), src, src + dim);
  }
  store.validate();
  return store;
}

}  // namespace emojilab
