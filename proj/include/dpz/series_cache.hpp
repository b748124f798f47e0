// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dpz/series.hpp"

namespace dpz::series_cache {

/// Directory for cached expansions; nullopt disables the disk cache unless
/// DPZ_CACHE_DIR is set in the environment.
void set_directory(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> directory();

/// Identifies an expansion: formula name, integer parameters and window.
struct Key {
  std::string formula;
  std::vector<std::int64_t> params;
  std::vector<int> orders;
  std::optional<int> total_order;

  std::string canonical() const;
  /// FNV-1a 64 of canonical(), in hex.
  std::string hash() const;
};

using Compute = std::function<TruncatedSeries(const std::vector<int>& orders, std::optional<int> total_order)>;

/// Returns the expansion for `key`, loading it from disk when present and
/// valid. A stored file is accepted only if its checksum matches and it agrees
/// with a fresh small-window computation; otherwise it is rebuilt.
TruncatedSeries fetch(const Key& key, const Compute& compute);

/// Serialisation used for the cache files.
std::string serialize(const Key& key, const TruncatedSeries& series);
/// nullopt on any syntax, key or checksum mismatch.
std::optional<TruncatedSeries> deserialize(const Key& key, const std::string& text);

}  // namespace dpz::series_cache
