// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/series_cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>

namespace dpz::series_cache {
namespace {

std::mutex g_mutex;
std::optional<std::filesystem::path> g_directory;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

constexpr int kVerifyOrder = 4;

}  // namespace

void set_directory(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(g_mutex);
  g_directory = std::move(dir);
}

std::optional<std::filesystem::path> directory() {
  {
    std::lock_guard lock(g_mutex);
    if (g_directory) return g_directory;
  }
  if (const char* env = std::getenv("DPZ_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::string Key::canonical() const {
  std::ostringstream out;
  out << formula << '|';
  for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : "") << params[i];
  out << '|';
  for (std::size_t i = 0; i < orders.size(); ++i) out << (i ? "," : "") << orders[i];
  out << '|' << (total_order ? std::to_string(*total_order) : "-");
  return out.str();
}

std::string Key::hash() const { return hex(fnv1a(canonical())); }

std::string serialize(const Key& key, const TruncatedSeries& series) {
  std::ostringstream body;
  body << "dpz-series 1\n";
  body << "key " << key.canonical() << '\n';
  body << "vars";
  for (const auto& v : series.vars()) body << ' ' << v;
  body << "\norders";
  for (int o : series.orders()) body << ' ' << o;
  body << "\ntotal " << (series.total_order() ? std::to_string(*series.total_order()) : "-") << '\n';
  body << "terms " << series.size() << '\n';
  for (const auto& [e, c] : series.terms()) {
    for (std::size_t i = 0; i < series.vars().size(); ++i) body << e[i] << ' ';
    body << c.get_str() << '\n';
  }
  const std::string text = body.str();
  return text + "checksum " + hex(fnv1a(text)) + '\n';
}

std::optional<TruncatedSeries> deserialize(const Key& key, const std::string& text) {
  const auto pos = text.rfind("checksum ");
  if (pos == std::string::npos) return std::nullopt;
  const std::string body = text.substr(0, pos);
  std::string stored = text.substr(pos + 9);
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
  if (stored != hex(fnv1a(body))) return std::nullopt;

  std::istringstream in(body);
  std::string line, word;
  if (!std::getline(in, line) || line != "dpz-series 1") return std::nullopt;
  if (!std::getline(in, line) || line != "key " + key.canonical()) return std::nullopt;

  std::vector<std::string> vars;
  if (!std::getline(in, line)) return std::nullopt;
  {
    std::istringstream ls(line);
    ls >> word;
    if (word != "vars") return std::nullopt;
    while (ls >> word) vars.push_back(word);
  }
  std::vector<int> orders;
  if (!std::getline(in, line)) return std::nullopt;
  {
    std::istringstream ls(line);
    ls >> word;
    if (word != "orders") return std::nullopt;
    int o;
    while (ls >> o) orders.push_back(o);
  }
  std::optional<int> total;
  if (!std::getline(in, line) || line.rfind("total ", 0) != 0) return std::nullopt;
  if (line.substr(6) != "-") total = std::stoi(line.substr(6));
  std::size_t count = 0;
  if (!std::getline(in, line) || line.rfind("terms ", 0) != 0) return std::nullopt;
  count = std::stoul(line.substr(6));

  try {
    TruncatedSeries s(vars, orders, total);
    for (std::size_t t = 0; t < count; ++t) {
      if (!std::getline(in, line)) return std::nullopt;
      std::istringstream ls(line);
      TruncatedSeries::Exponents e{};
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!(ls >> e[i])) return std::nullopt;
      }
      std::string coeff;
      if (!(ls >> coeff)) return std::nullopt;
      Rational c(coeff);
      c.canonicalize();
      if (!s.in_window(e)) return std::nullopt;
      s.add_term(e, c);
    }
    return s;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

TruncatedSeries fetch(const Key& key, const Compute& compute) {
  const auto dir = directory();
  if (!dir) return compute(key.orders, key.total_order);
  const auto path = *dir / (key.hash() + ".series");

  std::ifstream in(path);
  if (in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (auto loaded = deserialize(key, buffer.str())) {
      // Re-verify against a cheap recomputation on a small window.
      std::vector<int> small(key.orders);
      for (int& o : small) o = std::min(o, kVerifyOrder);
      const TruncatedSeries fresh = compute(small, key.total_order);
      const TruncatedSeries loaded_small = loaded->truncated(small, key.total_order);
      if (loaded_small == fresh) return *loaded;
    }
  }

  TruncatedSeries result = compute(key.orders, key.total_order);
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (ec) return result;
  // Write to a unique temporary and rename so concurrent writers never expose
  // a partial file.
  thread_local std::mt19937_64 rng{std::random_device{}()};
  const auto tmp = *dir / (key.hash() + "." + hex(rng()) + ".tmp");
  {
    std::ofstream out(tmp);
    out << serialize(key, result);
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return result;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
  return result;
}

}  // namespace dpz::series_cache
