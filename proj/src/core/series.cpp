// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "dpz/errors.hpp"

namespace dpz {

namespace {

std::optional<int> min_total(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

TruncatedSeries::Exponents pad(const std::vector<int>& e, std::size_t nvars) {
  if (e.size() != nvars) {
    throw InputError("expected " + std::to_string(nvars) + " exponents, got " + std::to_string(e.size()));
  }
  TruncatedSeries::Exponents out{};
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw InputError("negative exponent");
    out[i] = e[i];
  }
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<std::string> vars, std::vector<int> orders, std::optional<int> total_order)
    : vars_(std::move(vars)), orders_(std::move(orders)), total_order_(total_order) {
  if (vars_.empty() || vars_.size() > kMaxVars) throw InputError("series need 1 to 3 variables");
  if (orders_.size() != vars_.size()) throw InputError("one truncation order per variable is required");
  for (int o : orders_) {
    if (o <= 0) throw InputError("truncation orders must be positive");
  }
  if (total_order_ && *total_order_ <= 0) throw InputError("total truncation order must be positive");
}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> vars, std::vector<int> orders, const Rational& c,
                                          std::optional<int> total_order) {
  TruncatedSeries s(std::move(vars), std::move(orders), total_order);
  s.add_term(Exponents{}, c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::vector<std::string> vars, std::vector<int> orders,
                                          const std::vector<int>& exponents, const Rational& c,
                                          std::optional<int> total_order) {
  TruncatedSeries s(std::move(vars), std::move(orders), total_order);
  s.add_term(pad(exponents, s.vars_.size()), c);
  return s;
}

TruncatedSeries TruncatedSeries::geometric(std::vector<std::string> vars, std::vector<int> orders,
                                           const std::vector<int>& exponents, std::optional<int> total_order) {
  TruncatedSeries s(std::move(vars), std::move(orders), total_order);
  const Exponents step = pad(exponents, s.vars_.size());
  if (std::all_of(step.begin(), step.end(), [](int v) { return v == 0; })) {
    throw DivergenceError("geometric series of a constant monomial diverges");
  }
  Exponents e{};
  while (s.in_window(e)) {
    s.terms_.emplace(e, 1);
    for (int i = 0; i < kMaxVars; ++i) e[i] += step[i];
  }
  return s;
}

int TruncatedSeries::total_degree(const Exponents& e) const {
  int t = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) t += e[i];
  return t;
}

bool TruncatedSeries::in_window(const Exponents& e) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (e[i] < 0 || e[i] >= orders_[i]) return false;
  }
  return !total_order_ || total_degree(e) < *total_order_;
}

Rational TruncatedSeries::coefficient(const std::vector<int>& exponents) const {
  const Exponents e = pad(exponents, vars_.size());
  if (!in_window(e)) {
    std::ostringstream msg;
    msg << "coefficient of";
    for (std::size_t i = 0; i < vars_.size(); ++i) msg << ' ' << vars_[i] << '^' << e[i];
    msg << " lies outside the truncation window";
    throw TruncationError(msg.str());
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Exponents& e, const Rational& c) {
  if (c == 0 || !in_window(e)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::empty_like(const TruncatedSeries& other) const {
  if (vars_ != other.vars_) throw InputError("series have different variables");
  std::vector<int> orders(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) orders[i] = std::min(orders_[i], other.orders_[i]);
  return TruncatedSeries(vars_, std::move(orders), min_total(total_order_, other.total_order_));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  TruncatedSeries out = empty_like(other);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return *this = std::move(out);
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  TruncatedSeries out = empty_like(other);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return *this = std::move(out);
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a.empty_like(b);
  const int first_bound = out.orders_[0];
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    if (ea[0] >= first_bound) break;
    for (const auto& [eb, cb] : b.terms_) {
      // terms are sorted by the first exponent
      if (ea[0] + eb[0] >= first_bound) break;
      TruncatedSeries::Exponents e;
      for (int i = 0; i < TruncatedSeries::kMaxVars; ++i) e[i] = ea[i] + eb[i];
      if (!out.in_window(e)) continue;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = out.terms_.emplace(e, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TruncatedSeries TruncatedSeries::power(long n) const {
  if (n < 0) throw InputError("negative power; use invert()");
  TruncatedSeries result = constant(vars_, orders_, 1, total_order_);
  TruncatedSeries base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::invert() const {
  const Rational c0 = constant_term();
  if (c0 == 0) throw InputError("series with zero constant term is not invertible");
  // a = c0 (1 + r), r without constant term; a^{-1} = c0^{-1} sum_k (-r)^k.
  // r is nilpotent modulo the window, so the loop terminates.
  TruncatedSeries minus_r(vars_, orders_, total_order_);
  for (const auto& [e, c] : terms_) {
    if (e == Exponents{}) continue;
    minus_r.add_term(e, -c / c0);
  }
  TruncatedSeries result = constant(vars_, orders_, 1, total_order_);
  TruncatedSeries power_term = result;
  while (true) {
    power_term = power_term * minus_r;
    if (power_term.is_zero()) break;
    result += power_term;
  }
  Rational inv = 1 / c0;
  result *= inv;
  return result;
}

TruncatedSeries TruncatedSeries::truncated(const std::vector<int>& orders, std::optional<int> total_order) const {
  TruncatedSeries window(vars_, orders, total_order);
  TruncatedSeries out = empty_like(window);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.vars_ == b.vars_ && a.orders_ == b.orders_ && a.total_order_ == b.total_order_ && a.terms_ == b.terms_;
}

std::string TruncatedSeries::to_string() const {
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [this](const auto& x, const auto& y) {
    int dx = total_degree(x.first), dy = total_degree(y.first);
    if (dx != dy) return dx < dy;
    return x.first > y.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono << '*';
      mono << vars_[i];
      if (e[i] != 1) mono << '^' << e[i];
      has_var = true;
    }
    if (!has_var) out << mag.get_str();
    else if (mag == 1) out << mono.str();
    else out << mag.get_str() << '*' << mono.str();
  }
  if (first) out << '0';
  out << " + O(";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out << ", ";
    out << vars_[i] << '^' << orders_[i];
  }
  if (total_order_) out << "; total " << *total_order_;
  out << ')';
  return out.str();
}

}  // namespace dpz
