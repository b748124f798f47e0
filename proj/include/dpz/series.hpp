// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpz/rational.hpp"

namespace dpz {

/// Sparse multivariate power series over Q in at most three variables, known
/// only below per-variable truncation bounds (and optionally below a bound on
/// the total degree). A coefficient outside the window is undefined, and asking
/// for it throws TruncationError instead of returning 0.
///
/// Invariants: no stored exponent lies outside the window; no stored
/// coefficient is zero; results of binary operations carry the pointwise
/// minimum of the operands' bounds.
class TruncatedSeries {
 public:
  static constexpr int kMaxVars = 3;
  using Exponents = std::array<int, kMaxVars>;
  using Terms = std::map<Exponents, Rational>;

  /// `orders[i]` is the exclusive bound for variable i; all must be positive.
  TruncatedSeries(std::vector<std::string> vars, std::vector<int> orders,
                  std::optional<int> total_order = std::nullopt);

  static TruncatedSeries constant(std::vector<std::string> vars, std::vector<int> orders, const Rational& c,
                                  std::optional<int> total_order = std::nullopt);

  static TruncatedSeries monomial(std::vector<std::string> vars, std::vector<int> orders,
                                  const std::vector<int>& exponents, const Rational& c = 1,
                                  std::optional<int> total_order = std::nullopt);

  /// sum_{l >= 0} m^l for the monomial m = x^exponents. Throws DivergenceError
  /// if m is the constant monomial.
  static TruncatedSeries geometric(std::vector<std::string> vars, std::vector<int> orders,
                                   const std::vector<int>& exponents,
                                   std::optional<int> total_order = std::nullopt);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& orders() const { return orders_; }
  std::optional<int> total_order() const { return total_order_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool in_window(const Exponents& e) const;

  /// Exact coefficient; 0 when absent. Throws TruncationError outside the window
  /// and InputError on wrong arity or negative exponents.
  Rational coefficient(const std::vector<int>& exponents) const;
  Rational constant_term() const;

  /// Adds c * x^e, dropping it if outside the window.
  void add_term(const Exponents& e, const Rational& c);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }

  TruncatedSeries power(long n) const;

  /// Two-sided inverse up to truncation. Throws InputError unless the constant
  /// term is nonzero.
  TruncatedSeries invert() const;

  /// The same series viewed with smaller bounds.
  TruncatedSeries truncated(const std::vector<int>& orders, std::optional<int> total_order = std::nullopt) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Terms ordered by total degree, e.g. "1 + 2*z^2*t + z^4*t^2 + O(z^6, t^3)".
  std::string to_string() const;

 private:
  // Returns the combined window of two operands after checking variables agree.
  TruncatedSeries empty_like(const TruncatedSeries& other) const;
  int total_degree(const Exponents& e) const;

  std::vector<std::string> vars_;
  std::vector<int> orders_;
  std::optional<int> total_order_;
  Terms terms_;
};

}  // namespace dpz
