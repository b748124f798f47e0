// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "dpz/rational.hpp"

namespace dpz {

/// Polynomial over Q in named commuting indeterminates.
class Polynomial {
 public:
  /// Variable name -> positive exponent.
  using Monomial = std::map<std::string, int>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(std::int64_t c) : Polynomial(make_rational(c)) {}
  static Polynomial variable(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term.
  Rational constant() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Substitutes values for some variables.
  Polynomial substitute(const std::map<std::string, Rational>& values) const;

  /// e.g. "-2*degtau + u1*n2^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// Exact determinant of a square polynomial matrix by Laplace expansion along
/// rows with memoisation over column subsets (n <= 20).
Polynomial determinant(const PolynomialMatrix& m);

}  // namespace dpz
