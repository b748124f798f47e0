// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "dpz/errors.hpp"

namespace dpz {

Polynomial::Polynomial(const Rational& c) { add({}, c); }

Polynomial Polynomial::variable(const std::string& name) {
  if (name.empty()) throw InputError("variable names must be nonempty");
  Polynomial p;
  p.add({{name, 1}}, 1);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational Polynomial::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  Polynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      out.add(m, ca * cb);
    }
  }
  return *this = std::move(out);
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::string, Rational>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    Rational coeff = c;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest[v] = e;
        continue;
      }
      for (int i = 0; i < e; ++i) coeff *= it->second;
    }
    out.add(rest, coeff);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first, then lexicographic.
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (const auto& [v, e] : a.first) da += e;
    for (const auto& [v, e] : b.first) db += e;
    return da > db;
  });
  for (const auto& [m, c] : sorted) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool has_var = false;
    for (const auto& [v, e] : m) {
      if (has_var) mono << '*';
      mono << v;
      if (e != 1) mono << '^' << e;
      has_var = true;
    }
    if (!has_var) out << mag.get_str();
    else if (mag == 1) out << mono.str();
    else out << mag.get_str() << '*' << mono.str();
  }
  return out.str();
}

Polynomial determinant(const PolynomialMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("determinant needs a square matrix");
  }
  if (n == 0) return Polynomial(1);
  if (n > 20) throw InputError("matrix too large for symbolic determinant");
  // minor(row r, columns mask) where mask has n - r bits: the determinant of
  // rows r..n-1 restricted to the columns in mask.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::size_t, std::uint32_t)> minor = [&](std::size_t r, std::uint32_t mask) -> Polynomial {
    if (r == n) return Polynomial(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial acc;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      if (!m[r][c].is_zero()) {
        Polynomial term = m[r][c] * minor(r + 1, mask & ~(1u << c));
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor(0, (1u << n) - 1u);
}

}  // namespace dpz
