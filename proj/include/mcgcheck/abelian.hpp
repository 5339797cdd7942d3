#pragma once

// Abelian invariants of finite presentations via Smith normal form.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcgcheck/error.hpp"
#include "mcgcheck/schemas.hpp"
#include "mcgcheck/word.hpp"

namespace mcgcheck {

using Integer = boost::multiprecision::cpp_int;

struct IntegerMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<Integer>> e;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r, std::vector<Integer>(c)) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.e[i][i] = 1;
    return m;
  }

  Integer& operator()(std::size_t i, std::size_t j) { return e[i][j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return e[i][j]; }
  bool operator==(const IntegerMatrix&) const = default;
};

inline IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::ValidationError, "matrix shapes do not compose");
  IntegerMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

/// Row i = relator lhs * rhs^-1, column j = exponent sum of generator j.
inline IntegerMatrix relation_matrix(const std::vector<RelationInstance>& rels,
                                     const std::vector<GeneratorSymbol>& gens) {
  IntegerMatrix m(rels.size(), gens.size());
  for (std::size_t i = 0; i < rels.size(); ++i) {
    auto count = [&](const Word& w, int sign) {
      for (const auto& l : w) {
        auto it = std::find(gens.begin(), gens.end(), l.symbol);
        if (it == gens.end()) {
          throw Error(ErrorCode::UnknownGenerator, render(l.symbol) + " in " + rels[i].id + " is not a listed generator");
        }
        m(i, static_cast<std::size_t>(it - gens.begin())) += sign * l.exponent;
      }
    };
    count(rels[i].lhs, 1);
    count(rels[i].rhs, -1);
  }
  return m;
}

struct SmithForm {
  IntegerMatrix U, D, V;  // U * m * V == D
};

/// Pivot on the smallest entry, clear its row and column by division with
/// remainder, then fold in any entry the pivot fails to divide.
inline SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithForm s{IntegerMatrix::identity(m.rows), m, IntegerMatrix::identity(m.cols)};
  IntegerMatrix& a = s.D;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a.e[i], a.e[j]);
    std::swap(s.U.e[i], s.U.e[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a.e) std::swap(r[i], r[j]);
    for (auto& r : s.V.e) std::swap(r[i], r[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {  // row dst += q row src
    for (std::size_t j = 0; j < a.cols; ++j) a(dst, j) += q * a(src, j);
    for (std::size_t j = 0; j < s.U.cols; ++j) s.U(dst, j) += q * s.U(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < a.rows; ++i) a(i, dst) += q * a(i, src);
    for (std::size_t i = 0; i < s.V.rows; ++i) s.V(i, dst) += q * s.V(i, src);
  };

  std::size_t n = std::min(a.rows, a.cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      std::size_t pi = a.rows, pj = a.cols;
      for (std::size_t i = t; i < a.rows; ++i)
        for (std::size_t j = t; j < a.cols; ++j)
          if (a(i, j) != 0 && (pi == a.rows || abs(a(i, j)) < abs(a(pi, pj)))) pi = i, pj = j;
      if (pi == a.rows) return s;  // rest is zero
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows; ++i) {
        if (a(i, t) == 0) continue;
        add_row(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols; ++j) {
        if (a(t, j) == 0) continue;
        add_col(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (auto& x : a.e[t]) x = -x;
      for (auto& x : s.U.e[t]) x = -x;
    }
  }
  return s;
}

struct AbelianInvariants {
  std::vector<Integer> torsion;  // each >= 2, each dividing the next
  std::size_t free_rank = 0;
  bool operator==(const AbelianInvariants&) const = default;
};

inline AbelianInvariants invariants_of(const IntegerMatrix& m) {
  SmithForm s = smith_normal_form(m);
  AbelianInvariants out;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(m.rows, m.cols); ++i) {
    if (s.D(i, i) == 0) continue;
    ++rank;
    if (s.D(i, i) > 1) out.torsion.push_back(s.D(i, i));
  }
  out.free_rank = m.cols - rank;
  return out;
}

inline AbelianInvariants abelian_invariants(const std::vector<RelationInstance>& rels,
                                            const std::vector<GeneratorSymbol>& gens) {
  return invariants_of(relation_matrix(rels, gens));
}

/// `Z^r x Z/d1 x ...`; the trivial group prints as 0.
inline std::string render(const AbelianInvariants& a) {
  std::vector<std::string> parts;
  if (a.free_rank == 1) parts.push_back("Z");
  else if (a.free_rank > 1) parts.push_back("Z^" + std::to_string(a.free_rank));
  for (const auto& d : a.torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

}  // namespace mcgcheck
