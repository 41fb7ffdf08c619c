#ifndef LIEINDEX_LINALG_HPP
#define LIEINDEX_LINALG_HPP

// Exact dense linear algebra over the rationals: reduced row echelon form,
// kernels, canonical subspace bases, Zassenhaus intersection, and a
// fraction-free (Bareiss) integer rank for the sampling-heavy paths.
// Everything is deterministic: pivots are chosen first-nonzero, bases come
// out in RREF with unit pivots.

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lieindex/rational.hpp"

namespace lieindex {

class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QVec row(std::size_t i) const {
    return QVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const QVec& v) {
    assert(v.size() == cols_);
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  QVec apply(const QVec& v) const {
    if (v.size() != cols_) throw std::domain_error("matrix-vector size mismatch");
    QVec out(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
  }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// In-place Gauss-Jordan. Returns the rank; pivot columns appended to
/// *pivots when given.
inline std::size_t rref_in_place(QMatrix& m, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = 1 / m.at(r, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return r;
}

inline std::size_t rank(QMatrix m) { return rref_in_place(m); }

/// Canonical kernel basis of m (right null space): one vector per free
/// column, 1 in the free coordinate, pivots filled by back-substitution.
inline std::vector<QVec> kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t rk = rref_in_place(r, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Canonical (RREF) basis of the span of the given vectors.
inline std::vector<QVec> echelon_basis(const std::vector<QVec>& vectors) {
  if (vectors.empty()) return {};
  std::size_t n = vectors[0].size();
  QMatrix m(vectors.size(), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw std::domain_error("inconsistent vector sizes");
    m.set_row(i, vectors[i]);
  }
  std::size_t rk = rref_in_place(m);
  std::vector<QVec> basis;
  basis.reserve(rk);
  for (std::size_t i = 0; i < rk; ++i) basis.push_back(m.row(i));
  return basis;
}

/// Coordinates of v over an RREF basis, or nullopt when v is outside the span.
inline std::optional<QVec> coords_in_span(const std::vector<QVec>& rref_basis,
                                          const QVec& v) {
  QVec rem = v;
  QVec coeff(rref_basis.size(), Rat(0));
  for (std::size_t i = 0; i < rref_basis.size(); ++i) {
    std::size_t piv = 0;
    while (piv < rref_basis[i].size() && rref_basis[i][piv] == 0) ++piv;
    assert(piv < rref_basis[i].size());
    if (rem[piv] == 0) continue;
    coeff[i] = rem[piv];
    for (std::size_t j = piv; j < rem.size(); ++j)
      if (rref_basis[i][j] != 0) rem[j] -= coeff[i] * rref_basis[i][j];
  }
  if (!is_zero(rem)) return std::nullopt;
  return coeff;
}

inline bool in_span(const std::vector<QVec>& rref_basis, const QVec& v) {
  return coords_in_span(rref_basis, v).has_value();
}

/// Basis of U + V (inputs need not be echelonized).
inline std::vector<QVec> span_sum(const std::vector<QVec>& u, const std::vector<QVec>& v) {
  std::vector<QVec> all = u;
  all.insert(all.end(), v.begin(), v.end());
  return echelon_basis(all);
}

/// Basis of U ∩ V by the Zassenhaus block trick: rref of [u|u; v|0]; rows with
/// zero left half carry an intersection basis in the right half.
inline std::vector<QVec> span_intersection(const std::vector<QVec>& u,
                                           const std::vector<QVec>& v) {
  if (u.empty() || v.empty()) return {};
  std::size_t n = u[0].size();
  QMatrix m(u.size() + v.size(), 2 * n);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = u[i][j];
      m.at(i, n + j) = u[i][j];
    }
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(u.size() + i, j) = v[i][j];
  std::size_t rk = rref_in_place(m);
  std::vector<QVec> inter;
  for (std::size_t i = 0; i < rk; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (m.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    QVec w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = m.at(i, n + j);
    inter.push_back(std::move(w));
  }
  return echelon_basis(inter);
}

/// Incrementally maintained RREF span: rows stay mutually reduced with unit
/// pivots, insertion is O(rows * n).
class RrefSpan {
 public:
  const std::vector<QVec>& rows() const { return rows_; }
  std::size_t dim() const { return rows_.size(); }

  /// Reduces v against the current rows in place.
  void reduce(QVec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& lead = v[pivots_[i]];
      if (lead == 0) continue;
      Rat f = lead;
      for (std::size_t j = pivots_[i]; j < v.size(); ++j)
        if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
  }

  bool contains(QVec v) const {
    reduce(v);
    return is_zero(v);
  }

  /// Reduce-then-insert; returns false when v was already in the span.
  bool insert(QVec v) {
    reduce(v);
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    Rat inv = 1 / v[piv];
    for (std::size_t j = piv; j < v.size(); ++j) v[j] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][piv] == 0) continue;
      Rat f = rows_[i][piv];
      for (std::size_t j = piv; j < v.size(); ++j)
        if (v[j] != 0) rows_[i][j] -= f * v[j];
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < piv) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, piv);
    return true;
  }

 private:
  std::vector<QVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// One solution of A x = b (free coordinates set to 0), or nullopt when
/// inconsistent.
inline std::optional<QVec> solve_linear(const QMatrix& a, const QVec& b) {
  if (b.size() != a.rows()) throw std::domain_error("solve: size mismatch");
  QMatrix m(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    m.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t rk = rref_in_place(m, &pivots);
  for (std::size_t i = 0; i < rk; ++i)
    if (pivots[i] == a.cols()) return std::nullopt;  // pivot in the RHS column
  QVec x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = m.at(i, a.cols());
  return x;
}

/// Fraction-free rank of an integer matrix (Bareiss). Consumes its argument.
/// This is the hot path for sampled Kirillov ranks, where entries are ~2^35
/// and rational elimination would spend its time in gcds.
inline std::size_t bareiss_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int t = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

/// Clears denominators row-by-row and delegates to the integer path.
/// Row scaling leaves the rank unchanged.
inline std::size_t exact_rank(const QMatrix& m) {
  std::vector<std::vector<Int>> z(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat scaled = m.at(i, j) * Rat(den);
      assert(scaled.get_den() == 1);
      z[i][j] = scaled.get_num();
    }
  }
  return bareiss_rank(std::move(z));
}

}  // namespace lieindex

#endif
