#ifndef LIEINDEX_TESTS_ORACLES_HPP
#define LIEINDEX_TESTS_ORACLES_HPP

// Independent reference implementations used only by the tests. Each one
// deliberately takes a different algorithmic route from the library so the
// two sides can cross-check each other:
//   - roots via the Weyl reflection orbit instead of string closure,
//   - rank via plain last-pivot Gaussian elimination instead of RREF/Bareiss,
//   - minimal polynomial via dependence of vectorized matrix powers instead
//     of Krylov chains.

#include <map>
#include <set>
#include <vector>

#include "lieindex/linalg.hpp"
#include "lieindex/polynomial.hpp"
#include "lieindex/rational.hpp"

namespace oracles {

using lieindex::QMatrix;
using lieindex::QPoly;
using lieindex::QVec;
using lieindex::Rat;

/// All roots of the system with Cartan matrix C (C[i][j] = <alpha_j, alpha_i^vee>),
/// as the closure of the simple roots under the simple reflections
/// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
inline std::set<std::vector<int>> reflection_orbit_roots(
    const std::vector<std::vector<int>>& cartan) {
  const std::size_t l = cartan.size();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> a(l, 0);
    a[i] = 1;
    roots.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& b : frontier) {
      for (std::size_t i = 0; i < l; ++i) {
        long long pair = 0;
        for (std::size_t j = 0; j < l; ++j)
          pair += static_cast<long long>(b[j]) * cartan[i][j];
        std::vector<int> r = b;
        r[i] -= static_cast<int>(pair);
        if (roots.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return roots;
}

inline std::set<std::vector<int>> reflection_orbit_positive(
    const std::vector<std::vector<int>>& cartan) {
  std::set<std::vector<int>> pos;
  for (const std::vector<int>& r : reflection_orbit_roots(cartan)) {
    bool nonneg = true;
    for (int c : r) nonneg = nonneg && c >= 0;
    if (nonneg) pos.insert(r);
  }
  return pos;
}

/// Plain Gaussian elimination rank, choosing the *last* nonzero pivot row;
/// shares no code with the library's RREF or Bareiss paths.
inline std::size_t gauss_rank(std::vector<QVec> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = rows; i-- > r;)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t gauss_rank(const QMatrix& a) {
  std::vector<QVec> m;
  for (std::size_t i = 0; i < a.rows(); ++i) m.push_back(a.row(i));
  return gauss_rank(std::move(m));
}

/// Minimal polynomial by brute force: stack I, A, A^2, ... as n^2-vectors and
/// return the first monic dependence.
inline QPoly minpoly_by_powers(const QMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<QVec> powers;  // vectorized A^k
  QMatrix pk(n, n);
  for (std::size_t i = 0; i < n; ++i) pk.at(i, i) = 1;
  for (std::size_t deg = 0;; ++deg) {
    QVec flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = pk.at(i, j);
    powers.push_back(flat);
    // look for c_0..c_deg with sum c_k A^k = 0, c_deg = 1
    QMatrix sys(n * n, deg);
    QVec rhs(n * n);
    for (std::size_t k = 0; k < deg; ++k)
      for (std::size_t e = 0; e < n * n; ++e) sys.at(e, k) = powers[k][e];
    for (std::size_t e = 0; e < n * n; ++e) rhs[e] = -flat[e];
    if (deg > 0) {
      if (auto sol = lieindex::solve_linear(sys, rhs)) {
        QVec coeffs = *sol;
        coeffs.push_back(Rat(1));
        return QPoly(std::move(coeffs));
      }
    }
    // next power
    QMatrix nxt(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat s(0);
        for (std::size_t k = 0; k < n; ++k)
          if (a.at(i, k) != 0 && pk.at(k, j) != 0) s += a.at(i, k) * pk.at(k, j);
        nxt.at(i, j) = s;
      }
    pk = std::move(nxt);
  }
}

/// Componentwise maximum of a set of coordinate vectors, if one of the
/// members dominates all others; empty optional otherwise.
inline std::optional<std::vector<int>> dominant_member(
    const std::vector<std::vector<int>>& vecs) {
  for (const std::vector<int>& cand : vecs) {
    bool dominates = true;
    for (const std::vector<int>& other : vecs)
      for (std::size_t i = 0; i < cand.size() && dominates; ++i)
        if (other[i] > cand[i]) dominates = false;
    if (dominates) return cand;
  }
  return std::nullopt;
}

}  // namespace oracles

#endif
