#ifndef LIEINDEX_POLYNOMIAL_HPP
#define LIEINDEX_POLYNOMIAL_HPP

// Univariate polynomials over the rationals, just enough for exact minimal
// polynomials and the squarefree (gcd with derivative) test that decides
// semisimplicity of adjoint operators.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieindex/linalg.hpp"
#include "lieindex/rational.hpp"

namespace lieindex {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(QVec coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly one() { return QPoly(QVec{Rat(1)}); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const QVec& coeffs() const { return c_; }

  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  QPoly monic() const {
    if (is_zero()) return *this;
    QPoly p = *this;
    Rat inv = 1 / leading();
    for (Rat& x : p.c_) x *= inv;
    return p;
  }

  QPoly derivative() const {
    if (c_.size() <= 1) return QPoly();
    QVec d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return QPoly(std::move(d));
  }

  QPoly operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    QVec p(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(p));
  }

  QPoly operator+(const QPoly& o) const {
    QVec p(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) p[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) p[i] += o.c_[i];
    return QPoly(std::move(p));
  }

  QPoly operator-(const QPoly& o) const {
    QVec p(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) p[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) p[i] -= o.c_[i];
    return QPoly(std::move(p));
  }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    QPoly r = *this, q;
    q.c_.assign(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      std::size_t shift = r.degree() - d.degree();
      Rat f = r.leading() / d.leading();
      q.c_[shift] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= f * d.c_[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      if (c_[k] == 0) continue;
      if (!s.empty()) s += " + ";
      s += to_string(c_[k]);
      if (k > 0) s += "*t^" + std::to_string(k);
    }
    return s;
  }

 private:
  QVec c_;  // c_[k] is the coefficient of t^k

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

inline QPoly gcd_monic(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline bool is_squarefree(const QPoly& p) {
  if (p.degree() <= 1) return true;
  return gcd_monic(p, p.derivative()).degree() == 0;
}

inline QPoly lcm_monic(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  QPoly g = gcd_monic(a, b);
  auto [q, r] = (a * b).divmod(g);
  assert(r.is_zero());
  return q.monic();
}

/// Exact minimal polynomial of a square matrix: lcm over cyclic subspaces.
/// Each seed vector extends a Krylov chain until it hits a dependence; seeds
/// already inside the accumulated invariant span are skipped, so the lcm of
/// the chain polynomials annihilates everything seen.
inline QPoly minimal_polynomial(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::domain_error("minimal polynomial of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return QPoly::one();

  RrefSpan invariant;  // union of the cyclic subspaces seen so far
  QPoly m = QPoly::one();

  for (std::size_t seed = 0; seed < n; ++seed) {
    QVec v(n, Rat(0));
    v[seed] = 1;
    if (invariant.contains(v)) continue;

    // chain[k] = A^k v, reduced incrementally; combo rows track the
    // representation of each reduced row over the original chain.
    std::vector<QVec> chain_rref;
    std::vector<QVec> combo;
    QVec w = v;
    std::size_t k = 0;
    QPoly local;
    while (true) {
      QVec rem = w;
      QVec rep(k + 1, Rat(0));
      rep[k] = 1;
      for (std::size_t i = 0; i < chain_rref.size(); ++i) {
        std::size_t piv = 0;
        while (piv < n && chain_rref[i][piv] == 0) ++piv;
        if (rem[piv] == 0) continue;
        Rat f = rem[piv];
        for (std::size_t j = 0; j < n; ++j) rem[j] -= f * chain_rref[i][j];
        for (std::size_t j = 0; j < combo[i].size(); ++j) rep[j] -= f * combo[i][j];
      }
      if (is_zero(rem)) {
        // A^k v = -sum_{i<k} rep[i]/rep[k] ... rep encodes the dependence:
        // sum_i rep[i] A^i v = 0 with rep[k] = 1, so rep is the local minimal
        // polynomial of v.
        local = QPoly(std::move(rep));
        break;
      }
      // normalize rem to unit pivot and record
      std::size_t piv = 0;
      while (rem[piv] == 0) ++piv;
      Rat inv = 1 / rem[piv];
      for (std::size_t j = 0; j < n; ++j) rem[j] *= inv;
      for (std::size_t j = 0; j < rep.size(); ++j) rep[j] *= inv;
      // keep earlier rows reduced above this pivot for clean membership tests
      for (std::size_t i = 0; i < chain_rref.size(); ++i) {
        if (chain_rref[i][piv] == 0) continue;
        Rat f = chain_rref[i][piv];
        for (std::size_t j = 0; j < n; ++j) chain_rref[i][j] -= f * rem[j];
        combo[i].resize(std::max(combo[i].size(), rep.size()), Rat(0));
        for (std::size_t j = 0; j < rep.size(); ++j) combo[i][j] -= f * rep[j];
      }
      chain_rref.push_back(rem);
      combo.push_back(rep);
      w = a.apply(w);
      ++k;
    }
    m = lcm_monic(m, local);
    for (const QVec& row : chain_rref) invariant.insert(row);
    if (m.degree() == static_cast<int>(n)) break;
  }
  return m.monic();
}

}  // namespace lieindex

#endif
