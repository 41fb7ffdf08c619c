#ifndef LIEINDEX_CHEVALLEY_HPP
#define LIEINDEX_CHEVALLEY_HPP

// Semisimple Lie algebras over the rationals in a Chevalley basis
// {H_1..H_l, X_alpha (alpha in R)} with integer structure constants:
//   [H_i, X_alpha] = <alpha, alpha_i^vee> X_alpha
//   [X_alpha, X_-alpha] = H_alpha (so alpha(H_alpha) = 2)
//   [X_alpha, X_beta] = N(alpha,beta) X_{alpha+beta},  |N| = p+1
// Signs follow the extraspecial-pair convention: for each non-simple positive
// root, the grlex-minimal decomposition gets the positive sign and every other
// constant is forced from those through Jacobi triple/quadruple identities.
// Different sign conventions give isomorphic algebras; nothing downstream
// asserts a convention-dependent scalar.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieindex/linalg.hpp"
#include "lieindex/polynomial.hpp"
#include "lieindex/rational.hpp"
#include "lieindex/rootsystem.hpp"

namespace lieindex {

/// Element of the algebra: dense rational coordinates over the Chevalley
/// basis, ordered Cartan generators, then X_alpha for positive alpha in
/// grlex order, then X_-alpha in the mirrored order.
struct Element {
  QVec c;

  Element() = default;
  explicit Element(QVec coords) : c(std::move(coords)) {}

  std::size_t dim() const { return c.size(); }
  bool is_zero() const { return lieindex::is_zero(c); }

  Element& operator+=(const Element& o) {
    if (c.size() != o.c.size()) throw std::domain_error("element dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Element operator+(const Element& o) const { Element r = *this; r += o; return r; }

  Element& operator-=(const Element& o) {
    if (c.size() != o.c.size()) throw std::domain_error("element dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  Element operator-(const Element& o) const { Element r = *this; r -= o; return r; }

  Element operator*(const Rat& s) const {
    Element r = *this;
    for (Rat& x : r.c) x *= s;
    return r;
  }

  bool operator==(const Element&) const = default;
};

class LieAlgebra {
 public:
  using SparseVec = std::vector<std::pair<int, long long>>;

  explicit LieAlgebra(RootSystem rs) : rs_(std::move(rs)) {
    npos_ = rs_.positive_roots().size();
    dim_ = rs_.rank() + 2 * npos_;
    build_structure_constants();
    build_bracket_table();
    build_killing_gram();
  }

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t dim() const { return dim_; }
  std::size_t num_positive() const { return npos_; }

  // ---- basis bookkeeping ----

  int cartan_index(int i) const {
    if (i < 0 || i >= rank()) throw std::domain_error("Cartan index out of range");
    return i;
  }

  int root_index(const Root& a) const {
    if (a.is_positive()) return rank() + static_cast<int>(rs_.positive_index(a));
    return rank() + static_cast<int>(npos_) + static_cast<int>(rs_.positive_index(-a));
  }

  /// The root whose vector sits at basis slot b (b must index a root vector).
  Root root_of_index(int b) const {
    int k = b - rank();
    if (k < 0 || k >= 2 * static_cast<int>(npos_))
      throw std::domain_error("basis index is not a root vector");
    if (k < static_cast<int>(npos_)) return rs_.positive_roots()[k];
    return -rs_.positive_roots()[k - npos_];
  }

  bool is_cartan_index(int b) const { return b >= 0 && b < rank(); }

  std::string basis_name(int b) const {
    if (is_cartan_index(b)) return "H" + std::to_string(b + 1);
    return "X" + root_of_index(b).str();
  }

  // ---- element constructors ----

  Element zero() const { return Element(QVec(dim_, Rat(0))); }

  Element basis_element(int b) const {
    Element e = zero();
    e.c.at(b) = 1;
    return e;
  }

  Element cartan_generator(int i) const { return basis_element(cartan_index(i)); }
  Element root_vector(const Root& a) const { return basis_element(root_index(a)); }

  /// H_alpha, the coroot of alpha, as an integer combination of the H_i.
  Element coroot(const Root& alpha) const {
    Element h = zero();
    std::vector<int> c = rs_.coroot_coords(alpha);
    for (int i = 0; i < rank(); ++i) h.c[i] = c[i];
    return h;
  }

  // ---- brackets ----

  const SparseVec& basis_bracket(int i, int j) const { return table_[i * dim_ + j]; }

  Element bracket(const Element& x, const Element& y) const {
    if (x.dim() != dim_ || y.dim() != dim_)
      throw std::domain_error("bracket: element dimension mismatch");
    Element out = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x.c[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y.c[j] == 0) continue;
        for (const auto& [k, coef] : basis_bracket(static_cast<int>(i), static_cast<int>(j)))
          out.c[k] += x.c[i] * y.c[j] * rat_of(coef);
      }
    }
    return out;
  }

  QMatrix ad_matrix(const Element& x) const {
    if (x.dim() != dim_) throw std::domain_error("ad: element dimension mismatch");
    QMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x.c[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [k, coef] : basis_bracket(static_cast<int>(i), static_cast<int>(j)))
          m.at(k, j) += x.c[i] * rat_of(coef);
    }
    return m;
  }

  /// trace(ad x . ad y), evaluated through the precomputed basis Gram; the
  /// only nonzero basis pairings are Cartan x Cartan and X_alpha x X_-alpha.
  Rat killing_form(const Element& x, const Element& y) const {
    if (x.dim() != dim_ || y.dim() != dim_)
      throw std::domain_error("killing form: element dimension mismatch");
    Rat s(0);
    for (int i = 0; i < rank(); ++i) {
      if (x.c[i] == 0) continue;
      for (int j = 0; j < rank(); ++j)
        if (y.c[j] != 0) s += x.c[i] * y.c[j] * rat_of(killing_cartan_[i][j]);
    }
    for (std::size_t k = 0; k < npos_; ++k) {
      std::size_t pk = rank() + k, nk = rank() + npos_ + k;
      if (x.c[pk] != 0 && y.c[nk] != 0) s += x.c[pk] * y.c[nk] * rat_of(killing_opposite_[k]);
      if (x.c[nk] != 0 && y.c[pk] != 0) s += x.c[nk] * y.c[pk] * rat_of(killing_opposite_[k]);
    }
    return s;
  }

  /// Exact semisimplicity test: the minimal polynomial of ad x is squarefree.
  bool is_semisimple_element(const Element& x) const {
    return is_squarefree(minimal_polynomial(ad_matrix(x)));
  }

  /// Human-readable form "c1*H1 + c2*X[...] + ...".
  std::string element_str(const Element& x) const {
    if (x.dim() != dim_) throw std::domain_error("element of wrong dimension");
    std::string s;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (x.c[b] == 0) continue;
      std::string coef = to_string(x.c[b]);
      std::string term;
      if (coef == "1") term = basis_name(static_cast<int>(b));
      else if (coef == "-1") term = "-" + basis_name(static_cast<int>(b));
      else term = coef + "*" + basis_name(static_cast<int>(b));
      if (s.empty()) { s = term; continue; }
      if (!term.empty() && term[0] == '-') s += " - " + term.substr(1);
      else s += " + " + term;
    }
    return s.empty() ? "0" : s;
  }

  /// N(a,b) with [X_a, X_b] = N(a,b) X_{a+b}; 0 when a+b is not a root.
  /// Requires a, b roots with a + b != 0.
  long long structure_constant(const Root& a, const Root& b) const {
    if (!rs_.is_root(a) || !rs_.is_root(b)) throw std::domain_error("structure constant of non-roots");
    Root s = a + b;
    if (s.coords == std::vector<int>(rank(), 0))
      throw std::domain_error("structure constant of opposite roots");
    if (!rs_.is_root(s)) return 0;
    return nconst(a, b);
  }

 private:
  RootSystem rs_;
  std::size_t npos_ = 0;
  std::size_t dim_ = 0;
  std::vector<SparseVec> table_;  // dim x dim, row-major
  std::map<std::pair<std::size_t, std::size_t>, long long> pos_table_;  // special pairs
  std::vector<std::vector<long long>> killing_cartan_;
  std::vector<long long> killing_opposite_;

  long long simple_pairing(const Root& b, int i) const {
    long long s = 0;
    for (int j = 0; j < rank(); ++j)
      s += static_cast<long long>(b.coords[j]) * rs_.cartan()[i][j];
    return s;
  }

  /// Length of the descending alpha-string through beta.
  long long down_string(const Root& beta, const Root& alpha) const {
    long long p = 0;
    Root r = beta - alpha;
    while (rs_.is_root(r)) {
      ++p;
      r = r - alpha;
    }
    return p;
  }

  static long long exact_div(long long num, long long den) {
    if (den == 0 || num % den != 0) throw std::logic_error("non-exact structure constant division");
    return num / den;
  }

  /// General resolver, reducing every configuration to the positive special
  /// table through antisymmetry, negation, and the Jacobi triple identity
  /// N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y) for x+y+z = 0.
  long long nconst(const Root& a, const Root& b) const {
    Root s = a + b;
    if (!rs_.is_root(s)) return 0;
    bool ap = a.is_positive(), bp = b.is_positive();
    if (ap && bp) {
      std::size_t ia = rs_.positive_index(a), ib = rs_.positive_index(b);
      if (b < a) return -nconst(b, a);
      return pos_table_.at({ia, ib});
    }
    if (!ap && !bp) return -nconst(-a, -b);
    if (!ap) return -nconst(b, a);  // now first argument positive
    // a positive, b negative
    if (s.is_positive()) {
      // triple (a, b, -s): N(a,b) = (s,s) N(b,-s) / (a,a), and (b,-s) -> (-b, s)
      return -exact_div(rs_.inner(s, s) * nconst(-b, s), rs_.inner(a, a));
    }
    // triple (a, b, -s): N(a,b) = (s,s) N(-s,a) / (b,b)
    return exact_div(rs_.inner(s, s) * nconst(-s, a), rs_.inner(b, b));
  }

  /// Fill the table of N over special pairs (alpha < beta positive,
  /// alpha+beta a root), walking sum roots in grlex order. The grlex-minimal
  /// pair of each sum is extraspecial and is pinned to +(p+1); the remaining
  /// pairs are forced by a Jacobi identity on (X_-alpha, X_-beta, X_alpha0)
  /// whose other factors only involve sums of strictly smaller height.
  void build_structure_constants() {
    const std::vector<Root>& pos = rs_.positive_roots();
    for (const Root& gamma : pos) {
      if (gamma.height() < 2) continue;
      std::vector<std::pair<Root, Root>> pairs;
      for (const Root& alpha : pos) {
        if (!(alpha < gamma)) break;  // grlex order
        Root beta = gamma - alpha;
        if (!rs_.is_positive_root(beta) || !(alpha < beta)) continue;
        pairs.emplace_back(alpha, beta);
      }
      const auto& [a0, b0] = pairs.front();
      long long n0 = down_string(b0, a0) + 1;
      pos_table_[{rs_.positive_index(a0), rs_.positive_index(b0)}] = n0;
      // N(-gamma, alpha0) = (b0,b0) N(a0,b0) / (gamma,gamma)
      long long denom = exact_div(rs_.inner(b0, b0) * n0, rs_.inner(gamma, gamma));
      for (std::size_t pi = 1; pi < pairs.size(); ++pi) {
        const auto& [alpha, beta] = pairs[pi];
        long long t2 = 0, t3 = 0;
        Root d2 = a0 - beta;
        if (rs_.is_root(d2)) t2 = nconst(-beta, a0) * nconst(d2, -alpha);
        Root d3 = a0 - alpha;
        if (rs_.is_root(d3)) t3 = nconst(a0, -alpha) * nconst(d3, -beta);
        long long n = exact_div(t2 + t3, denom);
        if (n == 0) throw std::logic_error("vanishing structure constant for a root sum");
        pos_table_[{rs_.positive_index(alpha), rs_.positive_index(beta)}] = n;
      }
    }
  }

  void push(SparseVec& v, int k, long long coef) {
    if (coef != 0) v.emplace_back(k, coef);
  }

  void build_bracket_table() {
    table_.assign(dim_ * dim_, {});
    auto cell = [&](int i, int j) -> SparseVec& { return table_[i * dim_ + j]; };
    std::vector<Root> all;
    for (std::size_t k = 0; k < npos_; ++k) all.push_back(rs_.positive_roots()[k]);
    for (std::size_t k = 0; k < npos_; ++k) all.push_back(-rs_.positive_roots()[k]);

    for (int i = 0; i < rank(); ++i)
      for (const Root& rho : all) {
        int bi = root_index(rho);
        long long v = simple_pairing(rho, i);
        push(cell(i, bi), bi, v);
        push(cell(bi, i), bi, -v);
      }
    for (const Root& rho : all) {
      int bi = root_index(rho);
      // [X_rho, X_-rho] = H_rho
      std::vector<int> co = rs_.coroot_coords(rho);
      SparseVec& h = cell(bi, root_index(-rho));
      for (int i = 0; i < rank(); ++i) push(h, i, co[i]);
      for (const Root& sig : all) {
        Root s = rho + sig;
        if (s.coords == std::vector<int>(rank(), 0)) continue;  // handled above
        if (!rs_.is_root(s)) continue;
        push(cell(bi, root_index(sig)), root_index(s), nconst(rho, sig));
      }
    }
  }

  void build_killing_gram() {
    killing_cartan_.assign(rank(), std::vector<long long>(rank(), 0));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) {
        long long s = 0;
        for (const Root& g : rs_.positive_roots())
          s += simple_pairing(g, i) * simple_pairing(g, j);
        killing_cartan_[i][j] = 2 * s;
      }
    killing_opposite_.assign(npos_, 0);
    for (std::size_t k = 0; k < npos_; ++k) {
      int ip = rank() + static_cast<int>(k);
      int in = rank() + static_cast<int>(npos_ + k);
      long long tr = 0;
      for (std::size_t b = 0; b < dim_; ++b)
        for (const auto& [m, cm] : basis_bracket(in, static_cast<int>(b)))
          for (const auto& [l, cl] : basis_bracket(ip, m))
            if (l == static_cast<int>(b)) tr += cm * cl;
      killing_opposite_[k] = tr;
    }
  }
};

inline LieAlgebra build_algebra(RootSystem rs) { return LieAlgebra(std::move(rs)); }

inline LieAlgebra build_algebra(char family, int rank) {
  return LieAlgebra(build_root_system(family, rank));
}

}  // namespace lieindex

#endif
