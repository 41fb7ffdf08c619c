#ifndef LIEINDEX_SUBALG_HPP
#define LIEINDEX_SUBALG_HPP

// Subalgebras of a Chevalley-basis semisimple algebra, linear forms on them,
// the alternating Kirillov form Phi_f(x,y) = f([x,y]), centralizers a^f, and
// the index computed as dim a minus the generic (sampled) rank of Phi_f.
//
// Subalgebra bases are echelonized (RREF over ambient coordinates) at
// construction, so kernels, intersections and serialized bases are canonical.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieindex/chevalley.hpp"
#include "lieindex/linalg.hpp"
#include "lieindex/rational.hpp"

namespace lieindex {

enum class SubalgebraKind { Full, Borel, Parabolic, Custom };

inline const char* kind_name(SubalgebraKind k) {
  switch (k) {
    case SubalgebraKind::Full: return "full";
    case SubalgebraKind::Borel: return "borel";
    case SubalgebraKind::Parabolic: return "parabolic";
    default: return "custom";
  }
}

class Subalgebra {
 public:
  /// Validates independence and bracket closure; basis comes out in RREF.
  static Subalgebra from_basis(const LieAlgebra& L, const std::vector<Element>& gens,
                               SubalgebraKind kind = SubalgebraKind::Custom,
                               std::string descr = "custom") {
    std::vector<QVec> rows;
    rows.reserve(gens.size());
    for (const Element& g : gens) {
      if (g.dim() != L.dim()) throw std::domain_error("subalgebra basis element of wrong dimension");
      rows.push_back(g.c);
    }
    std::vector<QVec> ech = echelon_basis(rows);
    if (ech.size() != gens.size())
      throw std::invalid_argument("subalgebra basis is not linearly independent");
    Subalgebra a(L, std::move(ech), kind, std::move(descr));
    a.check_closed();
    return a;
  }

  const LieAlgebra& ambient() const { return *L_; }
  SubalgebraKind kind() const { return kind_; }
  const std::string& descr() const { return descr_; }
  std::size_t dim() const { return basis_.size(); }

  const std::vector<Element>& basis() const { return elements_; }
  const Element& basis_element(std::size_t i) const { return elements_.at(i); }

  /// Subset of simple roots S for parabolic(L, S); empty otherwise.
  const std::vector<int>& parabolic_subset() const { return parabolic_subset_; }

  /// Coordinates of x over the echelonized basis; nullopt when x is outside.
  std::optional<QVec> coords_of(const Element& x) const {
    if (x.dim() != L_->dim()) throw std::domain_error("element of wrong ambient dimension");
    QVec rem = x.c;
    QVec coeff(basis_.size(), Rat(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rat& lead = rem[pivots_[i]];
      if (lead == 0) continue;
      coeff[i] = lead;
      for (std::size_t j = pivots_[i]; j < rem.size(); ++j)
        if (basis_[i][j] != 0) rem[j] -= coeff[i] * basis_[i][j];
    }
    if (!is_zero(rem)) return std::nullopt;
    return coeff;
  }

  bool contains(const Element& x) const { return coords_of(x).has_value(); }

  Element element_from_coords(const QVec& coords) const {
    if (coords.size() != basis_.size()) throw std::domain_error("bad subalgebra coordinate vector");
    Element out = L_->zero();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (coords[i] == 0) continue;
      for (std::size_t j = 0; j < L_->dim(); ++j)
        if (basis_[i][j] != 0) out.c[j] += coords[i] * basis_[i][j];
    }
    return out;
  }

 private:
  const LieAlgebra* L_;
  std::vector<QVec> basis_;           // RREF rows over ambient coordinates
  std::vector<std::size_t> pivots_;
  std::vector<Element> elements_;     // the same rows as Elements
  SubalgebraKind kind_;
  std::string descr_;
  std::vector<int> parabolic_subset_;

  friend Subalgebra borel(const LieAlgebra&);
  friend Subalgebra parabolic(const LieAlgebra&, const std::vector<int>&);

  Subalgebra(const LieAlgebra& L, std::vector<QVec> rrefBasis, SubalgebraKind kind,
             std::string descr)
      : L_(&L), basis_(std::move(rrefBasis)), kind_(kind), descr_(std::move(descr)) {
    for (const QVec& row : basis_) {
      std::size_t p = 0;
      while (p < row.size() && row[p] == 0) ++p;
      pivots_.push_back(p);
      elements_.push_back(Element(row));
    }
  }

  void check_closed() const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (std::size_t j = i + 1; j < elements_.size(); ++j)
        if (!contains(L_->bracket(elements_[i], elements_[j])))
          throw std::invalid_argument("subalgebra basis is not bracket-closed");
  }
};

/// b = h + n: Cartan generators followed by the positive root vectors in
/// canonical order.
inline Subalgebra borel(const LieAlgebra& L) {
  std::vector<QVec> rows;
  for (int i = 0; i < L.rank(); ++i) rows.push_back(L.cartan_generator(i).c);
  for (const Root& g : L.roots().positive_roots()) rows.push_back(L.root_vector(g).c);
  return Subalgebra(L, std::move(rows), SubalgebraKind::Borel,
                    "borel(" + L.roots().type().name() + ")");
}

/// Standard parabolic: the Borel plus X_-alpha for alpha in R+^S.
/// S = all simple roots gives the full algebra.
inline Subalgebra parabolic(const LieAlgebra& L, const std::vector<int>& S) {
  std::vector<QVec> rows;
  for (int i = 0; i < L.rank(); ++i) rows.push_back(L.cartan_generator(i).c);
  for (const Root& g : L.roots().positive_roots()) rows.push_back(L.root_vector(g).c);
  std::vector<Root> neg = L.roots().positive_roots_in(S);
  for (const Root& g : neg) rows.push_back(L.root_vector(-g).c);
  bool full = neg.size() == L.num_positive();
  std::string descr;
  if (full) {
    descr = "full(" + L.roots().type().name() + ")";
  } else {
    descr = "parabolic(" + L.roots().type().name() + ", {";
    std::vector<int> s;
    for (int i : S) s.push_back(i);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t k = 0; k < s.size(); ++k)
      descr += (k ? "," : "") + std::to_string(s[k] + 1);
    descr += "})";
  }
  Subalgebra a(L, std::move(rows), full ? SubalgebraKind::Full : SubalgebraKind::Parabolic,
               std::move(descr));
  std::vector<int> s = S;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  a.parabolic_subset_ = std::move(s);
  return a;
}

inline Subalgebra full_algebra(const LieAlgebra& L) {
  return parabolic(L, L.roots().full_subset());
}

// a Subalgebra is a view into its ambient algebra; binding one to a
// temporary would dangle
Subalgebra borel(const LieAlgebra&&) = delete;
Subalgebra parabolic(const LieAlgebra&&, const std::vector<int>&) = delete;
Subalgebra full_algebra(const LieAlgebra&&) = delete;

/// f in a^*: exact rational coordinates over the dual of the subalgebra basis.
struct LinearForm {
  const Subalgebra* on;
  QVec coords;
  std::string descr = "form";

  Rat operator()(const Element& x) const {
    std::optional<QVec> c = on->coords_of(x);
    if (!c) throw std::domain_error("form evaluated outside its subalgebra");
    Rat s(0);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if ((*c)[i] != 0 && coords[i] != 0) s += coords[i] * (*c)[i];
    return s;
  }

  LinearForm scaled(const Rat& c) const {
    LinearForm g = *this;
    for (Rat& x : g.coords) x *= c;
    g.descr = to_string(c) + "*(" + descr + ")";
    return g;
  }
};

inline LinearForm zero_form(const Subalgebra& a) {
  return LinearForm{&a, QVec(a.dim(), Rat(0)), "0"};
}

/// phi_a(y): x -> KillingForm(y, x), restricted to a.
inline LinearForm form_from_element(const Subalgebra& a, const Element& y) {
  QVec coords(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    coords[i] = a.ambient().killing_form(y, a.basis_element(i));
  return LinearForm{&a, std::move(coords), "phi_" + a.descr()};
}

struct KirillovMatrix {
  QMatrix M;  // M[i][j] = f([b_i, b_j]); alternating
};

inline KirillovMatrix kirillov_matrix(const LinearForm& f) {
  const Subalgebra& a = *f.on;
  if (f.coords.size() != a.dim()) throw std::domain_error("form has wrong dimension");
  std::size_t n = a.dim();
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Element br = a.ambient().bracket(a.basis_element(i), a.basis_element(j));
      Rat v = f(br);
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return KirillovMatrix{std::move(m)};
}

inline std::size_t kirillov_rank(const LinearForm& f) {
  return exact_rank(kirillov_matrix(f).M);
}

/// Kernel of Phi_f as elements of the ambient algebra.
inline std::vector<Element> centralizer(const LinearForm& f) {
  std::vector<QVec> ker = kernel_basis(kirillov_matrix(f).M);
  std::vector<Element> out;
  out.reserve(ker.size());
  for (const QVec& k : ker) out.push_back(f.on->element_from_coords(k));
  return out;
}

/// Deterministic sampled form for (seed, trial): integer coordinates uniform
/// in [-2^31, 2^31].
inline LinearForm random_form(const Subalgebra& a, std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 g = trial_rng(seed, trial);
  QVec coords(a.dim());
  for (Rat& c : coords) c = rat_of(draw_coordinate(g));
  return LinearForm{&a, std::move(coords),
                    "random(seed=" + std::to_string(seed) + ",trial=" + std::to_string(trial) + ")"};
}

/// chi(a) = dim a - max over sampled forms of rank Phi_f, i.e. the smallest
/// centralizer dimension observed. Generic rank is attained with probability
/// >= 1 - dim/2^31 per trial (Schwartz-Zippel); for Borel subalgebras
/// verify_borel_index additionally certifies the value with an exact witness.
inline int index(const Subalgebra& a, int trials = 3, std::uint64_t seed = 0) {
  if (trials < 1) throw std::domain_error("index needs at least one trial");
  std::size_t best = 0;
  for (int t = 0; t < trials; ++t) {
    std::size_t r = kirillov_rank(random_form(a, seed, static_cast<std::uint64_t>(t)));
    if (r > best) best = r;
  }
  return static_cast<int>(a.dim() - best);
}

inline bool is_regular(const LinearForm& f, int index_of_a) {
  return static_cast<int>(centralizer(f).size()) == index_of_a;
}

}  // namespace lieindex

#endif
