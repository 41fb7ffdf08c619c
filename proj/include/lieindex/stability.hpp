#ifndef LIEINDEX_STABILITY_HPP
#define LIEINDEX_STABILITY_HPP

// Algebraic stability of linear forms: f on a is stable iff
// [a, a^f] ∩ a^f = {0} (the criterion is exact for the known ad-algebraic
// kinds: the full algebra, Borels, parabolics). Also the cascade element
// u = sum_K X_{-eps_K}, whose Killing form phi_b(u) is the stable form on
// the Borel, and the exact checks backing it: the centralizer of phi_b(u)
// equals {x in h : eps_K(x) = 0 for all K}, so ind b = rank - k.

#include <cstdint>
#include <string>
#include <vector>

#include "lieindex/chevalley.hpp"
#include "lieindex/linalg.hpp"
#include "lieindex/rootsystem.hpp"
#include "lieindex/subalg.hpp"

namespace lieindex {

struct StabilityReport {
  std::string subalgebra_descr;
  std::string form_descr;
  int dim_centralizer = 0;
  int dim_bracket_space = 0;
  int dim_intersection = 0;
  bool stable = false;
  std::string warning;  // set when the subalgebra kind is not known ad-algebraic
  std::string verdict;
};

/// u = sum over K in the cascade of X_{-eps_K}.
inline Element cascade_element(const LieAlgebra& L) {
  Element u = L.zero();
  for (const CascadeNode& node : L.roots().cascade()) u += L.root_vector(-node.epsilon);
  return u;
}

/// Echelonized basis of span{[b_i, w] : b_i in basis(a), w in W}.
/// W must lie inside a.
inline std::vector<Element> bracket_space(const Subalgebra& a, const std::vector<Element>& W) {
  std::vector<QVec> rows;
  for (const Element& w : W) {
    if (!a.contains(w)) throw std::domain_error("bracket_space: W is not inside the subalgebra");
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Element br = a.ambient().bracket(a.basis_element(i), w);
      if (!br.is_zero()) rows.push_back(br.c);
    }
  }
  std::vector<Element> out;
  for (QVec& r : echelon_basis(rows)) out.push_back(Element(std::move(r)));
  return out;
}

/// Exact intersection of two spans of ambient elements.
inline std::vector<Element> subspace_intersection(const std::vector<Element>& U,
                                                  const std::vector<Element>& V) {
  std::vector<QVec> u, v;
  for (const Element& x : U) u.push_back(x.c);
  for (const Element& x : V) v.push_back(x.c);
  std::vector<Element> out;
  for (QVec& r : span_intersection(u, v)) out.push_back(Element(std::move(r)));
  return out;
}

/// Stability criterion for f in a^*: compute a^f, [a, a^f], and their
/// intersection; f is stable iff the intersection is zero. Exact for full,
/// Borel and parabolic subalgebras (ad-algebraic); other kinds get a warning
/// since the criterion is only proved for algebraic actions.
inline StabilityReport is_stable(const Subalgebra& a, const LinearForm& f) {
  if (f.on != &a) throw std::domain_error("is_stable: form is not a form on the subalgebra");
  StabilityReport rep;
  rep.subalgebra_descr = a.descr();
  rep.form_descr = f.descr;
  std::vector<Element> af = centralizer(f);
  std::vector<Element> br = bracket_space(a, af);
  std::vector<QVec> afRows;
  for (const Element& x : af) afRows.push_back(x.c);
  afRows = echelon_basis(afRows);
  std::vector<Element> afEch;
  for (QVec& r : afRows) afEch.push_back(Element(std::move(r)));
  std::vector<Element> inter = subspace_intersection(br, afEch);
  rep.dim_centralizer = static_cast<int>(af.size());
  rep.dim_bracket_space = static_cast<int>(br.size());
  rep.dim_intersection = static_cast<int>(inter.size());
  rep.stable = rep.dim_intersection == 0;
  if (a.kind() == SubalgebraKind::Custom)
    rep.warning = "subalgebra kind not known ad-algebraic; criterion may not equal stability";
  rep.verdict = std::string(rep.stable ? "stable" : "not stable") +
                ": [a, a^f] \xE2\x88\xA9 a^f has dimension " + std::to_string(rep.dim_intersection);
  return rep;
}

/// Sufficient condition: a^f commutative and made of semisimple elements
/// implies the stability criterion. Commutativity is checked pairwise on the
/// kernel basis and semisimplicity per basis element; a commuting family of
/// semisimple elements keeps every member semisimple, so the finite check
/// covers the whole centralizer.
inline bool check_semisimple_commutative_centralizer(const Subalgebra& a, const LinearForm& f) {
  std::vector<Element> af = centralizer(f);
  for (std::size_t i = 0; i < af.size(); ++i)
    for (std::size_t j = i + 1; j < af.size(); ++j)
      if (!a.ambient().bracket(af[i], af[j]).is_zero()) return false;
  for (const Element& x : af)
    if (!a.ambient().is_semisimple_element(x)) return false;
  return true;
}

/// Exact check that {x in b : [x,u] in n} = {x in h : eps_K(x) = 0 for all K}
/// for the cascade element u. The left side is the centralizer b^{phi_b(u)}.
inline bool verify_cascade_centralizer(const LieAlgebra& L) {
  Subalgebra b = borel(L);
  Element u = cascade_element(L);
  int r = L.rank();
  std::size_t npos = L.num_positive();

  // {x in b : [x,u] in n}: kill the Cartan and negative-root coordinates of
  // [b_i, u].
  std::size_t constraints = r + npos;
  QMatrix m(constraints, b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Element br = L.bracket(b.basis_element(i), u);
    for (int c = 0; c < r; ++c) m.at(c, i) = br.c[c];
    for (std::size_t k = 0; k < npos; ++k) m.at(r + k, i) = br.c[r + npos + k];
  }
  std::vector<QVec> lhsRows;
  for (const QVec& k : kernel_basis(m)) lhsRows.push_back(b.element_from_coords(k).c);
  std::vector<QVec> lhs = echelon_basis(lhsRows);

  // {x in h : eps_K(x) = 0}: eps_K(H_i) = <eps_K, alpha_i^vee>.
  std::vector<CascadeNode> nodes = L.roots().cascade();
  QMatrix e(nodes.size(), r);
  for (std::size_t k = 0; k < nodes.size(); ++k)
    for (int i = 0; i < r; ++i) {
      long long v = 0;
      for (int j = 0; j < r; ++j)
        v += static_cast<long long>(nodes[k].epsilon.coords[j]) * L.roots().cartan()[i][j];
      e.at(k, i) = rat_of(v);
    }
  std::vector<QVec> rhsRows;
  for (const QVec& k : kernel_basis(e)) {
    QVec full(L.dim(), Rat(0));
    for (int i = 0; i < r; ++i) full[i] = k[i];
    rhsRows.push_back(std::move(full));
  }
  std::vector<QVec> rhs = echelon_basis(rhsRows);
  return lhs == rhs;
}

struct BorelIndexCheck {
  int expected = 0;          // rank - k
  int sampled = 0;           // randomized generic-rank route
  std::size_t certificate_rank = 0;  // exact rank of Phi at the cascade form
  bool ok = false;
};

/// ind b = rank - k, via the randomized route and, independently, via the
/// exact Kirillov rank of the cascade form phi_b(u).
inline BorelIndexCheck verify_borel_index(const LieAlgebra& L, std::uint64_t seed = 0,
                                          int trials = 3) {
  BorelIndexCheck out;
  Subalgebra b = borel(L);
  out.expected = L.rank() - static_cast<int>(L.roots().cascade_size());
  out.sampled = index(b, trials, seed);
  LinearForm f = form_from_element(b, cascade_element(L));
  out.certificate_rank = kirillov_rank(f);
  out.ok = out.sampled == out.expected &&
           b.dim() - out.certificate_rank == static_cast<std::size_t>(out.expected);
  return out;
}

}  // namespace lieindex

#endif
