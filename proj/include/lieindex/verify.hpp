#ifndef LIEINDEX_VERIFY_HPP
#define LIEINDEX_VERIFY_HPP

// Batch verification of the structural identities behind the library:
// golden cascade counts, the Borel index formula with its exact certificate,
// centralizer characterization, stability of the cascade form, Jacobi /
// Killing / Heisenberg / partition properties, even Kirillov ranks, full
// algebra index sanity, and the D4 counterexample. The CLI's verify-all runs
// these over a rank range; the acceptance suite runs them at pinned ranges.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lieindex/chevalley.hpp"
#include "lieindex/counterexample_d4.hpp"
#include "lieindex/rootsystem.hpp"
#include "lieindex/stability.hpp"
#include "lieindex/subalg.hpp"

namespace lieindex {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;

  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  void fail(const std::string& what) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

/// Every valid (family, rank) with rank <= max_rank (and >= min_rank).
inline std::vector<SimpleType> supported_types(int max_rank, int min_rank = 1) {
  std::vector<SimpleType> out;
  auto add = [&](Family f, int lo, int hi) {
    for (int r = std::max(lo, min_rank); r <= std::min(hi, max_rank); ++r)
      out.push_back(SimpleType{f, r});
  };
  add(Family::A, 1, max_rank);
  add(Family::B, 2, max_rank);
  add(Family::C, 3, max_rank);
  add(Family::D, 4, max_rank);
  add(Family::E, 6, 8);
  add(Family::F, 4, 4);
  add(Family::G, 2, 2);
  return out;
}

/// Closed forms for the cascade size k per simple type.
inline std::size_t expected_cascade_size(SimpleType t) {
  int l = t.rank;
  switch (t.family) {
    case Family::A: return static_cast<std::size_t>((l + 1) / 2);
    case Family::B: return static_cast<std::size_t>(l);
    case Family::C: return static_cast<std::size_t>(l);
    case Family::D: return static_cast<std::size_t>(2 * (l / 2));
    case Family::E: return l == 6 ? 4 : (l == 7 ? 7 : 8);
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 0;
}

inline CheckResult check_cascade_size_table(const std::vector<SimpleType>& types) {
  CheckResult r{"cascade size golden table"};
  for (SimpleType t : types) {
    RootSystem rs = build_root_system(t);
    std::size_t got = rs.cascade_size(), want = expected_cascade_size(t);
    if (got != want)
      r.fail(t.name() + ": k = " + std::to_string(got) + ", expected " + std::to_string(want));
  }
  return r;
}

inline CheckResult check_borel_index_formula(const std::vector<SimpleType>& types,
                                             std::uint64_t seed) {
  CheckResult r{"borel index = rank - k (sampled + certificate)"};
  for (SimpleType t : types) {
    LieAlgebra L = build_algebra(build_root_system(t));
    BorelIndexCheck c = verify_borel_index(L, seed);
    if (!c.ok)
      r.fail(t.name() + ": expected " + std::to_string(c.expected) + ", sampled " +
             std::to_string(c.sampled) + ", certificate rank " +
             std::to_string(c.certificate_rank));
  }
  return r;
}

inline CheckResult check_cascade_centralizer(const std::vector<SimpleType>& types) {
  CheckResult r{"borel centralizer of cascade form = cascade kernel in h"};
  for (SimpleType t : types) {
    LieAlgebra L = build_algebra(build_root_system(t));
    if (!verify_cascade_centralizer(L)) r.fail(t.name() + ": subspaces differ");
  }
  return r;
}

inline CheckResult check_cascade_form_stability(const std::vector<SimpleType>& types) {
  CheckResult r{"cascade form stable on borel, semisimple commutative centralizer"};
  for (SimpleType t : types) {
    LieAlgebra L = build_algebra(build_root_system(t));
    Subalgebra b = borel(L);
    LinearForm f = form_from_element(b, cascade_element(L));
    StabilityReport rep = is_stable(b, f);
    if (!rep.stable) r.fail(t.name() + ": cascade form not stable");
    int expected_dim = L.rank() - static_cast<int>(L.roots().cascade_size());
    if (rep.dim_centralizer != expected_dim)
      r.fail(t.name() + ": dim b^f = " + std::to_string(rep.dim_centralizer) + ", expected " +
             std::to_string(expected_dim));
    if (!check_semisimple_commutative_centralizer(b, f))
      r.fail(t.name() + ": centralizer not commutative/semisimple");
  }
  return r;
}

namespace detail {

/// Jacobi on a basis triple through the sparse table; returns true when
/// [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0.
inline bool jacobi_triple(const LieAlgebra& L, int i, int j, int k) {
  std::map<int, long long> acc;
  auto accumulate = [&](int a, int b, int c) {
    for (const auto& [m, coef] : L.basis_bracket(a, b))
      for (const auto& [l, coef2] : L.basis_bracket(m, c)) acc[l] += coef * coef2;
  };
  accumulate(i, j, k);
  accumulate(j, k, i);
  accumulate(k, i, j);
  for (const auto& [l, v] : acc)
    if (v != 0) return false;
  return true;
}

}  // namespace detail

inline CheckResult check_jacobi(const std::vector<SimpleType>& exhaustive,
                                const std::vector<SimpleType>& sampled, int samples,
                                std::uint64_t seed) {
  CheckResult r{"Jacobi identity on basis triples"};
  for (SimpleType t : exhaustive) {
    LieAlgebra L = build_algebra(build_root_system(t));
    int n = static_cast<int>(L.dim());
    bool bad = false;
    for (int i = 0; i < n && !bad; ++i)
      for (int j = 0; j < n && !bad; ++j)
        for (int k = 0; k < n && !bad; ++k)
          if (!detail::jacobi_triple(L, i, j, k)) {
            r.fail(t.name() + ": triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")");
            bad = true;
          }
  }
  for (SimpleType t : sampled) {
    LieAlgebra L = build_algebra(build_root_system(t));
    SplitMix64 g = trial_rng(seed, 17);
    int n = static_cast<int>(L.dim());
    for (int s = 0; s < samples; ++s) {
      int i = static_cast<int>(g.next() % n), j = static_cast<int>(g.next() % n),
          k = static_cast<int>(g.next() % n);
      if (!detail::jacobi_triple(L, i, j, k)) {
        r.fail(t.name() + ": sampled triple (" + std::to_string(i) + "," + std::to_string(j) +
               "," + std::to_string(k) + ")");
        break;
      }
    }
  }
  return r;
}

inline Element random_element(const LieAlgebra& L, SplitMix64& g) {
  Element x = L.zero();
  for (std::size_t i = 0; i < L.dim(); ++i)
    x.c[i] = rat_of(static_cast<long long>(g.next() % 199) - 99);
  return x;
}

inline CheckResult check_killing_invariance(const std::vector<SimpleType>& types, int triples,
                                            std::uint64_t seed) {
  CheckResult r{"Killing form invariance L([x,y],z) = L(x,[y,z])"};
  for (SimpleType t : types) {
    LieAlgebra L = build_algebra(build_root_system(t));
    SplitMix64 g = trial_rng(seed, 23);
    for (int s = 0; s < triples; ++s) {
      Element x = random_element(L, g), y = random_element(L, g), z = random_element(L, g);
      if (L.killing_form(L.bracket(x, y), z) != L.killing_form(x, L.bracket(y, z))) {
        r.fail(t.name() + ": invariance broken at sample " + std::to_string(s));
        break;
      }
    }
  }
  return r;
}

inline CheckResult check_strong_orthogonality(const std::vector<SimpleType>& types) {
  CheckResult r{"cascade highest roots pairwise strongly orthogonal"};
  for (SimpleType t : types) {
    RootSystem rs = build_root_system(t);
    std::vector<CascadeNode> nodes = rs.cascade();
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        Root sum = nodes[a].epsilon + nodes[b].epsilon;
        Root diff = nodes[a].epsilon - nodes[b].epsilon;
        if (rs.is_root(sum) || rs.is_root(diff))
          r.fail(t.name() + ": eps" + std::to_string(a) + ", eps" + std::to_string(b));
      }
  }
  return r;
}

inline CheckResult check_gamma_partition(const std::vector<SimpleType>& types) {
  CheckResult r{"Gamma^K sets partition R+"};
  for (SimpleType t : types) {
    RootSystem rs = build_root_system(t);
    std::map<std::vector<int>, int> seen;
    std::size_t total = 0;
    for (const CascadeNode& node : rs.cascade())
      for (const Root& a : node.gamma) {
        ++seen[a.coords];
        ++total;
      }
    if (total != rs.positive_roots().size())
      r.fail(t.name() + ": union has " + std::to_string(total) + " of " +
             std::to_string(rs.positive_roots().size()) + " roots");
    for (const auto& [c, n] : seen)
      if (n != 1) {
        r.fail(t.name() + ": root " + Root(c).str() + " covered " + std::to_string(n) + " times");
        break;
      }
  }
  return r;
}

/// a_K = sum of root spaces over Gamma^K is Heisenberg with center g^{eps_K}:
/// any two Gamma roots sum to eps_K or to a non-root, and the exact center of
/// the bracket action on a_K is the eps_K line.
inline CheckResult check_heisenberg(const std::vector<SimpleType>& types) {
  CheckResult r{"a_K Heisenberg with center g^{eps_K}"};
  for (SimpleType t : types) {
    RootSystem rs = build_root_system(t);
    LieAlgebra L = build_algebra(rs);
    for (const CascadeNode& node : rs.cascade()) {
      const std::vector<Root>& G = node.gamma;
      std::size_t n = G.size();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
          Root s = G[a] + G[b];
          if (rs.is_root(s) && !(s == node.epsilon))
            r.fail(t.name() + ": " + G[a].str() + " + " + G[b].str() + " is a root != eps");
        }
      // exact center: x = sum c_a X_{G[a]} with [x, X_{G[b]}] = 0 for all b
      std::map<std::pair<std::size_t, std::vector<int>>, QVec> rows;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a) {
          Root s = G[a] + G[b];
          if (!rs.is_root(s)) continue;
          QVec& row = rows[{b, s.coords}];
          if (row.empty()) row.assign(n, Rat(0));
          row[a] += rat_of(L.structure_constant(G[a], G[b]));
        }
      QMatrix m(rows.size(), n);
      std::size_t ri = 0;
      for (const auto& [key, row] : rows) m.set_row(ri++, row);
      std::vector<QVec> center = kernel_basis(m);
      bool ok = center.size() == 1;
      if (ok) {
        // the kernel vector must be the eps coordinate line
        for (std::size_t a = 0; a < n; ++a) {
          bool is_eps = G[a] == node.epsilon;
          if ((center[0][a] != 0) != is_eps) ok = false;
        }
      }
      if (!ok) r.fail(t.name() + ": center of a_K is not g^{eps} for K = eps " + node.epsilon.str());
    }
  }
  return r;
}

inline CheckResult check_even_kirillov_rank(const std::vector<SimpleType>& types, int forms,
                                            std::uint64_t seed) {
  CheckResult r{"rank of Phi_f even for random forms"};
  for (SimpleType t : types) {
    LieAlgebra L = build_algebra(build_root_system(t));
    Subalgebra b = borel(L);
    for (int s = 0; s < forms; ++s) {
      std::size_t rk = kirillov_rank(random_form(b, seed, 1000 + static_cast<std::uint64_t>(s)));
      if (rk % 2 != 0) {
        r.fail(t.name() + ": odd rank " + std::to_string(rk) + " at sample " + std::to_string(s));
        break;
      }
    }
  }
  return r;
}

inline CheckResult check_full_index(const std::vector<SimpleType>& types, std::uint64_t seed) {
  CheckResult r{"index of the full algebra = rank"};
  for (SimpleType t : types) {
    LieAlgebra L = build_algebra(build_root_system(t));
    int chi = index(full_algebra(L), 3, seed);
    if (chi != t.rank)
      r.fail(t.name() + ": chi = " + std::to_string(chi) + ", expected " + std::to_string(t.rank));
  }
  return r;
}

inline CheckResult check_d4_counterexample(const std::vector<Rat>& lambdas) {
  CheckResult r{"D4 minimal parabolic admits no stable form on the tested family"};
  D4Scenario s = build_scenario();
  if (s.parabolic_subalg().dim() != 17)
    r.fail("dim p = " + std::to_string(s.parabolic_subalg().dim()) + ", expected 17");
  std::vector<CascadeNode> nodes = s.L().roots().cascade();
  std::vector<std::vector<int>> subsets;
  for (const CascadeNode& n : nodes) subsets.push_back(n.subset);
  std::vector<std::vector<int>> expect = {{0, 1, 2, 3}, {0}, {2}, {3}};
  if (subsets != expect) r.fail("cascade subsets differ from {Pi, {a1}, {a3}, {a4}}");
  if (index(borel(s.L()), 3, 0) != 0) r.fail("index of the D4 borel is not 0");
  for (const CounterexampleReport& rep : run_counterexample(s, lambdas))
    for (const std::string& f : rep.failures) r.fail(f);
  return r;
}

/// The whole battery over a rank range; `max_rank` caps every type list.
inline std::vector<CheckResult> run_verification(int max_rank, std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::vector<SimpleType> all = supported_types(max_rank);
  std::vector<SimpleType> small = supported_types(std::min(max_rank, 6));
  std::vector<SimpleType> tiny = supported_types(std::min(max_rank, 4));
  std::vector<SimpleType> big = supported_types(std::min(max_rank, 8), 5);
  out.push_back(check_cascade_size_table(all));
  out.push_back(check_borel_index_formula(all, seed));
  out.push_back(check_cascade_centralizer(small));
  out.push_back(check_cascade_form_stability(small));
  out.push_back(check_jacobi(tiny, big, 10000, seed));
  out.push_back(check_killing_invariance(tiny, 1000, seed));
  out.push_back(check_strong_orthogonality(all));
  out.push_back(check_gamma_partition(all));
  out.push_back(check_heisenberg(all));
  out.push_back(check_even_kirillov_rank(small, 100, seed));
  out.push_back(check_full_index(tiny, seed));
  if (max_rank >= 4) out.push_back(check_d4_counterexample(default_lambdas()));
  return out;
}

}  // namespace lieindex

#endif
