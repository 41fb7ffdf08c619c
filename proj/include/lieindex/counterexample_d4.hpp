#ifndef LIEINDEX_COUNTEREXAMPLE_D4_HPP
#define LIEINDEX_COUNTEREXAMPLE_D4_HPP

// The D4 minimal parabolic with no stable linear form: p = k X_{-a2} + b in
// Bourbaki numbering (a2 is the trivalent node). For every lambda, the form
// f = phi_p(lambda X_{a2} + u) built over the cascade element u has a
// one-dimensional centralizer p^f = k x whose spanning vector is an
// eigenvector of an explicit Cartan element h, [h,x] = x, so
// [p, p^f] ∩ p^f = p^f != {0} and the stability criterion fails.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lieindex/chevalley.hpp"
#include "lieindex/rational.hpp"
#include "lieindex/rootsystem.hpp"
#include "lieindex/stability.hpp"
#include "lieindex/subalg.hpp"

namespace lieindex {

/// Owns the D4 algebra and its minimal parabolic p = parabolic(L, {a2});
/// heap-held so the view types stay valid across moves.
struct D4Scenario {
  std::unique_ptr<LieAlgebra> algebra;
  std::unique_ptr<Subalgebra> p;
  Element u;

  const LieAlgebra& L() const { return *algebra; }
  const Subalgebra& parabolic_subalg() const { return *p; }
};

inline D4Scenario build_scenario() {
  D4Scenario s;
  s.algebra = std::make_unique<LieAlgebra>(build_root_system('D', 4));
  s.p = std::make_unique<Subalgebra>(parabolic(*s.algebra, {1}));  // {a2}, 0-based index 1
  s.u = cascade_element(*s.algebra);
  return s;
}

/// f = phi_p(lambda X_{a2} + u).
inline LinearForm counterexample_form(const D4Scenario& s, const Rat& lambda) {
  Root a2 = s.L().roots().simple_root(1);
  Element v = s.L().root_vector(a2) * lambda + s.u;
  LinearForm f = form_from_element(s.parabolic_subalg(), v);
  f.descr = "phi_p(" + to_string(lambda) + "*X_a2 + u)";
  return f;
}

struct CounterexampleReport {
  Rat lambda;
  int dim_pf = 0;
  std::vector<Root> support;  // roots carrying the spanning x, including -a2
  bool h_eigen_check = false;  // [h,x] = x exactly
  bool stability_verdict = true;  // is_stable(...).stable; must come out false
  std::vector<std::string> failures;  // named failed claims, empty when all hold

  bool all_ok() const { return failures.empty(); }
};

inline std::vector<Root> expected_support(bool lambda_zero) {
  auto root = [](std::vector<int> c) { return Root(std::move(c)); };
  std::vector<Root> s = {root({0, -1, 0, 0}), root({1, 1, 1, 0}), root({1, 1, 0, 1}),
                         root({0, 1, 1, 1})};
  if (!lambda_zero) {
    s.push_back(root({1, 0, 0, 0}));
    s.push_back(root({0, 0, 1, 0}));
    s.push_back(root({0, 0, 0, 1}));
    s.push_back(root({1, 2, 1, 1}));
  }
  std::sort(s.begin(), s.end());
  return s;
}

/// Runs every claim for one lambda; failed claims are recorded by name
/// instead of thrown so a batch run reports all of them.
inline CounterexampleReport run_counterexample_one(const D4Scenario& s, const Rat& lambda) {
  CounterexampleReport rep;
  rep.lambda = lambda;
  const LieAlgebra& L = s.L();
  const Subalgebra& p = s.parabolic_subalg();
  auto fail = [&](const std::string& what) {
    rep.failures.push_back(what + " (lambda = " + to_string(lambda) + ")");
  };

  LinearForm f = counterexample_form(s, lambda);
  std::vector<Element> pf = centralizer(f);
  rep.dim_pf = static_cast<int>(pf.size());
  if (rep.dim_pf != 1) {
    fail("dim p^f != 1");
    return rep;
  }

  // normalize the spanning vector: coefficient 1 on X_{-a2}
  Element x = pf[0];
  Root neg_a2(std::vector<int>{0, -1, 0, 0});
  Rat lead = x.c[L.root_index(neg_a2)];
  if (lead == 0) {
    fail("spanning x has no X_{-a2} component");
    return rep;
  }
  x = x * (1 / lead);

  for (int i = 0; i < L.rank(); ++i)
    if (x.c[i] != 0) fail("spanning x has a Cartan component");
  for (std::size_t b = L.rank(); b < L.dim(); ++b)
    if (x.c[b] != 0) rep.support.push_back(L.root_of_index(static_cast<int>(b)));
  std::sort(rep.support.begin(), rep.support.end());
  if (rep.support != expected_support(lambda == 0)) fail("support of spanning x differs");

  // h with a1(h) = a3(h) = a4(h) = 1, a2(h) = -1; alpha_i(H_j) = cartan[j][i]
  QMatrix a(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a.at(i, j) = Rat(L.roots().cartan()[j][i]);
  QVec target = {Rat(1), Rat(-1), Rat(1), Rat(1)};
  std::optional<QVec> hc = solve_linear(a, target);
  if (!hc) {
    fail("no Cartan element h with the required eigenvalues");
    return rep;
  }
  Element h = L.zero();
  for (int i = 0; i < 4; ++i) h.c[i] = (*hc)[i];
  rep.h_eigen_check = L.bracket(h, x) == x;
  if (!rep.h_eigen_check) fail("[h,x] != x");

  StabilityReport st = is_stable(p, f);
  rep.stability_verdict = st.stable;
  if (st.stable) fail("criterion did not fail: form reported stable");
  if (st.dim_intersection != 1) fail("[p, p^f] ∩ p^f does not have dimension 1");
  return rep;
}

inline std::vector<CounterexampleReport> run_counterexample(const D4Scenario& s,
                                                            const std::vector<Rat>& lambdas) {
  std::vector<CounterexampleReport> out;
  out.reserve(lambdas.size());
  for (const Rat& l : lambdas) out.push_back(run_counterexample_one(s, l));
  return out;
}

inline std::vector<Rat> default_lambdas() {
  return {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(5), rat(-3, 7)};
}

}  // namespace lieindex

#endif
