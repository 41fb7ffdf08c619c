#ifndef LIEINDEX_ROOTSYSTEM_HPP
#define LIEINDEX_ROOTSYSTEM_HPP

// Root systems of the simple types A..G in Bourbaki numbering: positive-root
// enumeration from the Cartan matrix, integral pairings <beta, alpha^vee>,
// highest roots of connected subdiagrams, and the recursive cascade of
// strongly orthogonal roots with its Gamma decomposition of R+.
//
// Roots are integer coordinate vectors over the simple roots. The canonical
// order everywhere is graded lexicographic: (height, coords).

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieindex {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      return static_cast<Family>(c);
    default:
      throw std::invalid_argument(std::string("unknown family '") + c + "' (expected A..G)");
  }
}

struct SimpleType {
  Family family;
  int rank;

  /// Rank constraints: A l>=1, B l>=2, C l>=3, D l>=4, E l in {6,7,8}, F l=4, G l=2.
  void validate() const {
    auto fail = [&](const char* constraint) {
      throw std::invalid_argument("invalid type " + name() + ": family " +
                                  std::string(1, static_cast<char>(family)) +
                                  " requires " + constraint);
    };
    switch (family) {
      case Family::A: if (rank < 1) fail("rank >= 1"); break;
      case Family::B: if (rank < 2) fail("rank >= 2"); break;
      case Family::C: if (rank < 3) fail("rank >= 3"); break;
      case Family::D: if (rank < 4) fail("rank >= 4"); break;
      case Family::E: if (rank < 6 || rank > 8) fail("rank in {6,7,8}"); break;
      case Family::F: if (rank != 4) fail("rank = 4"); break;
      case Family::G: if (rank != 2) fail("rank = 2"); break;
    }
  }

  std::string name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }

  bool operator==(const SimpleType&) const = default;
};

struct Root {
  std::vector<int> coords;

  Root() = default;
  explicit Root(std::vector<int> c) : coords(std::move(c)) {}

  int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

  bool is_positive() const {
    bool nonzero = false;
    for (int c : coords) {
      if (c < 0) return false;
      if (c > 0) nonzero = true;
    }
    return nonzero;
  }

  Root operator-() const {
    Root r = *this;
    for (int& c : r.coords) c = -c;
    return r;
  }

  Root operator+(const Root& o) const {
    Root r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
  }

  Root operator-(const Root& o) const {
    Root r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
  }

  bool operator==(const Root&) const = default;

  /// Graded lexicographic order.
  bool operator<(const Root& o) const {
    int h = height(), oh = o.height();
    if (h != oh) return h < oh;
    return coords < o.coords;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords[i]);
    }
    return s + "]";
  }
};

/// One element K of the cascade: a connected subset of the simple roots, the
/// highest root of its subsystem, and the set of positive roots in R^K
/// pairing strictly positively with epsilon_K.
struct CascadeNode {
  std::vector<int> subset;      // 0-based simple-root indices, sorted
  Root epsilon;
  std::vector<Root> gamma;      // grlex sorted, all positive
  std::optional<std::size_t> parent;  // index of the enclosing node, if any
};

class RootSystem {
 public:
  explicit RootSystem(SimpleType t) : stype_(t) {
    t.validate();
    build_cartan();
    enumerate_positive_roots();
  }

  const SimpleType& type() const { return stype_; }
  int rank() const { return stype_.rank; }

  /// cartan()[i][j] = <alpha_j, alpha_i^vee> = alpha_j(H_i).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /// Squared length of alpha_i, short roots normalized to 2.
  const std::vector<int>& squared_lengths() const { return sq_; }

  const std::vector<Root>& positive_roots() const { return positive_; }

  Root simple_root(int i) const {
    check_simple_index(i);
    std::vector<int> c(rank(), 0);
    c[i] = 1;
    return Root(std::move(c));
  }

  bool is_positive_root(const Root& r) const { return pos_index_.count(r.coords) > 0; }

  bool is_root(const Root& r) const {
    return is_positive_root(r) || pos_index_.count((-r).coords) > 0;
  }

  std::size_t positive_index(const Root& r) const {
    auto it = pos_index_.find(r.coords);
    if (it == pos_index_.end()) throw std::domain_error(r.str() + " is not a positive root");
    return it->second;
  }

  /// Dynkin graph adjacency among simple roots.
  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

  /// Inner product (beta, gamma) in the short-root=2 normalization. Defined
  /// for arbitrary integer coordinate vectors.
  long long inner(const Root& b, const Root& g) const {
    long long s = 0;
    for (int i = 0; i < rank(); ++i) {
      if (b.coords[i] == 0) continue;
      for (int j = 0; j < rank(); ++j) {
        if (g.coords[j] == 0) continue;
        // (alpha_i, alpha_j) = C[i][j] * sq[i] / 2, always integral
        s += static_cast<long long>(b.coords[i]) * g.coords[j] * cartan_[i][j] * sq_[i] / 2;
      }
    }
    return s;
  }

  /// Integer coordinates of the coroot H_alpha over the simple coroots H_i.
  std::vector<int> coroot_coords(const Root& alpha) const {
    if (!is_root(alpha)) throw std::domain_error(alpha.str() + " is not a root");
    long long sq_a = inner(alpha, alpha);
    std::vector<int> c(rank());
    for (int i = 0; i < rank(); ++i) {
      long long num = static_cast<long long>(alpha.coords[i]) * sq_[i];
      if (num % sq_a != 0) throw std::logic_error("non-integral coroot coordinate");
      c[i] = static_cast<int>(num / sq_a);
    }
    return c;
  }

  /// <beta, alpha^vee> = beta(H_alpha). beta may be any integer vector over
  /// the simple roots; alpha must be a root.
  long long pairing(const Root& beta, const Root& alpha) const {
    std::vector<int> c = coroot_coords(alpha);
    long long s = 0;
    for (int i = 0; i < rank(); ++i) {
      if (c[i] == 0) continue;
      long long bi = 0;
      for (int j = 0; j < rank(); ++j) bi += static_cast<long long>(beta.coords[j]) * cartan_[i][j];
      s += c[i] * bi;
    }
    return s;
  }

  /// Positive roots of the subsystem R^S (support contained in S).
  std::vector<Root> positive_roots_in(const std::vector<int>& S) const {
    std::vector<bool> in(rank(), false);
    for (int i : normalize_subset(S)) in[i] = true;
    std::vector<Root> out;
    for (const Root& r : positive_) {
      bool ok = true;
      for (int i = 0; i < rank() && ok; ++i)
        if (r.coords[i] != 0 && !in[i]) ok = false;
      if (ok) out.push_back(r);
    }
    return out;
  }

  /// Highest root of R^S for S connected and nonempty: the unique maximum of
  /// R+^S under componentwise comparison.
  Root highest_root(const std::vector<int>& S) const {
    std::vector<int> s = normalize_subset(S);
    if (s.empty()) throw std::domain_error("highest root of empty subset");
    if (connected_components(s).size() != 1)
      throw std::domain_error("highest root of disconnected subset");
    std::vector<Root> rs = positive_roots_in(s);
    const Root* best = &rs[0];
    for (const Root& r : rs)
      if (best->height() < r.height()) best = &r;
    for (const Root& r : rs)
      for (int i = 0; i < rank(); ++i)
        if (r.coords[i] > best->coords[i])
          throw std::logic_error("no componentwise maximum in R+^S");
    return *best;
  }

  /// Partition of S into Dynkin-connected pieces, ordered by smallest index.
  std::vector<std::vector<int>> connected_components(const std::vector<int>& S) const {
    std::vector<int> s = normalize_subset(S);
    std::vector<bool> in(rank(), false), seen(rank(), false);
    for (int i : s) in[i] = true;
    std::vector<std::vector<int>> comps;
    for (int start : s) {
      if (seen[start]) continue;
      std::vector<int> comp, stack{start};
      seen[start] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int w = 0; w < rank(); ++w)
          if (in[w] && !seen[w] && adjacent(v, w)) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;  // ordered by smallest index since s is sorted
  }

  /// The recursive cascade K(S): empty for empty S; the union over connected
  /// components; for connected S, the node S followed (depth-first) by the
  /// cascade of {alpha in S : <alpha, eps_S^vee> = 0}.
  std::vector<CascadeNode> cascade(const std::vector<int>& S) const {
    std::vector<CascadeNode> nodes;
    for (const std::vector<int>& comp : connected_components(normalize_subset(S)))
      cascade_connected(comp, std::nullopt, nodes);
    return nodes;
  }

  std::vector<CascadeNode> cascade() const { return cascade(full_subset()); }

  /// |K(Pi)|, the number of strongly orthogonal cascade roots.
  std::size_t cascade_size() const { return cascade().size(); }

  std::vector<int> full_subset() const {
    std::vector<int> s(rank());
    std::iota(s.begin(), s.end(), 0);
    return s;
  }

 private:
  SimpleType stype_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sq_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, std::size_t> pos_index_;

  void check_simple_index(int i) const {
    if (i < 0 || i >= rank())
      throw std::domain_error("simple root index " + std::to_string(i) + " out of range for " +
                              stype_.name());
  }

  std::vector<int> normalize_subset(const std::vector<int>& S) const {
    std::vector<int> s = S;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int i : s) check_simple_index(i);
    return s;
  }

  void bond(int i, int j, int cij, int cji) {
    cartan_[i][j] = cij;
    cartan_[j][i] = cji;
  }

  void build_cartan() {
    int l = rank();
    cartan_.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) cartan_[i][i] = 2;
    sq_.assign(l, 2);
    switch (stype_.family) {
      case Family::A:
        for (int i = 0; i + 1 < l; ++i) bond(i, i + 1, -1, -1);
        break;
      case Family::B:
        // alpha_l short; row of the short root carries the -2
        for (int i = 0; i + 2 < l; ++i) bond(i, i + 1, -1, -1);
        bond(l - 2, l - 1, -1, -2);
        for (int i = 0; i + 1 < l; ++i) sq_[i] = 4;
        break;
      case Family::C:
        // alpha_l long
        for (int i = 0; i + 2 < l; ++i) bond(i, i + 1, -1, -1);
        bond(l - 2, l - 1, -2, -1);
        sq_[l - 1] = 4;
        break;
      case Family::D:
        for (int i = 0; i + 2 < l; ++i) bond(i, i + 1, -1, -1);
        bond(l - 3, l - 1, -1, -1);
        break;
      case Family::E:
        // chain 1-3-4-5-...-l with 2 attached to 4 (Bourbaki)
        bond(0, 2, -1, -1);
        bond(1, 3, -1, -1);
        for (int i = 2; i + 1 < l; ++i) bond(i, i + 1, -1, -1);
        break;
      case Family::F:
        bond(0, 1, -1, -1);
        bond(1, 2, -1, -2);  // alpha_3, alpha_4 short
        bond(2, 3, -1, -1);
        sq_[0] = sq_[1] = 4;
        break;
      case Family::G:
        bond(0, 1, -3, -1);  // alpha_1 short
        sq_[1] = 6;
        break;
    }
  }

  long long simple_pairing(const Root& beta, int i) const {
    long long s = 0;
    for (int j = 0; j < rank(); ++j) s += static_cast<long long>(beta.coords[j]) * cartan_[i][j];
    return s;
  }

  /// Upward closure from the simple roots: beta + alpha_i is a root iff
  /// p - <beta, alpha_i^vee> > 0 with p the length of the descending
  /// alpha_i-string through beta. Heights are exhausted one at a time, so the
  /// descending string is always already enumerated.
  void enumerate_positive_roots() {
    std::set<std::vector<int>> found;
    std::vector<Root> current;
    for (int i = 0; i < rank(); ++i) {
      Root a = simple_root(i);
      found.insert(a.coords);
      current.push_back(a);
    }
    std::vector<Root> all = current;
    while (!current.empty()) {
      std::set<std::vector<int>> next;
      for (const Root& beta : current) {
        for (int i = 0; i < rank(); ++i) {
          long long p = 0;
          Root down = beta - simple_root(i);
          while (down.is_positive() && found.count(down.coords)) {
            ++p;
            down = down - simple_root(i);
          }
          if (p - simple_pairing(beta, i) > 0) {
            Root up = beta + simple_root(i);
            if (!found.count(up.coords)) next.insert(up.coords);
          }
        }
      }
      current.clear();
      for (const std::vector<int>& c : next) {
        found.insert(c);
        current.emplace_back(c);
        all.emplace_back(c);
      }
    }
    std::sort(all.begin(), all.end());
    positive_ = std::move(all);
    for (std::size_t k = 0; k < positive_.size(); ++k) pos_index_[positive_[k].coords] = k;
  }

  void cascade_connected(const std::vector<int>& K, std::optional<std::size_t> parent,
                         std::vector<CascadeNode>& out) const {
    CascadeNode node;
    node.subset = K;
    node.epsilon = highest_root(K);
    for (const Root& a : positive_roots_in(K))
      if (pairing(a, node.epsilon) > 0) node.gamma.push_back(a);
    node.parent = parent;
    out.push_back(std::move(node));
    std::size_t self = out.size() - 1;
    std::vector<int> orth;
    for (int i : K)
      if (pairing(simple_root(i), out[self].epsilon) == 0) orth.push_back(i);
    for (const std::vector<int>& comp : connected_components(orth))
      cascade_connected(comp, self, out);
  }
};

inline RootSystem build_root_system(SimpleType t) { return RootSystem(t); }

/// The Gamma decomposition of R+: the cascade nodes of the full diagram,
/// each carrying its Gamma^K; the gamma sets are pairwise disjoint and their
/// union is the set of positive roots.
inline std::vector<CascadeNode> gamma_partition(const RootSystem& rs) { return rs.cascade(); }

inline RootSystem build_root_system(char family, int rank) {
  return RootSystem(SimpleType{family_from_char(family), rank});
}

}  // namespace lieindex

#endif
