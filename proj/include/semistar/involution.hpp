//
// semistar - finite semigroup representation analysis
//
// Involutions of finite semigroups: exhaustive enumeration (backtracking
// with constraint propagation), the structural decomposition of an
// involution of a Rees matrix semigroup into (phi, u_i, z, * on G), the
// uniqueness filter for the inverse-inducing involution, and the criterion
// for every representation to be a semiunitary *-representation.
//

#ifndef SEMISTAR_INVOLUTION_HPP_
#define SEMISTAR_INVOLUTION_HPP_

#include <optional>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "rees.hpp"
#include "schutz.hpp"
#include "semigroup.hpp"

namespace semistar {

// Structure data of an involution of M^0(I, I, G, P):
//   (a)_{ij}* = (z u_{phi(j)}* a* u_i^{-1})_{phi(j), phi(i)}
//   p_{ji}*   = z u_i^{-1} p_{phi(i), phi(j)} u_{phi(j)}*
// v_j is not stored; v_{phi(i)} = z u_i*.
struct ReesInvolutionStructure {
  std::vector<int> phi;     // involutive permutation of I
  std::vector<int> u;       // per index, local group elements
  int z = -1;               // central, z* = z^{-1}
  std::vector<int> g_star;  // involution on G, local
};

struct InvolutionMap {
  std::vector<int> map;
  std::optional<ReesInvolutionStructure> structure;
};

namespace detail {

struct InvolutionSearch {
  const SemigroupTable& s;
  std::vector<int> lsize, rsize;
  std::vector<bool> idem;
  std::vector<int> f;
  std::vector<int> assigned;  // elements with f set, in assignment order
  std::vector<std::vector<int>>& out;

  InvolutionSearch(const SemigroupTable& sg, const GreenStructure& green,
                   std::vector<std::vector<int>>& results)
      : s(sg), out(results) {
    lsize.resize(s.n);
    rsize.resize(s.n);
    idem.resize(s.n);
    for (int a = 0; a < s.n; ++a) {
      lsize[a] = static_cast<int>(green.lclasses[green.lclass_of[a]].size());
      rsize[a] = static_cast<int>(green.rclasses[green.rclass_of[a]].size());
      idem[a] = s.is_idempotent(a);
    }
    f.assign(s.n, -1);
  }

  bool compatible(int a, int b) const {
    // f must swap idempotents with idempotents and send the L-class of a
    // onto an R-class of equal size (and vice versa).
    return idem[a] == idem[b] && lsize[a] == rsize[b] && rsize[a] == lsize[b];
  }

  // Assigns f[a] = b (and f[b] = a) and propagates the anti-homomorphism
  // equation over all decided pairs.  Returns false on contradiction; the
  // trail records assignments for rollback either way.
  bool assign(int a, int b, std::vector<int>& trail) {
    if (f[a] >= 0) {
      return f[a] == b;
    }
    if (f[b] >= 0 || !compatible(a, b) || !compatible(b, a)) {
      return false;
    }
    f[a] = b;
    f[b] = a;
    trail.push_back(a);
    assigned.push_back(a);
    if (a != b) {
      trail.push_back(b);
      assigned.push_back(b);
    }
    const std::size_t from = assigned.size() - (a == b ? 1 : 2);
    for (std::size_t k = from; k < assigned.size(); ++k) {
      const int x = assigned[k];
      for (std::size_t l = 0; l < assigned.size(); ++l) {
        const int y = assigned[l];
        if (!force(s.mul[x][y], s.mul[f[y]][f[x]], trail)
            || !force(s.mul[y][x], s.mul[f[x]][f[y]], trail)) {
          return false;
        }
      }
    }
    return true;
  }

  bool force(int p, int q, std::vector<int>& trail) {
    if (f[p] >= 0) {
      return f[p] == q;
    }
    return assign(p, q, trail);
  }

  void undo(std::vector<int>& trail) {
    for (int x : trail) {
      f[x] = -1;
      assigned.pop_back();
    }
    trail.clear();
  }

  void search() {
    int a = -1;
    for (int i = 0; i < s.n; ++i) {
      if (f[i] < 0) {
        a = i;
        break;
      }
    }
    if (a < 0) {
      out.push_back(f);
      return;
    }
    for (int b = 0; b < s.n; ++b) {
      std::vector<int> trail;
      if (assign(a, b, trail)) {
        search();
      }
      undo(trail);
    }
  }
};

}  // namespace detail

// All involutive anti-automorphisms of S, by backtracking.  The zero is
// pinned, idempotents map to idempotents, and L-classes must land on
// R-classes of equal size, which cuts the n! search down to nothing for
// the sizes we care about.
inline std::vector<InvolutionMap> enumerate_involutions(
    const SemigroupTable& s, const GreenStructure& green) {
  if (s.n > 40) {
    throw SizeLimit("involution enumeration is capped at order 40");
  }
  std::vector<std::vector<int>> results;
  detail::InvolutionSearch search(s, green, results);
  if (s.zero) {
    std::vector<int> trail;
    if (!search.assign(*s.zero, *s.zero, trail)) {
      return {};
    }
  }
  search.search();
  std::vector<InvolutionMap> out;
  out.reserve(results.size());
  for (auto& map : results) {
    verify_semigroup_involution(s, map);
    out.push_back(InvolutionMap{std::move(map), std::nullopt});
  }
  return out;
}

inline std::vector<InvolutionMap> enumerate_involutions(
    const SemigroupTable& s) {
  return enumerate_involutions(s, green_structure(s));
}

// Rebuilds the involution defined by its structure data.
inline std::vector<int> reconstruct_rees_involution(
    const ReesSemigroup& r, const ReesInvolutionStructure& ss) {
  if (r.m != r.n) {
    throw NotReesCompatible("index sets differ");
  }
  const GroupData& g = r.group;
  std::vector<int> map(r.table.n, -1);
  map[r.zero_index()] = r.zero_index();
  for (int i = 0; i < r.m; ++i) {
    for (int j = 0; j < r.n; ++j) {
      for (int a = 0; a < g.order(); ++a) {
        const int part = g.mul(
            g.mul(g.mul(ss.z, ss.g_star[ss.u[ss.phi[j]]]), ss.g_star[a]),
            g.inv(ss.u[i]));
        map[r.element_index(i, j, a)] =
            r.element_index(ss.phi[j], ss.phi[i], part);
      }
    }
  }
  return map;
}

// Extracts (phi, u_i, z, * on G) from a verified involution of a Rees
// matrix semigroup, following the constructive proof: phi from where the
// L- and R-classes land, u_i from the images of (p_{j0,i0}^{-1})_{i,j0},
// the group involution from the anchor H-class, and z from z u_i* =
// v_{phi(i)}.  Both defining conditions and the exact round trip are
// verified before returning.
inline ReesInvolutionStructure decompose_rees_involution(const ReesSemigroup& r,
                                        const std::vector<int>& star) {
  verify_semigroup_involution(r.table, star);
  if (r.m != r.n) {
    throw NotReesCompatible("involution requires equal index sets");
  }
  const GroupData& g = r.group;
  const int size = r.m;
  const int e = g.identity_local;

  int i0 = -1, j0 = -1;
  for (int j = 0; j < size && i0 < 0; ++j) {
    for (int i = 0; i < size && i0 < 0; ++i) {
      if (r.sandwich[j][i] != kZeroEntry) {
        i0 = i;
        j0 = j;
      }
    }
  }
  if (i0 < 0) {
    throw NotReesCompatible("sandwich matrix has no group entry");
  }

  ReesInvolutionStructure ss;
  ss.phi.assign(size, -1);
  for (int i = 0; i < size; ++i) {
    const auto d = r.decode(star[r.element_index(i, 0, e)]);
    if (d.zero) {
      throw InvariantViolation("involution sends a nonzero element to zero");
    }
    ss.phi[i] = d.j;
  }
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const auto d = r.decode(star[r.element_index(i, j, e)]);
      if (d.zero || d.i != ss.phi[j] || d.j != ss.phi[i]) {
        throw InvariantViolation("involution does not respect the coset "
                                 "grid");
      }
    }
    if (ss.phi[ss.phi[i]] != i) {
      throw InvariantViolation("index map phi is not involutive");
    }
  }

  const int p0 = r.sandwich[j0][i0];
  const int q0 = r.sandwich[ss.phi[i0]][ss.phi[j0]];
  if (q0 == kZeroEntry) {
    throw InvariantViolation("mirrored anchor entry vanished");
  }

  ss.u.assign(size, -1);
  for (int i = 0; i < size; ++i) {
    const auto d = r.decode(star[r.element_index(i, j0, g.inv(p0))]);
    ss.u[i] = g.inv(d.a);
  }

  ss.g_star.assign(g.order(), -1);
  for (int a = 0; a < g.order(); ++a) {
    const auto d =
        r.decode(star[r.element_index(i0, j0, g.mul(a, g.inv(p0)))]);
    ss.g_star[a] = g.mul(d.a, q0);
  }
  verify_group_involution(g, ss.g_star);

  // v_j from the images of (1)_{i0, j}, then z from z u_i* = v_{phi(i)}.
  std::vector<int> v(size, -1);
  for (int j = 0; j < size; ++j) {
    const auto d = r.decode(star[r.element_index(i0, j, e)]);
    v[j] = g.mul(d.a, q0);
  }
  ss.z = g.mul(v[ss.phi[0]], g.inv(ss.g_star[ss.u[0]]));
  for (int i = 0; i < size; ++i) {
    if (g.mul(ss.z, ss.g_star[ss.u[i]]) != v[ss.phi[i]]) {
      throw InvariantViolation("central scalar z is inconsistent");
    }
  }
  for (int a = 0; a < g.order(); ++a) {
    if (g.mul(ss.z, a) != g.mul(a, ss.z)) {
      throw InvariantViolation("z is not central");
    }
  }
  if (ss.g_star[ss.z] != g.inv(ss.z)) {
    throw InvariantViolation("z* differs from z^{-1}");
  }

  // Condition (b): p_{ji}* = z u_i^{-1} p_{phi(i), phi(j)} u_{phi(j)}*.
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      const int p = r.sandwich[j][i];
      const int q = r.sandwich[ss.phi[i]][ss.phi[j]];
      if ((p == kZeroEntry) != (q == kZeroEntry)) {
        throw InvariantViolation("sandwich zero pattern breaks condition "
                                 "(b)");
      }
      if (p != kZeroEntry) {
        const int rhs = g.mul(g.mul(g.mul(ss.z, g.inv(ss.u[i])), q),
                              ss.g_star[ss.u[ss.phi[j]]]);
        if (ss.g_star[p] != rhs) {
          throw InvariantViolation("condition (b) fails");
        }
      }
    }
  }
  if (reconstruct_rees_involution(r, ss) != star) {
    throw InvariantViolation("decomposition does not reproduce the "
                             "involution");
  }
  return ss;
}

// At most one involution makes S an inverse semigroup with that inverse
// map; this filters the enumeration by the defining identities and insists
// on the uniqueness.
inline std::optional<InvolutionMap> inverse_inducing_involution(
    const SemigroupTable& s, const GreenStructure& green) {
  std::optional<InvolutionMap> survivor;
  for (auto& inv : enumerate_involutions(s, green)) {
    bool induces = true;
    for (int a = 0; a < s.n && induces; ++a) {
      const int b = inv.map[a];
      induces = s.mul[s.mul[a][b]][a] == a && s.mul[s.mul[b][a]][b] == b;
    }
    if (induces) {
      if (survivor) {
        throw MultipleSurvivors("two involutions both induce inverses");
      }
      survivor = std::move(inv);
    }
  }
  return survivor;
}

inline std::optional<InvolutionMap> inverse_inducing_involution(
    const SemigroupTable& s) {
  return inverse_inducing_involution(s, green_structure(s));
}

// Embeds a sandwich matrix over G^0 as an integer matrix through the left
// regular representation of G; invertibility over C[G] is then an exact
// rank computation.
inline IntMatrix sandwich_regular_embedding(const GroupData& g,
                                            const Sandwich& p) {
  const int rows = static_cast<int>(p.size());
  const int cols = rows ? static_cast<int>(p[0].size()) : 0;
  const int k = g.order();
  IntMatrix big(rows * k, std::vector<std::int64_t>(cols * k, 0));
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < cols; ++i) {
      if (p[j][i] == kZeroEntry) {
        continue;
      }
      for (int y = 0; y < k; ++y) {
        big[j * k + g.mul(p[j][i], y)][i * k + y] = 1;
      }
    }
  }
  return big;
}

// For a Rees semigroup carrying an involution in the symmetrized form
// (a)_{ij}* = (z a*)_{ji} with p_{ji}* = z p_{ij}, every finite dimensional
// representation is isomorphic to a semiunitary *-representation iff
//   (1) P is invertible over C[G],
//   (2) p_{ii} = g constant with g^2 z = 1 and g^{-1} g* central,
//   (3) a* = g a^{-1} g^{-1} on G.
inline bool semiunitary_star_conditions(const ReesSemigroup& r,
                                        const InvolutionMap& star) {
  verify_semigroup_involution(r.table, star.map);
  if (r.m != r.n) {
    throw NotCorollaryForm("index sets differ");
  }
  const GroupData& g = r.group;
  const int e = g.identity_local;

  // Extract z and * on G from the symmetrized shape and verify it holds
  // everywhere: star((a)_{ij}) must be (z a*)_{ji}.
  const auto dz = r.decode(star.map[r.element_index(0, 0, e)]);
  if (dz.zero || dz.i != 0 || dz.j != 0) {
    throw NotCorollaryForm("identity cell does not map to itself");
  }
  const int z = dz.a;
  std::vector<int> g_star(g.order());
  for (int a = 0; a < g.order(); ++a) {
    const auto d = r.decode(star.map[r.element_index(0, 0, a)]);
    if (d.zero || d.i != 0 || d.j != 0) {
      throw NotCorollaryForm("anchor H-class is not preserved");
    }
    g_star[a] = g.mul(g.inv(z), d.a);
  }
  for (int i = 0; i < r.m; ++i) {
    for (int j = 0; j < r.n; ++j) {
      for (int a = 0; a < g.order(); ++a) {
        const auto d = r.decode(star.map[r.element_index(i, j, a)]);
        if (d.zero || d.i != j || d.j != i
            || d.a != g.mul(z, g_star[a])) {
          throw NotCorollaryForm("involution is not of the form (z a*)_{ji}");
        }
      }
    }
  }
  verify_group_involution(g, g_star);
  for (int j = 0; j < r.n; ++j) {
    for (int i = 0; i < r.m; ++i) {
      const int p = r.sandwich[j][i];
      const int q = r.sandwich[i][j];
      if ((p == kZeroEntry) != (q == kZeroEntry)) {
        throw NotCorollaryForm("sandwich zero pattern is not symmetric");
      }
      if (p != kZeroEntry && g_star[p] != g.mul(z, q)) {
        throw NotCorollaryForm("sandwich fails p_{ji}* = z p_{ij}");
      }
    }
  }

  // (1) invertibility of P over the group algebra, exactly.
  const IntMatrix big = sandwich_regular_embedding(g, r.sandwich);
  if (exact_rank(big) != r.n * g.order()) {
    return false;
  }
  // (2) constant group diagonal with g0^2 z = 1 and g0^{-1} g0* central.
  const int g0 = r.sandwich[0][0];
  if (g0 == kZeroEntry) {
    return false;
  }
  for (int i = 0; i < r.m; ++i) {
    if (r.sandwich[i][i] != g0) {
      return false;
    }
  }
  if (g.mul(g.mul(g0, g0), z) != e) {
    return false;
  }
  const int central = g.mul(g.inv(g0), g_star[g0]);
  for (int a = 0; a < g.order(); ++a) {
    if (g.mul(central, a) != g.mul(a, central)) {
      return false;
    }
  }
  // (3) a* = g0 a^{-1} g0^{-1}.
  for (int a = 0; a < g.order(); ++a) {
    if (g_star[a] != g.mul(g.mul(g0, g.inv(a)), g.inv(g0))) {
      return false;
    }
  }
  return true;
}

}  // namespace semistar

#endif  // SEMISTAR_INVOLUTION_HPP_
