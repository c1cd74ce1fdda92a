//
// semistar - finite semigroup representation analysis
//
// Finite semigroups as multiplication tables: validation, Green's relations,
// principal series, maximal subgroups, and the exact brute-force oracles the
// representation-theoretic decision procedures are checked against.
//

#ifndef SEMISTAR_SEMIGROUP_HPP_
#define SEMISTAR_SEMIGROUP_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"

namespace semistar {

// A finite semigroup on elements {0, ..., n-1}.  mul[a][b] is the product
// a*b.  The zero element, when present, is recorded explicitly; it is the
// one identified with the algebra zero in the contracted convention.
struct SemigroupTable {
  int n = 0;
  std::vector<std::vector<int>> mul;
  std::optional<int> zero;
  bool has_adjoined_identity = false;
  std::vector<std::string> labels;

  int at(int a, int b) const { return mul[a][b]; }

  bool is_idempotent(int a) const { return mul[a][a] == a; }

  const std::string& label(int a) const { return labels[a]; }
};

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i + 1);
  }
  return labels;
}

// Validates a raw multiplication grid: entry range, associativity, and the
// zero axioms when a zero is declared.  Reports the first violation found.
inline SemigroupTable validate_table(const std::vector<std::vector<int>>& raw,
                                     std::optional<int> zero = std::nullopt,
                                     std::vector<std::string> labels = {}) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) {
    throw Error("empty multiplication table");
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(raw[a].size()) != n) {
      throw Error("row " + std::to_string(a + 1) + " has wrong length");
    }
    for (int b = 0; b < n; ++b) {
      if (raw[a][b] < 0 || raw[a][b] >= n) {
        throw Error("table entry out of range at (" + std::to_string(a + 1)
                    + ", " + std::to_string(b + 1) + ")");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = raw[a][b];
      for (int c = 0; c < n; ++c) {
        if (raw[ab][c] != raw[a][raw[b][c]]) {
          throw AssociativityError(a, b, c);
        }
      }
    }
  }
  if (zero) {
    if (*zero < 0 || *zero >= n) {
      throw Error("zero index out of range");
    }
    for (int a = 0; a < n; ++a) {
      if (raw[*zero][a] != *zero || raw[a][*zero] != *zero) {
        throw ZeroAxiomError(a);
      }
    }
  }
  SemigroupTable s;
  s.n = n;
  s.mul = raw;
  s.zero = zero;
  s.labels = labels.empty() ? default_labels(n) : std::move(labels);
  if (static_cast<int>(s.labels.size()) != n) {
    throw Error("label count does not match table size");
  }
  return s;
}

// S with a fresh two-sided identity adjoined as the last element.
inline SemigroupTable adjoin_identity(const SemigroupTable& s) {
  SemigroupTable t;
  t.n = s.n + 1;
  t.mul.assign(t.n, std::vector<int>(t.n));
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      t.mul[a][b] = s.mul[a][b];
    }
  }
  for (int a = 0; a < t.n; ++a) {
    t.mul[a][s.n] = a;
    t.mul[s.n][a] = a;
  }
  t.zero = s.zero;
  t.has_adjoined_identity = true;
  t.labels = s.labels;
  t.labels.push_back("1");
  return t;
}

inline std::vector<int> idempotents(const SemigroupTable& s) {
  std::vector<int> e;
  for (int a = 0; a < s.n; ++a) {
    if (s.is_idempotent(a)) {
      e.push_back(a);
    }
  }
  return e;
}

// Green's relations data.  Class ids are assigned in order of each class's
// smallest element.  jleq[x][y] holds iff the principal ideal of J-class x
// is contained in that of J-class y.
struct GreenStructure {
  std::vector<int> lclass_of, rclass_of, jclass_of;
  std::vector<std::vector<int>> lclasses, rclasses, jclasses;
  std::vector<std::vector<bool>> jleq;
  std::vector<bool> regular_j;
  std::vector<int> idempotents;
};

namespace detail {

inline std::vector<std::vector<bool>> left_ideals(const SemigroupTable& s) {
  // S^1 a = {a} u S a, by explicit enumeration.
  std::vector<std::vector<bool>> ideal(s.n, std::vector<bool>(s.n, false));
  for (int a = 0; a < s.n; ++a) {
    ideal[a][a] = true;
    for (int x = 0; x < s.n; ++x) {
      ideal[a][s.mul[x][a]] = true;
    }
  }
  return ideal;
}

inline std::vector<std::vector<bool>> right_ideals(const SemigroupTable& s) {
  std::vector<std::vector<bool>> ideal(s.n, std::vector<bool>(s.n, false));
  for (int a = 0; a < s.n; ++a) {
    ideal[a][a] = true;
    for (int x = 0; x < s.n; ++x) {
      ideal[a][s.mul[a][x]] = true;
    }
  }
  return ideal;
}

inline std::vector<std::vector<bool>> twosided_ideals(const SemigroupTable& s) {
  // S^1 a S^1 = {a} u Sa u aS u SaS.
  std::vector<std::vector<bool>> ideal(s.n, std::vector<bool>(s.n, false));
  for (int a = 0; a < s.n; ++a) {
    ideal[a][a] = true;
    for (int x = 0; x < s.n; ++x) {
      ideal[a][s.mul[x][a]] = true;
      ideal[a][s.mul[a][x]] = true;
      const int xa = s.mul[x][a];
      for (int y = 0; y < s.n; ++y) {
        ideal[a][s.mul[xa][y]] = true;
      }
    }
  }
  return ideal;
}

inline std::pair<std::vector<int>, std::vector<std::vector<int>>>
partition_by_ideal(const std::vector<std::vector<bool>>& ideal) {
  const int n = static_cast<int>(ideal.size());
  std::vector<int> class_of(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (class_of[a] >= 0) {
      continue;
    }
    const int id = static_cast<int>(classes.size());
    classes.push_back({a});
    class_of[a] = id;
    for (int b = a + 1; b < n; ++b) {
      if (class_of[b] < 0 && ideal[a] == ideal[b]) {
        class_of[b] = id;
        classes[id].push_back(b);
      }
    }
  }
  return {class_of, classes};
}

}  // namespace detail

inline bool is_regular_element(const SemigroupTable& s, int a) {
  for (int x = 0; x < s.n; ++x) {
    if (s.mul[s.mul[a][x]][a] == a) {
      return true;
    }
  }
  return false;
}

inline GreenStructure green_structure(const SemigroupTable& s) {
  GreenStructure g;
  const auto li = detail::left_ideals(s);
  const auto ri = detail::right_ideals(s);
  const auto ji = detail::twosided_ideals(s);
  std::tie(g.lclass_of, g.lclasses) = detail::partition_by_ideal(li);
  std::tie(g.rclass_of, g.rclasses) = detail::partition_by_ideal(ri);
  std::tie(g.jclass_of, g.jclasses) = detail::partition_by_ideal(ji);

  const int k = static_cast<int>(g.jclasses.size());
  g.jleq.assign(k, std::vector<bool>(k, false));
  for (int x = 0; x < k; ++x) {
    const int a = g.jclasses[x][0];
    for (int y = 0; y < k; ++y) {
      const int b = g.jclasses[y][0];
      bool contained = true;
      for (int e = 0; e < s.n && contained; ++e) {
        if (ji[a][e] && !ji[b][e]) {
          contained = false;
        }
      }
      g.jleq[x][y] = contained;
    }
  }
  g.regular_j.assign(k, false);
  for (int x = 0; x < k; ++x) {
    g.regular_j[x] = is_regular_element(s, g.jclasses[x][0]);
  }
  g.idempotents = idempotents(s);
  return g;
}

inline bool is_regular_semigroup(const SemigroupTable& s) {
  for (int a = 0; a < s.n; ++a) {
    if (!is_regular_element(s, a)) {
      return false;
    }
  }
  return true;
}

// Ascending chain of two-sided ideals whose successive differences are
// single J-classes.  ideals[i] is sorted; the last entry is all of S.
struct PrincipalSeries {
  std::vector<std::vector<int>> ideals;
  std::vector<int> quotient_jclass;
};

// Builds the series bottom-up: at every step the <=-minimal J-class among
// the remaining ones (ties broken by smallest element) is appended, so each
// prefix union is downward closed and hence a two-sided ideal.
inline PrincipalSeries principal_series(const SemigroupTable&,
                                        const GreenStructure& g) {
  const int k = static_cast<int>(g.jclasses.size());
  std::vector<bool> taken(k, false);
  PrincipalSeries series;
  std::vector<int> current;
  for (int step = 0; step < k; ++step) {
    int chosen = -1;
    for (int x = 0; x < k; ++x) {
      if (taken[x]) {
        continue;
      }
      bool minimal = true;
      for (int y = 0; y < k && minimal; ++y) {
        if (y != x && !taken[y] && g.jleq[y][x]) {
          minimal = false;
        }
      }
      if (minimal && (chosen < 0 || g.jclasses[x][0] < g.jclasses[chosen][0])) {
        chosen = x;
      }
    }
    taken[chosen] = true;
    current.insert(current.end(), g.jclasses[chosen].begin(),
                   g.jclasses[chosen].end());
    std::sort(current.begin(), current.end());
    series.ideals.push_back(current);
    series.quotient_jclass.push_back(chosen);
  }
  return series;
}

inline PrincipalSeries principal_series(const SemigroupTable& s) {
  return principal_series(s, green_structure(s));
}

// A group sitting inside a semigroup: the carrier lists global element
// indices, everything else is in local coordinates 0..order-1.
struct GroupData {
  std::vector<int> carrier;
  int identity = -1;
  int identity_local = -1;
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
  std::vector<std::vector<int>> conj_classes;
  std::vector<int> conj_class_of;
  std::vector<std::string> labels;

  int order() const { return static_cast<int>(carrier.size()); }

  int local_of(int global) const {
    const auto it = std::lower_bound(carrier.begin(), carrier.end(), global);
    if (it == carrier.end() || *it != global) {
      throw Error("element is not in the group carrier");
    }
    return static_cast<int>(it - carrier.begin());
  }

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
};

namespace detail {

inline void finish_group(GroupData& g) {
  const int k = g.order();
  g.inverse.assign(k, -1);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (g.table[a][b] == g.identity_local
          && g.table[b][a] == g.identity_local) {
        g.inverse[a] = b;
        break;
      }
    }
    if (g.inverse[a] < 0) {
      throw Error("carrier is not a group: missing inverse");
    }
  }
  g.conj_class_of.assign(k, -1);
  for (int a = 0; a < k; ++a) {
    if (g.conj_class_of[a] >= 0) {
      continue;
    }
    const int id = static_cast<int>(g.conj_classes.size());
    std::vector<int> cls;
    for (int x = 0; x < k; ++x) {
      const int y = g.table[g.table[x][a]][g.inverse[x]];
      if (g.conj_class_of[y] < 0) {
        g.conj_class_of[y] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    g.conj_classes.push_back(std::move(cls));
  }
}

}  // namespace detail

// The maximal subgroup G_e = L_e n R_e at an idempotent e, with its group
// structure verified.
inline GroupData maximal_subgroup(const SemigroupTable& s, int e,
                                  const GreenStructure& g) {
  if (e < 0 || e >= s.n || !s.is_idempotent(e)) {
    throw NotIdempotent("element " + std::to_string(e + 1)
                        + " is not an idempotent");
  }
  GroupData group;
  for (int a = 0; a < s.n; ++a) {
    if (g.lclass_of[a] == g.lclass_of[e] && g.rclass_of[a] == g.rclass_of[e]) {
      group.carrier.push_back(a);
    }
  }
  const int k = group.order();
  group.identity = e;
  group.identity_local = group.local_of(e);
  group.table.assign(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int p = s.mul[group.carrier[a]][group.carrier[b]];
      group.table[a][b] = group.local_of(p);
    }
  }
  group.labels.resize(k);
  for (int a = 0; a < k; ++a) {
    group.labels[a] = s.labels[group.carrier[a]];
  }
  detail::finish_group(group);
  return group;
}

inline GroupData maximal_subgroup(const SemigroupTable& s, int e) {
  return maximal_subgroup(s, e, green_structure(s));
}

// A standalone group from a bare multiplication table (local == global).
inline GroupData make_group(const std::vector<std::vector<int>>& table,
                            std::vector<std::string> labels = {}) {
  const int k = static_cast<int>(table.size());
  const SemigroupTable checked = validate_table(table);
  GroupData g;
  g.carrier.resize(k);
  for (int i = 0; i < k; ++i) {
    g.carrier[i] = i;
  }
  g.table = table;
  g.identity_local = -1;
  for (int e = 0; e < k; ++e) {
    bool ident = true;
    for (int a = 0; a < k && ident; ++a) {
      ident = table[e][a] == a && table[a][e] == a;
    }
    if (ident) {
      g.identity_local = e;
      break;
    }
  }
  if (g.identity_local < 0) {
    throw Error("table has no identity element");
  }
  g.identity = g.identity_local;
  g.labels = labels.empty() ? checked.labels : std::move(labels);
  detail::finish_group(g);
  return g;
}

inline std::vector<int> generalized_inverses(const SemigroupTable& s, int a) {
  std::vector<int> inv;
  for (int x = 0; x < s.n; ++x) {
    if (s.mul[s.mul[a][x]][a] == a && s.mul[s.mul[x][a]][x] == x) {
      inv.push_back(x);
    }
  }
  return inv;
}

struct InverseVerdictBrute {
  bool is_inverse = false;
  int witness = -1;                 // element with != 1 generalized inverses
  std::vector<int> inverse_map;     // per element, when is_inverse
};

// Exhaustive check: every element has exactly one generalized inverse.
inline InverseVerdictBrute brute_force_is_inverse(const SemigroupTable& s) {
  InverseVerdictBrute v;
  v.inverse_map.assign(s.n, -1);
  for (int a = 0; a < s.n; ++a) {
    const auto inv = generalized_inverses(s, a);
    if (inv.size() != 1) {
      v.is_inverse = false;
      v.witness = a;
      v.inverse_map.clear();
      return v;
    }
    v.inverse_map[a] = inv[0];
  }
  v.is_inverse = true;
  return v;
}

// Basis of the contracted algebra: all elements except the zero.
inline std::vector<int> contracted_basis(const SemigroupTable& s) {
  std::vector<int> basis;
  for (int a = 0; a < s.n; ++a) {
    if (!s.zero || a != *s.zero) {
      basis.push_back(a);
    }
  }
  return basis;
}

// Gram matrix of the trace form of the left regular representation of the
// contracted algebra: G[a][b] = tr(L_{ab}) = #{c in basis : (ab)c == c}.
// Structure constants are 0/1, so the entries are small integers.
inline IntMatrix contracted_gram(const SemigroupTable& s) {
  const auto basis = contracted_basis(s);
  const int d = static_cast<int>(basis.size());
  std::vector<int> pos(s.n, -1);
  for (int i = 0; i < d; ++i) {
    pos[basis[i]] = i;
  }
  IntMatrix gram(d, std::vector<std::int64_t>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int ab = s.mul[basis[i]][basis[j]];
      if (pos[ab] < 0) {
        continue;  // product is the semigroup zero: L_{ab} = 0
      }
      std::int64_t fixed = 0;
      for (int c : basis) {
        if (s.mul[ab][c] == c) {
          ++fixed;
        }
      }
      gram[i][j] = fixed;
    }
  }
  return gram;
}

// C[S] (contracted when S has a zero) is semisimple iff the trace form of
// the left regular representation is nondegenerate; decided by exact rank.
inline bool is_semisimple_algebra(const SemigroupTable& s) {
  return exact_nonsingular(contracted_gram(s));
}

// Greedy generating set: repeatedly adjoin the smallest element outside the
// closure of what has been picked so far.
inline std::vector<int> generating_set(const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  std::vector<bool> in_closure(n, false);
  std::vector<int> gens;
  std::vector<int> closure;
  auto close = [&]() {
    std::size_t head = 0;
    while (head < closure.size()) {
      const int a = closure[head++];
      for (int b : closure) {
        for (int p : {mul[a][b], mul[b][a]}) {
          if (!in_closure[p]) {
            in_closure[p] = true;
            closure.push_back(p);
          }
        }
      }
    }
  };
  for (int a = 0; a < n; ++a) {
    if (!in_closure[a]) {
      gens.push_back(a);
      in_closure[a] = true;
      closure.push_back(a);
      close();
    }
  }
  return gens;
}

}  // namespace semistar

#endif  // SEMISTAR_SEMIGROUP_HPP_
