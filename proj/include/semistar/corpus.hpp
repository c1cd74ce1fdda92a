//
// semistar - finite semigroup representation analysis
//
// A small catalog of standard semigroups and groups, an exhaustive
// enumerator of all multiplication tables of a given order, and the
// exhaustive Rees sweep used to cross-validate the decision procedures.
//

#ifndef SEMISTAR_CORPUS_HPP_
#define SEMISTAR_CORPUS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "rees.hpp"
#include "semigroup.hpp"

namespace semistar {

// --- catalog ---------------------------------------------------------

inline GroupData trivial_group() { return make_group({{0}}, {"1"}); }

inline GroupData cyclic_group(int k) {
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      table[a][b] = (a + b) % k;
    }
    labels[a] = a == 0 ? "1" : "g" + std::to_string(a);
  }
  return make_group(table, labels);
}

namespace detail {

inline std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) {
    base[i] = i;
  }
  std::vector<std::vector<int>> all;
  do {
    all.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return all;
}

}  // namespace detail

// The symmetric group on `letters` points, elements ordered
// lexicographically as permutations (so the identity comes first).
inline GroupData symmetric_group(int letters) {
  const auto perms = detail::permutations_of(letters);
  const int k = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& p) {
    for (int i = 0; i < k; ++i) {
      if (perms[i] == p) {
        return i;
      }
    }
    throw Error("permutation lookup failed");
  };
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      std::vector<int> composed(letters);
      for (int p = 0; p < letters; ++p) {
        composed[p] = perms[a][perms[b][p]];
      }
      table[a][b] = index_of(composed);
    }
    std::string name = "[";
    for (int p = 0; p < letters; ++p) {
      name += std::to_string(perms[a][p] + 1);
    }
    labels[a] = name + "]";
  }
  return make_group(table, labels);
}

// Brandt semigroup B2: 2x2 matrix units over the trivial group plus zero.
inline ReesSemigroup brandt_b2() {
  return build_rees(2, 2, trivial_group(),
                    {{0, kZeroEntry}, {kZeroEntry, 0}});
}

inline SemigroupTable left_zero_semigroup(int k) {
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      table[a][b] = a;
    }
  }
  return validate_table(table);
}

// Chain semilattice 0 < 1 < ... < k-1 with a ^ b = min(a, b).  The bottom
// is absorbing but not declared as an algebra zero.
inline SemigroupTable chain_semilattice(int k) {
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      table[a][b] = std::min(a, b);
    }
  }
  return validate_table(table);
}

// Null semigroup {a, 0} with a^2 = 0 and declared zero.
inline SemigroupTable null_semigroup2() {
  return validate_table({{1, 1}, {1, 1}}, 1, {"a", "0"});
}

// Full transformation monoid on 2 points, composition (fg)(p) = f(g(p)).
// Order: identity, swap, constant-to-1, constant-to-2.
inline SemigroupTable full_transformation_monoid2() {
  const std::vector<std::vector<int>> maps = {
      {0, 1}, {1, 0}, {0, 0}, {1, 1}};
  const int k = 4;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      std::vector<int> comp = {maps[a][maps[b][0]], maps[a][maps[b][1]]};
      for (int c = 0; c < k; ++c) {
        if (maps[c] == comp) {
          table[a][b] = c;
        }
      }
    }
  }
  return validate_table(table, std::nullopt, {"id", "sw", "c1", "c2"});
}

// Symmetric inverse monoid on 2 points (order 7): all partial injective
// maps under composition, the empty map as zero.
inline SemigroupTable symmetric_inverse_monoid2() {
  // maps encoded as (image of 1, image of 2), 0 = undefined
  const std::vector<std::pair<int, int>> maps = {
      {1, 2}, {2, 1}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {0, 0}};
  const int k = 7;
  auto apply = [&](int f, int p) {
    return p == 0 ? 0 : (p == 1 ? maps[f].first : maps[f].second);
  };
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const std::pair<int, int> comp = {apply(a, apply(b, 1)),
                                        apply(a, apply(b, 2))};
      for (int c = 0; c < k; ++c) {
        if (maps[c] == comp) {
          table[a][b] = c;
        }
      }
    }
  }
  return validate_table(table, 6,
                        {"id", "sw", "e1", "12", "21", "e2", "0"});
}

// --- exhaustive enumeration -----------------------------------------

// Visits every associative multiplication table on {0..n-1}, by filling
// cells in row-major order and rejecting as soon as a fully determined
// associativity triple fails.  Counts for n = 1..4: 1, 8, 113, 3492.
inline void for_each_semigroup(int n,
                               const std::function<void(
                                   const std::vector<std::vector<int>>&)>& fn) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
  auto consistent = [&]() {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const int xy = mul[x][y];
        if (xy < 0) {
          continue;
        }
        for (int z = 0; z < n; ++z) {
          const int lhs = mul[xy][z];
          const int yz = mul[y][z];
          if (lhs < 0 || yz < 0) {
            continue;
          }
          const int rhs = mul[x][yz];
          if (rhs >= 0 && lhs != rhs) {
            return false;
          }
        }
      }
    }
    return true;
  };
  const int cells = n * n;
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == cells) {
      fn(mul);
      return;
    }
    const int a = cell / n;
    const int b = cell % n;
    for (int v = 0; v < n; ++v) {
      mul[a][b] = v;
      if (consistent()) {
        self(self, cell + 1);
      }
    }
    mul[a][b] = -1;
  };
  rec(rec, 0);
}

// --- Rees sweep -------------------------------------------------------

// All regular sandwich matrices of shape rows x cols over G^0: every entry
// ranges over {0} u G, rows and columns must each contain a group entry.
inline void for_each_regular_sandwich(
    int rows, int cols, int group_order,
    const std::function<void(const Sandwich&)>& fn) {
  Sandwich p(rows, std::vector<int>(cols, kZeroEntry));
  const int cells = rows * cols;
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == cells) {
      if (sandwich_is_regular(p)) {
        fn(p);
      }
      return;
    }
    for (int v = -1; v < group_order; ++v) {
      p[cell / cols][cell % cols] = v;
      self(self, cell + 1);
    }
    p[cell / cols][cell % cols] = kZeroEntry;
  };
  rec(rec, 0);
}

struct ReesSweepCase {
  int m = 0, n = 0;
  const GroupData* group = nullptr;
  Sandwich sandwich;
};

// Exhaustive sweep of regular Rees matrix semigroups with m, n <= max_mn
// over the given groups.
inline void rees_sweep(int max_mn, const std::vector<GroupData>& groups,
                       const std::function<void(const ReesSweepCase&)>& fn) {
  for (const GroupData& g : groups) {
    for (int m = 1; m <= max_mn; ++m) {
      for (int n = 1; n <= max_mn; ++n) {
        for_each_regular_sandwich(n, m, g.order(), [&](const Sandwich& p) {
          ReesSweepCase c;
          c.m = m;
          c.n = n;
          c.group = &g;
          c.sandwich = p;
          fn(c);
        });
      }
    }
  }
}

}  // namespace semistar

#endif  // SEMISTAR_CORPUS_HPP_
