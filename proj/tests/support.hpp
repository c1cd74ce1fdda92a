//
// Shared test helpers: independent oracles (radical computation, the
// sandwich-matrix semisimplicity route, table isomorphism search) and
// random matrix constructions.  Everything here is deliberately separate
// from the library implementation paths it cross-checks.
//

#ifndef SEMISTAR_TESTS_SUPPORT_HPP_
#define SEMISTAR_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "semistar/cmatrix.hpp"
#include "semistar/corpus.hpp"
#include "semistar/exact.hpp"
#include "semistar/involution.hpp"
#include "semistar/rees.hpp"
#include "semistar/rng.hpp"
#include "semistar/semigroup.hpp"

namespace semistar::test {

inline SemigroupTable table_from_group(const GroupData& g) {
  return validate_table(g.table, std::nullopt, g.labels);
}

inline SemigroupTable relabel(const SemigroupTable& s,
                              const std::vector<int>& perm) {
  std::vector<std::vector<int>> mul(s.n, std::vector<int>(s.n));
  std::vector<std::string> labels(s.n);
  for (int a = 0; a < s.n; ++a) {
    labels[perm[a]] = s.labels[a];
    for (int b = 0; b < s.n; ++b) {
      mul[perm[a]][perm[b]] = perm[s.mul[a][b]];
    }
  }
  std::optional<int> zero;
  if (s.zero) {
    zero = perm[*s.zero];
  }
  return validate_table(mul, zero, labels);
}

// Backtracking table-isomorphism search with idempotent-preserving and
// degree-signature pruning.
inline std::optional<std::vector<int>> find_isomorphism(
    const SemigroupTable& a, const SemigroupTable& b) {
  if (a.n != b.n) {
    return std::nullopt;
  }
  const int n = a.n;
  auto signature = [](const SemigroupTable& s, int x) {
    std::vector<bool> left(s.n, false), right(s.n, false);
    for (int y = 0; y < s.n; ++y) {
      left[s.mul[x][y]] = true;
      right[s.mul[y][x]] = true;
    }
    const int l = static_cast<int>(std::count(left.begin(), left.end(), true));
    const int r =
        static_cast<int>(std::count(right.begin(), right.end(), true));
    return std::tuple<bool, int, int>{s.is_idempotent(x), l, r};
  };
  std::vector<std::tuple<bool, int, int>> siga(n), sigb(n);
  for (int x = 0; x < n; ++x) {
    siga[x] = signature(a, x);
    sigb[x] = signature(b, x);
  }
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int x) {
    for (int y = 0; y < n; ++y) {
      if (f[y] < 0) {
        continue;
      }
      if (f[a.mul[x][y]] >= 0 && f[a.mul[x][y]] != b.mul[f[x]][f[y]]) {
        return false;
      }
      if (f[a.mul[y][x]] >= 0 && f[a.mul[y][x]] != b.mul[f[y]][f[x]]) {
        return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int x) -> bool {
    if (x == n) {
      return true;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y] || siga[x] != sigb[y]) {
        continue;
      }
      f[x] = y;
      used[y] = true;
      if (consistent(x) && self(self, x + 1)) {
        return true;
      }
      f[x] = -1;
      used[y] = false;
    }
    return false;
  };
  if (rec(rec, 0)) {
    return f;
  }
  return std::nullopt;
}

// --- exact rational helpers for the radical oracle --------------------

using RatVector = std::vector<BigRat>;

inline int rat_rank(std::vector<RatVector> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int col = 0; col < cols; ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != rank && rows[i][col] != 0) {
        const BigRat fac = rows[i][col] / rows[rank][col];
        for (int j = col; j < cols; ++j) {
          rows[i][j] -= fac * rows[rank][j];
        }
      }
    }
    ++rank;
  }
  return rank;
}

inline bool rat_in_span(const std::vector<RatVector>& span,
                        const RatVector& v) {
  std::vector<RatVector> with = span;
  with.push_back(v);
  return rat_rank(with) == rat_rank(span);
}

// Full radical computation oracle: the nullspace of the trace form is
// checked to be a two-sided nilpotent ideal of the contracted algebra,
// and its dimension is returned.
inline int radical_dimension_oracle(const SemigroupTable& s) {
  const auto basis = contracted_basis(s);
  const int d = static_cast<int>(basis.size());
  std::vector<int> pos(s.n, -1);
  for (int i = 0; i < d; ++i) {
    pos[basis[i]] = i;
  }
  const auto gram = contracted_gram(s);
  const auto nullspace = exact_nullspace(gram);

  // algebra product of two coordinate vectors
  auto product = [&](const RatVector& v, const RatVector& w) {
    RatVector out(d, BigRat(0));
    for (int i = 0; i < d; ++i) {
      if (v[i] == 0) {
        continue;
      }
      for (int j = 0; j < d; ++j) {
        if (w[j] == 0) {
          continue;
        }
        const int p = pos[s.mul[basis[i]][basis[j]]];
        if (p >= 0) {
          out[p] += v[i] * w[j];
        }
      }
    }
    return out;
  };
  auto unit = [&](int i) {
    RatVector e(d, BigRat(0));
    e[i] = 1;
    return e;
  };

  // two-sided ideal
  for (const auto& v : nullspace) {
    for (int i = 0; i < d; ++i) {
      if (!rat_in_span(nullspace, product(unit(i), v))
          || !rat_in_span(nullspace, product(v, unit(i)))) {
        throw std::runtime_error("radical candidate is not an ideal");
      }
    }
  }
  // nilpotent: powers of the span must reach zero
  std::vector<RatVector> power = nullspace;
  for (int step = 0; step <= d && !power.empty(); ++step) {
    if (step == d) {
      throw std::runtime_error("radical candidate is not nilpotent");
    }
    std::vector<RatVector> next;
    for (const auto& v : power) {
      for (const auto& w : nullspace) {
        const auto p = product(v, w);
        bool zero = true;
        for (const auto& x : p) {
          zero = zero && x == 0;
        }
        if (!zero && !rat_in_span(next, p)) {
          next.push_back(p);
        }
      }
    }
    power = std::move(next);
  }
  return static_cast<int>(nullspace.size());
}

// Independent semisimplicity route: S regular and every J-class sandwich
// matrix square and invertible over C[G_e].
inline bool semisimple_by_sandwich(const SemigroupTable& s) {
  if (!is_regular_semigroup(s)) {
    return false;
  }
  const GreenStructure green = green_structure(s);
  for (int j = 0; j < static_cast<int>(green.jclasses.size()); ++j) {
    const ReesCoordinatization coord = coordinatize_jclass(s, green, j);
    if (coord.s() != coord.t()) {
      return false;
    }
    const IntMatrix big = sandwich_regular_embedding(coord.group,
                                                     coord.sandwich);
    if (exact_rank(big) != coord.t() * coord.group.order()) {
      return false;
    }
  }
  return true;
}

// J^0: the class with an adjoined zero and the diamond product.
inline SemigroupTable class_with_zero(const SemigroupTable& s,
                                      const GreenStructure& green,
                                      int jclass) {
  const auto& cls = green.jclasses[jclass];
  const int k = static_cast<int>(cls.size());
  std::vector<int> pos(s.n, -1);
  for (int i = 0; i < k; ++i) {
    pos[cls[i]] = i;
  }
  std::vector<std::vector<int>> mul(k + 1, std::vector<int>(k + 1, k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int p = s.mul[cls[i]][cls[j]];
      mul[i][j] = pos[p] >= 0 ? pos[p] : k;
    }
  }
  return validate_table(mul, k);
}

inline GroupData direct_product(const GroupData& a, const GroupData& b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  auto enc = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1) {
    for (int y1 = 0; y1 < b.order(); ++y1) {
      labels[enc(x1, y1)] = a.labels[x1] + "x" + b.labels[y1];
      for (int x2 = 0; x2 < a.order(); ++x2) {
        for (int y2 = 0; y2 < b.order(); ++y2) {
          table[enc(x1, y1)][enc(x2, y2)] =
              enc(a.table[x1][x2], b.table[y1][y2]);
        }
      }
    }
  }
  return make_group(table, labels);
}

// --- random matrix constructions for preunitarity fuzzing -------------

// U1 D U2* with a 0/1 diagonal: singular values exactly in {0, 1}.
inline CMatrix random_partial_isometry(Rng& rng, int n) {
  const CMatrix u1 = rng.unitary_matrix(n);
  const CMatrix u2 = rng.unitary_matrix(n);
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    d(i) = rng.uniform() < 0.5 ? 0.0 : 1.0;
  }
  return u1 * d.asDiagonal().toDenseMatrix().cast<Complex>() * u2.adjoint();
}

// Singular values drawn away from {0, 1}, so all four preunitarity
// conditions must fail.
inline CMatrix random_non_preunitary(Rng& rng, int n) {
  const CMatrix u1 = rng.unitary_matrix(n);
  const CMatrix u2 = rng.unitary_matrix(n);
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    d(i) = rng.uniform() < 0.5 ? 0.2 + 0.6 * rng.uniform()
                               : 1.2 + 0.8 * rng.uniform();
  }
  return u1 * d.asDiagonal().toDenseMatrix().cast<Complex>() * u2.adjoint();
}

}  // namespace semistar::test

#endif  // SEMISTAR_TESTS_SUPPORT_HPP_
