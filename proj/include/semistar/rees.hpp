//
// semistar - finite semigroup representation analysis
//
// Rees matrix semigroups M^0(I, J, G, P): construction from sandwich data,
// coordinatization of a regular J-class of an arbitrary finite semigroup,
// sandwich normalization, the inverse criterion, and the standard
// representations built from a group representation.
//
// Sandwich entries live in G^0: a local group index, or kZeroEntry.
//

#ifndef SEMISTAR_REES_HPP_
#define SEMISTAR_REES_HPP_

#include <string>
#include <vector>

#include "cmatrix.hpp"
#include "errors.hpp"
#include "group_reps.hpp"
#include "semigroup.hpp"

namespace semistar {

inline constexpr int kZeroEntry = -1;

using Sandwich = std::vector<std::vector<int>>;  // n x m over G^0

inline bool sandwich_is_regular(const Sandwich& p) {
  if (p.empty() || p[0].empty()) {
    return false;
  }
  const int rows = static_cast<int>(p.size());
  const int cols = static_cast<int>(p[0].size());
  for (int j = 0; j < rows; ++j) {
    bool nonzero = false;
    for (int i = 0; i < cols; ++i) {
      nonzero = nonzero || p[j][i] != kZeroEntry;
    }
    if (!nonzero) {
      return false;
    }
  }
  for (int i = 0; i < cols; ++i) {
    bool nonzero = false;
    for (int j = 0; j < rows; ++j) {
      nonzero = nonzero || p[j][i] != kZeroEntry;
    }
    if (!nonzero) {
      return false;
    }
  }
  return true;
}

// M^0(I, J, G, P) materialized as a multiplication table.  Element
// (a)_{ij} has index ((i * n) + j) * |G| + a; the zero is last.
struct ReesSemigroup {
  int m = 0, n = 0;
  GroupData group;
  Sandwich sandwich;
  SemigroupTable table;

  int element_index(int i, int j, int a) const {
    return ((i * n) + j) * group.order() + a;
  }
  int zero_index() const { return m * n * group.order(); }

  struct Decoded {
    bool zero = false;
    int i = 0, j = 0, a = 0;
  };

  Decoded decode(int idx) const {
    Decoded d;
    if (idx == zero_index()) {
      d.zero = true;
      return d;
    }
    d.a = idx % group.order();
    idx /= group.order();
    d.j = idx % n;
    d.i = idx / n;
    return d;
  }
};

// Builds the table for (a)_{ij} o (b)_{kl} = (a p_{jk} b)_{il} and runs it
// through full validation.
inline ReesSemigroup build_rees(int m, int n, GroupData group, Sandwich p) {
  if (m < 1 || n < 1 || static_cast<int>(p.size()) != n) {
    throw Error("sandwich matrix shape mismatch");
  }
  const int order = group.order();
  for (const auto& row : p) {
    if (static_cast<int>(row.size()) != m) {
      throw Error("sandwich matrix shape mismatch");
    }
    for (int entry : row) {
      if (entry != kZeroEntry && (entry < 0 || entry >= order)) {
        throw Error("sandwich entry out of range");
      }
    }
  }
  ReesSemigroup r;
  r.m = m;
  r.n = n;
  r.group = std::move(group);
  r.sandwich = std::move(p);

  const int count = m * n * order + 1;
  const int zero = count - 1;
  std::vector<std::vector<int>> raw(count, std::vector<int>(count, zero));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < order; ++a) {
        const int left = r.element_index(i, j, a);
        for (int k = 0; k < m; ++k) {
          for (int l = 0; l < n; ++l) {
            const int pjk = r.sandwich[j][k];
            if (pjk == kZeroEntry) {
              continue;
            }
            for (int b = 0; b < order; ++b) {
              const int prod = r.group.mul(r.group.mul(a, pjk), b);
              raw[left][r.element_index(k, l, b)] =
                  r.element_index(i, l, prod);
            }
          }
        }
      }
    }
  }
  std::vector<std::string> labels(count);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < order; ++a) {
        labels[r.element_index(i, j, a)] = "(" + r.group.labels[a] + ")_"
                                           + std::to_string(i + 1) + ","
                                           + std::to_string(j + 1);
      }
    }
  }
  labels[zero] = "0";
  r.table = validate_table(raw, zero, std::move(labels));
  return r;
}

inline bool rees_is_regular(const ReesSemigroup& r) {
  return sandwich_is_regular(r.sandwich);
}

// Inverse criterion: square sandwich with exactly one nonzero entry in
// every row and column (then a diagonal rescaling reaches the identity).
inline bool rees_is_inverse(const ReesSemigroup& r) {
  if (!rees_is_regular(r)) {
    throw NotRegular("Rees semigroup is not regular");
  }
  if (r.m != r.n) {
    return false;
  }
  for (int j = 0; j < r.n; ++j) {
    int count = 0;
    for (int i = 0; i < r.m; ++i) {
      count += r.sandwich[j][i] != kZeroEntry;
    }
    if (count != 1) {
      return false;
    }
  }
  for (int i = 0; i < r.m; ++i) {
    int count = 0;
    for (int j = 0; j < r.n; ++j) {
      count += r.sandwich[j][i] != kZeroEntry;
    }
    if (count != 1) {
      return false;
    }
  }
  return true;
}

// Rees coordinates of one regular J-class of a semigroup S: the anchor
// idempotent e, coset representatives x_i (L_e) and y_j (R_e), the
// maximal subgroup, and the sandwich matrix p_{ji} = y_j x_i read in G^0.
// row_of/col_of/gpart_of give the coordinates of every element of the
// class; they realize the bijection b <-> (g_b)_{ij}.
struct ReesCoordinatization {
  int jclass = -1;
  int e = -1;
  std::vector<int> x;  // global, x[0] == e
  std::vector<int> y;  // global, y[0] == e
  GroupData group;
  Sandwich sandwich;   // t x s
  std::vector<int> e_diag;  // global idempotent x_i y_i, or -1 if undefined
  std::vector<int> row_of, col_of, gpart_of;  // per global element, -1 off J

  int s() const { return static_cast<int>(x.size()); }
  int t() const { return static_cast<int>(y.size()); }
};

namespace detail {

// Computes sandwich, coordinates and the verification of the Rees
// isomorphism from chosen representative lists.
inline void finish_coordinatization(const SemigroupTable& sg,
                                    const GreenStructure& green,
                                    ReesCoordinatization& coord) {
  const int s = coord.s();
  const int t = coord.t();
  const int order = coord.group.order();
  const auto& jclass = green.jclasses[coord.jclass];

  coord.sandwich.assign(t, std::vector<int>(s, kZeroEntry));
  for (int j = 0; j < t; ++j) {
    for (int i = 0; i < s; ++i) {
      const int p = sg.mul[coord.y[j]][coord.x[i]];
      if (green.jclass_of[p] == coord.jclass) {
        coord.sandwich[j][i] = coord.group.local_of(p);
      }
    }
  }

  if (static_cast<int>(jclass.size()) != s * t * order) {
    throw InvariantViolation("J-class size differs from s*t*|G|");
  }

  coord.row_of.assign(sg.n, -1);
  coord.col_of.assign(sg.n, -1);
  coord.gpart_of.assign(sg.n, -1);
  for (int b : jclass) {
    int row = -1, col = -1;
    for (int i = 0; i < s; ++i) {
      if (green.rclass_of[b] == green.rclass_of[coord.x[i]]) {
        row = i;
        break;
      }
    }
    for (int j = 0; j < t; ++j) {
      if (green.lclass_of[b] == green.lclass_of[coord.y[j]]) {
        col = j;
        break;
      }
    }
    if (row < 0 || col < 0) {
      throw InvariantViolation("class element outside the coset grid");
    }
    int gpart = -1;
    for (int a = 0; a < order; ++a) {
      const int prod = sg.mul[sg.mul[coord.x[row]][coord.group.carrier[a]]]
                             [coord.y[col]];
      if (prod == b) {
        if (gpart >= 0) {
          throw InvariantViolation("coset factorization is not unique");
        }
        gpart = a;
      }
    }
    if (gpart < 0) {
      throw InvariantViolation("coset factorization does not exist");
    }
    coord.row_of[b] = row;
    coord.col_of[b] = col;
    coord.gpart_of[b] = gpart;
  }

  // Products in J^0 must match Rees products through the bijection.
  for (int b : jclass) {
    for (int c : jclass) {
      const int bc = sg.mul[b][c];
      const int p = coord.sandwich[coord.col_of[b]][coord.row_of[c]];
      if (green.jclass_of[bc] == coord.jclass) {
        if (p == kZeroEntry || coord.row_of[bc] != coord.row_of[b]
            || coord.col_of[bc] != coord.col_of[c]
            || coord.gpart_of[bc]
                   != coord.group.mul(
                       coord.group.mul(coord.gpart_of[b], p),
                       coord.gpart_of[c])) {
          throw InvariantViolation("products disagree with Rees form");
        }
      } else if (p != kZeroEntry) {
        throw InvariantViolation("product left the class despite nonzero "
                                 "sandwich entry");
      }
    }
  }

  coord.e_diag.assign(s, -1);
  for (int i = 0; i < s && i < t; ++i) {
    const int prod = sg.mul[coord.x[i]][coord.y[i]];
    if (green.jclass_of[prod] == coord.jclass && sg.is_idempotent(prod)) {
      coord.e_diag[i] = prod;
    }
  }
}

}  // namespace detail

// Coordinatizes a regular J-class.  The anchor is the smallest idempotent
// in the class; x_1 = y_1 = e and the remaining representatives are taken
// in ascending element order, so the output is deterministic.  The first
// sandwich row is scaled to entries in {0, identity} with p_11 = identity.
inline ReesCoordinatization coordinatize_jclass(const SemigroupTable& sg,
                                                const GreenStructure& green,
                                                int jclass) {
  if (jclass < 0 || jclass >= static_cast<int>(green.jclasses.size())) {
    throw Error("no such J-class");
  }
  if (!green.regular_j[jclass]) {
    throw NotRegularClass("J-class " + std::to_string(jclass)
                          + " has no idempotent");
  }
  int e = -1;
  for (int a : green.jclasses[jclass]) {
    if (sg.is_idempotent(a)) {
      e = a;
      break;
    }
  }
  ReesCoordinatization coord;
  coord.jclass = jclass;
  coord.e = e;
  coord.group = maximal_subgroup(sg, e, green);

  std::vector<int> seen_r, seen_l;
  coord.x.push_back(e);
  seen_r.push_back(green.rclass_of[e]);
  for (int a = 0; a < sg.n; ++a) {
    if (green.lclass_of[a] != green.lclass_of[e]) {
      continue;
    }
    if (std::find(seen_r.begin(), seen_r.end(), green.rclass_of[a])
        == seen_r.end()) {
      coord.x.push_back(a);
      seen_r.push_back(green.rclass_of[a]);
    }
  }
  coord.y.push_back(e);
  seen_l.push_back(green.lclass_of[e]);
  for (int a = 0; a < sg.n; ++a) {
    if (green.rclass_of[a] != green.rclass_of[e]) {
      continue;
    }
    if (std::find(seen_l.begin(), seen_l.end(), green.lclass_of[a])
        == seen_l.end()) {
      coord.y.push_back(a);
      seen_l.push_back(green.lclass_of[a]);
    }
  }

  detail::finish_coordinatization(sg, green, coord);

  // Row-1 scaling: replace x_i by x_i p_{1i}^{-1} wherever p_{1i} != 0.
  bool changed = false;
  for (int i = 1; i < coord.s(); ++i) {
    const int p = coord.sandwich[0][i];
    if (p != kZeroEntry && p != coord.group.identity_local) {
      coord.x[i] = sg.mul[coord.x[i]]
                         [coord.group.carrier[coord.group.inv(p)]];
      changed = true;
    }
  }
  if (changed) {
    detail::finish_coordinatization(sg, green, coord);
  }
  for (int i = 0; i < coord.s(); ++i) {
    const int p = coord.sandwich[0][i];
    if (p != kZeroEntry && p != coord.group.identity_local) {
      throw InvariantViolation("first sandwich row failed to normalize");
    }
  }
  return coord;
}

// When the sandwich is square with exactly one nonzero per row and column,
// reorders y and rescales x so that it becomes the identity matrix.
// Returns true iff the sandwich is the identity afterwards.
inline bool normalize_sandwich_to_identity(const SemigroupTable& sg,
                                           const GreenStructure& green,
                                           ReesCoordinatization& coord) {
  const int s = coord.s();
  const int t = coord.t();
  auto is_identity = [&]() {
    if (s != t) {
      return false;
    }
    for (int j = 0; j < t; ++j) {
      for (int i = 0; i < s; ++i) {
        const int want = i == j ? coord.group.identity_local : kZeroEntry;
        if (coord.sandwich[j][i] != want) {
          return false;
        }
      }
    }
    return true;
  };
  if (is_identity()) {
    return true;
  }
  if (s != t) {
    return false;
  }
  std::vector<int> col_of_row(t, -1);
  std::vector<int> row_of_col(s, -1);
  for (int j = 0; j < t; ++j) {
    for (int i = 0; i < s; ++i) {
      if (coord.sandwich[j][i] != kZeroEntry) {
        if (col_of_row[j] >= 0 || row_of_col[i] >= 0) {
          return false;  // not permutation-diagonal
        }
        col_of_row[j] = i;
        row_of_col[i] = j;
      }
    }
  }
  for (int j = 0; j < t; ++j) {
    if (col_of_row[j] < 0) {
      return false;
    }
  }
  std::vector<int> new_y(t);
  for (int i = 0; i < s; ++i) {
    new_y[i] = coord.y[row_of_col[i]];
  }
  coord.y = new_y;
  detail::finish_coordinatization(sg, green, coord);
  for (int i = 0; i < s; ++i) {
    const int p = coord.sandwich[i][i];
    if (p == kZeroEntry) {
      throw InvariantViolation("diagonal vanished during normalization");
    }
    if (p != coord.group.identity_local) {
      coord.x[i] = sg.mul[coord.x[i]]
                         [coord.group.carrier[coord.group.inv(p)]];
    }
  }
  detail::finish_coordinatization(sg, green, coord);
  if (!is_identity()) {
    throw InvariantViolation("sandwich failed to reach the identity");
  }
  return true;
}

// The Rees semigroup defined by a coordinatization's sandwich data.
inline ReesSemigroup rees_from_coordinatization(
    const ReesCoordinatization& coord) {
  return build_rees(coord.s(), coord.t(), coord.group, coord.sandwich);
}

struct StandardPair {
  std::vector<CMatrix> left;   // pi^l, dim m * k
  std::vector<CMatrix> right;  // pi^r, dim n * k
  int left_dim = 0;
  int right_dim = 0;
};

// Standard representations pi^l(s) = sigma((a)_{ij} P) and
// pi^r(s) = sigma(P (a)_{ij}), with sigma extended by sigma(0) = 0 so zero
// sandwich entries become zero blocks.  Multiplicativity is verified on
// all pairs.
inline StandardPair standard_reps(const ReesSemigroup& r,
                                  const GroupRep& sigma) {
  if (static_cast<int>(sigma.images.size()) != r.group.order()) {
    throw Error("sigma must provide one image per group element");
  }
  const int k = sigma.dim;
  StandardPair out;
  out.left_dim = r.m * k;
  out.right_dim = r.n * k;
  const int count = r.table.n;
  out.left.assign(count, CMatrix::Zero(out.left_dim, out.left_dim));
  out.right.assign(count, CMatrix::Zero(out.right_dim, out.right_dim));
  for (int i = 0; i < r.m; ++i) {
    for (int j = 0; j < r.n; ++j) {
      for (int a = 0; a < r.group.order(); ++a) {
        const int idx = r.element_index(i, j, a);
        // (a)_{ij} P: row i holds a p_{j1}, ..., a p_{jm}.
        for (int l = 0; l < r.m; ++l) {
          const int p = r.sandwich[j][l];
          if (p != kZeroEntry) {
            out.left[idx].block(i * k, l * k, k, k) =
                sigma.images[r.group.mul(a, p)];
          }
        }
        // P (a)_{ij}: column j holds p_{1i} a, ..., p_{ni} a.
        for (int l = 0; l < r.n; ++l) {
          const int p = r.sandwich[l][i];
          if (p != kZeroEntry) {
            out.right[idx].block(l * k, j * k, k, k) =
                sigma.images[r.group.mul(p, a)];
          }
        }
      }
    }
  }
  if (!images_are_homomorphism(out.left, r.table.mul)
      || !images_are_homomorphism(out.right, r.table.mul)) {
    throw InvariantViolation("standard representations are not "
                             "multiplicative");
  }
  return out;
}

}  // namespace semistar

#endif  // SEMISTAR_REES_HPP_
