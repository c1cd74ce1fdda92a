//
// semistar - finite semigroup representation analysis
//
// Exact linear algebra over the integers and rationals.  Semisimplicity and
// sandwich-matrix invertibility are yes/no questions about integer matrices,
// so they are decided here without floating point.
//

#ifndef SEMISTAR_EXACT_HPP_
#define SEMISTAR_EXACT_HPP_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace semistar {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Rank of an integer matrix via fraction-free (Bareiss) elimination.
inline int exact_rank(const IntMatrix& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) {
    return 0;
  }
  const int cols = static_cast<int>(m[0].size());
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      a[i][j] = m[i][j];
    }
  }
  BigInt prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

inline bool exact_nonsingular(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  return exact_rank(m) == n;
}

// Basis of the rational nullspace {x : m x = 0} of an integer matrix,
// via exact Gauss-Jordan elimination.  Each basis vector has `cols` entries.
inline std::vector<std::vector<BigRat>> exact_nullspace(const IntMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<std::vector<BigRat>> a(rows, std::vector<BigRat>(cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      a[i][j] = m[i][j];
    }
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(a[r], a[pivot]);
    const BigRat inv = a[r][col];
    for (int j = col; j < cols; ++j) {
      a[r][j] /= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i != r && a[i][col] != 0) {
        const BigRat f = a[i][col];
        for (int j = col; j < cols; ++j) {
          a[i][j] -= f * a[r][j];
        }
      }
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) {
    is_pivot[c] = true;
  }
  std::vector<std::vector<BigRat>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    std::vector<BigRat> v(cols, BigRat(0));
    v[free] = 1;
    for (int i = 0; i < r; ++i) {
      v[pivot_col[i]] = -a[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace semistar

#endif  // SEMISTAR_EXACT_HPP_
