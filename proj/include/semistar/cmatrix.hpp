//
// semistar - finite semigroup representation analysis
//
// Dense complex matrix kernel: preunitarity (partial isometry) tests, polar
// decomposition, intertwiner solving and positive factorization.  Eigen
// supplies the decompositions; the rank and tolerance conventions live here.
//

#ifndef SEMISTAR_CMATRIX_HPP_
#define SEMISTAR_CMATRIX_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"

namespace semistar {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Default relative tolerance; matrices coming out of the unitary
// constructions have norm O(1), so 1e-9 leaves ~6 digits of slack over
// double roundoff.
inline constexpr double kDefaultEps = 1e-9;

inline void ensure_finite(const CMatrix& a) {
  if (!a.allFinite()) {
    throw Error("matrix has non-finite entries");
  }
}

inline double fnorm(const CMatrix& a) { return a.norm(); }

// Singular values, descending.
inline Eigen::VectorXd singular_values(const CMatrix& a) {
  return Eigen::JacobiSVD<CMatrix>(a).singularValues();
}

struct PreunitaryReport {
  bool preunitary = false;        // A A* A == A
  bool partial_isometry = false;  // singular values in {0} u {1}
  bool gram_idempotent = false;   // (A* A)^2 == A* A
  bool cogram_idempotent = false; // (A A*)^2 == A A*

  bool all() const {
    return preunitary && partial_isometry && gram_idempotent
           && cogram_idempotent;
  }
  bool agree() const {
    return preunitary == partial_isometry && preunitary == gram_idempotent
           && preunitary == cogram_idempotent;
  }
};

// Evaluates the four equivalent partial-isometry conditions independently;
// they must agree on every input, which the test suite fuzzes.
inline PreunitaryReport is_preunitary(const CMatrix& a,
                                      double eps = kDefaultEps) {
  ensure_finite(a);
  PreunitaryReport r;
  const double na = fnorm(a);

  r.preunitary = fnorm(a * a.adjoint() * a - a) <= eps * (1.0 + na * na * na);

  const Eigen::VectorXd sv = singular_values(a);
  const double smax = sv.size() ? sv(0) : 0.0;
  const double tol = eps * (1.0 + smax);
  r.partial_isometry = true;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol && std::abs(sv(i) - 1.0) > tol) {
      r.partial_isometry = false;
      break;
    }
  }

  const double scale4 = 1.0 + na * na * na * na;
  const CMatrix gram = a.adjoint() * a;
  r.gram_idempotent = fnorm(gram * gram - gram) <= eps * scale4;
  const CMatrix cogram = a * a.adjoint();
  r.cogram_idempotent = fnorm(cogram * cogram - cogram) <= eps * scale4;
  return r;
}

struct PolarDecomposition {
  CMatrix partial_isometry;  // U, same shape as A
  CMatrix positive_part;     // H = (A* A)^{1/2}, with ker U = ker H
};

// A = U H with U a partial isometry supported on the row space of A.
// Computed from the SVD; singular values below eps*(1+smax) count as zero,
// the same numerical-rank rule used everywhere else in this kernel.
inline PolarDecomposition polar_decompose(const CMatrix& a,
                                          double eps = kDefaultEps) {
  ensure_finite(a);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double tol = eps * (1.0 + smax);
  Eigen::VectorXd kept = sv;
  Eigen::VectorXd support(sv.size());
  for (int i = 0; i < sv.size(); ++i) {
    const bool zero = sv(i) <= tol;
    kept(i) = zero ? 0.0 : sv(i);
    support(i) = zero ? 0.0 : 1.0;
  }
  PolarDecomposition pd;
  pd.partial_isometry = svd.matrixU() * support.asDiagonal().toDenseMatrix().cast<Complex>()
                        * svd.matrixV().adjoint();
  pd.positive_part = svd.matrixV() * kept.asDiagonal().toDenseMatrix().cast<Complex>()
                     * svd.matrixV().adjoint();
  return pd;
}

// Orthonormal basis of {X : A_k X = X B_k for all k}.  Callers pass the
// images of a representation pair (all elements, or a generating set when
// multiplicativity makes that sufficient).
inline std::vector<CMatrix> solve_intertwiners(
    const std::vector<CMatrix>& images_a, const std::vector<CMatrix>& images_b,
    double eps = kDefaultEps) {
  if (images_a.size() != images_b.size()) {
    throw Error("intertwiner systems need matching image lists");
  }
  if (images_a.empty()) {
    throw Error("intertwiner system is empty");
  }
  const int d1 = static_cast<int>(images_a[0].rows());
  const int d2 = static_cast<int>(images_b[0].rows());
  const int dim = d1 * d2;
  // Stacked system: one block row M_k = I (x) A_k - B_k^T (x) I per image
  // pair, acting on vec(X) (column-major).  The nullspace is read off the
  // right singular vectors, keeping rank decisions in singular-value space.
  const int blocks = static_cast<int>(images_a.size());
  CMatrix stacked = CMatrix::Zero(blocks * dim, dim);
  for (int k = 0; k < blocks; ++k) {
    const CMatrix& a = images_a[k];
    const CMatrix& b = images_b[k];
    auto block_row = stacked.middleRows(k * dim, dim);
    for (int j = 0; j < d2; ++j) {
      block_row.block(j * d1, j * d1, d1, d1) = a;
      for (int i = 0; i < d2; ++i) {
        block_row.block(i * d1, j * d1, d1, d1).diagonal().array() -=
            b(j, i);
      }
    }
  }
  Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double tol = eps * (1.0 + smax);
  std::vector<CMatrix> basis;
  for (int i = 0; i < dim; ++i) {
    const double sigma = i < sv.size() ? sv(i) : 0.0;
    if (sigma <= tol) {
      CMatrix x(d1, d2);
      for (int j = 0; j < d2; ++j) {
        x.col(j) = svd.matrixV().col(i).segment(j * d1, d1);
      }
      basis.push_back(std::move(x));
    }
  }
  return basis;
}

inline int hom_dimension(const std::vector<CMatrix>& images_a,
                         const std::vector<CMatrix>& images_b,
                         double eps = kDefaultEps) {
  return static_cast<int>(solve_intertwiners(images_a, images_b, eps).size());
}

// B = A^{1/2} with B B* = A, for Hermitian positive definite A.  Throws
// IndefiniteError carrying the signature otherwise; callers that can flip
// the sign of A catch it and retry.
inline CMatrix positive_factor(const CMatrix& a, double eps = kDefaultEps) {
  ensure_finite(a);
  if (a.rows() != a.cols()) {
    throw Error("positive_factor needs a square matrix");
  }
  const double herm_tol = 1e-10 * (1.0 + fnorm(a));
  if (fnorm(a - CMatrix(a.adjoint())) > herm_tol) {
    throw Error("positive_factor needs a Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (a + a.adjoint()));
  const Eigen::VectorXd ev = es.eigenvalues();
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  const double tol = eps * (1.0 + scale);
  int pos = 0, neg = 0;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) > tol) {
      ++pos;
    } else if (ev(i) < -tol) {
      ++neg;
    }
  }
  if (pos != ev.size()) {
    throw IndefiniteError(pos, neg);
  }
  Eigen::VectorXd roots = ev.cwiseSqrt();
  return es.eigenvectors() * roots.asDiagonal().toDenseMatrix().cast<Complex>()
         * es.eigenvectors().adjoint();
}

}  // namespace semistar

#endif  // SEMISTAR_CMATRIX_HPP_
