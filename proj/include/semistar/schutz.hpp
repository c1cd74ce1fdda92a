//
// semistar - finite semigroup representation analysis
//
// Schutzenberger representations over the whole semigroup, apexes,
// contragredients, the representation-theoretic inverse-semigroup decision
// procedures, the *-representability test, and complete reducibility.
//
// The decision procedures are constructive: only the canonical normalized
// coordinatization with sigma the direct sum of all irreducibles of the
// maximal subgroup is tested.  For an inverse semigroup this witness always
// works, and for a non-inverse one its failure is conclusive, so the
// existential quantifier in the theorems never requires a search.
//

#ifndef SEMISTAR_SCHUTZ_HPP_
#define SEMISTAR_SCHUTZ_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmatrix.hpp"
#include "errors.hpp"
#include "group_reps.hpp"
#include "rees.hpp"
#include "semigroup.hpp"

namespace semistar {

enum class RepKind {
  LeftStandard,
  RightStandard,
  SchutzenbergerLeft,
  SchutzenbergerRight,
  Irreducible,
  Other,
};

// A matrix representation of a semigroup; images indexed by element.
struct MatrixRep {
  const SemigroupTable* source = nullptr;
  int dim = 0;
  std::vector<CMatrix> images;
  RepKind kind = RepKind::Other;
  std::optional<int> apex;  // J-class id, when known
};

inline bool rep_is_multiplicative(const MatrixRep& rep,
                                  double tol = kDefaultEps) {
  return images_are_homomorphism(rep.images, rep.source->mul, tol);
}

inline bool rep_is_proper(const MatrixRep& rep, double tol = kDefaultEps) {
  if (!rep.source->zero) {
    return true;
  }
  return fnorm(rep.images[*rep.source->zero]) <= tol;
}

// Verifies that star is an involution of the semigroup: an involutive
// bijection with star(ab) = star(b) star(a), checked on all pairs.
inline void verify_semigroup_involution(const SemigroupTable& s,
                                        const std::vector<int>& star) {
  if (static_cast<int>(star.size()) != s.n) {
    throw NotInvolution("involution has wrong length");
  }
  std::vector<bool> hit(s.n, false);
  for (int a = 0; a < s.n; ++a) {
    if (star[a] < 0 || star[a] >= s.n || hit[star[a]]) {
      throw NotInvolution("involution is not a bijection");
    }
    hit[star[a]] = true;
  }
  for (int a = 0; a < s.n; ++a) {
    if (star[star[a]] != a) {
      throw NotInvolution("map is not involutive at element "
                          + std::to_string(a + 1));
    }
    for (int b = 0; b < s.n; ++b) {
      if (star[s.mul[a][b]] != s.mul[star[b]][star[a]]) {
        throw NotInvolution("map is not an anti-homomorphism at ("
                            + std::to_string(a + 1) + ", "
                            + std::to_string(b + 1) + ")");
      }
    }
  }
}

enum class Side { Left, Right };

// The Schutzenberger matrix over C[G_a]: for the left side, entry (j, i)
// is the unique g with s x_i = x_j g when s x_i lies in L_a, else zero;
// the right side reads y_j s = h y_i.
inline Sandwich schutzenberger_matrix(const SemigroupTable& sg,
                                      const GreenStructure& green,
                                      const ReesCoordinatization& coord,
                                      int s, Side side) {
  const int order = coord.group.order();
  if (side == Side::Left) {
    const int size = coord.s();
    Sandwich m(size, std::vector<int>(size, kZeroEntry));
    for (int i = 0; i < size; ++i) {
      const int prod = sg.mul[s][coord.x[i]];
      if (green.lclass_of[prod] != green.lclass_of[coord.e]) {
        continue;
      }
      for (int j = 0; j < size; ++j) {
        if (green.rclass_of[prod] != green.rclass_of[coord.x[j]]) {
          continue;
        }
        int gpart = -1;
        for (int a = 0; a < order; ++a) {
          if (sg.mul[coord.x[j]][coord.group.carrier[a]] == prod) {
            gpart = a;
            break;
          }
        }
        if (gpart < 0) {
          throw InvariantViolation("coset solve failed in M_J");
        }
        m[j][i] = gpart;
        break;
      }
    }
    return m;
  }
  const int size = coord.t();
  Sandwich m(size, std::vector<int>(size, kZeroEntry));
  for (int j = 0; j < size; ++j) {
    const int prod = sg.mul[coord.y[j]][s];
    if (green.rclass_of[prod] != green.rclass_of[coord.e]) {
      continue;
    }
    for (int i = 0; i < size; ++i) {
      if (green.lclass_of[prod] != green.lclass_of[coord.y[i]]) {
        continue;
      }
      int gpart = -1;
      for (int a = 0; a < order; ++a) {
        if (sg.mul[coord.group.carrier[a]][coord.y[i]] == prod) {
          gpart = a;
          break;
        }
      }
      if (gpart < 0) {
        throw InvariantViolation("coset solve failed in M_J");
      }
      m[j][i] = gpart;
      break;
    }
  }
  return m;
}

namespace detail {

inline CMatrix blocks_of(const Sandwich& m, const GroupRep& sigma) {
  const int size = static_cast<int>(m.size());
  const int k = sigma.dim;
  CMatrix out = CMatrix::Zero(size * k, size * k);
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      if (m[j][i] != kZeroEntry) {
        out.block(j * k, i * k, k, k) = sigma.images[m[j][i]];
      }
    }
  }
  return out;
}

}  // namespace detail

// sigma(M_J(s)) for every s in S.  Restricted to the class, this equals
// the corresponding standard representation of the Rees form.
inline MatrixRep schutzenberger_rep(const SemigroupTable& sg,
                                    const GreenStructure& green,
                                    const ReesCoordinatization& coord,
                                    const GroupRep& sigma, Side side) {
  MatrixRep rep;
  rep.source = &sg;
  rep.kind = side == Side::Left ? RepKind::SchutzenbergerLeft
                                : RepKind::SchutzenbergerRight;
  rep.apex = coord.jclass;
  rep.dim = (side == Side::Left ? coord.s() : coord.t()) * sigma.dim;
  rep.images.reserve(sg.n);
  for (int s = 0; s < sg.n; ++s) {
    rep.images.push_back(detail::blocks_of(
        schutzenberger_matrix(sg, green, coord, s, side), sigma));
  }
  if (!rep_is_multiplicative(rep)) {
    throw InvariantViolation("Schutzenberger representation is not "
                             "multiplicative");
  }
  return rep;
}

struct JClassReport {
  int jclass = -1;
  int size = 0;
  int group_order = 0;
  bool sandwich_normalized = false;
  bool semiunitary = false;
  int failing_element = -1;  // element index, -1 if none
};

struct InverseVerdict {
  bool is_inverse = false;
  std::vector<JClassReport> per_jclass;
  bool oracle_checked = false;
  bool oracle_agrees = true;
};

struct DecisionOptions {
  std::uint64_t seed = kDefaultSeed;
  double eps = kDefaultEps;
  bool check_oracle = true;
};

// S (regular) is inverse iff for every J-class the canonical pair of
// matrix Schutzenberger representations is semiunitary.  Cross-checked
// against the exhaustive unique-inverse oracle unless disabled.
inline InverseVerdict is_inverse_via_reps(const SemigroupTable& sg,
                                          const GreenStructure& green,
                                          const DecisionOptions& opts = {}) {
  if (!is_regular_semigroup(sg)) {
    throw NotRegular("semigroup is not regular");
  }
  InverseVerdict verdict;
  verdict.is_inverse = true;
  const int classes = static_cast<int>(green.jclasses.size());
  for (int j = 0; j < classes; ++j) {
    JClassReport report;
    report.jclass = j;
    report.size = static_cast<int>(green.jclasses[j].size());
    ReesCoordinatization coord = coordinatize_jclass(sg, green, j);
    report.group_order = coord.group.order();
    report.sandwich_normalized =
        normalize_sandwich_to_identity(sg, green, coord);
    const GroupRep sigma =
        direct_sum(irreducible_unitary_reps(coord.group, opts.seed));
    const MatrixRep left =
        schutzenberger_rep(sg, green, coord, sigma, Side::Left);
    const MatrixRep right =
        schutzenberger_rep(sg, green, coord, sigma, Side::Right);
    report.semiunitary = true;
    for (int s = 0; s < sg.n && report.semiunitary; ++s) {
      if (!is_preunitary(left.images[s], opts.eps).all()
          || !is_preunitary(right.images[s], opts.eps).all()) {
        report.semiunitary = false;
        report.failing_element = s;
      }
    }
    verdict.is_inverse = verdict.is_inverse && report.semiunitary;
    verdict.per_jclass.push_back(std::move(report));
  }
  if (opts.check_oracle) {
    verdict.oracle_checked = true;
    const auto brute = brute_force_is_inverse(sg);
    verdict.oracle_agrees = brute.is_inverse == verdict.is_inverse;
    if (!verdict.oracle_agrees) {
      throw OracleMismatch("representation verdict "
                           + std::to_string(verdict.is_inverse)
                           + " disagrees with brute force");
    }
  }
  return verdict;
}

// S is inverse with the inverse map given by star iff the canonical
// Schutzenberger pairs are semiunitary *-representations.  On a true
// verdict the defining identities s s* s = s are re-checked exhaustively.
inline bool is_inverse_with_involution(const SemigroupTable& sg,
                                       const GreenStructure& green,
                                       const std::vector<int>& star,
                                       const DecisionOptions& opts = {}) {
  verify_semigroup_involution(sg, star);
  if (!is_regular_semigroup(sg)) {
    throw NotRegular("semigroup is not regular");
  }
  bool result = true;
  const int classes = static_cast<int>(green.jclasses.size());
  for (int j = 0; j < classes && result; ++j) {
    ReesCoordinatization coord = coordinatize_jclass(sg, green, j);
    normalize_sandwich_to_identity(sg, green, coord);
    const GroupRep sigma =
        direct_sum(irreducible_unitary_reps(coord.group, opts.seed));
    const MatrixRep left =
        schutzenberger_rep(sg, green, coord, sigma, Side::Left);
    const MatrixRep right =
        schutzenberger_rep(sg, green, coord, sigma, Side::Right);
    for (int s = 0; s < sg.n && result; ++s) {
      result = is_preunitary(left.images[s], opts.eps).all()
               && is_preunitary(right.images[s], opts.eps).all()
               && fnorm(left.images[star[s]]
                        - CMatrix(left.images[s].adjoint())) <= 1e-8
               && fnorm(right.images[star[s]]
                        - CMatrix(right.images[s].adjoint())) <= 1e-8;
    }
  }
  if (result) {
    for (int s = 0; s < sg.n; ++s) {
      if (sg.mul[sg.mul[s][star[s]]][s] != s
          || sg.mul[sg.mul[star[s]][s]][star[s]] != star[s]
          || generalized_inverses(sg, s).size() != 1) {
        throw OracleMismatch("*-semiunitary verdict contradicts the inverse "
                             "axioms");
      }
    }
  }
  return result;
}

// The apex of an irreducible representation: the regular J-class J with
// Ann_S(pi) = I_J, together with an idempotent of J acting nontrivially.
struct Apex {
  int jclass = -1;
  int idempotent = -1;
};

inline Apex apex(const SemigroupTable& sg, const GreenStructure& green,
                 const MatrixRep& rep, double eps = kDefaultEps) {
  double scale = 0;
  for (const auto& m : rep.images) {
    scale = std::max(scale, fnorm(m));
  }
  std::vector<bool> annihilated(sg.n);
  for (int s = 0; s < sg.n; ++s) {
    annihilated[s] = fnorm(rep.images[s]) <= eps * (1.0 + scale);
  }
  Apex found;
  int matches = 0;
  for (int j = 0; j < static_cast<int>(green.jclasses.size()); ++j) {
    if (!green.regular_j[j]) {
      continue;
    }
    bool same = true;
    for (int a = 0; a < sg.n && same; ++a) {
      const bool in_ideal = !green.jleq[j][green.jclass_of[a]];
      same = annihilated[a] == in_ideal;
    }
    if (!same) {
      continue;
    }
    int idem = -1;
    for (int a : green.jclasses[j]) {
      if (sg.is_idempotent(a) && !annihilated[a]) {
        idem = a;
        break;
      }
    }
    if (idem >= 0) {
      ++matches;
      found.jclass = j;
      found.idempotent = idem;
    }
  }
  if (matches != 1) {
    throw NoApex("annihilator matches " + std::to_string(matches)
                 + " regular classes");
  }
  return found;
}

// An irreducible representation induced from a maximal-subgroup irrep
// through the left Schutzenberger construction.
struct InducedRep {
  MatrixRep rep;
  int jclass = -1;
  int sigma_index = -1;  // position in the irrep list of G_e
  GroupIrrep sigma;
};

struct IrrepsOfS {
  std::vector<InducedRep> irreps;
  std::vector<int> classes;  // representation-bearing classes, in order
  std::vector<ReesCoordinatization> coords;  // parallel to classes
};

// All irreducible representations of S, as Ind_{G_e}(sigma_i) over the
// regular J-classes (the class of the zero, when present, carries only the
// improper representation and is excluded).  Requires C[S] semisimple, in
// which case each induced representation is irreducible; this is verified
// through the self-intertwiner dimension.
inline IrrepsOfS all_irreps(const SemigroupTable& sg,
                            const GreenStructure& green,
                            std::uint64_t seed = kDefaultSeed) {
  if (!is_semisimple_algebra(sg)) {
    throw NotSemisimple("contracted algebra has a radical");
  }
  IrrepsOfS out;
  for (int j = 0; j < static_cast<int>(green.jclasses.size()); ++j) {
    if (!green.regular_j[j]) {
      throw InvariantViolation("semisimple algebra with a non-regular "
                               "J-class");
    }
    if (sg.zero && green.jclass_of[*sg.zero] == j) {
      continue;
    }
    ReesCoordinatization coord = coordinatize_jclass(sg, green, j);
    const auto sigmas = irreducible_unitary_reps(coord.group, seed);
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      InducedRep induced;
      induced.jclass = j;
      induced.sigma_index = static_cast<int>(i);
      induced.sigma = sigmas[i];
      GroupRep sigma{sigmas[i].dim, sigmas[i].images};
      induced.rep =
          schutzenberger_rep(sg, green, coord, sigma, Side::Left);
      induced.rep.kind = RepKind::Irreducible;
      if (!rep_is_proper(induced.rep)
          || hom_dimension(induced.rep.images, induced.rep.images) != 1) {
        throw InvariantViolation("induced representation failed the "
                                 "irreducibility check");
      }
      out.irreps.push_back(std::move(induced));
    }
    out.classes.push_back(j);
    out.coords.push_back(std::move(coord));
  }
  return out;
}

// Contragredient of an induced irreducible: induce the dual group
// representation, sigma_check(g) = sigma(g^{-1})^T.  The character comes
// out conjugated, which is verified.
inline InducedRep contragredient(const SemigroupTable& sg,
                                 const GreenStructure& green,
                                 const ReesCoordinatization& coord,
                                 const InducedRep& induced) {
  if (!is_semisimple_algebra(sg)) {
    throw NotSemisimple("contragredients need a semisimple algebra");
  }
  InducedRep dual;
  dual.jclass = induced.jclass;
  dual.sigma_index = -1;
  dual.sigma = induced.sigma;
  dual.sigma.images.clear();
  const GroupData& group = induced.sigma.group;
  for (int a = 0; a < group.order(); ++a) {
    dual.sigma.images.push_back(
        induced.sigma.images[group.inv(a)].transpose());
  }
  dual.sigma.character = detail::character_of(group, dual.sigma.images);
  GroupRep sigma{dual.sigma.dim, dual.sigma.images};
  dual.rep = schutzenberger_rep(sg, green, coord, sigma, Side::Left);
  dual.rep.kind = RepKind::Irreducible;
  for (int s = 0; s < sg.n; ++s) {
    if (std::abs(dual.rep.images[s].trace()
                 - std::conj(induced.rep.images[s].trace())) > 1e-6) {
      throw InvariantViolation("contragredient character is not the "
                               "conjugate");
    }
  }
  return dual;
}

struct StarIrrepReport {
  int jclass = -1;
  int sigma_index = -1;
  int dim = 0;
  bool equivalent = false;         // pi-check ~ D(pi) o star
  bool star_form_built = false;
  bool factorization_obstruction = false;
  double star_defect = 0.0;        // max_s |pi'(s*) - pi'(s)*|
};

struct StarVerdict {
  bool semisimple = false;
  bool star_representable = false;
  std::vector<StarIrrepReport> irreps;
  std::vector<MatrixRep> star_forms;  // for irreps with star_form_built
};

// Every finite dimensional representation of (S, *) is isomorphic to a
// *-representation iff C[S] is semisimple and pi-check ~ D(pi) o star for
// every irreducible pi.  On a true verdict an explicit *-form is also
// constructed per irrep: solve A pi(s*) = pi(s)* A, scale A Hermitian,
// factor A = B* B, conjugate by B.  The factorization requires a definite
// A; both signs are tried and a mixed signature is reported as an
// obstruction without affecting the character-level verdict.
inline StarVerdict star_representable_all(const SemigroupTable& sg,
                                          const GreenStructure& green,
                                          const std::vector<int>& star,
                                          const DecisionOptions& opts = {}) {
  verify_semigroup_involution(sg, star);
  StarVerdict verdict;
  verdict.semisimple = is_semisimple_algebra(sg);
  if (!verdict.semisimple) {
    verdict.star_representable = false;
    return verdict;
  }
  IrrepsOfS irreps = all_irreps(sg, green, opts.seed);
  verdict.star_representable = true;
  for (const auto& induced : irreps.irreps) {
    StarIrrepReport report;
    report.jclass = induced.jclass;
    report.sigma_index = induced.sigma_index;
    report.dim = induced.rep.dim;

    const ReesCoordinatization* coord = nullptr;
    for (std::size_t c = 0; c < irreps.classes.size(); ++c) {
      if (irreps.classes[c] == induced.jclass) {
        coord = &irreps.coords[c];
      }
    }
    const InducedRep dual = contragredient(sg, green, *coord, induced);
    std::vector<CMatrix> dstar(sg.n);
    for (int s = 0; s < sg.n; ++s) {
      dstar[s] = induced.rep.images[star[s]].transpose();
    }
    const auto basis =
        solve_intertwiners(dual.rep.images, dstar, opts.eps);
    bool equivalent = false;
    for (const auto& t : basis) {
      const Eigen::VectorXd sv = singular_values(t);
      if (sv(sv.size() - 1) > opts.eps * (1.0 + sv(0))) {
        equivalent = true;
        break;
      }
    }
    report.equivalent = equivalent;
    verdict.star_representable = verdict.star_representable && equivalent;
    verdict.irreps.push_back(report);
  }
  if (!verdict.star_representable) {
    return verdict;
  }

  for (std::size_t idx = 0; idx < irreps.irreps.size(); ++idx) {
    const auto& induced = irreps.irreps[idx];
    auto& report = verdict.irreps[idx];
    // A with A pi(s*) = pi(s)* A for all s.
    std::vector<CMatrix> lhs(sg.n), rhs(sg.n);
    for (int s = 0; s < sg.n; ++s) {
      lhs[s] = induced.rep.images[s].adjoint();
      rhs[s] = induced.rep.images[star[s]];
    }
    const auto basis = solve_intertwiners(lhs, rhs, opts.eps);
    if (basis.size() != 1) {
      throw InvariantViolation("expected a one-dimensional twisted "
                               "intertwiner space, got "
                               + std::to_string(basis.size()));
    }
    CMatrix a = basis[0];
    const Complex num = (a.adjoint() * a.adjoint()).trace();
    const Complex den = (a.adjoint() * a).trace();
    const Complex c = num / den;  // A* = c A with |c| = 1
    const Complex d = std::sqrt(c);
    a = d * a;
    a = 0.5 * (a + CMatrix(a.adjoint()));

    CMatrix b;
    try {
      b = positive_factor(a, opts.eps);
    } catch (const IndefiniteError&) {
      try {
        b = positive_factor(CMatrix(-a), opts.eps);
      } catch (const IndefiniteError&) {
        report.factorization_obstruction = true;
        continue;
      }
    }
    const CMatrix binv = b.inverse();
    MatrixRep star_form;
    star_form.source = &sg;
    star_form.dim = induced.rep.dim;
    star_form.kind = RepKind::Irreducible;
    star_form.apex = induced.jclass;
    star_form.images.reserve(sg.n);
    for (int s = 0; s < sg.n; ++s) {
      star_form.images.push_back(b * induced.rep.images[s] * binv);
    }
    double defect = 0;
    for (int s = 0; s < sg.n; ++s) {
      defect = std::max(defect,
                        fnorm(star_form.images[star[s]]
                              - CMatrix(star_form.images[s].adjoint())));
    }
    report.star_defect = defect;
    if (defect > 1e-8) {
      throw InvariantViolation("constructed *-form has defect "
                               + std::to_string(defect));
    }
    report.star_form_built = true;
    verdict.star_forms.push_back(std::move(star_form));
  }
  return verdict;
}

// Complete reducibility via the enveloping algebra: the span of the images
// is multiplicatively closed, and the module is completely reducible iff
// the trace form on that span is nondegenerate.
inline bool is_completely_reducible(const std::vector<CMatrix>& images,
                                    double eps = 1e-9) {
  if (images.empty()) {
    return true;
  }
  const int d = static_cast<int>(images[0].rows());
  const int n = static_cast<int>(images.size());
  CMatrix stacked(n, d * d);
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < d; ++j) {
      stacked.block(s, j * d, 1, d) = images[s].col(j).transpose();
    }
  }
  Eigen::JacobiSVD<CMatrix> svd(stacked,
                                Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double tol = eps * (1.0 + (sv.size() ? sv(0) : 0.0));
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    rank += sv(i) > tol;
  }
  if (rank == 0) {
    return true;  // zero algebra
  }
  std::vector<CMatrix> span;
  for (int i = 0; i < rank; ++i) {
    CMatrix m(d, d);
    for (int j = 0; j < d; ++j) {
      m.col(j) = svd.matrixV().col(i).segment(j * d, d);
    }
    span.push_back(std::move(m));
  }
  CMatrix gram(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      gram(i, j) = (span[i] * span[j]).trace();
    }
  }
  const Eigen::VectorXd gsv = singular_values(gram);
  return gsv(gsv.size() - 1) > eps * (1.0 + gsv(0));
}

inline bool is_completely_reducible(const MatrixRep& rep,
                                    double eps = 1e-9) {
  return is_completely_reducible(rep.images, eps);
}

}  // namespace semistar

#endif  // SEMISTAR_SCHUTZ_HPP_
