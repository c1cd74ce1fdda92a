#include <catch2/catch_amalgamated.hpp>

#include "semistar/corpus.hpp"
#include "semistar/schutz.hpp"
#include "support.hpp"

using namespace semistar;

TEST_CASE("Schutzenberger representation of B2 restricts to the standard "
          "representation",
          "[schutz]") {
  const auto b2 = brandt_b2();
  const auto green = green_structure(b2.table);
  const int top = green.jclass_of[0];
  const auto coord = coordinatize_jclass(b2.table, green, top);
  const GroupRep sigma{1, irreducible_unitary_reps(coord.group)[0].images};
  const auto left = schutzenberger_rep(b2.table, green, coord, sigma,
                                       Side::Left);
  REQUIRE(left.dim == 2);
  // zero lies in the ideal below the class
  REQUIRE(fnorm(left.images[b2.zero_index()]) == 0.0);

  const auto rebuilt = rees_from_coordinatization(coord);
  const auto pair = standard_reps(rebuilt, sigma);
  for (int b : green.jclasses[top]) {
    const int idx = rebuilt.element_index(coord.row_of[b], coord.col_of[b],
                                          coord.gpart_of[b]);
    REQUIRE(fnorm(left.images[b] - pair.left[idx]) < 1e-12);
  }
  const auto right = schutzenberger_rep(b2.table, green, coord, sigma,
                                        Side::Right);
  for (int b : green.jclasses[top]) {
    const int idx = rebuilt.element_index(coord.row_of[b], coord.col_of[b],
                                          coord.gpart_of[b]);
    REQUIRE(fnorm(right.images[b] - pair.right[idx]) < 1e-12);
  }
}

TEST_CASE("Schutzenberger representation of a group is the group "
          "representation",
          "[schutz]") {
  const auto c3 = test::table_from_group(cyclic_group(3));
  const auto green = green_structure(c3);
  const auto coord = coordinatize_jclass(c3, green, 0);
  REQUIRE(coord.s() == 1);
  const auto irreps = irreducible_unitary_reps(coord.group);
  for (const auto& sigma : irreps) {
    const auto rep = schutzenberger_rep(c3, green, coord,
                                        GroupRep{sigma.dim, sigma.images},
                                        Side::Left);
    for (int a = 0; a < 3; ++a) {
      REQUIRE(fnorm(rep.images[a] - sigma.images[coord.group.local_of(a)])
              < 1e-12);
    }
  }
}

TEST_CASE("is_inverse_via_reps verdicts", "[schutz][decision]") {
  const auto b2 = brandt_b2();
  const auto v1 = is_inverse_via_reps(b2.table, green_structure(b2.table));
  REQUIRE(v1.is_inverse);
  REQUIRE(v1.oracle_agrees);
  for (const auto& r : v1.per_jclass) {
    REQUIRE(r.semiunitary);
    REQUIRE(r.sandwich_normalized);
    REQUIRE(r.failing_element == -1);
  }

  const auto l2 = left_zero_semigroup(2);
  const auto v2 = is_inverse_via_reps(l2, green_structure(l2));
  REQUIRE_FALSE(v2.is_inverse);
  REQUIRE(v2.oracle_agrees);
  REQUIRE_FALSE(v2.per_jclass[0].sandwich_normalized);
  REQUIRE(v2.per_jclass[0].failing_element >= 0);

  const auto bad = build_rees(2, 2, trivial_group(),
                              {{0, 0}, {kZeroEntry, 0}});
  const auto v3 = is_inverse_via_reps(bad.table, green_structure(bad.table));
  REQUIRE_FALSE(v3.is_inverse);
  REQUIRE(v3.per_jclass[0].failing_element == bad.element_index(0, 0, 0));

  REQUIRE_THROWS_AS(
      is_inverse_via_reps(null_semigroup2(), green_structure(null_semigroup2())),
      NotRegular);
}

TEST_CASE("is_inverse_with_involution", "[schutz][decision]") {
  const auto b2 = brandt_b2();
  const auto green = green_structure(b2.table);
  // transpose: (a)_{ij} -> (a)_{ji}
  std::vector<int> transpose(b2.table.n);
  transpose[b2.zero_index()] = b2.zero_index();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      transpose[b2.element_index(i, j, 0)] = b2.element_index(j, i, 0);
    }
  }
  REQUIRE(is_inverse_with_involution(b2.table, green, transpose));

  // transpose composed with the index swap: an involution, but not the
  // inverse map
  std::vector<int> swapped(b2.table.n);
  swapped[b2.zero_index()] = b2.zero_index();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      swapped[b2.element_index(i, j, 0)] =
          b2.element_index(1 - j, 1 - i, 0);
    }
  }
  verify_semigroup_involution(b2.table, swapped);
  REQUIRE_FALSE(is_inverse_with_involution(b2.table, green, swapped));

  const auto chain = chain_semilattice(2);
  REQUIRE(is_inverse_with_involution(chain, green_structure(chain), {0, 1}));

  REQUIRE_THROWS_AS(
      is_inverse_with_involution(b2.table, green, std::vector<int>(5, 0)),
      NotInvolution);
}

TEST_CASE("apex computation", "[schutz][apex]") {
  const auto b2 = brandt_b2();
  const auto green = green_structure(b2.table);
  const auto irreps = all_irreps(b2.table, green);
  REQUIRE(irreps.irreps.size() == 1);
  const auto& pi = irreps.irreps[0];
  REQUIRE(pi.rep.dim == 2);
  const auto ap = apex(b2.table, green, pi.rep);
  REQUIRE(ap.jclass == green.jclass_of[0]);
  REQUIRE(b2.table.is_idempotent(ap.idempotent));

  // trivial representation of the 2-chain: apex at the bottom
  const auto chain = chain_semilattice(2);
  const auto gch = green_structure(chain);
  MatrixRep triv;
  triv.source = &chain;
  triv.dim = 1;
  triv.images = {CMatrix::Identity(1, 1), CMatrix::Identity(1, 1)};
  const auto apc = apex(chain, gch, triv);
  REQUIRE(apc.jclass == gch.jclass_of[0]);

  // sign representation of the unit group of SIM2, zero elsewhere
  const auto sim2 = symmetric_inverse_monoid2();
  const auto gs = green_structure(sim2);
  MatrixRep sign;
  sign.source = &sim2;
  sign.dim = 1;
  sign.images.assign(7, CMatrix::Zero(1, 1));
  sign.images[0] = CMatrix::Identity(1, 1);
  sign.images[1] = -CMatrix::Identity(1, 1);
  REQUIRE(rep_is_multiplicative(sign));
  const auto aps = apex(sim2, gs, sign);
  REQUIRE(aps.jclass == gs.jclass_of[0]);
  REQUIRE(aps.idempotent == 0);

  // the zero representation of the null semigroup has no apex
  const auto null2 = null_semigroup2();
  MatrixRep zero;
  zero.source = &null2;
  zero.dim = 1;
  zero.images.assign(2, CMatrix::Zero(1, 1));
  REQUIRE_THROWS_AS(apex(null2, green_structure(null2), zero), NoApex);
}

TEST_CASE("contragredients", "[schutz][dual]") {
  const auto c3 = test::table_from_group(cyclic_group(3));
  const auto green = green_structure(c3);
  const auto irreps = all_irreps(c3, green);
  REQUIRE(irreps.irreps.size() == 3);
  for (const auto& pi : irreps.irreps) {
    const auto dual = contragredient(c3, green, irreps.coords[0], pi);
    for (int a = 0; a < 3; ++a) {
      REQUIRE(std::abs(dual.rep.images[a].trace()
                       - std::conj(pi.rep.images[a].trace())) < 1e-9);
    }
    // double dual is equivalent to the original
    const auto ddual = contragredient(c3, green, irreps.coords[0], dual);
    REQUIRE(hom_dimension(ddual.rep.images, pi.rep.images) == 1);
  }

  const auto b2 = brandt_b2();
  const auto gb = green_structure(b2.table);
  const auto ib = all_irreps(b2.table, gb);
  const auto dual = contragredient(b2.table, gb, ib.coords[0], ib.irreps[0]);
  REQUIRE(hom_dimension(dual.rep.images, ib.irreps[0].rep.images) == 1);

  REQUIRE_THROWS_AS(all_irreps(left_zero_semigroup(2),
                               green_structure(left_zero_semigroup(2))),
                    NotSemisimple);
}

TEST_CASE("irreducible counting under semisimplicity", "[schutz][property]") {
  for (const SemigroupTable& s :
       {brandt_b2().table, symmetric_inverse_monoid2(),
        chain_semilattice(4), test::table_from_group(cyclic_group(4))}) {
    REQUIRE(is_semisimple_algebra(s));
    const auto green = green_structure(s);
    const auto irreps = all_irreps(s, green);
    int expected_count = 0;
    int dimension_sum = 0;
    for (int j : irreps.classes) {
      const auto coord = coordinatize_jclass(s, green, j);
      expected_count +=
          static_cast<int>(irreducible_unitary_reps(coord.group).size());
    }
    for (const auto& pi : irreps.irreps) {
      dimension_sum += pi.rep.dim * pi.rep.dim;
      REQUIRE(hom_dimension(pi.rep.images, pi.rep.images) == 1);
    }
    REQUIRE(static_cast<int>(irreps.irreps.size()) == expected_count);
    REQUIRE(dimension_sum
            == static_cast<int>(contracted_basis(s).size()));
    // pairwise inequivalent
    for (std::size_t i = 0; i < irreps.irreps.size(); ++i) {
      for (std::size_t j = i + 1; j < irreps.irreps.size(); ++j) {
        REQUIRE(hom_dimension(irreps.irreps[i].rep.images,
                              irreps.irreps[j].rep.images) == 0);
      }
    }
  }
}

TEST_CASE("idempotent resolution in normalized coordinates",
          "[schutz][property]") {
  for (const SemigroupTable& s :
       {brandt_b2().table, symmetric_inverse_monoid2(),
        chain_semilattice(4)}) {
    const auto green = green_structure(s);
    for (int j = 0; j < static_cast<int>(green.jclasses.size()); ++j) {
      auto coord = coordinatize_jclass(s, green, j);
      REQUIRE(normalize_sandwich_to_identity(s, green, coord));
      const GroupRep sigma =
          direct_sum(irreducible_unitary_reps(coord.group));
      const auto rep = schutzenberger_rep(s, green, coord, sigma,
                                          Side::Left);
      CMatrix sum = CMatrix::Zero(rep.dim, rep.dim);
      for (int i = 0; i < coord.s(); ++i) {
        REQUIRE(coord.e_diag[i] >= 0);
        sum += rep.images[coord.e_diag[i]];
      }
      REQUIRE(fnorm(sum - CMatrix::Identity(rep.dim, rep.dim)) < 1e-9);
    }
  }
}

TEST_CASE("star representability", "[schutz][star]") {
  const auto b2 = brandt_b2();
  const auto green = green_structure(b2.table);
  std::vector<int> transpose(b2.table.n);
  transpose[b2.zero_index()] = b2.zero_index();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      transpose[b2.element_index(i, j, 0)] = b2.element_index(j, i, 0);
    }
  }
  const auto verdict = star_representable_all(b2.table, green, transpose);
  REQUIRE(verdict.semisimple);
  REQUIRE(verdict.star_representable);
  REQUIRE(verdict.star_forms.size() == 1);
  for (const auto& r : verdict.irreps) {
    REQUIRE(r.star_form_built);
    REQUIRE(r.star_defect <= 1e-8);
  }

  // C3 with the identity involution: characters refuse
  const auto c3 = test::table_from_group(cyclic_group(3));
  const auto vc = star_representable_all(c3, green_structure(c3), {0, 1, 2});
  REQUIRE(vc.semisimple);
  REQUIRE_FALSE(vc.star_representable);

  // the null semigroup short-circuits at semisimplicity
  const auto null2 = null_semigroup2();
  const auto vn = star_representable_all(null2, green_structure(null2),
                                         {0, 1});
  REQUIRE_FALSE(vn.semisimple);
  REQUIRE_FALSE(vn.star_representable);
}

TEST_CASE("star representability reports the factorization obstruction on "
          "the conjugated inverse",
          "[schutz][star]") {
  const auto s3 = symmetric_group(3);
  const auto table = test::table_from_group(s3);
  int t = -1;
  for (int a = 0; a < 6; ++a) {
    if (a != s3.identity_local && s3.mul(a, a) == s3.identity_local) {
      t = a;
      break;
    }
  }
  std::vector<int> star(6);
  for (int a = 0; a < 6; ++a) {
    star[a] = s3.mul(s3.mul(t, s3.inv(a)), s3.inv(t));
  }
  const auto verdict = star_representable_all(table, green_structure(table),
                                              star);
  REQUIRE(verdict.semisimple);
  REQUIRE(verdict.star_representable);  // the character-level verdict
  bool obstructed = false;
  for (const auto& r : verdict.irreps) {
    if (r.factorization_obstruction) {
      REQUIRE(r.dim == 2);
      obstructed = true;
    }
  }
  REQUIRE(obstructed);
}

TEST_CASE("complete reducibility", "[schutz][comre]") {
  // every constructed *-form is completely reducible
  const auto b2 = brandt_b2();
  const auto green = green_structure(b2.table);
  std::vector<int> transpose(b2.table.n);
  transpose[b2.zero_index()] = b2.zero_index();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      transpose[b2.element_index(i, j, 0)] = b2.element_index(j, i, 0);
    }
  }
  const auto verdict = star_representable_all(b2.table, green, transpose);
  for (const auto& form : verdict.star_forms) {
    REQUIRE(is_completely_reducible(form));
  }

  // the L2 representation with an invariant line and no complement
  CMatrix x(2, 2), y(2, 2);
  x << 1, 1, 0, 0;
  y << 0, 0, 1, 1;
  REQUIRE_FALSE(is_completely_reducible({x, y}));

  // direct sum of two irreducibles
  const auto c3 = test::table_from_group(cyclic_group(3));
  const auto gc3 = green_structure(c3);
  const auto irreps = all_irreps(c3, gc3);
  std::vector<CMatrix> sum(3, CMatrix::Zero(2, 2));
  for (int a = 0; a < 3; ++a) {
    sum[a].block(0, 0, 1, 1) = irreps.irreps[0].rep.images[a];
    sum[a].block(1, 1, 1, 1) = irreps.irreps[1].rep.images[a];
  }
  REQUIRE(is_completely_reducible(sum));
}

TEST_CASE("Munn semiunitarity on small inverse semigroups",
          "[schutz][property]") {
  // every Schutzenberger image over every class of an inverse semigroup
  // passes preunitarity once the sandwich is the identity
  std::vector<SemigroupTable> corpus = {
      brandt_b2().table, chain_semilattice(2), chain_semilattice(3),
      test::table_from_group(cyclic_group(4)),
      test::table_from_group(cyclic_group(6))};
  for (const auto& s : corpus) {
    REQUIRE(brute_force_is_inverse(s).is_inverse);
    const auto green = green_structure(s);
    for (int j = 0; j < static_cast<int>(green.jclasses.size()); ++j) {
      auto coord = coordinatize_jclass(s, green, j);
      REQUIRE(normalize_sandwich_to_identity(s, green, coord));
      const GroupRep sigma =
          direct_sum(irreducible_unitary_reps(coord.group));
      for (Side side : {Side::Left, Side::Right}) {
        const auto rep = schutzenberger_rep(s, green, coord, sigma, side);
        for (const auto& image : rep.images) {
          REQUIRE(is_preunitary(image).all());
        }
      }
    }
  }
}
