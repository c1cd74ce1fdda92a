#include <catch2/catch_amalgamated.hpp>

#include "semistar/cmatrix.hpp"
#include "semistar/rng.hpp"
#include "support.hpp"

using namespace semistar;

namespace {

CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.begin()->size());
  CMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const auto& v : row) {
      m(i, j++) = v;
    }
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("preunitarity on the worked examples", "[cmatrix]") {
  const CMatrix proj = from_rows({{1, 0}, {0, 0}});
  REQUIRE(is_preunitary(proj).all());

  const CMatrix doubled = from_rows({{0, 2}, {0, 0}});
  const auto r1 = is_preunitary(doubled);
  REQUIRE(r1.agree());
  REQUIRE_FALSE(r1.all());

  const CMatrix unit = from_rows({{0, 1}, {0, 0}});
  REQUIRE(is_preunitary(unit).all());
}

TEST_CASE("four preunitarity conditions agree on random input",
          "[cmatrix][property]") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const CMatrix a = test::random_partial_isometry(rng, 3 + trial % 3);
    const auto r = is_preunitary(a);
    REQUIRE(r.agree());
    REQUIRE(r.all());
  }
  for (int trial = 0; trial < 200; ++trial) {
    const CMatrix a = test::random_non_preunitary(rng, 3 + trial % 3);
    const auto r = is_preunitary(a);
    REQUIRE(r.agree());
    REQUIRE_FALSE(r.all());
  }
  for (int trial = 0; trial < 200; ++trial) {
    // gaussian noise far above eps must break all four conditions
    CMatrix a = test::random_partial_isometry(rng, 4);
    if (fnorm(a) < 0.5) {
      continue;  // the zero partial isometry stays preunitary
    }
    a *= 1.0 + 0.3 + 0.4 * rng.uniform();
    const auto r = is_preunitary(a);
    REQUIRE(r.agree());
    REQUIRE_FALSE(r.all());
  }
}

TEST_CASE("polar decomposition on the worked examples", "[cmatrix]") {
  const CMatrix eye = CMatrix::Identity(2, 2);
  const auto pd = polar_decompose(eye);
  REQUIRE(fnorm(pd.partial_isometry - eye) < 1e-12);
  REQUIRE(fnorm(pd.positive_part - eye) < 1e-12);

  const CMatrix a = from_rows({{0, 2}, {0, 0}});
  const auto pa = polar_decompose(a);
  REQUIRE(fnorm(pa.partial_isometry - from_rows({{0, 1}, {0, 0}})) < 1e-9);
  REQUIRE(fnorm(pa.positive_part - from_rows({{0, 0}, {0, 2}})) < 1e-9);

  const CMatrix zero = CMatrix::Zero(3, 2);
  const auto pz = polar_decompose(zero);
  REQUIRE(fnorm(pz.partial_isometry) == 0.0);
  REQUIRE(fnorm(pz.positive_part) == 0.0);
}

TEST_CASE("polar round trip on random matrices", "[cmatrix][property]") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 2 + trial % 3;
    const int c = 2 + (trial / 3) % 3;
    const CMatrix a = rng.gaussian_matrix(r, c);
    const auto pd = polar_decompose(a);
    REQUIRE(fnorm(pd.partial_isometry * pd.positive_part - a)
            <= 1e-9 * (1.0 + fnorm(a)));
    REQUIRE(is_preunitary(pd.partial_isometry).all());
    // positive part Hermitian PSD
    REQUIRE(fnorm(pd.positive_part - CMatrix(pd.positive_part.adjoint()))
            < 1e-9);
  }
}

TEST_CASE("intertwiner spaces", "[cmatrix]") {
  // 2-dim irrep of the dihedral action: rotation + reflection
  const double c = -0.5, s = std::sqrt(3.0) / 2.0;
  const CMatrix rot = from_rows({{c, -s}, {s, c}});
  const CMatrix ref = from_rows({{1, 0}, {0, -1}});
  REQUIRE(hom_dimension({rot, ref}, {rot, ref}) == 1);

  // inequivalent one-dimensional representations
  const CMatrix one = from_rows({{1}});
  const CMatrix minus = from_rows({{-1}});
  REQUIRE(hom_dimension({one, one}, {one, minus}) == 0);

  // regular representation of C2 against itself: commutant is 2-dim
  const CMatrix e = CMatrix::Identity(2, 2);
  const CMatrix t = from_rows({{0, 1}, {1, 0}});
  const auto basis = solve_intertwiners({e, t}, {e, t});
  REQUIRE(basis.size() == 2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    REQUIRE(fnorm(basis[i] * t - t * basis[i]) <= 1e-8);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Complex ip = (basis[j].adjoint() * basis[i]).trace();
      REQUIRE(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-9);
    }
  }
}

TEST_CASE("positive factorization", "[cmatrix]") {
  const CMatrix eye = CMatrix::Identity(3, 3);
  REQUIRE(fnorm(positive_factor(eye) - eye) < 1e-12);

  const CMatrix a = from_rows({{4, 0}, {0, 1}});
  REQUIRE(fnorm(positive_factor(a) - from_rows({{2, 0}, {0, 1}})) < 1e-12);

  CMatrix skew(2, 2);
  skew << 0, 1, 0, 0;
  REQUIRE_THROWS_AS(positive_factor(skew), Error);

  const CMatrix ind = from_rows({{1, 0}, {0, -1}});
  try {
    positive_factor(ind);
    FAIL("expected IndefiniteError");
  } catch (const IndefiniteError& e) {
    REQUIRE(e.pos == 1);
    REQUIRE(e.neg == 1);
  }

  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix m = rng.gaussian_matrix(3, 3);
    const CMatrix pd = m * m.adjoint() + 0.1 * CMatrix::Identity(3, 3);
    const CMatrix b = positive_factor(pd);
    REQUIRE(fnorm(b * b.adjoint() - pd) <= 1e-9 * (1.0 + fnorm(pd)));
  }
}
