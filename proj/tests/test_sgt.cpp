#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "semistar/corpus.hpp"
#include "semistar/sgt.hpp"

using namespace semistar;

namespace {
const std::string kDataDir = SEMISTAR_DATA_DIR;
}

TEST_CASE("data files match the catalog builders", "[sgt]") {
  REQUIRE(load_sgt(kDataDir + "/b2.sgt").table.mul == brandt_b2().table.mul);
  REQUIRE(load_sgt(kDataDir + "/b2.sgt").table.zero
          == brandt_b2().table.zero);
  REQUIRE(load_sgt(kDataDir + "/sim2.sgt").table.mul
          == symmetric_inverse_monoid2().mul);
  REQUIRE(load_sgt(kDataDir + "/t2.sgt").table.mul
          == full_transformation_monoid2().mul);
  REQUIRE(load_sgt(kDataDir + "/chain4.sgt").table.mul
          == chain_semilattice(4).mul);
  REQUIRE(load_sgt(kDataDir + "/l2.sgt").table.mul
          == left_zero_semigroup(2).mul);
  REQUIRE(load_sgt(kDataDir + "/null2.sgt").table.mul
          == null_semigroup2().mul);
  REQUIRE(load_sgt(kDataDir + "/c3.sgt").table.mul == cyclic_group(3).table);
}

TEST_CASE("sgt parser round trip", "[sgt]") {
  const auto b2 = load_sgt(kDataDir + "/b2.sgt");
  const std::string text = write_sgt(b2.table, b2.involution);
  const auto again = parse_sgt_string(text);
  REQUIRE(again.table.mul == b2.table.mul);
  REQUIRE(again.table.zero == b2.table.zero);
  REQUIRE(again.involution == b2.involution);
}

TEST_CASE("sgt parser rejects malformed input", "[sgt]") {
  REQUIRE_THROWS_AS(parse_sgt_string(""), ParseError);
  REQUIRE_THROWS_AS(parse_sgt_string("m 2\n1 1\n2 2\n"), ParseError);
  REQUIRE_THROWS_AS(parse_sgt_string("n 0\n"), ParseError);
  REQUIRE_THROWS_AS(parse_sgt_string("n 2\n1 1\n"), ParseError);
  REQUIRE_THROWS_AS(parse_sgt_string("n 2\n1 1 1\n2 2\n"), ParseError);
  REQUIRE_THROWS_AS(parse_sgt_string("n 2\n1 3\n2 2\n"), ParseError);
  REQUIRE_THROWS_AS(parse_sgt_string("n 2\n1 x\n2 2\n"), ParseError);
  REQUIRE_THROWS_AS(parse_sgt_string("n 2\n1 1\n2 2\nwat\n"), ParseError);
  REQUIRE_THROWS_AS(parse_sgt_string("n 2\n1 1\n2 2\nzero 1\nzero 1\n"),
                    ParseError);
  REQUIRE_THROWS_AS(parse_sgt_string("n 2\n1 1\n2 2\ninvolution 1\n"),
                    ParseError);
  // zero axiom violation surfaces as ZeroAxiomError
  REQUIRE_THROWS_AS(parse_sgt_string("n 2\n1 1\n2 2\nzero 1\n"),
                    ZeroAxiomError);
  // associativity violation surfaces as AssociativityError
  REQUIRE_THROWS_AS(parse_sgt_string("n 2\n2 2\n1 1\n"), AssociativityError);
}

TEST_CASE("sgt parser tolerates blank lines", "[sgt]") {
  const auto f = parse_sgt_string("\nn 2\n\n1 1\n2 2\n\n");
  REQUIRE(f.table.n == 2);
  REQUIRE_FALSE(f.involution.has_value());
}
