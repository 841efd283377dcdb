#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sqdepth/graphpower.hpp"
#include "sqdepth/monomial.hpp"

using namespace sqd;

namespace {

MonomialIdeal path_ideal(int n, int k) {
  return edge_ideal(build_power_graph({Family::path, n, k}));
}

// Brute-force K-basis of I: all masks some generator divides.
std::vector<char> membership_table(const MonomialIdeal& I) {
  std::vector<char> in(std::size_t{1} << I.ambient_n(), 0);
  for (Mask g : I.gens())
    for (Mask m = 0; m < in.size(); ++m)
      if ((g & ~m) == 0) in[m] = 1;
  return in;
}

MonomialIdeal random_ideal(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<Mask> mask(1, full_mask(n));
  std::vector<Mask> gens;
  for (int c = count(rng); c > 0; --c) gens.push_back(mask(rng));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

}  // namespace

TEST_CASE("minimalize removes divisible generators") {
  auto I = MonomialIdeal::minimalize(
      4, {mask_from_vars({1, 2}), mask_from_vars({1, 2, 3}), mask_from_vars({2, 4})});
  CHECK(I.gens() == std::vector<Mask>{mask_from_vars({1, 2}), mask_from_vars({2, 4})});
}

TEST_CASE("minimalize of nothing is the zero ideal") {
  auto I = MonomialIdeal::minimalize(3, {});
  CHECK(I.is_zero());
  CHECK_FALSE(I.is_unit());
}

TEST_CASE("minimalize with duplicates reaches the 7 generators of I(P_5^2)") {
  std::vector<Mask> gens;
  auto P = path_ideal(5, 2);
  for (Mask g : P.gens()) {
    gens.push_back(g);
    gens.push_back(g);
  }
  gens.push_back(mask_from_vars({1, 2, 3}));
  auto I = MonomialIdeal::minimalize(5, gens);
  CHECK(I.gens().size() == 7);
  CHECK(I == path_ideal(5, 2));
}

TEST_CASE("unit normalization") {
  auto I = MonomialIdeal::minimalize(3, {0, mask_from_vars({1})});
  CHECK(I.is_unit());
  CHECK(I.gens() == std::vector<Mask>{Mask{0}});
}

TEST_CASE("minimalize rejects mixed ambient sizes") {
  std::vector<SqfMonomial> gens{SqfMonomial(1, 3), SqfMonomial(1, 4)};
  CHECK_THROWS_AS(MonomialIdeal::minimalize(gens), std::invalid_argument);
}

TEST_CASE("contains on I(P_4^1)") {
  auto I = path_ideal(4, 1);
  CHECK_FALSE(I.contains(mask_from_vars({1, 3})));
  CHECK(I.contains(mask_from_vars({1, 2, 4})));
  CHECK_FALSE(MonomialIdeal::zero(4).contains(mask_from_vars({1, 2, 4})));
}

TEST_CASE("contains agrees with brute-force membership") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + trial % 6;
    auto I = random_ideal(rng, n);
    auto table = membership_table(I);
    for (Mask m = 0; m <= full_mask(n); ++m)
      REQUIRE(I.contains(m) == (table[m] != 0));
  }
}

TEST_CASE("colon of I(P_5^2) by the center variable") {
  auto got = path_ideal(5, 2).colon_by_variable(3);
  auto want = MonomialIdeal::zero(5).add_primes(mask_from_vars({1, 2, 4, 5}));
  CHECK(got == want);
}

TEST_CASE("colon by a variable outside the support is a no-op") {
  auto I = MonomialIdeal::minimalize(5, {mask_from_vars({1, 2}), mask_from_vars({2, 3})});
  CHECK(I.colon_by_variable(5) == I);
}

TEST_CASE("colon of I(P_7^2) by x_5 splits into a short path plus a prime") {
  auto got = path_ideal(7, 2).colon_by_variable(5);
  // Direct expansion: x_5 is adjacent to 3,4,6,7; the surviving window is
  // {1,2} carrying P_2^2.
  auto want = path_ideal(2, 2).extend_ambient(7).sum(prime_B(7, 2, 5));
  CHECK(got == want);
}

TEST_CASE("colon monotonicity and the unit criterion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial % 5;
    auto I = random_ideal(rng, n);
    for (int v = 1; v <= n; ++v) {
      auto Q = I.colon_by_variable(v);
      for (Mask m = 0; m <= full_mask(n); ++m)
        if (I.contains(m)) REQUIRE(Q.contains(m));
      REQUIRE(Q.is_unit() == I.contains(var_bit(v)));
    }
  }
}

TEST_CASE("add_primes absorbs generators meeting the prime") {
  auto got = path_ideal(5, 2).add_primes(mask_from_vars({3, 4}));
  auto want = MonomialIdeal::minimalize(
      5, {mask_from_vars({1, 2}), mask_from_vars({3}), mask_from_vars({4})});
  CHECK(got == want);

  CHECK(path_ideal(5, 2).add_primes(0) == path_ideal(5, 2));
  CHECK(MonomialIdeal::zero(3).add_primes(mask_from_vars({1})) ==
        MonomialIdeal::minimalize(3, {mask_from_vars({1})}));
}

TEST_CASE("colon commutes with adding primes away from the variable") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + trial % 4;
    auto I = random_ideal(rng, n);
    std::uniform_int_distribution<Mask> mask(0, full_mask(n));
    Mask a = mask(rng);
    for (int v = 1; v <= n; ++v) {
      if (a & var_bit(v)) continue;
      REQUIRE(I.add_primes(a).colon_by_variable(v) ==
              I.colon_by_variable(v).add_primes(a));
    }
  }
}

TEST_CASE("minimalize is idempotent and order independent") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<Mask> mask(0, full_mask(6));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Mask> gens;
    for (int c = 0; c < 8; ++c) gens.push_back(mask(rng));
    auto I = MonomialIdeal::minimalize(6, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(MonomialIdeal::minimalize(6, gens) == I);
    CHECK(MonomialIdeal::minimalize(6, I.gens()) == I);
  }
}

TEST_CASE("ideals_isomorphic under a shift renaming") {
  auto I = path_ideal(3, 1);
  auto J = MonomialIdeal::minimalize(4, {mask_from_vars({2, 3}), mask_from_vars({3, 4})});
  CHECK(ideals_isomorphic(I, J, VariableRenaming::shift(1, 3, 1)));
  CHECK(ideals_isomorphic(I, I, VariableRenaming::identity(3)));
  CHECK_FALSE(ideals_isomorphic(I, path_ideal(3, 2), VariableRenaming::identity(3)));
}

TEST_CASE("ideals_isomorphic rejects a renaming missing support variables") {
  auto I = path_ideal(3, 1);
  VariableRenaming r;
  r.set(1, 1);
  r.set(2, 2);
  CHECK_THROWS_AS(ideals_isomorphic(I, I, r), std::invalid_argument);
}

TEST_CASE("renamings must stay injective") {
  VariableRenaming r;
  r.set(1, 3);
  CHECK_THROWS_AS(r.set(2, 3), std::invalid_argument);
}

TEST_CASE("canonical string form") {
  auto I = MonomialIdeal::minimalize(3, {mask_from_vars({2, 3}), mask_from_vars({1, 2})});
  CHECK(ideal_to_canonical_string(I) == "[[1,2],[2,3]]");
  CHECK(ideal_to_canonical_string(MonomialIdeal::zero(3)) == "[]");
}

TEST_CASE("monomial invariants") {
  CHECK_THROWS_AS(SqfMonomial(mask_from_vars({5}), 4), std::invalid_argument);
  SqfMonomial m(mask_from_vars({1, 3}), 4);
  CHECK(m.degree() == 2);
  CHECK(SqfMonomial(0, 4).is_unit());
  CHECK(SqfMonomial(mask_from_vars({1}), 4).divides(m));
  CHECK_FALSE(m.divides(SqfMonomial(mask_from_vars({1}), 4)));
}
