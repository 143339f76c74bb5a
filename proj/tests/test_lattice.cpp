#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace testing;

TEST_CASE("surface spec validation") {
  CHECK_NOTHROW(SurfaceSpec(2, {2}));
  CHECK_NOTHROW(SurfaceSpec(2, {4, 0, -2}));
  CHECK_THROWS_AS(SurfaceSpec(1, {0}), ValidationError);
  CHECK_THROWS_AS(SurfaceSpec(2, {}), ValidationError);
  CHECK_THROWS_WITH_AS(SurfaceSpec(2, {1, 2}), doctest::Contains("kappa sum"), ValidationError);

  const SurfaceSpec s(3, {3, 1});
  CHECK(s.abs_dim() == 6);
  CHECK(s.rel_dim() == 7);
  CHECK(s.signature(1) == -4);
  CHECK(s.kappa_gcd() == 1);
  CHECK_FALSE(s.all_kappa_even());
  CHECK(SurfaceSpec(3, {2, 2}).kappa_gcd() == 2);
}

TEST_CASE("symplectic pairing on basis vectors") {
  const SurfaceSpec s(2, {2});
  CHECK(symplectic_pairing(x_class(s, 1), y_class(s, 1)) == 1);
  CHECK(symplectic_pairing(x_class(s, 1), x_class(s, 2)) == 0);
  CHECK(symplectic_pairing(y_class(s, 1), x_class(s, 1)) == -1);
  CHECK(symplectic_pairing(x_class(s, 2), y_class(s, 1)) == 0);
  CHECK_THROWS_AS(symplectic_pairing(abs_vec({1, 0, 0, 0}), abs_vec({1, 0})), SpecMismatch);
}

TEST_CASE("relative-punctured pairing") {
  const SurfaceSpec s(2, {1, 1});
  CHECK(rel_punct_pairing(s, arc_class(s, 2), puncture_class(s, 2)) == 1);
  CHECK(rel_punct_pairing(s, arc_class(s, 2), embed_punct(s, x_class(s, 1))) == 0);
  CHECK(rel_punct_pairing(s, embed_rel(s, x_class(s, 1)), embed_punct(s, y_class(s, 1))) == 1);
  // d_1 = -d_2 here, so a_2 meets it with -1.
  CHECK(rel_punct_pairing(s, arc_class(s, 2), puncture_class(s, 1)) == -1);
  CHECK(point_coefficient(s, arc_class(s, 2), 2) == 1);
  CHECK(point_coefficient(s, arc_class(s, 2), 1) == -1);
}

TEST_CASE("boundary and projection") {
  const SurfaceSpec s(2, {1, 1});
  CHECK(boundary(s, arc_class(s, 2)).coords == ints({1}));
  CHECK(boundary(s, embed_rel(s, x_class(s, 1))).coords == ints({0}));
  CHECK(boundary(s, arc_class(s, 2) + Integer(3) * embed_rel(s, x_class(s, 1))).coords == ints({1}));
  CHECK(project_punct(s, puncture_class(s, 2)).coords.isZero());
  CHECK(project_punct(s, embed_punct(s, x_class(s, 1)) + puncture_class(s, 2)) == x_class(s, 1));
  CHECK(project_punct(s, embed_punct(s, x_class(s, 1) + y_class(s, 2))) == x_class(s, 1) + y_class(s, 2));
}

TEST_CASE("lattice invariants on random vectors") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9);
  const SurfaceSpec s(3, {1, 2, 1});
  auto random_abs = [&] {
    AbsVec v = AbsVec::zero(s.abs_dim());
    for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = coef(rng);
    return v;
  };
  for (int t = 0; t < 200; ++t) {
    const AbsVec u = random_abs(), v = random_abs();
    CHECK(symplectic_pairing(u, v) == -symplectic_pairing(v, u));
    CHECK(rel_punct_pairing(s, embed_rel(s, u), embed_punct(s, v)) == symplectic_pairing(u, v));
    CHECK(boundary(s, embed_rel(s, u)).coords.isZero());
  }
  // Boundary hits every basis vector of the reduced zero-chains.
  for (int p = 2; p <= s.points(); ++p) CHECK(boundary(s, arc_class(s, p)).coords(p - 2) == 1);
  // Unimodular Gram matrix: it has an explicit integer inverse diag(-J, I).
  const IntMatrix b = rel_punct_gram(s);
  IntMatrix inv = IntMatrix::Identity(s.rel_dim(), s.rel_dim());
  inv.topLeftCorner(s.abs_dim(), s.abs_dim()) = -symplectic_gram(s.genus());
  CHECK(IntMatrix(b * inv) == IntMatrix::Identity(s.rel_dim(), s.rel_dim()));
}
