#include "helpers.hpp"

#include <framedhom/basis_moves.hpp>
#include <framedhom/sampling.hpp>
#include <framedhom/word.hpp>

#include <doctest.h>

using namespace testing;

TEST_CASE("move examples") {
  const Framing f = framing(2, {2}, {0, 0}, {0, 0});
  const Framing moved = apply_move(f, ConnectSum{{BasisKind::X, 1}, 2, 1});
  CHECK(moved.wind_x()(0) == 2);
  CHECK(moved.wind_y() == f.wind_y());
  CHECK(arf(moved) == arf(f));

  const Framing b = framing(2, {2, 0}, {0, 0}, {0, 0}, {{1}});
  CHECK(apply_move(b, BoundaryTwist{2}).arc_winding2(2) == -1);
  CHECK(apply_move(b, ConnectSum{{BasisKind::Arc, 2}, 1, -1}).arc_winding2(2) == -3);

  const Framing p = framing(2, {0, 1, 1}, {0, 0}, {0, 0}, {{1, 3}});
  const Framing twisted = apply_move(p, ArcParityTwist{2, 3});
  CHECK(twisted.arc_winding2(2) == 7);
  CHECK(twisted.arc_winding2(3) == 9);
  CHECK(arf(twisted) == arf(p));
}

TEST_CASE("move validation") {
  const Framing f = framing(2, {0, 1, 1}, {0, 0}, {0, 0}, {{1, 1}});
  CHECK_THROWS_AS(apply_move(f, ConnectSum{{BasisKind::X, 1}, 1, 1}), ValidationError);
  CHECK_THROWS_AS(apply_move(f, ConnectSum{{BasisKind::Y, 3}, 1, 1}), ValidationError);
  CHECK_THROWS_AS(apply_move(f, ConnectSum{{BasisKind::X, 1}, 2, 2}), ValidationError);
  CHECK_THROWS_AS(apply_move(f, BoundaryTwist{3}), ValidationError);
  CHECK_THROWS_AS(apply_move(f, ArcParityTwist{1, 2}), ValidationError);
  CHECK_THROWS_AS(apply_move(f, ArcParityTwist{3, 3}), ValidationError);
  CHECK_THROWS_AS(apply_move(framing(2, {1, 1}, {0, 0}, {0, 0}), BoundaryTwist{2}), MissingArcData);
}

TEST_CASE("match examples") {
  const Framing f = framing(2, {1, 1}, {1, 0}, {2, -1}, {{3}});
  CHECK(match_framings(f, f).empty());

  const Framing h = framing(2, {1, 1}, {3, 0}, {2, -1}, {{3}});
  const std::vector<Move> plan = match_framings(f, h);
  REQUIRE(plan.size() == 1);
  CHECK(plan[0] == Move{ConnectSum{{BasisKind::X, 1}, 2, 1}});

  CHECK_THROWS_AS(match_framings(f, framing(2, {1, 1}, {0, 0}, {2, -1}, {{3}})), QVectorMismatch);
  CHECK_THROWS_AS(match_framings(f, framing(2, {2, 0}, {1, 0}, {2, -1}, {{3}})), SpecMismatch);
  CHECK_THROWS_AS(match_framings(f, framing(2, {1, 1}, {1, 0}, {2, -1})), MissingArcData);
  // Same q-vector, arc winding shifted by an odd integer: Arf flips.
  CHECK_THROWS_AS(match_framings(f, framing(2, {1, 1}, {1, 0}, {2, -1}, {{5}})), ArfMismatch);
}

TEST_CASE("moves preserve arf and the q-vector") {
  Rng rng(51);
  for (int t = 0; t < 500; ++t) {
    const SurfaceSpec spec = random_spec(rng, 2 + t % 3, 1 + t % 4);
    Framing f = random_framing(rng, spec, spec.points() >= 2);
    for (int i = 0; i < 5; ++i) {
      const Framing next = apply_move(f, random_move(rng, f));
      CHECK(arf(next) == arf(f));
      CHECK(q_vector(next) == q_vector(f));
      f = next;
    }
  }
}

TEST_CASE("match round trip on random pairs") {
  Rng rng(52);
  for (int t = 0; t < 500; ++t) {
    const SurfaceSpec spec = random_spec(rng, 2 + t % 2, 1 + t % 4);
    const Framing f = random_framing(rng, spec, spec.points() >= 2);
    Framing h = f;
    for (int i = 0, n = static_cast<int>(uniform_int(rng, 0, 10)); i < n; ++i) h = apply_move(h, random_move(rng, h));
    const std::vector<Move> plan = match_framings(f, h);
    CHECK(apply_moves(f, plan) == h);
    CHECK(match_framings(h, h).empty());
  }
}

TEST_CASE("arc twists are realized by twist letters acting trivially on homology") {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const SurfaceSpec spec = random_spec(rng, 2 + t % 2, 2 + t % 3);
    const Framing f = random_framing(rng, spec, true);
    for (int j = 2; j <= spec.points(); ++j) {
      if (spec.kappa_at(j) % 2 != 0) continue;
      const Word w(spec, {puncture_twist(spec, j, -1)});
      CHECK(word_to_paut(w).is_identity());
      CHECK(act_framing(w, f) == apply_move(f, BoundaryTwist{j}));
    }
    std::vector<int> odd;
    for (int j = 2; j <= spec.points(); ++j)
      if (spec.kappa_at(j) % 2 != 0) odd.push_back(j);
    if (odd.size() < 2) continue;
    const int j1 = odd[0], j2 = odd[1];
    const Word w(spec, {Twist{-(puncture_class(spec, j1) + puncture_class(spec, j2)), 1,
                              spec.kappa_at(j1) + spec.kappa_at(j2) + 1}});
    CHECK(word_to_paut(w).is_identity());
    CHECK(act_framing(w, f) == apply_move(f, ArcParityTwist{j1, j2}));
  }
}
