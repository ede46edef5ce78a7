#include <doctest.h>

#include <tuple>
#include <utility>

#include "cluster.hpp"
#include "oracles.hpp"

using namespace arq;

TEST_CASE("vertex counts match the orbit enumeration and closed forms") {
  for (auto [f, lo, hi] : {std::tuple{Family::A, 1, 6},
                           std::tuple{Family::D, 4, 6},
                           std::tuple{Family::E, 6, 8}}) {
    for (int rank = lo; rank <= hi; ++rank)
      for (int u = 1; u <= 3; ++u) {
        CAPTURE(family_letter(f));
        CAPTURE(rank);
        CAPTURE(u);
        auto q = cluster_quiver(f, rank, u);
        CHECK(q.size() == arqtest::expected_cluster_size(f, rank, u));
        auto d = DynkinDiagram::make(f, rank);
        CHECK(q.size() == arqtest::brute_orbit_count(d, phi(d, u)));
        CHECK(q.meta().connected);
        CHECK(q.meta().mesh_checked);
        CHECK(q.meta().family == f);
        CHECK(q.meta().level == u);
      }
  }
}

TEST_CASE("spot sizes") {
  CHECK(cluster_quiver(Family::A, 3, 1).size() == 9);
  CHECK(cluster_quiver(Family::A, 3, 2).size() == 15);
  CHECK(cluster_quiver(Family::A, 1, 3).size() == 4);
  CHECK(cluster_quiver(Family::D, 4, 1).size() == 16);
  CHECK(cluster_quiver(Family::D, 5, 1).size() == 25);
  CHECK(cluster_quiver(Family::D, 5, 2).size() == 45);
  CHECK(cluster_quiver(Family::E, 6, 3).size() == 114);
  CHECK(cluster_quiver(Family::E, 7, 2).size() == 133);
}

TEST_CASE("shapes, periods and twists") {
  auto shape = [](Family f, int rank, int u) { return cluster_shape(f, rank, u); };

  // A1 never twists: every diagram automorphism is trivial
  CHECK(shape(Family::A, 1, 3).twist == Twist::None);
  CHECK(shape(Family::A, 1, 3).period == 4);
  CHECK(shape(Family::A, 1, 3).pairing == 1);

  CHECK(shape(Family::A, 3, 1).twist == Twist::Reflect);
  CHECK(shape(Family::A, 3, 1).period == 6);
  CHECK(shape(Family::A, 3, 1).pairing == 2);

  CHECK(shape(Family::A, 3, 2).twist == Twist::None);
  CHECK(shape(Family::A, 3, 2).period == 5);

  CHECK(shape(Family::D, 4, 1).twist == Twist::None);
  CHECK(shape(Family::D, 4, 1).period == 4);
  CHECK(shape(Family::D, 5, 1).twist == Twist::SwapExceptional);
  CHECK(shape(Family::D, 5, 1).period == 10);
  CHECK(shape(Family::D, 5, 1).pairing == 2);
  CHECK(shape(Family::D, 5, 2).twist == Twist::None);
  CHECK(shape(Family::D, 5, 2).period == 9);

  CHECK(shape(Family::E, 6, 3).twist == Twist::Reflect);
  CHECK(shape(Family::E, 6, 3).period == 38);
  CHECK(shape(Family::E, 6, 4).twist == Twist::None);
  CHECK(shape(Family::E, 7, 2).period == 19);
  CHECK(shape(Family::E, 8, 1).period == 16);

  CHECK(std::string(twist_name(Twist::SwapExceptional)) == "swap_exceptional");
}

TEST_CASE("classification agrees with the declared shape") {
  for (auto [f, lo, hi] : {std::tuple{Family::A, 1, 5},
                           std::tuple{Family::D, 4, 6},
                           std::tuple{Family::E, 6, 8}}) {
    for (int rank = lo; rank <= hi; ++rank)
      for (int u = 1; u <= 3; ++u) {
        CAPTURE(family_letter(f));
        CAPTURE(rank);
        CAPTURE(u);
        auto q = cluster_quiver(f, rank, u);
        auto rep = shape_classify(q);
        auto want = cluster_shape(f, rank, u);
        CHECK(rep.band_width == rank);
        CHECK(rep.period == want.period);
        CHECK(rep.pairing == want.pairing);
        CHECK(rep.twist == want.twist);
      }
  }

  // D exceptional orbits: one long orbit when u and rank are both odd,
  // otherwise two of full period
  auto d51 = shape_classify(cluster_quiver(Family::D, 5, 1));
  CHECK(d51.exceptional_orbit_lengths == std::vector<long>{10});
  auto d52 = shape_classify(cluster_quiver(Family::D, 5, 2));
  CHECK(d52.exceptional_orbit_lengths == std::vector<long>{9, 9});
  auto d41 = shape_classify(cluster_quiver(Family::D, 4, 1));
  CHECK(d41.exceptional_orbit_lengths == std::vector<long>{4, 4});
}

TEST_CASE("tau-orbit counts in type A") {
  // u odd folds rows into mirror pairs; u even keeps one orbit per row
  for (int n = 1; n <= 6; ++n)
    for (int u = 1; u <= 4; ++u) {
      CAPTURE(n);
      CAPTURE(u);
      auto orbits = tau_orbits(cluster_quiver(Family::A, n, u));
      CHECK((int)orbits.size() == (u % 2 ? (n + 1) / 2 : n));
    }
}

TEST_CASE("the E7 identification is a plain translation") {
  auto e7 = DynkinDiagram::make(Family::E, 7);
  for (int u = 1; u <= 3; ++u) {
    CHECK(phi(e7, u) == AffineAut::translation(e7, 9 * u + 1));
    CHECK(same_presentation(
        cluster_quiver(Family::E, 7, u),
        orbit_quiver(e7, AffineAut::translation(e7, 9 * u + 1))));
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(cluster_quiver(Family::A, 0, 1), Error);
  CHECK_THROWS_AS(cluster_quiver(Family::A, 3, 0), Error);
  CHECK_THROWS_AS(cluster_quiver(Family::E, 9, 1), Error);
}
