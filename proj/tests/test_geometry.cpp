#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wedge/geometry.hpp"

using namespace wedge;

namespace {

PhysPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> circle(1, 3);
  if (unit(rng) < 0.1) return PhysPoint::vertex();
  return PhysPoint::on_circle(circle_from_int(circle(rng)), unit(rng));
}

}  // namespace

TEST_CASE("circle ids cycle with period three") {
  for (CircleId c : all_circles()) {
    CHECK(succ(succ(succ(c))) == c);
    CHECK(succ(c) != c);
  }
  CHECK(succ(CircleId::c1) == CircleId::c2);
  CHECK(succ(CircleId::c3) == CircleId::c1);
  CHECK_THROWS_AS(circle_from_int(0), std::invalid_argument);
  CHECK_THROWS_AS(circle_from_int(4), std::invalid_argument);
}

TEST_CASE("construction snaps to the vertex and wraps") {
  CHECK(PhysPoint::on_circle(CircleId::c1, 0.0).is_vertex());
  CHECK(PhysPoint::on_circle(CircleId::c1, 1.0).is_vertex());
  CHECK(PhysPoint::on_circle(CircleId::c1, 1e-12).is_vertex());
  CHECK(PhysPoint::on_circle(CircleId::c1, 1.0 - 1e-12).is_vertex());
  CHECK(PhysPoint::on_circle(CircleId::c2, -0.25).t() == doctest::Approx(0.75));
  CHECK(PhysPoint::on_circle(CircleId::c2, 1.25).t() == doctest::Approx(0.25));
  CHECK_FALSE(PhysPoint::on_circle(CircleId::c1, 0.5).is_vertex());
}

TEST_CASE("gamma distance on given states") {
  const PhysPoint p = PhysPoint::on_circle(CircleId::c1, 0.3);
  CHECK(gamma_distance(p, p) == 0.0);

  // Different circles force the route through the vertex.
  CHECK(gamma_distance(PhysPoint::on_circle(CircleId::c1, 0.25),
                       PhysPoint::on_circle(CircleId::c2, 0.25)) ==
        doctest::Approx(0.5).epsilon(1e-12));

  // Same circle: the shorter of the two arcs, checked by enumerating both.
  const double interior = std::fabs(0.9 - 0.1);
  const double wrapped = 1.0 - interior;
  CHECK(std::min(interior, wrapped) == doctest::Approx(0.2));
  CHECK(gamma_distance(PhysPoint::on_circle(CircleId::c1, 0.1),
                       PhysPoint::on_circle(CircleId::c1, 0.9)) ==
        doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("gamma distance is a metric on random samples") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20000; ++i) {
    const PhysPoint p = random_point(rng);
    const PhysPoint q = random_point(rng);
    const PhysPoint r = random_point(rng);
    const double pq = gamma_distance(p, q);
    CHECK(pq == gamma_distance(q, p));
    CHECK(gamma_distance(p, p) == 0.0);
    CHECK(pq >= 0.0);
    CHECK(pq <= gamma_distance(p, r) + gamma_distance(r, q) + 1e-12);
  }
}

TEST_CASE("moves on circles") {
  const PhysPoint pole2 = move_on_circle(PhysPoint::vertex(), CircleId::c2, 0.5);
  CHECK(pole2.circle() == CircleId::c2);
  CHECK(pole2.t() == 0.5);

  CHECK(move_on_circle(PhysPoint::on_circle(CircleId::c1, 0.5), CircleId::c1, 0.5)
            .is_vertex());

  const PhysPoint wrapped =
      move_on_circle(PhysPoint::on_circle(CircleId::c3, 0.8), CircleId::c3, 0.4);
  CHECK(wrapped.t() == doctest::Approx(0.2).epsilon(1e-12));
  // Oracle: the wrap equals two quarter-steps composed.
  const PhysPoint twice = move_on_circle(
      move_on_circle(PhysPoint::on_circle(CircleId::c3, 0.8), CircleId::c3, 0.2),
      CircleId::c3, 0.2);
  CHECK(gamma_distance(wrapped, twice) < 1e-12);

  CHECK_THROWS_AS(move_on_circle(PhysPoint::on_circle(CircleId::c1, 0.5),
                                 CircleId::c2, 0.1),
                  std::invalid_argument);
}

TEST_CASE("moving forward then back returns to the start") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 20000; ++i) {
    const PhysPoint p = random_point(rng);
    const CircleId c = p.is_vertex() ? CircleId::c2 : p.circle();
    const double d = dist(rng);
    const PhysPoint there = move_on_circle(p, c, d);
    if (there.is_vertex()) continue;  // snap loses the last ulps
    const PhysPoint back = move_on_circle(there, c, -d);
    CHECK(gamma_distance(p, back) < 1e-12);
  }
}

TEST_CASE("antipodes") {
  CHECK(antipode_on(CircleId::c1, PhysPoint::vertex()).t() == 0.5);
  CHECK(antipode_on(CircleId::c2, PhysPoint::on_circle(CircleId::c2, 0.3)).t() ==
        doctest::Approx(0.8).epsilon(1e-12));
  CHECK(antipode_on(CircleId::c3, PhysPoint::on_circle(CircleId::c3, 0.75)).t() ==
        doctest::Approx(0.25).epsilon(1e-12));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    const PhysPoint p = random_point(rng);
    const CircleId c = p.is_vertex() ? CircleId::c1 : p.circle();
    const PhysPoint twice = antipode_on(c, antipode_on(c, p));
    CHECK(gamma_distance(p, twice) < 1e-12);
  }
}

TEST_CASE("every point is within a half circle of vertex and pole") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const PhysPoint p = random_point(rng);
    CHECK(gamma_distance(p, PhysPoint::vertex()) == dist_to_vertex(p));
    CHECK(dist_to_vertex(p) <= 0.5);
    const CircleId c = p.is_vertex() ? CircleId::c1 : p.circle();
    CHECK(gamma_distance(p, PhysPoint::on_circle(c, 0.5)) <= 0.5);
  }
}
