#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wedge/configuration.hpp"

using namespace wedge;

namespace {

Configuration make(CircleId ca, double ta, CircleId cb, double tb) {
  return Configuration(PhysPoint::on_circle(ca, ta), PhysPoint::on_circle(cb, tb));
}

Configuration random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> circle(1, 3);
  while (true) {
    const PhysPoint a = unit(rng) < 0.08
                            ? PhysPoint::vertex()
                            : PhysPoint::on_circle(circle_from_int(circle(rng)), unit(rng));
    const PhysPoint b = unit(rng) < 0.08
                            ? PhysPoint::vertex()
                            : PhysPoint::on_circle(circle_from_int(circle(rng)), unit(rng));
    if (a != b) return Configuration(a, b);
  }
}

}  // namespace

TEST_CASE("the diagonal is excluded at construction") {
  CHECK_THROWS_WITH_AS(Configuration(PhysPoint::vertex(), PhysPoint::vertex()),
                       doctest::Contains("diagonal"), std::invalid_argument);
  CHECK_THROWS_AS(Configuration(PhysPoint::on_circle(CircleId::c2, 0.4),
                                PhysPoint::on_circle(CircleId::c2, 0.4)),
                  std::invalid_argument);
  CHECK_NOTHROW(make(CircleId::c2, 0.4, CircleId::c3, 0.4));
}

TEST_CASE("config distance on given states") {
  const Configuration s = make(CircleId::c1, 0.5, CircleId::c2, 0.5);
  CHECK(config_distance(s, s) == 0.0);
  CHECK(config_distance(make(CircleId::c1, 0.5, CircleId::c2, 0.5),
                        make(CircleId::c1, 0.5, CircleId::c2, 0.6)) ==
        doctest::Approx(0.1).epsilon(1e-12));
  // A crosses the vertex between circles: 0.02 + 0.03.
  CHECK(config_distance(make(CircleId::c1, 0.98, CircleId::c2, 0.5),
                        make(CircleId::c3, 0.03, CircleId::c2, 0.5)) ==
        doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("charts from given states") {
  const Chart square = to_chart(make(CircleId::c1, 0.3, CircleId::c2, 0.7));
  const auto& sq = std::get<SquareChart>(square);
  CHECK(sq.a_circle == CircleId::c1);
  CHECK(sq.b_circle == CircleId::c2);
  CHECK(sq.x == 0.3);
  CHECK(sq.y == 0.7);

  const Chart cyl = to_chart(make(CircleId::c2, 0.2, CircleId::c2, 0.9));
  const auto& cy = std::get<CylinderChart>(cyl);
  CHECK(cy.circle == CircleId::c2);
  CHECK(cy.a == 0.2);
  CHECK(cy.gap == doctest::Approx(0.7).epsilon(1e-12));

  const Chart wrap = to_chart(make(CircleId::c1, 0.9, CircleId::c1, 0.1));
  CHECK(std::get<CylinderChart>(wrap).gap == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("chart round trip is the identity on random configurations") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 100000; ++i) {
    const Configuration s = random_config(rng);
    const Configuration back = from_chart(to_chart(s));
    CHECK(config_distance(s, back) <= kSnapTolerance);
  }
}

TEST_CASE("overlapping chart views agree on vertex states") {
  // A at the vertex, B on circle 2 is a shared state of three labelled
  // charts; all reconstruct the same configuration.
  const Configuration s(PhysPoint::vertex(), PhysPoint::on_circle(CircleId::c2, 0.7));
  const Configuration via_square1 =
      from_chart(SquareChart{CircleId::c1, CircleId::c2, 0.0, 0.7});
  const Configuration via_square3 =
      from_chart(SquareChart{CircleId::c3, CircleId::c2, 1.0, 0.7});
  const Configuration via_cylinder =
      from_chart(CylinderChart{CircleId::c2, 0.0, 0.7});
  CHECK(s == via_square1);
  CHECK(s == via_square3);
  CHECK(s == via_cylinder);
}

TEST_CASE("square corners are unrepresentable") {
  CHECK_THROWS_AS(from_chart(SquareChart{CircleId::c1, CircleId::c2, 0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_chart(SquareChart{CircleId::c1, CircleId::c1, 0.3, 0.4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_chart(CylinderChart{CircleId::c1, 0.3, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("network classification on given states") {
  const NetworkClass cv = classify_network(make(CircleId::c1, 0.5, CircleId::c2, 0.3));
  CHECK(cv.kind == NetworkKind::CrossVertical);
  CHECK(cv.i == CircleId::c1);
  CHECK(cv.j == CircleId::c2);
  CHECK(cv.coord == 0.3);

  const NetworkClass cc = classify_network(make(CircleId::c1, 0.5, CircleId::c3, 0.5));
  CHECK(cc.kind == NetworkKind::CrossCenter);
  CHECK(cc.i == CircleId::c1);
  CHECK(cc.j == CircleId::c3);

  const NetworkClass jh = classify_network(
      Configuration(PhysPoint::vertex(), PhysPoint::on_circle(CircleId::c2, 0.5)));
  CHECK(jh.kind == NetworkKind::JunctionHorizontal);
  CHECK(jh.j == CircleId::c2);

  const NetworkClass diag = classify_network(make(CircleId::c1, 0.2, CircleId::c1, 0.7));
  CHECK(diag.kind == NetworkKind::Diagonal);
  CHECK(diag.i == CircleId::c1);
  CHECK(diag.coord == 0.2);

  const NetworkClass jv = classify_network(
      Configuration(PhysPoint::on_circle(CircleId::c3, 0.5), PhysPoint::vertex()));
  CHECK(jv.kind == NetworkKind::JunctionVertical);
  CHECK(jv.i == CircleId::c3);

  CHECK(classify_network(make(CircleId::c1, 0.2, CircleId::c2, 0.3)).kind ==
        NetworkKind::NotInNetwork);
  // A at a pole but B on the same circle and not antipodal: not a network state.
  CHECK(classify_network(make(CircleId::c1, 0.5, CircleId::c1, 0.8)).kind ==
        NetworkKind::NotInNetwork);
}

TEST_CASE("classification of non-network states survives tiny perturbations") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> sign(0, 1);
  int checked = 0;
  for (int i = 0; i < 50000 && checked < 20000; ++i) {
    const Configuration s = random_config(rng);
    if (classify_network(s).kind != NetworkKind::NotInNetwork) continue;
    if (s.a.is_vertex() || s.b.is_vertex()) continue;
    const double eps = kSnapTolerance / 2.0;
    const Configuration moved(
        move_on_circle(s.a, s.a.circle(), sign(rng) ? eps : -eps),
        move_on_circle(s.b, s.b.circle(), sign(rng) ? eps : -eps));
    CHECK(classify_network(moved).kind == NetworkKind::NotInNetwork);
    ++checked;
  }
  CHECK(checked == 20000);
}
