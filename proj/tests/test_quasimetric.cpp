#include <doctest.h>

#include <cmath>
#include <random>

#include "hypgrp/cloud_io.hpp"
#include "hypgrp/errors.hpp"
#include "hypgrp/kernels.hpp"
#include "hypgrp/quasimetric.hpp"
#include "oracles.hpp"

using namespace hypgrp;

namespace {
  PointCloud squared_line(std::size_t n) {
    return snowflake(PointCloud::integer_line(n), 2.0);
  }

  // Quasimetric constant over all ordered triples, straight from the
  // definition.
  double brute_constant(PointCloud const& c) {
    double best = 1.0;
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = 0; y < c.size(); ++y) {
        for (std::size_t z = 0; z < c.size(); ++z) {
          if (y == x || y == z || x == z) {
            continue;
          }
          best = std::max(best, c(x, z) / (c(x, y) + c(y, z)));
        }
      }
    }
    return best;
  }

  PointCloud random_metric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    std::vector<double>                    d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        d[i * n + j] = d[j * n + i] = 0.5 + coord(rng);
      }
    }
    kernels::min_plus_closure_serial(d, n);
    return PointCloud(n, std::move(d));
  }
}  // namespace

TEST_CASE("point cloud invariants") {
  CHECK_THROWS_AS(PointCloud(2, {0, 1, 2, 0}), InvariantViolation);
  CHECK_THROWS_AS(PointCloud(2, {1, 1, 1, 0}), InvariantViolation);
  CHECK_THROWS_AS(PointCloud(2, {0, 0, 0, 0}), InvariantViolation);
  CHECK_THROWS_AS(PointCloud(2, {0, -1, -1, 0}), InvariantViolation);
  CHECK_THROWS_AS(PointCloud(2, {0, NAN, NAN, 0}), InvariantViolation);
  CHECK_THROWS_AS(PointCloud(2, {0, 1, 1, 0}, std::vector<double>{1, 0}),
                  InvariantViolation);
  CHECK_THROWS_AS(PointCloud(0, {}), InvariantViolation);
  PointCloud const c = PointCloud::integer_line(5);
  CHECK(c.diameter() == 4.0);
  CHECK(c.min_gap() == 1.0);
  CHECK(PointCloud::grid_l1(3, 3)(0, 8) == 4.0);
}

TEST_CASE("quasimetric constant") {
  CHECK(quasimetric_constant(PointCloud::integer_line(3)).value == 1.0);
  auto const sq = quasimetric_constant(squared_line(3));
  CHECK(sq.value == 2.0);
  CHECK(sq.x == 0);
  CHECK(sq.y == 1);
  CHECK(sq.z == 2);
  CHECK(quasimetric_constant(PointCloud::integer_line(1)).value == 1.0);
  CHECK(quasimetric_constant(PointCloud::integer_line(1)).degenerate);
  CHECK(quasimetric_constant(squared_line(9)).value == 2.0);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    PointCloud const c = snowflake(random_metric(rng, 12), 1.0 + trial);
    CHECK(quasimetric_constant(c).value == doctest::Approx(brute_constant(c)));
  }
}

TEST_CASE("is_metric") {
  CHECK(is_metric(PointCloud::integer_line(10)));
  CHECK_FALSE(is_metric(squared_line(3)));
  CHECK(is_metric(PointCloud(2, {0, 5, 5, 0})));
  CHECK(is_ultrametric(PointCloud(3, {0, 1, 1, 1, 0, 1, 1, 1, 0})));
  CHECK_FALSE(is_ultrametric(PointCloud::integer_line(3)));
}

TEST_CASE("snowflake") {
  PointCloud const line = PointCloud::integer_line(9);
  PointCloud const same = snowflake(line, 1.0);
  CHECK(std::equal(same.matrix().begin(), same.matrix().end(),
                   line.matrix().begin()));
  CHECK(is_metric(snowflake(line, 0.5)));
  CHECK_THROWS_AS((void) snowflake(line, 0.0), InputError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    PointCloud const c = random_metric(rng, 10);
    for (double a : {0.25, 0.5, 0.9}) {
      CHECK(is_metric(snowflake(c, a)));
    }
    for (double a : {1.5, 3.0}) {
      CHECK(std::isfinite(quasimetric_constant(snowflake(c, a)).value));
    }
  }
}

TEST_CASE("chain metrization") {
  PointCloud const line = PointCloud::integer_line(9);
  auto const       id   = chain_metrize(line, 1.0);
  CHECK(id.c_prime == 1.0);
  CHECK(std::equal(id.rho.matrix().begin(), id.rho.matrix().end(),
                   line.matrix().begin()));

  auto const m = chain_metrize(squared_line(9), 0.5);
  CHECK(m.delta == 2.0);
  CHECK(m.c_prime == 1.0);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(m.rho(i, j) == std::abs(double(i) - double(j)));
    }
  }
  CHECK(comparable(squared_line(9), m.rho, m.c_prime, m.delta));

  auto const automatic = chain_metrize(squared_line(9));
  CHECK(automatic.epsilon == doctest::Approx(std::log(2.0) / std::log(4.0)));
  CHECK(automatic.c_prime == doctest::Approx(1.0));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    PointCloud const c = snowflake(random_metric(rng, 10), 1.0 + trial * 0.3);
    auto const       r = chain_metrize(c);
    CHECK(is_metric(r.rho));
    CHECK(comparable(c, r.rho, r.c_prime, r.delta));
    CHECK_FALSE(comparable(c, r.rho, r.c_prime * 0.5, r.delta));
  }
  CHECK_THROWS_AS((void) chain_metrize(line, -1.0), InputError);
}

TEST_CASE("lipschitz constant") {
  PointCloud const line = PointCloud::integer_line(5);
  std::vector<double> const flat(5, 3.0);
  CHECK(lipschitz_constant(line, flat) == 0.0);

  PointCloud const     sq = squared_line(3);
  std::vector<double> f0{sq(0, 0), sq(0, 1), sq(0, 2)};
  CHECK(lipschitz_constant(sq, f0) == 3.0);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    PointCloud const c = random_metric(rng, 15);
    for (std::size_t p = 0; p < c.size(); ++p) {
      auto const row = c.row(p);
      CHECK(lipschitz_constant(c, row) <= 1.0 + 1e-12);
    }
  }
  CHECK_THROWS_AS((void) lipschitz_constant(PointCloud::integer_line(1),
                                            std::vector<double>{0.0}),
                  InvariantViolation);
  CHECK_THROWS_AS((void) lipschitz_constant(line, std::vector<double>{1.0}),
                  InputError);
}

TEST_CASE("greedy cover") {
  PointCloud const         line = PointCloud::integer_line(10);
  std::vector<std::size_t> all(10);
  std::iota(all.begin(), all.end(), std::size_t{0});
  auto const centers = greedy_cover(line, all, 2.0, 0);
  CHECK(centers == std::vector<std::size_t>{0, 9, 4, 2, 6});
  std::vector<std::int64_t> pts(10);
  std::iota(pts.begin(), pts.end(), 0);
  for (double r : {1.0, 1.5, 2.0, 3.0, 4.5}) {
    CHECK(greedy_cover(line, all, r, 0).size()
          == oracle::line_cover(pts, r, 0));
  }
  CHECK(open_ball(line, 4, 2.0) == std::vector<std::size_t>{3, 4, 5});
}

TEST_CASE("doubling constant") {
  CHECK(doubling_constant_estimate(PointCloud::integer_line(1),
                                   std::vector<double>{1.0, 2.0})
            .constant
        == 1);

  PointCloud const line  = PointCloud::integer_line(64);
  auto const       radii = dyadic_radii(line, 0);
  auto const       est   = doubling_constant_estimate(line, radii.radii);
  CHECK(est.constant <= 3);
  for (auto const& rc : est.per_radius) {
    CHECK(rc.count >= 1);
    for (std::size_t y : open_ball(line, rc.center, rc.radius)) {
      CHECK(std::any_of(rc.cover.begin(), rc.cover.end(), [&](std::size_t z) {
        return line(z, y) < rc.radius / 2.0;
      }));
    }
  }

  std::vector<double> const dyadic{1, 2, 4, 8, 16, 32};
  CHECK(doubling_constant_estimate(line, dyadic).constant <= 3);
  // Farthest-first on the L1 grid needs 12 half-balls at r = 4 and r = 8.
  auto const grid = doubling_constant_estimate(PointCloud::grid_l1(16, 16),
                                               dyadic);
  CHECK(grid.constant == oracle::grid_doubling(16, dyadic));
  CHECK(grid.constant == 12);
}

TEST_CASE("iterated doubling") {
  PointCloud const line  = PointCloud::integer_line(64);
  auto const       check = doubling_iterate_check(line, 31, 32.0, 3, 3);
  CHECK(check.count <= 27);
  CHECK(doubling_iterate_check(PointCloud::integer_line(1), 0, 5.0, 4, 1)
            .count
        == 1);
  CHECK_THROWS_AS((void) doubling_iterate_check(line, 31, 32.0, 3, 1),
                  AssertionFailure);
  auto const one = doubling_iterate_check(line, 10, 8.0, 1, 3);
  auto const ball = open_ball(line, 10, 8.0);
  CHECK(one.count == greedy_cover(line, ball, 4.0, 10).size());
}

TEST_CASE("measure doubling") {
  PointCloud const          line = PointCloud::integer_line(64);
  std::vector<double> const dyadic{1, 2, 4, 8, 16, 32};
  auto const                m = measure_doubling_check(line, dyadic);
  CHECK(m.c2 == 3.0);
  CHECK(m.radius == 1.0);

  double brute = 1.0;
  for (double r : dyadic) {
    for (int x = 0; x < 64; ++x) {
      int inner = 0;
      int outer = 0;
      for (int y = 0; y < 64; ++y) {
        inner += std::abs(x - y) < r;
        outer += std::abs(x - y) < 2 * r;
      }
      brute = std::max(brute, double(outer) / inner);
    }
  }
  CHECK(m.c2 == brute);

  CHECK(measure_doubling_check(PointCloud::integer_line(1),
                               std::vector<double>{1.0})
            .c2
        == 1.0);
  auto const doubled
      = measure_doubling_check(line.with_weights(std::vector<double>(64, 2.0)),
                               dyadic);
  CHECK(doubled.c2 == m.c2);
  CHECK(doubling_constant_estimate(line, dyadic).constant < 64);
}

TEST_CASE("box-count dimension") {
  PointCloud const line  = PointCloud::integer_line(256);
  auto const       radii = dyadic_radii(line, 6);
  CHECK(radii.radii.size() == 6);
  auto const fit = boxcount_dimension(line, radii.radii);
  CHECK(fit.slope == doctest::Approx(1.0).epsilon(0.15));

  PointCloud const snow  = snowflake(line, 2.0);
  auto const       full  = dyadic_radii(snow, 0);
  auto const       sfit  = boxcount_dimension(snow, full.radii);
  auto const       lfit  = boxcount_dimension(line, dyadic_radii(line).radii);
  CHECK(std::abs(sfit.slope - 0.5) <= 0.1);
  CHECK(std::abs(sfit.slope / lfit.slope - 0.5) <= 0.05);

  std::vector<double> const unit{1.0, 0.5, 0.25};
  CHECK(boxcount_dimension(PointCloud::integer_line(1), unit).slope == 0.0);
  CHECK_THROWS_AS((void) boxcount_dimension(line, std::vector<double>{1, 2}),
                  DegenerateGrid);
  CHECK_THROWS_AS(
      (void) boxcount_dimension(line, std::vector<double>{1, 1.5, 3}),
      DegenerateGrid);
}

TEST_CASE("radius grids") {
  PointCloud const line = PointCloud::integer_line(256);
  auto const       full = dyadic_radii(line);
  CHECK(full.radii.size() == 7);
  CHECK(full.warnings.empty());
  auto const clipped = dyadic_radii(line, 10);
  CHECK(clipped.radii.size() == 7);
  CHECK(clipped.warnings.size() == 3);
  auto const c = clip_radii(line, std::vector<double>{300, 10, 0.5});
  CHECK(c.radii == std::vector<double>{10});
  CHECK(c.warnings.size() == 2);
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    PointCloud const c = snowflake(random_metric(rng, 40), 1.7);
    auto const       m = c.matrix();
    auto const       a = kernels::triangle_ratio_serial(m, c.size());
    auto const       b = kernels::triangle_ratio_parallel(m, c.size());
    CHECK(a.ratio == b.ratio);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.z == b.z);
    auto const u = kernels::ultrametric_excess_serial(m, c.size());
    auto const v = kernels::ultrametric_excess_parallel(m, c.size());
    CHECK(u.excess == v.excess);
    CHECK(u.y == v.y);

    std::vector<double> d1(m.begin(), m.end());
    std::vector<double> d2(m.begin(), m.end());
    kernels::min_plus_closure_serial(d1, c.size());
    kernels::min_plus_closure_parallel(d2, c.size());
    CHECK(d1 == d2);

    std::vector<double> const radii{0.5, 1, 2, 4, 8};
    auto const w  = c.measure();
    auto const s1 = kernels::mass_doubling_serial(m, c.size(), w, radii);
    auto const s2 = kernels::mass_doubling_parallel(m, c.size(), w, radii);
    CHECK(s1.ratio == s2.ratio);
    CHECK(s1.x == s2.x);
    CHECK(s1.radius == s2.radius);

    auto const e1 = doubling_constant_estimate(c, radii, Execution::Serial);
    auto const e2 = doubling_constant_estimate(c, radii, Execution::Parallel);
    CHECK(e1.constant == e2.constant);
    for (std::size_t i = 0; i < radii.size(); ++i) {
      CHECK(e1.per_radius[i].center == e2.per_radius[i].center);
      CHECK(e1.per_radius[i].cover == e2.per_radius[i].cover);
    }
  }
}

TEST_CASE("cloud files") {
  auto const j = parse_cloud_json(
      R"({"lower": [[0], [1, 0], [4, 1, 0]], "weights": [1, 2, 3],
          "labels": ["x", "y", "z"]})");
  CHECK(j.size() == 3);
  CHECK(j(0, 2) == 4.0);
  CHECK(j(2, 0) == 4.0);
  CHECK((*j.weights())[1] == 2.0);
  CHECK((*j.labels())[2] == "z");

  auto const m = parse_cloud_json(R"({"matrix": [[0, 2], [2, 0]]})");
  CHECK(m(0, 1) == 2.0);
  CHECK_THROWS_AS((void) parse_cloud_json(R"({"matrix": [[0, 2], [3, 0]]})"),
                  InvariantViolation);
  CHECK_THROWS_AS((void) parse_cloud_json(R"({"matrix": [[0, 2]]})"),
                  InputError);
  CHECK_THROWS_AS((void) parse_cloud_json("{"), InputError);
  CHECK_THROWS_AS((void) parse_cloud_json(R"({"points": []})"), InputError);

  auto const csv = parse_cloud_csv(
      "# three points\n0\n1,0\n4, 1, 0\nweights: 1,2,3\nlabels: x,y,z\n");
  CHECK(csv(2, 0) == 4.0);
  CHECK((*csv.labels())[0] == "x");
  CHECK_THROWS_AS((void) parse_cloud_csv("0\n1\n"), InputError);
  CHECK_THROWS_AS((void) parse_cloud_csv("0\n1,x\n"), InputError);
  CHECK_THROWS_AS((void) parse_cloud_csv("# nothing\n"), InputError);

  std::ostringstream out;
  write_cloud_csv(out, j);
  auto const back = parse_cloud_csv(out.str());
  CHECK(std::equal(back.matrix().begin(), back.matrix().end(),
                   j.matrix().begin()));
  CHECK(back.labels() == j.labels());
  auto const again = cloud_from_json(cloud_to_json(j));
  CHECK(again.weights() == j.weights());
}
