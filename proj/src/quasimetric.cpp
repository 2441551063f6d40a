#include "hypgrp/quasimetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "hypgrp/errors.hpp"
#include "hypgrp/kernels.hpp"

namespace hypgrp {

  namespace {

    std::string pair_text(std::size_t i, std::size_t j) {
      return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
    }

    std::string radius_text(double r) {
      std::ostringstream out;
      out.precision(17);
      out << r;
      return out.str();
    }

    bool covered(PointCloud const&               c,
                 std::size_t                     y,
                 std::vector<std::size_t> const& centers,
                 double                          radius) {
      return std::any_of(centers.begin(), centers.end(), [&](std::size_t z) {
        return c(z, y) < radius;
      });
    }

  }  // namespace

  PointCloud::PointCloud(std::size_t                             n,
                         std::vector<double>                     dist,
                         std::optional<std::vector<double>>      weights,
                         std::optional<std::vector<std::string>> labels)
      : n_(n),
        dist_(std::move(dist)),
        weights_(std::move(weights)),
        labels_(std::move(labels)) {
    if (n_ == 0) {
      throw InvariantViolation("point cloud has no points");
    }
    if (dist_.size() != n_ * n_) {
      throw InvariantViolation("distance matrix is not " + std::to_string(n_)
                               + "x" + std::to_string(n_));
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if ((*this)(i, i) != 0.0) {
        throw InvariantViolation("nonzero diagonal at point "
                                 + std::to_string(i));
      }
      for (std::size_t j = i + 1; j < n_; ++j) {
        double const d = (*this)(i, j);
        if (!std::isfinite(d)) {
          throw InvariantViolation("non-finite distance at " + pair_text(i, j));
        }
        if (d != (*this)(j, i)) {
          throw InvariantViolation("asymmetric distance at " + pair_text(i, j));
        }
        if (!(d > 0.0)) {
          throw InvariantViolation("zero or negative distance at "
                                   + pair_text(i, j));
        }
      }
    }
    if (weights_) {
      if (weights_->size() != n_) {
        throw InvariantViolation("weight vector has the wrong length");
      }
      for (double w : *weights_) {
        if (!std::isfinite(w) || !(w > 0.0)) {
          throw InvariantViolation("weights must be positive and finite");
        }
      }
    }
    if (labels_ && labels_->size() != n_) {
      throw InvariantViolation("label vector has the wrong length");
    }
  }

  PointCloud PointCloud::line(std::span<double const> coordinates) {
    std::size_t const   n = coordinates.size();
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::abs(coordinates[i] - coordinates[j]);
      }
    }
    return PointCloud(n, std::move(d));
  }

  PointCloud PointCloud::integer_line(std::size_t n) {
    std::vector<double> x(n);
    std::iota(x.begin(), x.end(), 0.0);
    return line(x);
  }

  PointCloud PointCloud::grid_l1(std::size_t width, std::size_t height) {
    std::size_t const   n = width * height;
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const dx = std::abs(static_cast<double>(i % width)
                                 - static_cast<double>(j % width));
        auto const dy = std::abs(static_cast<double>(i / width)
                                 - static_cast<double>(j / width));
        d[i * n + j]  = dx + dy;
      }
    }
    return PointCloud(n, std::move(d));
  }

  std::vector<double> PointCloud::measure() const {
    return weights_ ? *weights_ : std::vector<double>(n_, 1.0);
  }

  double PointCloud::diameter() const noexcept {
    return dist_.empty() ? 0.0 : *std::max_element(dist_.begin(), dist_.end());
  }

  double PointCloud::min_gap() const noexcept {
    double gap = std::numeric_limits<double>::infinity();
    for (double d : dist_) {
      if (d > 0.0 && d < gap) {
        gap = d;
      }
    }
    return std::isfinite(gap) ? gap : 0.0;
  }

  PointCloud PointCloud::with_weights(std::vector<double> weights) const {
    return PointCloud(n_, dist_, std::move(weights), labels_);
  }

  QuasimetricConstant quasimetric_constant(PointCloud const& c,
                                           Execution         execution) {
    QuasimetricConstant result;
    if (c.size() <= 2) {
      result.degenerate = true;
      return result;
    }
    auto const best = kernels::triangle_ratio(execution, c.matrix(), c.size());
    if (best.ratio > 1.0) {
      result = {best.ratio, false, best.x, best.y, best.z};
    }
    return result;
  }

  bool is_metric(PointCloud const& c, double tolerance) {
    return quasimetric_constant(c, Execution::Serial).value <= 1.0 + tolerance;
  }

  bool is_ultrametric(PointCloud const& c, double tolerance) {
    if (c.size() <= 2) {
      return true;
    }
    auto const worst
        = kernels::ultrametric_excess_serial(c.matrix(), c.size());
    return worst.excess <= tolerance * c.diameter();
  }

  PointCloud snowflake(PointCloud const& c, double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw InputError("snowflake exponent must be positive");
    }
    std::vector<double> d(c.matrix().begin(), c.matrix().end());
    if (a != 1.0) {
      for (double& x : d) {
        x = std::pow(x, a);
      }
    }
    return PointCloud(c.size(), std::move(d), c.weights(), c.labels());
  }

  Metrization chain_metrize(PointCloud const&     c,
                            std::optional<double> epsilon,
                            Execution             execution) {
    double eps = 1.0;
    if (epsilon) {
      if (!(*epsilon > 0.0) || !std::isfinite(*epsilon)) {
        throw InputError("chain metrization exponent must be positive");
      }
      eps = *epsilon;
    } else {
      double const q = quasimetric_constant(c, execution).value;
      eps            = std::log(2.0) / std::log(2.0 * q);
    }
    std::size_t const   n = c.size();
    std::vector<double> rho(c.matrix().begin(), c.matrix().end());
    if (eps != 1.0) {
      for (double& x : rho) {
        x = std::pow(x, eps);
      }
    }
    kernels::min_plus_closure(execution, rho, n);

    Metrization m;
    m.epsilon = eps;
    m.delta   = 1.0 / eps;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double const d = c(i, j);
        double const p = std::pow(rho[i * n + j], m.delta);
        m.c_prime      = std::max({m.c_prime, p / d, d / p});
      }
    }
    m.rho = PointCloud(n, std::move(rho), c.weights(), c.labels());
    return m;
  }

  bool comparable(PointCloud const& d,
                  PointCloud const& rho,
                  double            c_prime,
                  double            delta,
                  double            tolerance) {
    if (d.size() != rho.size()) {
      return false;
    }
    double const slack = 1.0 + tolerance;
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        double const p = std::pow(rho(i, j), delta);
        if (p > c_prime * d(i, j) * slack || d(i, j) > c_prime * p * slack) {
          return false;
        }
      }
    }
    return true;
  }

  double lipschitz_constant(PointCloud const& c, std::span<double const> f) {
    if (c.size() < 2) {
      throw InvariantViolation("Lipschitz constant needs at least two points");
    }
    if (f.size() != c.size()) {
      throw InputError("function has " + std::to_string(f.size())
                       + " values for " + std::to_string(c.size())
                       + " points");
    }
    double L = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        L = std::max(L, std::abs(f[i] - f[j]) / c(i, j));
      }
    }
    return L;
  }

  std::vector<std::size_t> open_ball(PointCloud const& c,
                                     std::size_t       x,
                                     double            r) {
    std::vector<std::size_t> ball;
    for (std::size_t y = 0; y < c.size(); ++y) {
      if (c(x, y) < r) {
        ball.push_back(y);
      }
    }
    return ball;
  }

  std::vector<std::size_t> greedy_cover(PointCloud const&            c,
                                        std::span<std::size_t const> targets,
                                        double                       radius,
                                        std::size_t                  first) {
    std::vector<std::size_t> centers;
    if (targets.empty()) {
      return centers;
    }
    std::vector<double> gap(targets.size(),
                            std::numeric_limits<double>::infinity());
    std::size_t         next = first;
    while (true) {
      centers.push_back(next);
      std::size_t best = targets.size();
      double      far  = -1.0;
      for (std::size_t t = 0; t < targets.size(); ++t) {
        gap[t] = std::min(gap[t], c(next, targets[t]));
        if (gap[t] >= radius && gap[t] > far) {
          far  = gap[t];
          best = t;
        }
      }
      if (best == targets.size()) {
        return centers;
      }
      next = targets[best];
    }
  }

  CoverReport doubling_constant_estimate(PointCloud const&       c,
                                         std::span<double const> radii,
                                         Execution               execution) {
    for (double r : radii) {
      if (!(r > 0.0)) {
        throw InputError("radii must be positive");
      }
    }
    std::size_t const n = c.size();
    struct Cell {
      std::size_t              count = 0;
      std::vector<std::size_t> cover;
    };
    std::vector<Cell> cells(radii.size() * n);
    for_each_index(execution, cells.size(), [&](std::size_t k) {
      double const      r    = radii[k / n];
      std::size_t const x    = k % n;
      auto const        ball = open_ball(c, x, r);
      Cell&             cell = cells[k];
      cell.cover             = greedy_cover(c, ball, r / 2.0, x);
      cell.count             = cell.cover.size();
      for (std::size_t y : ball) {
        if (!covered(c, y, cell.cover, r / 2.0)) {
          throw InvariantViolation("cover of B(" + std::to_string(x) + ", "
                                   + radius_text(r) + ") misses point "
                                   + std::to_string(y));
        }
      }
    });

    CoverReport report;
    report.radii.assign(radii.begin(), radii.end());
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
      RadiusCover worst;
      worst.radius = radii[ri];
      worst.count  = 0;
      for (std::size_t x = 0; x < n; ++x) {
        Cell const& cell = cells[ri * n + x];
        if (cell.count > worst.count) {
          worst.count  = cell.count;
          worst.center = x;
          worst.cover  = cell.cover;
        }
      }
      report.constant = std::max(report.constant, worst.count);
      report.per_radius.push_back(std::move(worst));
    }
    return report;
  }

  IterateCheck doubling_iterate_check(PointCloud const& c,
                                      std::size_t       x,
                                      double            r,
                                      std::size_t       levels,
                                      std::size_t       c1) {
    if (x >= c.size()) {
      throw InputError("point index out of range");
    }
    if (!(r > 0.0) || levels == 0 || c1 == 0) {
      throw InputError("iterate check needs r > 0, l >= 1 and C1 >= 1");
    }
    auto const               ball = open_ball(c, x, r);
    std::vector<std::size_t> centers{x};
    double                   rho = r;
    for (std::size_t level = 0; level < levels; ++level) {
      std::vector<std::size_t> next;
      std::vector<bool>        taken(c.size(), false);
      for (std::size_t z : centers) {
        std::vector<std::size_t> piece;
        for (std::size_t y : ball) {
          if (c(z, y) < rho) {
            piece.push_back(y);
          }
        }
        for (std::size_t w : greedy_cover(c, piece, rho / 2.0, z)) {
          if (!taken[w]) {
            taken[w] = true;
            next.push_back(w);
          }
        }
      }
      centers = std::move(next);
      rho /= 2.0;
    }
    for (std::size_t y : ball) {
      if (!covered(c, y, centers, rho)) {
        throw InvariantViolation("iterated cover misses point "
                                 + std::to_string(y));
      }
    }

    IterateCheck check{x, r, levels, centers.size(),
                       std::pow(static_cast<double>(c1),
                                static_cast<double>(levels))};
    if (static_cast<double>(check.count) > check.bound) {
      throw AssertionFailure(
          "cover of B(" + std::to_string(x) + ", " + radius_text(r) + ") at "
          + std::to_string(levels) + " halvings uses "
          + std::to_string(check.count) + " balls, more than C1^l = "
          + radius_text(check.bound));
    }
    return check;
  }

  MeasureDoubling measure_doubling_check(PointCloud const&       c,
                                         std::span<double const> radii,
                                         Execution               execution) {
    for (double r : radii) {
      if (!(r > 0.0)) {
        throw InputError("radii must be positive");
      }
    }
    if (radii.empty()) {
      return {};
    }
    auto const weights = c.measure();
    auto const best
        = kernels::mass_doubling(execution, c.matrix(), c.size(), weights, radii);
    return {best.ratio, best.x, radii[best.radius]};
  }

  DimensionFit boxcount_dimension(PointCloud const&       c,
                                  std::span<double const> radii) {
    if (radii.size() < 3) {
      throw DegenerateGrid("need at least 3 radii, got "
                           + std::to_string(radii.size()));
    }
    for (double r : radii) {
      if (!(r > 0.0) || !std::isfinite(r)) {
        throw DegenerateGrid("radii must be positive and finite");
      }
    }
    auto const [lo, hi] = std::minmax_element(radii.begin(), radii.end());
    if (*hi < 4.0 * *lo) {
      throw DegenerateGrid("radii span less than 2 octaves");
    }

    std::vector<std::size_t> all(c.size());
    std::iota(all.begin(), all.end(), std::size_t{0});

    DimensionFit fit;
    fit.radii.assign(radii.begin(), radii.end());
    std::vector<double> xs;
    std::vector<double> ys;
    for (double r : radii) {
      std::size_t const count = greedy_cover(c, all, r, 0).size();
      fit.counts.push_back(count);
      xs.push_back(-std::log(r));
      ys.push_back(std::log(static_cast<double>(count)));
    }

    auto const   m  = static_cast<double>(xs.size());
    double const mx = std::accumulate(xs.begin(), xs.end(), 0.0) / m;
    double const my = std::accumulate(ys.begin(), ys.end(), 0.0) / m;
    double       sxx = 0.0;
    double       sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    fit.slope     = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss     = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double const e = ys[i] - (fit.intercept + fit.slope * xs[i]);
      ss += e * e;
    }
    fit.residual = std::sqrt(ss / m);
    return fit;
  }

  RadiusGrid clip_radii(PointCloud const& c, std::span<double const> radii) {
    RadiusGrid   grid;
    double const diam = c.diameter();
    double const gap  = c.min_gap();
    for (double r : radii) {
      if (r > diam) {
        grid.warnings.push_back("radius " + radius_text(r)
                                + " exceeds the diameter "
                                + radius_text(diam) + "; dropped");
      } else if (r < gap) {
        grid.warnings.push_back("radius " + radius_text(r)
                                + " is below the smallest gap "
                                + radius_text(gap) + "; dropped");
      } else {
        grid.radii.push_back(r);
      }
    }
    return grid;
  }

  RadiusGrid dyadic_radii(PointCloud const& c, std::size_t octaves) {
    double const        diam = c.diameter();
    double const        gap  = c.min_gap();
    std::vector<double> radii;
    if (diam > 0.0) {
      for (std::size_t k = 1;; ++k) {
        double const r = std::ldexp(diam, -static_cast<int>(k));
        if (octaves == 0 ? r < gap : k > octaves) {
          break;
        }
        radii.push_back(r);
      }
    }
    return clip_radii(c, radii);
  }

}  // namespace hypgrp
