#pragma once

// Finite quasimetric spaces: point clouds with a distance matrix, and the
// constants that describe them.
//
// Balls are open, B(x, r) = {y : d(x, y) < r}, everywhere in this module.
// Covers use centers drawn from the cloud and are built farthest-first: the
// first center is given, each next center is the uncovered point farthest
// from the centers chosen so far, ties going to the lower index.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypgrp/execution.hpp"

namespace hypgrp {

  class PointCloud {
   public:
    PointCloud() = default;
    // `dist` is row-major n×n. Throws InvariantViolation unless the matrix
    // is finite, symmetric, zero exactly on the diagonal, and the weights
    // (when given) are positive.
    PointCloud(std::size_t                             n,
               std::vector<double>                     dist,
               std::optional<std::vector<double>>      weights = std::nullopt,
               std::optional<std::vector<std::string>> labels  = std::nullopt);

    // d(i, j) = |x_i - x_j|.
    static PointCloud line(std::span<double const> coordinates);
    // The integers 0 .. n-1 on the line.
    static PointCloud integer_line(std::size_t n);
    // width × height integer grid with the L¹ metric.
    static PointCloud grid_l1(std::size_t width, std::size_t height);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double      operator()(std::size_t i, std::size_t j) const {
      return dist_[i * n_ + j];
    }
    [[nodiscard]] std::span<double const> matrix() const noexcept {
      return dist_;
    }
    [[nodiscard]] std::span<double const> row(std::size_t i) const {
      return std::span<double const>(dist_).subspan(i * n_, n_);
    }
    [[nodiscard]] bool has_weights() const noexcept {
      return weights_.has_value();
    }
    // Point weights, or the counting measure when none were given.
    [[nodiscard]] std::vector<double> measure() const;
    [[nodiscard]] std::optional<std::vector<double>> const&
    weights() const noexcept {
      return weights_;
    }
    [[nodiscard]] std::optional<std::vector<std::string>> const&
    labels() const noexcept {
      return labels_;
    }

    [[nodiscard]] double diameter() const noexcept;
    // Smallest nonzero distance; 0 for a single point.
    [[nodiscard]] double min_gap() const noexcept;

    [[nodiscard]] PointCloud with_weights(std::vector<double> weights) const;

   private:
    std::size_t                             n_ = 0;
    std::vector<double>                     dist_;
    std::optional<std::vector<double>>      weights_;
    std::optional<std::vector<std::string>> labels_;
  };

  struct QuasimetricConstant {
    double value = 1.0;
    // True when the cloud has no triple with y ∉ {x, z}.
    bool degenerate = false;
    // Triple attaining the maximum (when value > 1).
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t z = 0;
  };

  // Least C >= 1 with d(x,z) <= C (d(x,y) + d(y,z)) on every triple.
  [[nodiscard]] QuasimetricConstant
  quasimetric_constant(PointCloud const& c,
                       Execution         execution = Execution::Parallel);

  // Triangle inequality up to a relative tolerance absorbing the rounding
  // of sums computed in floating point.
  [[nodiscard]] bool is_metric(PointCloud const& c, double tolerance = 1e-12);

  // d(x,z) <= max(d(x,y), d(y,z)) on every triple, up to `tolerance`.
  [[nodiscard]] bool is_ultrametric(PointCloud const& c,
                                    double            tolerance = 1e-12);

  // Pointwise d^a; weights and labels carry over.
  [[nodiscard]] PointCloud snowflake(PointCloud const& c, double a);

  struct Metrization {
    PointCloud rho;
    double     epsilon = 1.0;
    double     delta   = 1.0;  // 1 / epsilon
    // Least C' with C'^-1 rho^delta <= d <= C' rho^delta on every pair.
    double     c_prime = 1.0;
  };

  // rho = least chain sums of d^epsilon. With no epsilon, uses
  // epsilon = log 2 / log(2C) for the quasimetric constant C.
  [[nodiscard]] Metrization
  chain_metrize(PointCloud const&     c,
                std::optional<double> epsilon   = std::nullopt,
                Execution             execution = Execution::Parallel);

  // Re-checks the two-sided comparison on every pair, allowing a relative
  // slack of `tolerance`.
  [[nodiscard]] bool comparable(PointCloud const& d,
                                PointCloud const& rho,
                                double            c_prime,
                                double            delta,
                                double            tolerance = 1e-12);

  // Least L with |f(x) - f(y)| <= L d(x,y). Needs at least two points.
  [[nodiscard]] double lipschitz_constant(PointCloud const&       c,
                                          std::span<double const> f);

  [[nodiscard]] std::vector<std::size_t> open_ball(PointCloud const& c,
                                                   std::size_t       x,
                                                   double            r);

  // Farthest-first cover of `targets` by open balls of `radius`; returns the
  // centers in the order chosen. `first` must be one of the targets.
  [[nodiscard]] std::vector<std::size_t>
  greedy_cover(PointCloud const&            c,
               std::span<std::size_t const> targets,
               double                       radius,
               std::size_t                  first);

  struct RadiusCover {
    double                   radius = 0.0;
    std::size_t              count  = 1;  // worst cover count at this radius
    std::size_t              center = 0;  // ball center attaining it
    std::vector<std::size_t> cover;       // the half-radius centers used
  };

  struct CoverReport {
    std::vector<double>      radii;
    std::vector<RadiusCover> per_radius;
    std::size_t              constant = 1;  // C1 estimate
  };

  // Covers every B(x, r) by balls of radius r/2, then re-verifies that each
  // cover contains its ball (InvariantViolation otherwise).
  [[nodiscard]] CoverReport
  doubling_constant_estimate(PointCloud const&       c,
                             std::span<double const> radii,
                             Execution execution = Execution::Parallel);

  struct IterateCheck {
    std::size_t x      = 0;
    double      radius = 0.0;
    std::size_t levels = 0;
    std::size_t count  = 1;
    double      bound  = 1.0;  // C1^levels
  };

  // Covers B(x, r) by balls of radius 2^-levels r through repeated halving
  // and asserts the count is at most c1^levels (AssertionFailure if not).
  IterateCheck doubling_iterate_check(PointCloud const& c,
                                      std::size_t       x,
                                      double            r,
                                      std::size_t       levels,
                                      std::size_t       c1);

  struct MeasureDoubling {
    double      c2     = 1.0;
    std::size_t x      = 0;
    double      radius = 0.0;
  };

  // max μ(B(x, 2r)) / μ(B(x, r)) over points and grid radii, with μ the
  // cloud's weights (counting measure when it has none).
  [[nodiscard]] MeasureDoubling
  measure_doubling_check(PointCloud const&       c,
                         std::span<double const> radii,
                         Execution execution = Execution::Parallel);

  struct DimensionFit {
    std::vector<double>      radii;
    std::vector<std::size_t> counts;
    double                   slope     = 0.0;
    double                   intercept = 0.0;
    double                   residual  = 0.0;  // RMS of the fit
  };

  // Least-squares slope of log N(r) against log(1/r), N(r) the size of the
  // farthest-first cover by radius-r balls started at point 0. Throws
  // DegenerateGrid unless there are >= 3 radii spanning >= 2 octaves.
  [[nodiscard]] DimensionFit boxcount_dimension(PointCloud const&       c,
                                                std::span<double const> radii);

  struct RadiusGrid {
    std::vector<double>      radii;
    std::vector<std::string> warnings;
  };

  // Drops radii above the diameter or below the smallest gap, with a
  // warning for each.
  [[nodiscard]] RadiusGrid clip_radii(PointCloud const&       c,
                                      std::span<double const> radii);

  // diam · 2^-k for k = 1 .. octaves, clipped. octaves = 0 continues down to
  // the smallest gap.
  [[nodiscard]] RadiusGrid dyadic_radii(PointCloud const& c,
                                        std::size_t       octaves = 0);

}  // namespace hypgrp
