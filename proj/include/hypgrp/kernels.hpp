#pragma once

// Dense distance-matrix kernels. Each has a serial reference and an OpenMP
// version; the parallel versions reduce per-row partial results in row
// order, so both return bit-identical values and identical witnesses.
//
// Matrices are row-major n×n spans.

#include <cstddef>
#include <span>

#include "hypgrp/execution.hpp"

namespace hypgrp::kernels {

  struct TripleMax {
    double      ratio = 0.0;  // d(x,z) / (d(x,y) + d(y,z))
    std::size_t x     = 0;
    std::size_t y     = 0;
    std::size_t z     = 0;
  };

  // Maximum over triples with x < z and y ∉ {x, z}; ties keep the first
  // triple in (x, z, y) order.
  TripleMax triangle_ratio_serial(std::span<double const> d, std::size_t n);
  TripleMax triangle_ratio_parallel(std::span<double const> d, std::size_t n);

  struct UltrametricMax {
    double      excess = 0.0;  // d(x,z) - max(d(x,y), d(y,z))
    std::size_t x      = 0;
    std::size_t y      = 0;
    std::size_t z      = 0;
  };

  UltrametricMax ultrametric_excess_serial(std::span<double const> d,
                                           std::size_t             n);
  UltrametricMax ultrametric_excess_parallel(std::span<double const> d,
                                             std::size_t             n);

  // All-pairs shortest chains (Floyd–Warshall), in place.
  void min_plus_closure_serial(std::span<double> d, std::size_t n);
  void min_plus_closure_parallel(std::span<double> d, std::size_t n);

  struct MassRatio {
    double      ratio  = 1.0;  // μ(B(x,2r)) / μ(B(x,r))
    std::size_t x      = 0;
    std::size_t radius = 0;    // index into the radius list
  };

  // Open balls; ties keep the smallest (radius index, x).
  MassRatio mass_doubling_serial(std::span<double const> d,
                                 std::size_t             n,
                                 std::span<double const> weights,
                                 std::span<double const> radii);
  MassRatio mass_doubling_parallel(std::span<double const> d,
                                   std::size_t             n,
                                   std::span<double const> weights,
                                   std::span<double const> radii);

  inline TripleMax triangle_ratio(Execution               e,
                                  std::span<double const> d,
                                  std::size_t             n) {
    return e == Execution::Parallel ? triangle_ratio_parallel(d, n)
                                    : triangle_ratio_serial(d, n);
  }

  inline UltrametricMax ultrametric_excess(Execution               e,
                                           std::span<double const> d,
                                           std::size_t             n) {
    return e == Execution::Parallel ? ultrametric_excess_parallel(d, n)
                                    : ultrametric_excess_serial(d, n);
  }

  inline void min_plus_closure(Execution e, std::span<double> d, std::size_t n) {
    if (e == Execution::Parallel) {
      min_plus_closure_parallel(d, n);
    } else {
      min_plus_closure_serial(d, n);
    }
  }

  inline MassRatio mass_doubling(Execution               e,
                                 std::span<double const> d,
                                 std::size_t             n,
                                 std::span<double const> weights,
                                 std::span<double const> radii) {
    return e == Execution::Parallel
               ? mass_doubling_parallel(d, n, weights, radii)
               : mass_doubling_serial(d, n, weights, radii);
  }

}  // namespace hypgrp::kernels
