#include "hypgrp/kernels.hpp"

#include <algorithm>
#include <vector>

namespace hypgrp::kernels {

  namespace {

    // Best triple with this x, scanning z then y in increasing order.
    TripleMax triangle_row(std::span<double const> d,
                           std::size_t             n,
                           std::size_t             x) {
      TripleMax best;
      for (std::size_t z = x + 1; z < n; ++z) {
        double const dxz = d[x * n + z];
        for (std::size_t y = 0; y < n; ++y) {
          if (y == x || y == z) {
            continue;
          }
          double const r = dxz / (d[x * n + y] + d[y * n + z]);
          if (r > best.ratio) {
            best = {r, x, y, z};
          }
        }
      }
      return best;
    }

    UltrametricMax ultrametric_row(std::span<double const> d,
                                   std::size_t             n,
                                   std::size_t             x) {
      UltrametricMax best;
      for (std::size_t z = x + 1; z < n; ++z) {
        double const dxz = d[x * n + z];
        for (std::size_t y = 0; y < n; ++y) {
          if (y == x || y == z) {
            continue;
          }
          double const e = dxz - std::max(d[x * n + y], d[y * n + z]);
          if (e > best.excess) {
            best = {e, x, y, z};
          }
        }
      }
      return best;
    }

    double ball_mass(std::span<double const> d,
                     std::size_t             n,
                     std::span<double const> weights,
                     std::size_t             x,
                     double                  r) {
      double mass = 0.0;
      for (std::size_t y = 0; y < n; ++y) {
        if (d[x * n + y] < r) {
          mass += weights[y];
        }
      }
      return mass;
    }

    void mass_cell(std::span<double const> d,
                   std::size_t             n,
                   std::span<double const> weights,
                   std::span<double const> radii,
                   std::size_t             x,
                   std::vector<double>&    out) {
      for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        double const inner = ball_mass(d, n, weights, x, radii[ri]);
        double const outer = ball_mass(d, n, weights, x, 2.0 * radii[ri]);
        out[ri * n + x]    = outer / inner;
      }
    }

    MassRatio reduce_mass(std::vector<double> const& cells, std::size_t n,
                          std::size_t radii) {
      MassRatio best;
      best.ratio = 0.0;
      for (std::size_t ri = 0; ri < radii; ++ri) {
        for (std::size_t x = 0; x < n; ++x) {
          if (cells[ri * n + x] > best.ratio) {
            best = {cells[ri * n + x], x, ri};
          }
        }
      }
      if (best.ratio < 1.0) {
        best.ratio = 1.0;
      }
      return best;
    }

    template <typename Row, typename Better>
    auto reduce_rows(std::vector<Row> const& rows, Better better) {
      Row best{};
      for (Row const& r : rows) {
        if (better(r, best)) {
          best = r;
        }
      }
      return best;
    }

  }  // namespace

  TripleMax triangle_ratio_serial(std::span<double const> d, std::size_t n) {
    TripleMax best;
    for (std::size_t x = 0; x < n; ++x) {
      TripleMax const row = triangle_row(d, n, x);
      if (row.ratio > best.ratio) {
        best = row;
      }
    }
    return best;
  }

  TripleMax triangle_ratio_parallel(std::span<double const> d, std::size_t n) {
    std::vector<TripleMax> rows(n);
    auto const             count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t x = 0; x < count; ++x) {
      rows[static_cast<std::size_t>(x)]
          = triangle_row(d, n, static_cast<std::size_t>(x));
    }
    return reduce_rows(rows, [](TripleMax const& a, TripleMax const& b) {
      return a.ratio > b.ratio;
    });
  }

  UltrametricMax ultrametric_excess_serial(std::span<double const> d,
                                           std::size_t             n) {
    UltrametricMax best;
    for (std::size_t x = 0; x < n; ++x) {
      UltrametricMax const row = ultrametric_row(d, n, x);
      if (row.excess > best.excess) {
        best = row;
      }
    }
    return best;
  }

  UltrametricMax ultrametric_excess_parallel(std::span<double const> d,
                                             std::size_t             n) {
    std::vector<UltrametricMax> rows(n);
    auto const                  count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t x = 0; x < count; ++x) {
      rows[static_cast<std::size_t>(x)]
          = ultrametric_row(d, n, static_cast<std::size_t>(x));
    }
    return reduce_rows(rows,
                       [](UltrametricMax const& a, UltrametricMax const& b) {
                         return a.excess > b.excess;
                       });
  }

  void min_plus_closure_serial(std::span<double> d, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        double const dik = d[i * n + k];
        for (std::size_t j = 0; j < n; ++j) {
          double const via = dik + d[k * n + j];
          if (via < d[i * n + j]) {
            d[i * n + j] = via;
          }
        }
      }
    }
  }

  // Row k and column k are fixed during pass k (d[k][k] = 0), so the rows
  // can be relaxed concurrently with the same result as the serial order.
  void min_plus_closure_parallel(std::span<double> d, std::size_t n) {
    auto const count = static_cast<std::ptrdiff_t>(n);
    for (std::size_t k = 0; k < n; ++k) {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t si = 0; si < count; ++si) {
        auto const   i   = static_cast<std::size_t>(si);
        double const dik = d[i * n + k];
        for (std::size_t j = 0; j < n; ++j) {
          double const via = dik + d[k * n + j];
          if (via < d[i * n + j]) {
            d[i * n + j] = via;
          }
        }
      }
    }
  }

  MassRatio mass_doubling_serial(std::span<double const> d,
                                 std::size_t             n,
                                 std::span<double const> weights,
                                 std::span<double const> radii) {
    std::vector<double> cells(radii.size() * n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
      mass_cell(d, n, weights, radii, x, cells);
    }
    return reduce_mass(cells, n, radii.size());
  }

  MassRatio mass_doubling_parallel(std::span<double const> d,
                                   std::size_t             n,
                                   std::span<double const> weights,
                                   std::span<double const> radii) {
    std::vector<double> cells(radii.size() * n, 0.0);
    auto const          count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t x = 0; x < count; ++x) {
      mass_cell(d, n, weights, radii, static_cast<std::size_t>(x), cells);
    }
    return reduce_mass(cells, n, radii.size());
  }

}  // namespace hypgrp::kernels
