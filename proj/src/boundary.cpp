#include "hypgrp/boundary.hpp"

#include <cmath>
#include <limits>

#include "hypgrp/errors.hpp"

namespace hypgrp {

  std::size_t boundary_point_count(std::size_t k, std::size_t n) {
    if (k == 0 || n == 0) {
      return 0;
    }
    std::size_t const max   = std::numeric_limits<std::size_t>::max();
    std::size_t       count = 2 * k;
    for (std::size_t i = 1; i < n; ++i) {
      if (count > max / (2 * k - 1)) {
        return max;
      }
      count *= 2 * k - 1;
    }
    return count;
  }

  BoundaryApprox boundary_approx(std::size_t k, std::size_t n,
                                 std::size_t limit) {
    if (k == 0 || k > 26) {
      throw InputError("boundary rank must be between 1 and 26");
    }
    if (n == 0) {
      throw InputError("boundary depth must be at least 1");
    }
    if (boundary_point_count(k, n) > limit) {
      throw TooLarge("boundary point count", limit);
    }
    BoundaryApprox b{k, n, {}};
    b.points.reserve(boundary_point_count(k, n));
    for_each_reduced_word(k, n, [&](Word const& w) {
      b.points.push_back(w);
      return true;
    });
    return b;
  }

  std::size_t common_prefix(Word const& xi, Word const& eta) {
    if (xi.size() != eta.size()) {
      throw DepthMismatch();
    }
    std::size_t p = 0;
    while (p < xi.size() && xi[p] == eta[p]) {
      ++p;
    }
    return p;
  }

  VisualQuasimetric::VisualQuasimetric(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
      throw InputError("visual parameter epsilon must be positive");
    }
  }

  double VisualQuasimetric::operator()(Word const& xi, Word const& eta) const {
    std::size_t const p = common_prefix(xi, eta);
    if (p == xi.size()) {
      return 0.0;
    }
    return std::exp(-epsilon_ * static_cast<double>(p));
  }

  PointCloud boundary_cloud(BoundaryApprox const&    b,
                            VisualQuasimetric const& v,
                            Execution                execution) {
    std::size_t const   n = b.points.size();
    std::vector<double> d(n * n, 0.0);
    for_each_index(execution, n, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = v(b.points[i], b.points[j]);
      }
    });
    Alphabet const           alphabet = Alphabet::first_letters(b.rank);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (Word const& w : b.points) {
      labels.push_back(to_string(w, alphabet));
    }
    return PointCloud(n, std::move(d),
                      std::vector<double>(n, 1.0 / static_cast<double>(n)),
                      std::move(labels));
  }

  char const* to_string(BoundaryClass c) noexcept {
    return c == BoundaryClass::Elementary ? "Elementary" : "NonElementary";
  }

  BoundaryClass elementary_check(std::size_t k) {
    if (k == 0) {
      throw InputError("rank must be at least 1");
    }
    bool const two_points = boundary_point_count(k, 1) <= 2
                            && boundary_point_count(k, 2) <= 2;
    return two_points ? BoundaryClass::Elementary
                      : BoundaryClass::NonElementary;
  }

}  // namespace hypgrp
