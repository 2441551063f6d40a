#pragma once

// Finite-depth models of the boundary at infinity of the free group F_k.
//
// A depth-n point is a freely reduced word of length n, standing for the
// cylinder of all infinite reduced words extending it. The visual distance
// between distinct points is exp(-ε p) with p the length of their common
// prefix, an ultrametric for every ε > 0.

#include <cstddef>
#include <vector>

#include "hypgrp/quasimetric.hpp"
#include "hypgrp/word.hpp"

namespace hypgrp {

  inline constexpr std::size_t kDefaultBoundaryLimit = 20'000;

  struct BoundaryApprox {
    std::size_t       rank  = 1;
    std::size_t       depth = 1;
    std::vector<Word> points;  // lexicographic order
  };

  // 2k (2k-1)^(n-1), saturating at SIZE_MAX.
  [[nodiscard]] std::size_t boundary_point_count(std::size_t k, std::size_t n);

  // Throws InputError for k = 0, n = 0 or k > 26, and TooLarge when the
  // point count exceeds `limit`.
  [[nodiscard]] BoundaryApprox boundary_approx(std::size_t k,
                                               std::size_t n,
                                               std::size_t limit
                                               = kDefaultBoundaryLimit);

  // Throws DepthMismatch unless both words have the same length.
  [[nodiscard]] std::size_t common_prefix(Word const& xi, Word const& eta);

  class VisualQuasimetric {
   public:
    // Throws InputError unless epsilon > 0.
    explicit VisualQuasimetric(double epsilon);

    [[nodiscard]] double epsilon() const noexcept { return epsilon_; }
    [[nodiscard]] double operator()(Word const& xi, Word const& eta) const;

   private:
    double epsilon_;
  };

  // Uniform weights 1/N and the words as labels.
  [[nodiscard]] PointCloud boundary_cloud(BoundaryApprox const&    b,
                                          VisualQuasimetric const& v,
                                          Execution execution
                                          = Execution::Parallel);

  enum class BoundaryClass { Elementary, NonElementary };

  [[nodiscard]] char const* to_string(BoundaryClass c) noexcept;

  // F_1 = Z has two boundary points at every depth, F_k for k >= 2 has at
  // least 2k >= 4 already at depth 1.
  [[nodiscard]] BoundaryClass elementary_check(std::size_t k);

}  // namespace hypgrp
