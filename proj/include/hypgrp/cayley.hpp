#pragma once

// Balls in the Cayley graph, paths, and the word metric.
//
// Vertices are group elements, represented by words; γ and γα are adjacent
// for every generator-or-inverse α (right multiplication). Element identity
// is decided by the oracle: through canonical forms when the strategy has
// them, otherwise by pairwise elements_equal, in which case any Unknown
// verdict aborts with OracleInconclusive rather than risk merging or
// splitting vertices.

#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypgrp/presentation.hpp"
#include "hypgrp/ratio.hpp"
#include "hypgrp/word.hpp"

namespace hypgrp {

  inline constexpr std::size_t kDefaultBallLimit = 1'000'000;

  struct CayleyBall {
    Word                                  center;
    std::size_t                           radius = 0;
    std::vector<Word>                     elements;
    std::vector<std::size_t>              distances;
    std::vector<std::vector<std::size_t>> adjacency;

    [[nodiscard]] std::size_t size() const noexcept { return elements.size(); }
  };

  // Ball of the given radius about the identity, in BFS order.
  [[nodiscard]] CayleyBall build_ball(TrivialityOracle const& oracle,
                                      std::size_t             radius,
                                      std::size_t limit = kDefaultBallLimit);

  using PathSeq = std::vector<Word>;

  [[nodiscard]] bool is_path(TrivialityOracle const& oracle,
                             std::span<Word const>   path);

  // Breadth-first search from `from` over right multiplications until an
  // element equal to `to` is met. Throws CapExceeded past `cap` steps.
  [[nodiscard]] std::size_t distance(TrivialityOracle const& oracle,
                                     Word const&             from,
                                     Word const&             to,
                                     std::size_t             cap);

  struct LeftInvarianceEntry {
    Word        phi;
    Word        psi;
    std::size_t before = 0;  // d(φ, ψ)
    std::size_t after  = 0;  // d(δφ, δψ)
  };

  struct LeftInvarianceReport {
    Word                             delta;
    std::vector<LeftInvarianceEntry> entries;
    std::size_t                      violations = 0;

    [[nodiscard]] bool ok() const noexcept { return violations == 0; }
  };

  [[nodiscard]] LeftInvarianceReport
  check_left_invariance(TrivialityOracle const&                    oracle,
                        Word const&                                delta,
                        std::span<std::pair<Word, Word> const>     pairs,
                        std::size_t                                cap);

  struct Comparability {
    Ratio       lambda1;  // max d_new / d_old
    Ratio       lambda2;  // max d_old / d_new
    std::size_t pairs = 0;
    // Pairs (as φ⁻¹ψ) attaining each maximum.
    Word lambda1_witness;
    Word lambda2_witness;
  };

  // Compares the word metric of the presentation's generators with the one
  // induced by `generators` (words over the same alphabet), over all pairs
  // of the radius ball. Constants are only claimed on that ball.
  [[nodiscard]] Comparability
  compare_generating_sets(TrivialityOracle const& oracle,
                          std::span<Word const>   generators,
                          std::size_t             radius,
                          std::size_t             cap);

  // Word metric evaluated through left-invariance: d(φ, ψ) = |φ⁻¹ψ|, with
  // norms read from a cached identity ball. Requires canonical forms.
  class WordMetric {
   public:
    WordMetric(TrivialityOracle const& oracle, std::size_t radius);

    // Throws CapExceeded when φ⁻¹ψ lies outside the cached ball.
    [[nodiscard]] std::size_t norm(Word const& g) const;
    [[nodiscard]] std::size_t operator()(Word const& phi,
                                         Word const& psi) const {
      return norm(concat(invert(phi), psi));
    }
    [[nodiscard]] CayleyBall const& ball() const noexcept { return ball_; }

   private:
    TrivialityOracle const*                         oracle_;
    CayleyBall                                      ball_;
    std::unordered_map<Word, std::size_t, WordHash> norms_;
  };

}  // namespace hypgrp
