#pragma once

// Relator-conjugate products and the isoperimetric area A(w).
//
// A product u_1 r_1^{b_1} u_1^{-1} ... u_k r_k^{b_k} u_k^{-1} has two costs:
// the total conjugator length Σ L(u_j) and the relator cost
// Σ |b_j| L(r_j)^e with e = 2 by default. A(w) is the least A bounding both
// costs of some product that freely reduces to w; area() computes it by
// iterative deepening on A and returns the first witness found.
//
// Search rules, all of which preserve A(w) exactly:
//  * conjugators range over freely reduced words (an unreduced conjugator
//    gives the same factor at a higher cost);
//  * exponents are nonzero and empty relators are skipped;
//  * a relator sequence is only expanded into conjugators when it matches
//    the abelian invariants of w: the exponent sum of every generator, and
//    the signed area of w projected onto each generator plane in which all
//    relators are closed loops. Both are additive over factors and
//    independent of the conjugators;
//  * after a prefix of factors the remaining target must be short enough
//    to be produced by the remaining factors.
//
// Order at a fixed level: total conjugator length, then number of factors,
// then relator sequence, then conjugators lexicographically. The search is
// sequential, so witnesses are reproducible.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypgrp/execution.hpp"
#include "hypgrp/presentation.hpp"
#include "hypgrp/ratio.hpp"
#include "hypgrp/word.hpp"

namespace hypgrp {

  struct Factor {
    Word         conjugator;
    std::size_t  relator  = 0;
    std::int64_t exponent = 1;

    bool operator==(Factor const&) const = default;
  };

  struct RelatorProduct {
    std::vector<Factor> factors;

    bool operator==(RelatorProduct const&) const = default;
  };

  // Throws InputError when a factor is out of range, has exponent 0, or
  // its conjugator is not over the alphabet.
  void validate_product(Presentation const& p, RelatorProduct const& rp);

  [[nodiscard]] Word evaluate_product(Presentation const&   p,
                                      RelatorProduct const& rp);

  struct ProductCost {
    std::size_t conjugator_length = 0;
    std::size_t relator_cost      = 0;

    [[nodiscard]] std::size_t max() const noexcept {
      return conjugator_length > relator_cost ? conjugator_length
                                              : relator_cost;
    }
    bool operator==(ProductCost const&) const = default;
  };

  // Costs on the conjugators as given (unreduced) and the stored relators.
  // `weight_exponent` is the power of L(r_j) in the relator cost.
  [[nodiscard]] ProductCost product_cost(Presentation const&   p,
                                         RelatorProduct const& rp,
                                         unsigned weight_exponent = 2);

  struct AreaBudget {
    std::size_t   max_area        = 64;
    std::size_t   max_factors     = 8;
    std::uint64_t max_nodes       = 10'000'000;
    unsigned      weight_exponent = 2;
  };

  struct SearchStats {
    std::uint64_t nodes             = 0;  // conjugator choices evaluated
    std::uint64_t sequences         = 0;  // relator sequences expanded
    std::uint64_t pruned_sequences  = 0;  // rejected by the invariants
    std::size_t   levels            = 0;  // levels of A examined
  };

  struct AreaCertificate {
    std::size_t    value = 0;
    RelatorProduct witness;
    bool           exact = true;
    SearchStats    stats;
  };

  // Throws NotIrreducible, NotTrivial, OracleInconclusive, or
  // BudgetExceeded carrying the certified lower bound.
  [[nodiscard]] AreaCertificate area(TrivialityOracle const& oracle,
                                     Word const&             w,
                                     AreaBudget const&       budget = {});

  struct ScanOptions {
    std::size_t max_length = 8;
    AreaBudget  budget;
    // Keep one word per class of cyclic rotations (off by default).
    bool        cyclic_symmetry = false;
    Execution   execution       = Execution::Parallel;
  };

  struct ScanEntry {
    Word           word;
    std::size_t    length      = 0;
    // Exact area, or the certified lower bound when the budget ran out.
    std::size_t    area        = 0;
    bool           exact       = true;
    Ratio          ratio;
    RelatorProduct witness;
    SearchStats    stats;
  };

  struct ScanReport {
    std::vector<ScanEntry> entries;
    std::vector<Word>      undecided;  // words the oracle could not decide
    std::optional<Ratio>   sup_ratio;  // nullopt when vacuous
    bool                   all_exact  = true;
    std::size_t            candidates = 0;  // irreducible words examined

    [[nodiscard]] bool vacuous() const noexcept { return !sup_ratio; }
  };

  // Areas of every irreducible trivial nonempty word up to max_length, in
  // shortlex order, with the supremum of A(w)/L(w). Inexact entries
  // contribute their lower bound, so sup_ratio is then a lower bound too.
  [[nodiscard]] ScanReport hyperbolicity_scan(TrivialityOracle const& oracle,
                                              ScanOptions const&      options);

  // ∮ x dy of the path traced by w in the (x, y) exponent plane.
  [[nodiscard]] std::int64_t plane_area(Word const& w,
                                        std::size_t x,
                                        std::size_t y);

}  // namespace hypgrp
