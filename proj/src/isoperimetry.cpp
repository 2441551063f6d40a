#include "hypgrp/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>

#include "hypgrp/errors.hpp"

namespace hypgrp {

  namespace {

    std::size_t ipow(std::size_t base, unsigned e) {
      std::size_t r = 1;
      for (unsigned i = 0; i < e; ++i) {
        r *= base;
      }
      return r;
    }

    std::size_t abs_size(std::int64_t b) {
      return static_cast<std::size_t>(std::llabs(b));
    }

    struct RelatorData {
      std::size_t               index;   // into Presentation::relators
      Word                      word;
      std::size_t               weight;  // L(r)^e
      std::vector<std::int64_t> invariant;
    };

    struct Step {
      std::size_t  slot;  // into the RelatorData table
      std::int64_t exponent;
    };

    struct Sequence {
      std::vector<Step> steps;
      std::size_t       cost = 0;
    };

    class AreaSearch {
     public:
      AreaSearch(Presentation const& p, Word const& w, AreaBudget const& budget)
          : presentation_(p), target_(w), budget_(budget) {
        std::size_t const n = p.rank();
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = x + 1; y < n; ++y) {
            bool closed = true;
            for (Word const& r : p.relators) {
              auto const e = exponent_sums(r, n);
              closed       = closed && e[x] == 0 && e[y] == 0;
            }
            if (closed) {
              planes_.emplace_back(x, y);
            }
          }
        }
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
          Word const& r = p.relators[i];
          if (r.empty()) {
            continue;
          }
          relators_.push_back(RelatorData{
              i, r, ipow(r.size(), budget.weight_exponent), invariant(r)});
        }
        goal_ = invariant(w);
        rates_.assign(goal_.size(), 0.0);
        for (auto const& r : relators_) {
          for (std::size_t c = 0; c < goal_.size(); ++c) {
            rates_[c] = std::max(
                rates_[c], std::abs(static_cast<double>(r.invariant[c]))
                               / static_cast<double>(r.weight));
          }
        }
      }

      [[nodiscard]] SearchStats const& stats() const noexcept {
        return stats_;
      }

      // Searches the products whose larger cost is exactly `level`; all
      // cheaper products must already have been refuted.
      std::optional<RelatorProduct> try_level(std::size_t level) {
        ++stats_.levels;
        level_ = level;
        std::vector<std::vector<Sequence>> by_length(budget_.max_factors + 1);
        std::vector<Step>                  partial;
        std::vector<std::int64_t>          sums(goal_.size(), 0);
        collect(level, partial, sums, 0, by_length);

        for (std::size_t total = 0; total <= level; ++total) {
          for (std::size_t k = 1; k <= budget_.max_factors; ++k) {
            for (Sequence const& seq : by_length[k]) {
              if (std::max(total, seq.cost) != level) {
                continue;
              }
              if (auto found = expand(seq, total)) {
                return found;
              }
            }
          }
        }
        return std::nullopt;
      }

     private:
      std::vector<std::int64_t> invariant(Word const& w) const {
        auto v = exponent_sums(w, presentation_.rank());
        for (auto [x, y] : planes_) {
          v.push_back(plane_area(w, x, y));
        }
        return v;
      }

      void charge_node() {
        if (++stats_.nodes > budget_.max_nodes) {
          throw BudgetExceeded("node limit "
                                   + std::to_string(budget_.max_nodes),
                               level_);
        }
      }

      // Relator sequences with cost <= budget whose invariant sum can still
      // reach the goal, grouped by length.
      void collect(std::size_t                         budget,
                   std::vector<Step>&                  partial,
                   std::vector<std::int64_t>&          sums,
                   std::size_t                         cost,
                   std::vector<std::vector<Sequence>>& out) {
        std::size_t const remaining = budget - cost;
        for (std::size_t c = 0; c < goal_.size(); ++c) {
          double const gap = std::abs(static_cast<double>(goal_[c] - sums[c]));
          if (gap > rates_[c] * static_cast<double>(remaining) + 1e-9) {
            ++stats_.pruned_sequences;
            return;
          }
        }
        if (!partial.empty() && sums == goal_) {
          out[partial.size()].push_back(Sequence{partial, cost});
        }
        if (partial.size() == budget_.max_factors) {
          return;
        }
        for (std::size_t slot = 0; slot < relators_.size(); ++slot) {
          auto const& r = relators_[slot];
          for (std::int64_t m = 1;
               static_cast<std::size_t>(m) * r.weight <= remaining;
               ++m) {
            for (std::int64_t b : {m, -m}) {
              charge_node();
              partial.push_back(Step{slot, b});
              for (std::size_t c = 0; c < goal_.size(); ++c) {
                sums[c] += b * r.invariant[c];
              }
              collect(budget, partial, sums, cost + abs_size(b) * r.weight,
                      out);
              for (std::size_t c = 0; c < goal_.size(); ++c) {
                sums[c] -= b * r.invariant[c];
              }
              partial.pop_back();
            }
          }
        }
      }

      std::optional<RelatorProduct> expand(Sequence const& seq,
                                           std::size_t     total) {
        ++stats_.sequences;
        std::size_t const k = seq.steps.size();
        powers_.clear();
        inverse_powers_.clear();
        for (Step const& s : seq.steps) {
          Word const& r = relators_[s.slot].word;
          powers_.push_back(free_reduce(power(r, s.exponent)));
          inverse_powers_.push_back(free_reduce(power(r, -s.exponent)));
        }
        // tail_[j] = Σ_{m >= j} |s_m|
        tail_.assign(k + 1, 0);
        for (std::size_t j = k; j-- > 0;) {
          tail_[j] = tail_[j + 1] + powers_[j].size();
        }
        conjugators_.assign(k, Word{});
        std::vector<Letter> goal(target_.begin(), target_.end());
        if (!descend(0, total, goal)) {
          return std::nullopt;
        }
        RelatorProduct rp;
        for (std::size_t j = 0; j < k; ++j) {
          rp.factors.push_back(Factor{conjugators_[j],
                                      relators_[seq.steps[j].slot].index,
                                      seq.steps[j].exponent});
        }
        return rp;
      }

      // The product of factors j.. must reduce to `goal`, using exactly
      // `total` conjugator letters.
      bool descend(std::size_t                j,
                   std::size_t                total,
                   std::vector<Letter> const& goal) {
        std::size_t const k    = powers_.size();
        std::size_t const size = goal.size();
        if (size > 2 * total + tail_[j] || (size + tail_[j]) % 2 != 0) {
          return false;
        }
        std::size_t const rank = presentation_.rank();
        std::vector<Letter> scratch;
        if (j + 1 == k) {
          Word const& s = powers_[j];
          return !for_each_reduced_word(rank, total, [&](Word const& u) {
            charge_node();
            scratch.clear();
            for (Letter x : u) {
              push_reduced(scratch, x);
            }
            for (Letter x : s) {
              push_reduced(scratch, x);
            }
            for (auto it = u.letters().rbegin(); it != u.letters().rend();
                 ++it) {
              push_reduced(scratch, it->inverse());
            }
            if (scratch == goal) {
              conjugators_[j] = u;
              return false;
            }
            return true;
          });
        }
        Word const& s_inv = inverse_powers_[j];
        for (std::size_t length = 0; length <= total; ++length) {
          bool const found
              = !for_each_reduced_word(rank, length, [&](Word const& u) {
                  charge_node();
                  scratch.clear();
                  for (Letter x : u) {
                    push_reduced(scratch, x);
                  }
                  for (Letter x : s_inv) {
                    push_reduced(scratch, x);
                  }
                  for (auto it = u.letters().rbegin();
                       it != u.letters().rend();
                       ++it) {
                    push_reduced(scratch, it->inverse());
                  }
                  for (Letter x : goal) {
                    push_reduced(scratch, x);
                  }
                  if (descend(j + 1, total - length, scratch)) {
                    conjugators_[j] = u;
                    return false;
                  }
                  return true;
                });
          if (found) {
            return true;
          }
        }
        return false;
      }

      Presentation const&                              presentation_;
      Word const&                                      target_;
      AreaBudget const&                                budget_;
      std::vector<std::pair<std::size_t, std::size_t>> planes_;
      std::vector<RelatorData>                         relators_;
      std::vector<std::int64_t>                        goal_;
      std::vector<double>                              rates_;
      SearchStats                                      stats_;
      std::size_t                                      level_ = 0;
      std::vector<Word>                                powers_;
      std::vector<Word>                                inverse_powers_;
      std::vector<std::size_t>                         tail_;
      std::vector<Word>                                conjugators_;
    };

    // Lexicographically least rotation among the freely reduced ones.
    bool is_rotation_representative(Word const& w) {
      std::size_t const n = w.size();
      for (std::size_t shift = 1; shift < n; ++shift) {
        std::vector<Letter> rotated(w.begin() + shift, w.end());
        rotated.insert(rotated.end(), w.begin(), w.begin() + shift);
        Word const r(std::move(rotated));
        if (is_reduced(r) && r < w) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  void validate_product(Presentation const& p, RelatorProduct const& rp) {
    for (std::size_t j = 0; j < rp.factors.size(); ++j) {
      Factor const& f = rp.factors[j];
      if (f.relator >= p.relators.size()) {
        throw InputError("factor " + std::to_string(j)
                         + " names a relator out of range");
      }
      if (f.exponent == 0) {
        throw InputError("factor " + std::to_string(j) + " has exponent 0");
      }
      if (!over_rank(f.conjugator, p.rank())) {
        throw AlphabetMismatch();
      }
    }
  }

  Word evaluate_product(Presentation const& p, RelatorProduct const& rp) {
    validate_product(p, rp);
    std::vector<Letter> out;
    for (Factor const& f : rp.factors) {
      for (Letter x :
           conjugate(f.conjugator, power(p.relators[f.relator], f.exponent))) {
        push_reduced(out, x);
      }
    }
    return Word(std::move(out));
  }

  ProductCost product_cost(Presentation const&   p,
                           RelatorProduct const& rp,
                           unsigned              weight_exponent) {
    validate_product(p, rp);
    ProductCost cost;
    for (Factor const& f : rp.factors) {
      cost.conjugator_length += f.conjugator.size();
      cost.relator_cost
          += abs_size(f.exponent)
             * ipow(p.relators[f.relator].size(), weight_exponent);
    }
    return cost;
  }

  std::int64_t plane_area(Word const& w, std::size_t x, std::size_t y) {
    std::int64_t position = 0;
    std::int64_t area     = 0;
    for (Letter l : w) {
      if (l.generator() == x) {
        position += l.sign();
      } else if (l.generator() == y) {
        area += l.sign() * position;
      }
    }
    return area;
  }

  AreaCertificate area(TrivialityOracle const& oracle,
                       Word const&             w,
                       AreaBudget const&       budget) {
    if (!is_reduced(w)) {
      throw NotIrreducible();
    }
    switch (oracle.is_trivial(w)) {
      case Verdict::Nontrivial:
        throw NotTrivial();
      case Verdict::Unknown:
        throw OracleInconclusive(oracle.format(w));
      case Verdict::Trivial:
        break;
    }
    AreaCertificate cert;
    if (w.empty()) {
      cert.stats.levels = 1;
      return cert;
    }
    AreaSearch search(oracle.presentation(), w, budget);
    for (std::size_t level = 0; level <= budget.max_area; ++level) {
      if (auto found = search.try_level(level)) {
        cert.value   = level;
        cert.witness = std::move(*found);
        cert.stats   = search.stats();
        return cert;
      }
    }
    throw BudgetExceeded("area exceeds " + std::to_string(budget.max_area),
                         budget.max_area + 1);
  }

  ScanReport hyperbolicity_scan(TrivialityOracle const& oracle,
                                ScanOptions const&      options) {
    std::size_t const rank = oracle.presentation().rank();
    std::vector<Word> candidates;
    for (std::size_t length = 1; length <= options.max_length; ++length) {
      (void) for_each_reduced_word(rank, length, [&](Word const& w) {
        if (!options.cyclic_symmetry || is_rotation_representative(w)) {
          candidates.push_back(w);
        }
        return true;
      });
    }

    ScanReport report;
    report.candidates = candidates.size();
    std::vector<Verdict> verdicts(candidates.size());
    for_each_index(options.execution, candidates.size(), [&](std::size_t i) {
      verdicts[i] = oracle.is_trivial(candidates[i]);
    });

    std::vector<Word> trivial;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (verdicts[i] == Verdict::Trivial) {
        trivial.push_back(candidates[i]);
      } else if (verdicts[i] == Verdict::Unknown) {
        report.undecided.push_back(candidates[i]);
      }
    }

    report.entries.resize(trivial.size());
    for_each_index(options.execution, trivial.size(), [&](std::size_t i) {
      ScanEntry& e = report.entries[i];
      e.word       = trivial[i];
      e.length     = trivial[i].size();
      try {
        AreaCertificate cert = area(oracle, trivial[i], options.budget);
        e.area               = cert.value;
        e.witness            = std::move(cert.witness);
        e.stats              = cert.stats;
      } catch (BudgetExceeded const& ex) {
        e.area  = ex.lower_bound();
        e.exact = false;
      }
      e.ratio = Ratio(static_cast<std::int64_t>(e.area),
                      static_cast<std::int64_t>(e.length));
    });

    for (ScanEntry const& e : report.entries) {
      report.all_exact = report.all_exact && e.exact;
      if (!report.sup_ratio || e.ratio > *report.sup_ratio) {
        report.sup_ratio = e.ratio;
      }
    }
    return report;
  }

}  // namespace hypgrp
