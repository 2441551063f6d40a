#include "hypgrp/cayley.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "hypgrp/errors.hpp"

namespace hypgrp {

  namespace {

    Word append(Word const& w, Letter x) {
      std::vector<Letter> out(w.begin(), w.end());
      out.push_back(x);
      return Word(std::move(out));
    }

    // Deduplicating store of group elements.
    class ElementIndex {
     public:
      explicit ElementIndex(TrivialityOracle const& oracle)
          : oracle_(oracle), canonical_(oracle.has_canonical_form()) {}

      // Representative used for storage and comparison.
      [[nodiscard]] Word representative(Word const& w) const {
        return canonical_ ? *oracle_.canonical_form(w) : w;
      }

      [[nodiscard]] std::optional<std::size_t> find(Word const& rep) const {
        if (canonical_) {
          auto it = by_form_.find(rep);
          if (it == by_form_.end()) {
            return std::nullopt;
          }
          return it->second;
        }
        for (std::size_t i = 0; i < elements_.size(); ++i) {
          switch (oracle_.elements_equal(rep, elements_[i])) {
            case Verdict::Trivial:
              return i;
            case Verdict::Unknown:
              throw OracleInconclusive(
                  oracle_.format(concat(rep, invert(elements_[i]))));
            case Verdict::Nontrivial:
              break;
          }
        }
        return std::nullopt;
      }

      std::size_t insert(Word rep) {
        std::size_t const i = elements_.size();
        if (canonical_) {
          by_form_.emplace(rep, i);
        }
        elements_.push_back(std::move(rep));
        return i;
      }

      [[nodiscard]] std::vector<Word> const& elements() const noexcept {
        return elements_;
      }
      [[nodiscard]] std::vector<Word> take() { return std::move(elements_); }

     private:
      TrivialityOracle const&                         oracle_;
      bool                                            canonical_;
      std::unordered_map<Word, std::size_t, WordHash> by_form_;
      std::vector<Word>                               elements_;
    };

    bool equal_elements(TrivialityOracle const& oracle,
                        Word const&             x,
                        Word const&             y) {
      Verdict const v = oracle.elements_equal(x, y);
      if (v == Verdict::Unknown) {
        throw OracleInconclusive(oracle.format(concat(x, invert(y))));
      }
      return v == Verdict::Trivial;
    }

  }  // namespace

  CayleyBall build_ball(TrivialityOracle const& oracle,
                        std::size_t             radius,
                        std::size_t             limit) {
    std::size_t const letters = 2 * oracle.presentation().rank();
    ElementIndex      index(oracle);
    CayleyBall        ball;
    ball.radius = radius;
    ball.center = index.representative(Word{});
    index.insert(ball.center);
    ball.distances.push_back(0);

    std::size_t level_begin = 0;
    for (std::size_t d = 0; d < radius; ++d) {
      std::size_t const level_end = index.elements().size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (std::size_t k = 0; k < letters; ++k) {
          Word rep = index.representative(
              append(index.elements()[i], Letter::from_rank(k)));
          if (!index.find(rep)) {
            if (index.elements().size() >= limit) {
              throw BallTooLarge(limit);
            }
            index.insert(std::move(rep));
            ball.distances.push_back(d + 1);
          }
        }
      }
      if (level_end == index.elements().size()) {
        break;
      }
      level_begin = level_end;
    }

    ball.adjacency.resize(index.elements().size());
    for (std::size_t i = 0; i < index.elements().size(); ++i) {
      for (std::size_t k = 0; k < letters; ++k) {
        auto j = index.find(index.representative(
            append(index.elements()[i], Letter::from_rank(k))));
        if (j) {
          ball.adjacency[i].push_back(*j);
        }
      }
      auto& adj = ball.adjacency[i];
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    ball.elements = index.take();
    return ball;
  }

  bool is_path(TrivialityOracle const& oracle, std::span<Word const> path) {
    std::size_t const letters = 2 * oracle.presentation().rank();
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      bool adjacent = false;
      for (std::size_t k = 0; k < letters && !adjacent; ++k) {
        adjacent = equal_elements(
            oracle, path[j + 1], append(path[j], Letter::from_rank(k)));
      }
      if (!adjacent) {
        return false;
      }
    }
    return true;
  }

  std::size_t distance(TrivialityOracle const& oracle,
                       Word const&             from,
                       Word const&             to,
                       std::size_t             cap) {
    std::size_t const letters = 2 * oracle.presentation().rank();
    ElementIndex      index(oracle);
    Word const        target = index.representative(to);
    auto reached = [&](Word const& rep) {
      return oracle.has_canonical_form() ? rep == target
                                         : equal_elements(oracle, rep, target);
    };
    Word start = index.representative(from);
    if (reached(start)) {
      return 0;
    }
    index.insert(std::move(start));
    std::size_t level_begin = 0;
    for (std::size_t d = 1; d <= cap; ++d) {
      std::size_t const level_end = index.elements().size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (std::size_t k = 0; k < letters; ++k) {
          Word rep = index.representative(
              append(index.elements()[i], Letter::from_rank(k)));
          if (index.find(rep)) {
            continue;
          }
          if (reached(rep)) {
            return d;
          }
          index.insert(std::move(rep));
        }
      }
      level_begin = level_end;
    }
    throw CapExceeded(cap);
  }

  LeftInvarianceReport
  check_left_invariance(TrivialityOracle const&                oracle,
                        Word const&                            delta,
                        std::span<std::pair<Word, Word> const> pairs,
                        std::size_t                            cap) {
    LeftInvarianceReport report;
    report.delta = delta;
    for (auto const& [phi, psi] : pairs) {
      LeftInvarianceEntry e{phi, psi, distance(oracle, phi, psi, cap),
                            distance(oracle, concat(delta, phi),
                                     concat(delta, psi), cap)};
      if (e.before != e.after) {
        ++report.violations;
      }
      report.entries.push_back(std::move(e));
    }
    return report;
  }

  Comparability compare_generating_sets(TrivialityOracle const& oracle,
                                        std::span<Word const>   generators,
                                        std::size_t             radius,
                                        std::size_t             cap) {
    for (Word const& g : generators) {
      if (!over_rank(g, oracle.presentation().rank())) {
        throw AlphabetMismatch();
      }
      switch (oracle.is_trivial(g)) {
        case Verdict::Trivial:
          throw InputError("generator '" + oracle.format(g)
                           + "' is the identity");
        case Verdict::Unknown:
          throw OracleInconclusive(oracle.format(g));
        case Verdict::Nontrivial:
          break;
      }
    }
    std::vector<Word> steps;
    for (Word const& g : generators) {
      steps.push_back(g);
      steps.push_back(invert(g));
    }

    CayleyBall const ball = build_ball(oracle, radius);
    // Differences φ⁻¹ψ lie in the ball of twice the radius, which supplies
    // the old distances directly.
    CayleyBall const wide = build_ball(oracle, 2 * radius);
    ElementIndex     old_index(oracle);
    for (Word const& e : wide.elements) {
      old_index.insert(e);
    }

    std::vector<std::size_t> differences;
    for (Word const& phi : ball.elements) {
      for (Word const& psi : ball.elements) {
        auto const j = old_index.find(
            old_index.representative(concat(invert(phi), psi)));
        if (!j) {
          throw InvariantViolation("difference of ball elements left the "
                                   "doubled ball");
        }
        if (*j != 0) {
          differences.push_back(*j);
        }
      }
    }

    // Breadth-first search with the new generators over the wide ball's
    // element set, which contains every difference.
    std::vector<std::size_t> new_depth(wide.size(), SIZE_MAX);
    new_depth[0] = 0;
    std::vector<bool> wanted(wide.size(), false);
    for (std::size_t j : differences) {
      wanted[j] = true;
    }
    auto pending = static_cast<std::size_t>(
        std::count(wanted.begin(), wanted.end(), true));
    ElementIndex new_index(oracle);
    new_index.insert(new_index.representative(Word{}));
    std::size_t level_begin = 0;
    for (std::size_t d = 1; d <= cap && pending > 0; ++d) {
      std::size_t const level_end = new_index.elements().size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (Word const& s : steps) {
          Word rep = new_index.representative(
              concat(new_index.elements()[i], s));
          if (new_index.find(rep)) {
            continue;
          }
          if (auto j = old_index.find(rep); j && new_depth[*j] == SIZE_MAX) {
            new_depth[*j] = d;
            if (wanted[*j]) {
              --pending;
            }
          }
          if (new_index.elements().size() >= kDefaultBallLimit) {
            throw BallTooLarge(kDefaultBallLimit);
          }
          new_index.insert(std::move(rep));
        }
      }
      if (level_end == new_index.elements().size()) {
        break;
      }
      level_begin = level_end;
    }
    if (pending > 0) {
      throw NotGenerating(cap);
    }

    Comparability result{Ratio(0), Ratio(0), 0, Word{}, Word{}};
    for (std::size_t j : differences) {
      auto const d_old = static_cast<std::int64_t>(wide.distances[j]);
      auto const d_new = static_cast<std::int64_t>(new_depth[j]);
      ++result.pairs;
      if (Ratio const r1(d_new, d_old); r1 > result.lambda1) {
        result.lambda1         = r1;
        result.lambda1_witness = wide.elements[j];
      }
      if (Ratio const r2(d_old, d_new); r2 > result.lambda2) {
        result.lambda2         = r2;
        result.lambda2_witness = wide.elements[j];
      }
    }
    return result;
  }

  WordMetric::WordMetric(TrivialityOracle const& oracle, std::size_t radius)
      : oracle_(&oracle) {
    if (!oracle.has_canonical_form()) {
      throw InvalidOracle("cached word metric needs canonical forms");
    }
    ball_ = build_ball(oracle, radius);
    for (std::size_t i = 0; i < ball_.size(); ++i) {
      norms_.emplace(ball_.elements[i], ball_.distances[i]);
    }
  }

  std::size_t WordMetric::norm(Word const& g) const {
    auto it = norms_.find(*oracle_->canonical_form(g));
    if (it == norms_.end()) {
      throw CapExceeded(ball_.radius);
    }
    return it->second;
  }

}  // namespace hypgrp
