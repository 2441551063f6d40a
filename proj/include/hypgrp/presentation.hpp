#pragma once

// Finitely presented groups and word-problem oracles.
//
// A TrivialityOracle answers "does this word represent the identity?" with
// a three-valued verdict. Trivial and Nontrivial are always correct for the
// presented group; Unknown is only produced by the budgeted rewriting
// strategy, and callers must treat it as a hard stop.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypgrp/word.hpp"

namespace hypgrp {

  struct Presentation {
    Alphabet          alphabet;
    std::vector<Word> relators;

    [[nodiscard]] std::size_t rank() const noexcept { return alphabet.rank(); }
  };

  // Parses every relator text over `generators`; a relator that fails to
  // parse raises RelatorOutOfAlphabet with its index.
  [[nodiscard]] Presentation
  make_presentation(std::string_view                generators,
                    std::vector<std::string> const& relators);

  struct PresentationCheck {
    // Indices of zero-length relators. They are legal (the free group is
    // presented by the empty relator) but contribute nothing to any search.
    std::vector<std::size_t> empty_relators;
  };

  // Throws InvalidAlphabet or RelatorOutOfAlphabet. A relator that freely
  // reduces to a single letter would make a generator the identity, which
  // the generating-set convention forbids; that is reported as
  // InvalidAlphabet.
  PresentationCheck validate_presentation(Presentation const& p);

  enum class Verdict { Trivial, Nontrivial, Unknown };

  [[nodiscard]] std::string_view to_string(Verdict v) noexcept;

  struct FreeReduction {};

  struct ExponentSum {
    // One entry per generator; 0 means infinite order.
    std::vector<std::int64_t> moduli;
  };

  struct BoundedRewrite {
    std::size_t length_cap = 12;
    std::size_t step_cap   = 10000;
  };

  using OracleStrategy = std::variant<FreeReduction, ExponentSum, BoundedRewrite>;

  [[nodiscard]] std::string strategy_name(OracleStrategy const& s);

  class TrivialityOracle {
   public:
    // Validates the presentation and the strategy's scope; throws
    // InvalidOracle when the strategy would not be sound for `p`.
    TrivialityOracle(Presentation p, OracleStrategy strategy);

    [[nodiscard]] Presentation const& presentation() const noexcept {
      return presentation_;
    }
    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return presentation_.alphabet;
    }
    [[nodiscard]] OracleStrategy const& strategy() const noexcept {
      return strategy_;
    }
    [[nodiscard]] bool has_canonical_form() const noexcept {
      return !std::holds_alternative<BoundedRewrite>(strategy_);
    }

    [[nodiscard]] Verdict is_trivial(Word const& w) const;
    [[nodiscard]] Verdict elements_equal(Word const& w1, Word const& w2) const;
    // nullopt for BoundedRewrite, which has no normal form.
    [[nodiscard]] std::optional<Word> canonical_form(Word const& w) const;

    [[nodiscard]] std::string format(Word const& w) const {
      return to_string(w, presentation_.alphabet);
    }

   private:
    void    check_alphabet(Word const& w) const;
    Verdict rewrite_closure(Word const& w, BoundedRewrite const& caps) const;

    Presentation   presentation_;
    OracleStrategy strategy_;
  };

  // Picks the strongest sound strategy: FreeReduction when all relators are
  // empty, ExponentSum when the relators are commutators of generator pairs
  // and pure powers making the group abelian, BoundedRewrite otherwise.
  [[nodiscard]] TrivialityOracle make_oracle(Presentation p);

  // Moduli implied by the pure-power relators (gcd of their exponents), or
  // nullopt when the relators do not present an abelian group this way.
  [[nodiscard]] std::optional<std::vector<std::int64_t>>
  abelian_moduli(Presentation const& p);

  // Presentation file:
  //   # comment
  //   gens: ab
  //   rel: abAB
  //   oracle: exponent a=0 b=0     (optional; also "free", "rewrite 12 10000")
  struct PresentationFile {
    Presentation                  presentation;
    std::optional<OracleStrategy> strategy;
  };

  [[nodiscard]] PresentationFile parse_presentation(std::string_view text);
  [[nodiscard]] PresentationFile load_presentation(std::string const& path);
  [[nodiscard]] TrivialityOracle make_oracle(PresentationFile file);

}  // namespace hypgrp
