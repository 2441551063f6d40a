#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hypgrp {

  // Three families, one per CLI exit code: bad input (2), a violated
  // invariant or assertion (1), an exhausted search budget (3).
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InputError : public Error {
   public:
    using Error::Error;
  };

  class InvariantError : public Error {
   public:
    using Error::Error;
  };

  class BudgetError : public Error {
   public:
    using Error::Error;
  };

  class UnknownSymbol : public InputError {
   public:
    explicit UnknownSymbol(std::size_t position)
        : InputError("unknown symbol at position " + std::to_string(position)),
          position_(position) {}
    [[nodiscard]] std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
  };

  class InvalidAlphabet : public InputError {
   public:
    explicit InvalidAlphabet(std::string const& why)
        : InputError("invalid alphabet: " + why) {}
  };

  class RelatorOutOfAlphabet : public InputError {
   public:
    explicit RelatorOutOfAlphabet(std::size_t index)
        : InputError("relator " + std::to_string(index)
                     + " uses a symbol outside the alphabet"),
          index_(index) {}
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

   private:
    std::size_t index_;
  };

  class AlphabetMismatch : public InputError {
   public:
    AlphabetMismatch() : InputError("word is not over the oracle's alphabet") {}
  };

  class InvalidOracle : public InputError {
   public:
    explicit InvalidOracle(std::string const& why)
        : InputError("oracle strategy rejected: " + why) {}
  };

  class NotTrivial : public InputError {
   public:
    NotTrivial() : InputError("word is not trivial in the presented group") {}
  };

  class NotIrreducible : public InputError {
   public:
    NotIrreducible() : InputError("word is not freely reduced") {}
  };

  class DegenerateGrid : public InputError {
   public:
    explicit DegenerateGrid(std::string const& why)
        : InputError("degenerate radius grid: " + why) {}
  };

  class DepthMismatch : public InputError {
   public:
    DepthMismatch() : InputError("boundary points have different depths") {}
  };

  class NotGenerating : public InputError {
   public:
    explicit NotGenerating(std::size_t cap)
        : InputError("new generators do not reach the audited ball within "
                     + std::to_string(cap) + " steps"),
          cap_(cap) {}
    [[nodiscard]] std::size_t cap() const noexcept { return cap_; }

   private:
    std::size_t cap_;
  };

  class OracleInconclusive : public InputError {
   public:
    explicit OracleInconclusive(std::string const& word)
        : InputError("oracle returned Unknown for word '" + word + "'"),
          word_(word) {}
    [[nodiscard]] std::string const& word() const noexcept { return word_; }

   private:
    std::string word_;
  };

  class InvariantViolation : public InvariantError {
   public:
    using InvariantError::InvariantError;
  };

  class AssertionFailure : public InvariantError {
   public:
    using InvariantError::InvariantError;
  };

  class TooLarge : public BudgetError {
   public:
    TooLarge(std::string const& what, std::size_t limit)
        : BudgetError(what + " exceeds limit " + std::to_string(limit)),
          limit_(limit) {}
    [[nodiscard]] std::size_t limit() const noexcept { return limit_; }

   private:
    std::size_t limit_;
  };

  class BallTooLarge : public TooLarge {
   public:
    explicit BallTooLarge(std::size_t limit) : TooLarge("Cayley ball", limit) {}
  };

  class CapExceeded : public BudgetError {
   public:
    explicit CapExceeded(std::size_t cap)
        : BudgetError("no path found within " + std::to_string(cap) + " steps"),
          cap_(cap) {}
    [[nodiscard]] std::size_t cap() const noexcept { return cap_; }

   private:
    std::size_t cap_;
  };

  // Raised by the area search. Every level below lower_bound() has been
  // refuted exhaustively, so A(w) >= lower_bound() is still a certified fact.
  class BudgetExceeded : public BudgetError {
   public:
    BudgetExceeded(std::string const&          why,
                   std::size_t                 lower_bound,
                   std::optional<std::size_t> upper_bound = std::nullopt)
        : BudgetError("area search budget exhausted: " + why),
          lower_bound_(lower_bound),
          upper_bound_(upper_bound) {}
    [[nodiscard]] std::size_t lower_bound() const noexcept {
      return lower_bound_;
    }
    [[nodiscard]] std::optional<std::size_t> upper_bound() const noexcept {
      return upper_bound_;
    }

   private:
    std::size_t                 lower_bound_;
    std::optional<std::size_t> upper_bound_;
  };

}  // namespace hypgrp
