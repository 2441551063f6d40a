#pragma once

// Letters, words and the free-group word algebra.
//
// A word is a finite sequence of signed generator letters. In text a
// generator is written as its lowercase symbol and its inverse as the
// corresponding uppercase symbol, so over {a, b} the commutator is "abAB".
// Nothing here reduces implicitly: concatenation, conjugation and powers
// return the literal letter sequence and free_reduce is always explicit.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypgrp {

  class Alphabet {
   public:
    Alphabet() = default;
    // Throws InvalidAlphabet unless symbols are distinct lowercase letters.
    explicit Alphabet(std::string_view symbols);

    // The first `rank` letters a, b, c, ...
    static Alphabet first_letters(std::size_t rank);

    [[nodiscard]] std::size_t rank() const noexcept { return symbols_.size(); }
    [[nodiscard]] char        symbol(std::size_t generator) const {
      return symbols_.at(generator);
    }
    [[nodiscard]] std::string const& symbols() const noexcept {
      return symbols_;
    }

    bool operator==(Alphabet const&) const = default;

   private:
    std::string symbols_;
  };

  // A generator or its inverse, packed as +(g+1) or -(g+1).
  class Letter {
   public:
    constexpr Letter() = default;
    constexpr Letter(std::size_t generator, bool inverse)
        : code_(static_cast<std::int8_t>(
            inverse ? -static_cast<int>(generator + 1)
                    : static_cast<int>(generator + 1))) {}

    [[nodiscard]] constexpr std::size_t generator() const noexcept {
      return static_cast<std::size_t>((code_ < 0 ? -code_ : code_) - 1);
    }
    [[nodiscard]] constexpr bool is_inverse() const noexcept {
      return code_ < 0;
    }
    [[nodiscard]] constexpr int sign() const noexcept {
      return code_ < 0 ? -1 : 1;
    }
    [[nodiscard]] constexpr Letter inverse() const noexcept {
      Letter result;
      result.code_ = static_cast<std::int8_t>(-code_);
      return result;
    }
    // Position in the enumeration order a < A < b < B < ...
    [[nodiscard]] constexpr std::size_t rank() const noexcept {
      return 2 * generator() + (is_inverse() ? 1 : 0);
    }
    [[nodiscard]] static constexpr Letter from_rank(std::size_t rank) {
      return Letter(rank / 2, rank % 2 == 1);
    }
    [[nodiscard]] constexpr std::int8_t code() const noexcept { return code_; }

    constexpr bool operator==(Letter const&) const = default;
    constexpr std::strong_ordering operator<=>(Letter const& that) const {
      return rank() <=> that.rank();
    }

   private:
    std::int8_t code_ = 1;
  };

  [[nodiscard]] constexpr bool cancels(Letter x, Letter y) noexcept {
    return x.code() == -y.code();
  }

  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool        empty() const noexcept { return letters_.empty(); }
    [[nodiscard]] Letter      operator[](std::size_t i) const {
      return letters_[i];
    }
    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return letters_;
    }
    [[nodiscard]] auto begin() const noexcept { return letters_.cbegin(); }
    [[nodiscard]] auto end() const noexcept { return letters_.cend(); }

    bool operator==(Word const&) const = default;
    // Shortlex: shorter words first, then lexicographic in letter rank.
    std::strong_ordering operator<=>(Word const& that) const;

   private:
    std::vector<Letter> letters_;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  // Lowercase symbol = generator, uppercase = inverse, whitespace ignored.
  // Throws UnknownSymbol with the offending character's offset in `text`.
  [[nodiscard]] Word parse_word(std::string_view text, Alphabet const& alphabet);
  [[nodiscard]] std::string to_string(Word const& w, Alphabet const& alphabet);

  [[nodiscard]] inline std::size_t word_length(Word const& w) noexcept {
    return w.size();
  }

  [[nodiscard]] bool is_reduced(Word const& w) noexcept;
  [[nodiscard]] Word free_reduce(Word const& w);
  [[nodiscard]] Word invert(Word const& w);
  [[nodiscard]] Word concat(Word const& x, Word const& y);
  // u r u^-1, unreduced.
  [[nodiscard]] Word conjugate(Word const& u, Word const& r);
  [[nodiscard]] Word power(Word const& z, std::int64_t b);

  // Net exponent of each generator in `w`; length `rank`.
  [[nodiscard]] std::vector<std::int64_t> exponent_sums(Word const&  w,
                                                        std::size_t rank);

  // True when every letter refers to a generator below `rank`.
  [[nodiscard]] bool over_rank(Word const& w, std::size_t rank) noexcept;

  // Appends `x` to a reduced letter stack, cancelling against its top.
  inline void push_reduced(std::vector<Letter>& stack, Letter x) {
    if (!stack.empty() && cancels(stack.back(), x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }

  // Calls fn(w) for every freely reduced word of exactly `length` letters
  // over `rank` generators, in lexicographic order. Stops as soon as fn
  // returns false, and then returns false itself.
  template <typename Fn>
  bool for_each_reduced_word(std::size_t rank, std::size_t length, Fn&& fn) {
    std::size_t const   letters = 2 * rank;
    std::vector<Letter> w;
    w.reserve(length);
    auto rec = [&](auto&& self) -> bool {
      if (w.size() == length) {
        return fn(Word(w));
      }
      for (std::size_t k = 0; k < letters; ++k) {
        Letter const x = Letter::from_rank(k);
        if (!w.empty() && cancels(w.back(), x)) {
          continue;
        }
        w.push_back(x);
        bool const go_on = self(self);
        w.pop_back();
        if (!go_on) {
          return false;
        }
      }
      return true;
    };
    if (length > 0 && letters == 0) {
      return true;
    }
    return rec(rec);
  }

}  // namespace hypgrp
