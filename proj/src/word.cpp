#include "hypgrp/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "hypgrp/errors.hpp"

namespace hypgrp {

  Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) {
      throw InvalidAlphabet("no generators");
    }
    if (symbols_.size() > 26) {
      throw InvalidAlphabet("at most 26 generators are supported");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      char const c = symbols_[i];
      if (c < 'a' || c > 'z') {
        throw InvalidAlphabet(std::string("symbol '") + c
                              + "' is not a lowercase letter");
      }
      if (symbols_.find(c, i + 1) != std::string::npos) {
        throw InvalidAlphabet(std::string("symbol '") + c + "' repeated");
      }
    }
  }

  Alphabet Alphabet::first_letters(std::size_t rank) {
    std::string s;
    for (std::size_t i = 0; i < rank; ++i) {
      s.push_back(static_cast<char>('a' + i));
    }
    return Alphabet(s);
  }

  std::strong_ordering Word::operator<=>(Word const& that) const {
    if (auto c = size() <=> that.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        letters_.begin(), letters_.end(), that.letters_.begin(),
        that.letters_.end());
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = 14695981039346656037ULL;
    for (Letter x : w) {
      h ^= static_cast<std::uint8_t>(x.code());
      h *= 1099511628211ULL;
    }
    return h;
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    auto const& symbols = alphabet.symbols();
    for (std::size_t i = 0; i < text.size(); ++i) {
      char const c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        continue;
      }
      bool const inverse = c >= 'A' && c <= 'Z';
      char const lower
          = inverse ? static_cast<char>(c - 'A' + 'a') : c;
      auto const pos = symbols.find(lower);
      if (pos == std::string::npos || (!inverse && (c < 'a' || c > 'z'))) {
        throw UnknownSymbol(i);
      }
      letters.emplace_back(pos, inverse);
    }
    return Word(std::move(letters));
  }

  std::string to_string(Word const& w, Alphabet const& alphabet) {
    std::string out;
    out.reserve(w.size());
    for (Letter x : w) {
      char const c = alphabet.symbol(x.generator());
      out.push_back(x.is_inverse() ? static_cast<char>(c - 'a' + 'A') : c);
    }
    return out;
  }

  bool is_reduced(Word const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (cancels(w[i - 1], w[i])) {
        return false;
      }
    }
    return true;
  }

  Word free_reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (Letter x : w) {
      push_reduced(stack, x);
    }
    return Word(std::move(stack));
  }

  Word invert(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  Word concat(Word const& x, Word const& y) {
    std::vector<Letter> out;
    out.reserve(x.size() + y.size());
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return Word(std::move(out));
  }

  Word conjugate(Word const& u, Word const& r) {
    return concat(concat(u, r), invert(u));
  }

  Word power(Word const& z, std::int64_t b) {
    Word const          base = b < 0 ? invert(z) : z;
    auto const          n    = static_cast<std::size_t>(std::llabs(b));
    std::vector<Letter> out;
    out.reserve(n * base.size());
    for (std::size_t i = 0; i < n; ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return Word(std::move(out));
  }

  std::vector<std::int64_t> exponent_sums(Word const& w, std::size_t rank) {
    std::vector<std::int64_t> sums(rank, 0);
    for (Letter x : w) {
      sums.at(x.generator()) += x.sign();
    }
    return sums;
  }

  bool over_rank(Word const& w, std::size_t rank) noexcept {
    return std::all_of(w.begin(), w.end(), [rank](Letter x) {
      return x.generator() < rank;
    });
  }

}  // namespace hypgrp
