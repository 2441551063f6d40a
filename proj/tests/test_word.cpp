#include <doctest.h>

#include <random>

#include "hypgrp/errors.hpp"
#include "hypgrp/word.hpp"
#include "oracles.hpp"

using namespace hypgrp;

namespace {
  Alphabet const ab("ab");

  Word w(char const* text) {
    return parse_word(text, ab);
  }

  std::string s(Word const& x) {
    return to_string(x, ab);
  }

  Word random_word(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> letter(0, 3);
    std::vector<Letter>                        out(len(rng));
    for (Letter& x : out) {
      x = Letter::from_rank(letter(rng));
    }
    return Word(std::move(out));
  }
}  // namespace

TEST_CASE("alphabet") {
  CHECK(ab.rank() == 2);
  CHECK(Alphabet::first_letters(3).symbols() == "abc");
  CHECK_THROWS_AS(Alphabet("aa"), InvalidAlphabet);
  CHECK_THROWS_AS(Alphabet("aB"), InvalidAlphabet);
  CHECK_THROWS_AS(Alphabet("a1"), InvalidAlphabet);
  CHECK_THROWS_AS(Alphabet(""), InvalidAlphabet);
}

TEST_CASE("parse_word") {
  CHECK(w("").empty());
  Word const x = w("abA");
  REQUIRE(x.size() == 3);
  CHECK(x[0] == Letter(0, false));
  CHECK(x[1] == Letter(1, false));
  CHECK(x[2] == Letter(0, true));
  CHECK(w(" a b\tA ") == x);

  try {
    (void) w("axb");
    FAIL("expected UnknownSymbol");
  } catch (UnknownSymbol const& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS((void) w("c"), UnknownSymbol);
}

TEST_CASE("word_length counts letters before reduction") {
  CHECK(word_length(w("")) == 0);
  CHECK(word_length(w("abA")) == 3);
  CHECK(word_length(w("aAaA")) == 4);
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(w("aA")).empty());
  CHECK(free_reduce(w("abBA")).empty());
  CHECK(s(free_reduce(w("abAB"))) == "abAB");
  CHECK(s(free_reduce(w("aabBAb"))) == "ab");
  CHECK(is_reduced(w("abAB")));
  CHECK_FALSE(is_reduced(w("abBa")));
}

TEST_CASE("invert, conjugate, power") {
  CHECK(s(invert(w("ab"))) == "BA");
  CHECK(invert(w("")).empty());
  CHECK(invert(invert(w("aBa"))) == w("aBa"));

  CHECK(s(conjugate(w(""), w("aaa"))) == "aaa");
  CHECK(s(conjugate(w("b"), w("aaa"))) == "baaaB");
  CHECK(s(conjugate(w("ab"), w(""))) == "abBA");

  CHECK(s(power(w("ab"), 2)) == "abab");
  CHECK(s(power(w("ab"), -1)) == "BA");
  CHECK(power(w("a"), 0).empty());
}

TEST_CASE("shortlex order") {
  CHECK(w("b") < w("aa"));
  CHECK(w("a") < w("A"));
  CHECK(w("A") < w("b"));
  CHECK(w("ab") < w("aB"));
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sums(w("aabAB"), 2) == std::vector<std::int64_t>{1, 0});
  CHECK(over_rank(w("ab"), 2));
  CHECK_FALSE(over_rank(w("ab"), 1));
}

TEST_CASE("reduced word enumeration matches filtering all strings") {
  for (std::size_t rank : {1u, 2u, 3u}) {
    for (std::size_t len = 0; len <= 5; ++len) {
      std::vector<std::string> got;
      for_each_reduced_word(rank, len, [&](Word const& x) {
        got.push_back(to_string(x, Alphabet::first_letters(rank)));
        return true;
      });
      auto expected = oracle::reduced_words(rank, len);
      std::sort(expected.begin(), expected.end(),
                [&](std::string const& a, std::string const& b) {
                  Alphabet const al = Alphabet::first_letters(rank);
                  return parse_word(a, al) < parse_word(b, al);
                });
      CHECK(got == expected);
    }
  }
}

TEST_CASE("reduction properties on random words") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    Word const x  = random_word(rng, 12);
    Word const y  = random_word(rng, 12);
    Word const rx = free_reduce(x);
    CHECK(free_reduce(rx) == rx);
    CHECK(s(rx) == oracle::reduce(s(x)));
    CHECK(free_reduce(concat(x, y))
          == free_reduce(concat(rx, free_reduce(y))));
    CHECK(word_length(rx) <= word_length(x));
    CHECK((word_length(rx) == word_length(x)) == is_reduced(x));
    CHECK(free_reduce(concat(x, invert(x))).empty());
    std::int64_t const b = static_cast<std::int64_t>(trial % 7) - 3;
    CHECK(word_length(power(x, b))
          == static_cast<std::size_t>(std::abs(b)) * word_length(x));
    CHECK(parse_word(s(x), ab) == x);
  }
}
