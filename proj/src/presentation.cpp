#include "hypgrp/presentation.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "hypgrp/errors.hpp"

namespace hypgrp {

  namespace {

    Word cyclically_reduce(Word const& w) {
      Word        r = free_reduce(w);
      std::size_t i = 0;
      std::size_t j = r.size();
      while (j - i >= 2 && cancels(r[i], r[j - 1])) {
        ++i;
        --j;
      }
      return Word(std::vector<Letter>(r.begin() + i, r.begin() + j));
    }

    bool is_commutator(Word const& r) {
      return r.size() == 4 && r[0].generator() != r[1].generator()
             && r[2] == r[0].inverse() && r[3] == r[1].inverse();
    }

    std::string trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }

  }  // namespace

  Presentation make_presentation(std::string_view                generators,
                                 std::vector<std::string> const& relators) {
    Presentation p{Alphabet(generators), {}};
    for (std::size_t i = 0; i < relators.size(); ++i) {
      try {
        p.relators.push_back(parse_word(relators[i], p.alphabet));
      } catch (UnknownSymbol const&) {
        throw RelatorOutOfAlphabet(i);
      }
    }
    return p;
  }

  PresentationCheck validate_presentation(Presentation const& p) {
    if (p.alphabet.rank() == 0) {
      throw InvalidAlphabet("no generators");
    }
    // Re-run the constructor's checks for alphabets assembled elsewhere.
    Alphabet const checked(p.alphabet.symbols());
    (void) checked;
    PresentationCheck result;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      Word const& r = p.relators[i];
      if (!over_rank(r, p.rank())) {
        throw RelatorOutOfAlphabet(i);
      }
      if (r.empty()) {
        result.empty_relators.push_back(i);
      } else if (free_reduce(r).size() == 1) {
        throw InvalidAlphabet("relator " + std::to_string(i)
                              + " makes a generator the identity");
      }
    }
    return result;
  }

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::Trivial:
        return "Trivial";
      case Verdict::Nontrivial:
        return "Nontrivial";
      case Verdict::Unknown:
        break;
    }
    return "Unknown";
  }

  std::string strategy_name(OracleStrategy const& s) {
    if (std::holds_alternative<FreeReduction>(s)) {
      return "free-reduction";
    }
    if (std::holds_alternative<ExponentSum>(s)) {
      return "exponent-sum";
    }
    return "bounded-rewrite";
  }

  std::optional<std::vector<std::int64_t>>
  abelian_moduli(Presentation const& p) {
    std::size_t const                   n = p.rank();
    std::vector<std::int64_t>           moduli(n, 0);
    std::vector<std::vector<bool>>      commute(n, std::vector<bool>(n, false));
    for (Word const& raw : p.relators) {
      Word const r = cyclically_reduce(raw);
      if (r.empty()) {
        continue;
      }
      bool const pure_power = std::all_of(
          r.begin(), r.end(), [&](Letter x) { return x == r[0]; });
      if (pure_power) {
        auto const g = r[0].generator();
        moduli[g]    = std::gcd(moduli[g], static_cast<std::int64_t>(r.size()));
      } else if (is_commutator(r)) {
        commute[r[0].generator()][r[1].generator()] = true;
        commute[r[1].generator()][r[0].generator()] = true;
      } else {
        return std::nullopt;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!commute[i][j]) {
          return std::nullopt;
        }
      }
    }
    return moduli;
  }

  TrivialityOracle::TrivialityOracle(Presentation p, OracleStrategy strategy)
      : presentation_(std::move(p)), strategy_(std::move(strategy)) {
    validate_presentation(presentation_);
    if (std::holds_alternative<FreeReduction>(strategy_)) {
      bool const all_empty
          = std::all_of(presentation_.relators.begin(),
                        presentation_.relators.end(),
                        [](Word const& r) { return r.empty(); });
      if (!all_empty) {
        throw InvalidOracle(
            "free reduction requires every relator to be the empty word");
      }
    } else if (auto const* e = std::get_if<ExponentSum>(&strategy_)) {
      if (e->moduli.size() != presentation_.rank()) {
        throw InvalidOracle("one modulus per generator is required");
      }
      auto const implied = abelian_moduli(presentation_);
      if (!implied) {
        throw InvalidOracle(
            "relators must be generator commutators covering every pair, "
            "plus pure powers");
      }
      if (*implied != e->moduli) {
        throw InvalidOracle(
            "declared moduli differ from those implied by the power relators");
      }
    } else {
      auto const& caps = std::get<BoundedRewrite>(strategy_);
      if (caps.length_cap == 0 || caps.step_cap == 0) {
        throw InvalidOracle("rewrite caps must be positive");
      }
    }
  }

  void TrivialityOracle::check_alphabet(Word const& w) const {
    if (!over_rank(w, presentation_.rank())) {
      throw AlphabetMismatch();
    }
  }

  Verdict TrivialityOracle::is_trivial(Word const& w) const {
    check_alphabet(w);
    if (std::holds_alternative<FreeReduction>(strategy_)) {
      return free_reduce(w).empty() ? Verdict::Trivial : Verdict::Nontrivial;
    }
    if (auto const* e = std::get_if<ExponentSum>(&strategy_)) {
      auto const sums = exponent_sums(w, presentation_.rank());
      for (std::size_t g = 0; g < sums.size(); ++g) {
        std::int64_t const m = e->moduli[g];
        if (m == 0 ? sums[g] != 0 : sums[g] % m != 0) {
          return Verdict::Nontrivial;
        }
      }
      return Verdict::Trivial;
    }
    return rewrite_closure(w, std::get<BoundedRewrite>(strategy_));
  }

  // Breadth-first closure under the moves that generate trivial words:
  // deleting or inserting a cancelling pair, and inserting or deleting a
  // relator or inverse relator at any position. Every move preserves the
  // group element, so reaching the empty word proves triviality.
  Verdict TrivialityOracle::rewrite_closure(Word const&           w,
                                            BoundedRewrite const& caps) const {
    if (free_reduce(w).empty()) {
      return Verdict::Trivial;
    }
    std::vector<Word> relators;
    for (Word const& r : presentation_.relators) {
      if (!r.empty()) {
        relators.push_back(r);
        relators.push_back(invert(r));
      }
    }
    std::size_t const                   letters = 2 * presentation_.rank();
    std::unordered_set<Word, WordHash>  seen{w};
    std::deque<Word>                    queue{w};
    std::size_t                         steps = 0;

    auto visit = [&](std::vector<Letter>&& next) -> bool {
      Word candidate(std::move(next));
      if (candidate.empty()) {
        return true;
      }
      if (seen.insert(candidate).second) {
        queue.push_back(std::move(candidate));
      }
      return false;
    };

    while (!queue.empty()) {
      if (steps++ >= caps.step_cap) {
        return Verdict::Unknown;
      }
      Word const  s = std::move(queue.front());
      queue.pop_front();
      auto const  l = s.letters();
      std::size_t n = s.size();

      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (cancels(l[i], l[i + 1])) {
          std::vector<Letter> next(l.begin(), l.begin() + i);
          next.insert(next.end(), l.begin() + i + 2, l.end());
          if (visit(std::move(next))) {
            return Verdict::Trivial;
          }
        }
      }
      for (Word const& r : relators) {
        for (std::size_t i = 0; i + r.size() <= n; ++i) {
          if (std::equal(r.begin(), r.end(), l.begin() + i)) {
            std::vector<Letter> next(l.begin(), l.begin() + i);
            next.insert(next.end(), l.begin() + i + r.size(), l.end());
            if (visit(std::move(next))) {
              return Verdict::Trivial;
            }
          }
        }
      }
      for (std::size_t i = 0; i <= n; ++i) {
        if (n + 2 <= caps.length_cap) {
          for (std::size_t k = 0; k < letters; ++k) {
            Letter const        x = Letter::from_rank(k);
            std::vector<Letter> next(l.begin(), l.begin() + i);
            next.push_back(x);
            next.push_back(x.inverse());
            next.insert(next.end(), l.begin() + i, l.end());
            visit(std::move(next));
          }
        }
        for (Word const& r : relators) {
          if (n + r.size() <= caps.length_cap) {
            std::vector<Letter> next(l.begin(), l.begin() + i);
            next.insert(next.end(), r.begin(), r.end());
            next.insert(next.end(), l.begin() + i, l.end());
            visit(std::move(next));
          }
        }
      }
    }
    return Verdict::Unknown;
  }

  Verdict TrivialityOracle::elements_equal(Word const& w1,
                                           Word const& w2) const {
    return is_trivial(concat(w1, invert(w2)));
  }

  std::optional<Word> TrivialityOracle::canonical_form(Word const& w) const {
    check_alphabet(w);
    if (std::holds_alternative<FreeReduction>(strategy_)) {
      return free_reduce(w);
    }
    if (auto const* e = std::get_if<ExponentSum>(&strategy_)) {
      auto                sums = exponent_sums(w, presentation_.rank());
      std::vector<Letter> out;
      for (std::size_t g = 0; g < sums.size(); ++g) {
        std::int64_t s = sums[g];
        if (std::int64_t const m = e->moduli[g]; m > 0) {
          s = ((s % m) + m) % m;
        }
        for (std::int64_t i = 0; i < (s < 0 ? -s : s); ++i) {
          out.emplace_back(g, s < 0);
        }
      }
      return Word(std::move(out));
    }
    return std::nullopt;
  }

  TrivialityOracle make_oracle(Presentation p) {
    validate_presentation(p);
    bool const all_empty = std::all_of(p.relators.begin(), p.relators.end(),
                                       [](Word const& r) { return r.empty(); });
    if (all_empty) {
      return TrivialityOracle(std::move(p), FreeReduction{});
    }
    if (auto moduli = abelian_moduli(p)) {
      return TrivialityOracle(std::move(p), ExponentSum{std::move(*moduli)});
    }
    return TrivialityOracle(std::move(p), BoundedRewrite{});
  }

  namespace {

    OracleStrategy parse_strategy(std::string const& spec,
                                  Alphabet const&    alphabet,
                                  std::size_t        line) {
      std::istringstream in(spec);
      std::string        kind;
      in >> kind;
      auto fail = [line](std::string const& why) -> InputError {
        return InputError("line " + std::to_string(line) + ": " + why);
      };
      if (kind == "free") {
        return FreeReduction{};
      }
      if (kind == "exponent") {
        std::vector<std::int64_t> moduli(alphabet.rank(), 0);
        std::string               item;
        while (in >> item) {
          auto const eq = item.find('=');
          if (eq != 1) {
            throw fail("expected <generator>=<modulus>, got '" + item + "'");
          }
          auto const g = alphabet.symbols().find(item[0]);
          if (g == std::string::npos) {
            throw fail("unknown generator in '" + item + "'");
          }
          try {
            moduli[g] = std::stoll(item.substr(2));
          } catch (std::exception const&) {
            throw fail("bad modulus in '" + item + "'");
          }
        }
        return ExponentSum{moduli};
      }
      if (kind == "rewrite") {
        BoundedRewrite caps;
        if (!(in >> caps.length_cap >> caps.step_cap)) {
          throw fail("rewrite needs <length cap> <step cap>");
        }
        return caps;
      }
      throw fail("unknown oracle '" + kind + "'");
    }

  }  // namespace

  PresentationFile parse_presentation(std::string_view text) {
    std::optional<Alphabet>     alphabet;
    std::vector<std::string>    relator_texts;
    std::optional<std::string>  oracle_text;
    std::size_t                 oracle_line = 0;
    std::istringstream          in{std::string(text)};
    std::string                 raw;
    std::size_t                 line = 0;
    while (std::getline(in, raw)) {
      ++line;
      std::string const content = trim(raw.substr(0, raw.find('#')));
      if (content.empty()) {
        continue;
      }
      auto const colon = content.find(':');
      if (colon == std::string::npos) {
        throw InputError("line " + std::to_string(line) + ": expected key: value");
      }
      std::string const key   = trim(content.substr(0, colon));
      std::string const value = trim(content.substr(colon + 1));
      if (key == "gens") {
        if (alphabet) {
          throw InputError("line " + std::to_string(line) + ": duplicate gens");
        }
        alphabet = Alphabet(value);
      } else if (key == "rel") {
        if (!alphabet) {
          throw InputError("line " + std::to_string(line)
                           + ": rel before gens");
        }
        relator_texts.push_back(value);
      } else if (key == "oracle") {
        oracle_text = value;
        oracle_line = line;
      } else {
        throw InputError("line " + std::to_string(line) + ": unknown key '"
                         + key + "'");
      }
    }
    if (!alphabet) {
      throw InputError("missing gens line");
    }
    PresentationFile file{make_presentation(alphabet->symbols(), relator_texts),
                          std::nullopt};
    if (oracle_text && *oracle_text != "auto") {
      file.strategy = parse_strategy(*oracle_text, *alphabet, oracle_line);
    }
    return file;
  }

  PresentationFile load_presentation(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open presentation file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_presentation(buffer.str());
  }

  TrivialityOracle make_oracle(PresentationFile file) {
    if (file.strategy) {
      return TrivialityOracle(std::move(file.presentation),
                              std::move(*file.strategy));
    }
    return make_oracle(std::move(file.presentation));
  }

}  // namespace hypgrp
