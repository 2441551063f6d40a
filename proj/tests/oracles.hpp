#pragma once

// Brute-force reference computations used to cross-check the library. They
// work on plain strings ("aB" = a b^-1) and integer lattices and share no
// code with src/.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

  inline bool inverse_pair(char x, char y) {
    return x != y && std::tolower(x) == std::tolower(y);
  }

  // Repeatedly deletes the leftmost cancelling pair.
  inline std::string reduce(std::string w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (inverse_pair(w[i], w[i + 1])) {
          w.erase(i, 2);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  inline std::string inverse(std::string const& w) {
    std::string r(w.rbegin(), w.rend());
    for (char& c : r) {
      c = std::islower(c) ? static_cast<char>(std::toupper(c))
                          : static_cast<char>(std::tolower(c));
    }
    return r;
  }

  inline std::string letters(std::size_t rank) {
    std::string s;
    for (std::size_t g = 0; g < rank; ++g) {
      s += static_cast<char>('a' + g);
      s += static_cast<char>('A' + g);
    }
    return s;
  }

  // Every string of exactly `length` letters over `rank` generators.
  inline void all_words(std::size_t                              rank,
                        std::size_t                              length,
                        std::function<void(std::string const&)> const& fn) {
    std::string const alphabet = letters(rank);
    std::string       w(length, ' ');
    std::size_t const total = [&] {
      std::size_t t = 1;
      for (std::size_t i = 0; i < length; ++i) {
        t *= alphabet.size();
      }
      return t;
    }();
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = length; i-- > 0;) {
        w[i] = alphabet[c % alphabet.size()];
        c /= alphabet.size();
      }
      fn(w);
    }
  }

  inline bool is_reduced(std::string const& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (inverse_pair(w[i], w[i + 1])) {
        return false;
      }
    }
    return true;
  }

  // Reduced words of exactly `length` letters, by filtering all strings.
  inline std::vector<std::string> reduced_words(std::size_t rank,
                                                std::size_t length) {
    std::vector<std::string> out;
    all_words(rank, length, [&](std::string const& w) {
      if (is_reduced(w)) {
        out.push_back(w);
      }
    });
    return out;
  }

  inline std::vector<std::int64_t> exponents(std::string const& w,
                                             std::size_t        rank) {
    std::vector<std::int64_t> e(rank, 0);
    for (char c : w) {
      e[static_cast<std::size_t>(std::tolower(c) - 'a')]
          += std::islower(c) ? 1 : -1;
    }
    return e;
  }

  // Least length of a word (any word, reduced or not) representing each
  // element, where elements are keyed by `key`. Enumerates every string up
  // to `max_length`.
  template <typename Key>
  std::map<Key, std::size_t>
  minimal_lengths(std::size_t                                   rank,
                  std::size_t                                   max_length,
                  std::function<Key(std::string const&)> const& key) {
    std::map<Key, std::size_t> best;
    for (std::size_t len = 0; len <= max_length; ++len) {
      all_words(rank, len, [&](std::string const& w) {
        best.try_emplace(key(w), len);
      });
    }
    return best;
  }

  using Point = std::pair<std::int64_t, std::int64_t>;

  // BFS distance on Z^2 from the origin with the given step set (and
  // negatives), restricted to |x|, |y| <= bound.
  inline std::map<Point, std::size_t>
  lattice_bfs(std::vector<Point> const& steps, std::int64_t bound) {
    std::map<Point, std::size_t> dist{{{0, 0}, 0}};
    std::deque<Point>            queue{{0, 0}};
    while (!queue.empty()) {
      Point const p = queue.front();
      queue.pop_front();
      for (Point const& s : steps) {
        for (int sign : {1, -1}) {
          Point const q{p.first + sign * s.first, p.second + sign * s.second};
          if (std::abs(q.first) > bound || std::abs(q.second) > bound) {
            continue;
          }
          if (dist.try_emplace(q, dist[p] + 1).second) {
            queue.push_back(q);
          }
        }
      }
    }
    return dist;
  }

  // Generating-set constants on the L1 ball of `radius` in Z^2: old steps
  // e1, e2; new steps e1, e2 plus `extra`. Returns (λ1, λ2) as reduced
  // fractions (num, den).
  inline std::pair<std::pair<std::int64_t, std::int64_t>,
                   std::pair<std::int64_t, std::int64_t>>
  lattice_comparability(Point extra, std::int64_t radius) {
    auto const old_d = lattice_bfs({{1, 0}, {0, 1}}, 4 * radius);
    auto const new_d = lattice_bfs({{1, 0}, {0, 1}, extra}, 4 * radius);
    std::vector<Point> ball;
    for (std::int64_t x = -radius; x <= radius; ++x) {
      for (std::int64_t y = -radius; y <= radius; ++y) {
        if (std::abs(x) + std::abs(y) <= radius) {
          ball.emplace_back(x, y);
        }
      }
    }
    std::pair<std::int64_t, std::int64_t> l1{0, 1};
    std::pair<std::int64_t, std::int64_t> l2{0, 1};
    auto bigger = [](std::pair<std::int64_t, std::int64_t> a, std::int64_t n,
                     std::int64_t d) { return n * a.second > a.first * d; };
    for (Point const& p : ball) {
      for (Point const& q : ball) {
        if (p == q) {
          continue;
        }
        Point const diff{q.first - p.first, q.second - p.second};
        auto const  o = static_cast<std::int64_t>(old_d.at(diff));
        auto const  n = static_cast<std::int64_t>(new_d.at(diff));
        if (bigger(l1, n, o)) {
          l1 = {n, o};
        }
        if (bigger(l2, o, n)) {
          l2 = {o, n};
        }
      }
    }
    auto norm = [](std::pair<std::int64_t, std::int64_t> r) {
      std::int64_t a = r.first;
      std::int64_t b = r.second;
      while (b != 0) {
        std::int64_t const t = a % b;
        a                    = b;
        b                    = t;
      }
      return std::pair{r.first / a, r.second / a};
    };
    return {norm(l1), norm(l2)};
  }

  // Least max(Σ L(u_j), Σ |b_j| L(r_j)^2) over products of at most
  // `max_factors` factors u r^b u^-1 with every u a string of length at
  // most `max_conj` and 1 <= |b| <= `max_exp`, whose letter-by-letter
  // product reduces to `target`. Exhaustive over that finite space.
  inline std::size_t
  bounded_area(std::vector<std::string> const& relators,
               std::size_t                     rank,
               std::string const&              target,
               std::size_t                     max_factors,
               std::size_t                     max_conj,
               std::int64_t                    max_exp) {
    struct Choice {
      std::string word;
      std::size_t conj = 0;
      std::size_t cost = 0;
    };
    std::vector<std::string> conjugators;
    for (std::size_t len = 0; len <= max_conj; ++len) {
      all_words(rank, len, [&](std::string const& u) {
        conjugators.push_back(u);
      });
    }
    std::vector<Choice> choices;
    for (std::string const& r : relators) {
      for (std::int64_t b = -max_exp; b <= max_exp; ++b) {
        if (b == 0) {
          continue;
        }
        std::string rb;
        for (std::int64_t i = 0; i < std::abs(b); ++i) {
          rb += b > 0 ? r : inverse(r);
        }
        for (std::string const& u : conjugators) {
          choices.push_back({u + rb + inverse(u), u.size(),
                             static_cast<std::size_t>(std::abs(b)) * r.size()
                                 * r.size()});
        }
      }
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    if (target.empty()) {
      return 0;
    }
    std::function<void(std::string const&, std::size_t, std::size_t,
                       std::size_t)>
        rec = [&](std::string const& acc, std::size_t conj, std::size_t cost,
                  std::size_t depth) {
          if (std::max(conj, cost) >= best) {
            return;
          }
          if (depth > 0 && reduce(acc) == target) {
            best = std::max(conj, cost);
          }
          if (depth == max_factors) {
            return;
          }
          for (Choice const& c : choices) {
            rec(reduce(acc + c.word), conj + c.conj, cost + c.cost, depth + 1);
          }
        };
    rec("", 0, 0, 0);
    return best;
  }

  // Farthest-first cover counting on the integer line {0..n-1} with open
  // intervals of radius r, started at point `first`.
  inline std::size_t line_cover(std::vector<std::int64_t> const& points,
                                double                           r,
                                std::int64_t                     first) {
    std::vector<std::int64_t> centers{first};
    while (true) {
      std::int64_t far_point = 0;
      double       far       = -1.0;
      for (std::int64_t p : points) {
        double gap = std::numeric_limits<double>::infinity();
        for (std::int64_t c : centers) {
          gap = std::min(gap, static_cast<double>(std::abs(p - c)));
        }
        if (gap >= r && gap > far) {
          far       = gap;
          far_point = p;
        }
      }
      if (far < 0.0) {
        return centers.size();
      }
      centers.push_back(far_point);
    }
  }

  // Doubling constant of the width x width L1 grid from integer
  // coordinates: worst farthest-first cover of B(x, r) by half-radius open
  // balls, over all x and r.
  inline std::size_t grid_doubling(std::int64_t               width,
                                   std::vector<double> const& radii) {
    std::vector<Point> pts;
    for (std::int64_t y = 0; y < width; ++y) {
      for (std::int64_t x = 0; x < width; ++x) {
        pts.emplace_back(x, y);
      }
    }
    auto d = [](Point p, Point q) {
      return static_cast<double>(std::abs(p.first - q.first)
                                 + std::abs(p.second - q.second));
    };
    std::size_t worst = 1;
    for (double r : radii) {
      for (Point const& x : pts) {
        std::vector<Point> ball;
        for (Point const& p : pts) {
          if (d(x, p) < r) {
            ball.push_back(p);
          }
        }
        std::vector<double> gap(ball.size(),
                                std::numeric_limits<double>::infinity());
        Point       next  = x;
        std::size_t count = 0;
        while (true) {
          ++count;
          double      far  = -1.0;
          std::size_t best = ball.size();
          for (std::size_t i = 0; i < ball.size(); ++i) {
            gap[i] = std::min(gap[i], d(next, ball[i]));
            if (gap[i] >= r / 2 && gap[i] > far) {
              far  = gap[i];
              best = i;
            }
          }
          if (best == ball.size()) {
            break;
          }
          next = ball[best];
        }
        worst = std::max(worst, count);
      }
    }
    return worst;
  }

}  // namespace oracle
