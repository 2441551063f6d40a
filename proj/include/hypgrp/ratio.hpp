#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace hypgrp {

  // Nonnegative rational in lowest terms.
  struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Ratio() = default;
    constexpr Ratio(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
      if (den < 0) {
        num = -num;
        den = -den;
      }
      auto const g = std::gcd(num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
    }

    [[nodiscard]] constexpr double value() const noexcept {
      return static_cast<double>(num) / static_cast<double>(den);
    }

    constexpr bool operator==(Ratio const&) const = default;
    constexpr std::strong_ordering operator<=>(Ratio const& that) const {
      return num * that.den <=> that.num * den;
    }

    [[nodiscard]] std::string str() const {
      return den == 1 ? std::to_string(num)
                      : std::to_string(num) + "/" + std::to_string(den);
    }
  };

}  // namespace hypgrp
