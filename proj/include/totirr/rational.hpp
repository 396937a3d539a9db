#pragma once

#include <compare>
#include <numeric>
#include <string>

#include "totirr/checked.hpp"

namespace totirr {

/// Exact non-negative ratio p/q with q > 0, kept in lowest terms.
class Ratio {
 public:
  Ratio(Int num, Int den) {
    if (den <= 0 || num < 0) throw InputError("ratio requires num >= 0 and den > 0");
    const Int g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  friend bool operator==(const Ratio&, const Ratio&) = default;

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace totirr
