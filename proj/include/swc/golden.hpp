// Exact arithmetic in Z[phi], phi = (1 + sqrt 5) / 2.
//
// Every Cartan entry needed for types A, B, D, E, F and H lies in this ring:
// 0 and -1 for m = 2, 3; the integer pair (-1, -2) for m = 4; -phi for m = 5.

#ifndef SWC_GOLDEN_HPP_
#define SWC_GOLDEN_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace swc {

  // a + b * phi with phi^2 = phi + 1.
  struct Golden {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr Golden() = default;
    constexpr Golden(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}

    static constexpr Golden phi() {
      return Golden(0, 1);
    }

    constexpr Golden operator+(Golden const& o) const {
      return {a + o.a, b + o.b};
    }
    constexpr Golden operator-(Golden const& o) const {
      return {a - o.a, b - o.b};
    }
    constexpr Golden operator-() const {
      return {-a, -b};
    }
    constexpr Golden operator*(Golden const& o) const {
      // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
      return {a * o.a + b * o.b, a * o.b + b * o.a + b * o.b};
    }
    Golden& operator+=(Golden const& o) {
      return *this = *this + o;
    }
    Golden& operator-=(Golden const& o) {
      return *this = *this - o;
    }

    constexpr bool operator==(Golden const&) const = default;
    // Lexicographic on (a, b); an ordering for containers, not by value.
    constexpr auto operator<=>(Golden const&) const = default;

    constexpr bool is_zero() const {
      return a == 0 && b == 0;
    }

    // Sign of the real number a + b phi: -1, 0 or +1.
    constexpr int sign() const {
      // 2(a + b phi) = x + y sqrt 5 with x = 2a + b, y = b.
      std::int64_t const x  = 2 * a + b;
      std::int64_t const y  = b;
      auto const         sg = [](std::int64_t v) { return (v > 0) - (v < 0); };
      if (sg(x) == sg(y) || y == 0) {
        return x != 0 ? sg(x) : sg(y);
      }
      if (x == 0) {
        return sg(y);
      }
      // opposite signs: compare x^2 with 5 y^2
      auto const xx = static_cast<__int128>(x) * x;
      auto const yy = static_cast<__int128>(y) * y * 5;
      if (xx == yy) {
        return 0;  // unreachable: sqrt 5 is irrational
      }
      return xx > yy ? sg(x) : sg(y);
    }
  };

  inline std::ostream& operator<<(std::ostream& os, Golden const& g) {
    if (g.b == 0) {
      return os << g.a;
    }
    return os << g.a << (g.b < 0 ? "-" : "+") << (g.b < 0 ? -g.b : g.b)
              << "phi";
  }

}  // namespace swc

template <>
struct std::hash<swc::Golden> {
  std::size_t operator()(swc::Golden const& g) const noexcept {
    return std::hash<std::int64_t>()(g.a) * 1000003u
           ^ std::hash<std::int64_t>()(g.b);
  }
};

#endif  // SWC_GOLDEN_HPP_
