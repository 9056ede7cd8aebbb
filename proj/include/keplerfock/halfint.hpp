#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace keplerfock {

// Half-integer stored exactly as twice its value, so spins j = 0, 1/2, 1, ...
// and Dirac eigenvalues in Z + 1/2 never touch floating point.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice_(twice_value) {}

    static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }

    // Snap a floating-point value onto Z/2; throws if farther than `tol`.
    static HalfInt snap(double x, double tol);

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    std::string str() const;

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  private:
    int twice_{0};
};

// Parses "2", "3/2" or "1.5"; throws std::invalid_argument otherwise.
HalfInt parse_half_int(const std::string& text);

} // namespace keplerfock
