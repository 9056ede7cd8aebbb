#include "keplerfock/halfint.hpp"

#include <cmath>
#include <cstdlib>

namespace keplerfock {

HalfInt HalfInt::snap(double x, double tol) {
    const double doubled = 2.0 * x;
    const double rounded = std::round(doubled);
    if (std::abs(doubled - rounded) > 2.0 * tol)
        throw std::runtime_error("value " + std::to_string(x) +
                                 " is not a half-integer within tolerance");
    return HalfInt(static_cast<int>(rounded));
}

std::string HalfInt::str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt parse_half_int(const std::string& text) {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const int num = std::stoi(text.substr(0, slash));
        const int den = std::stoi(text.substr(slash + 1));
        if (den != 2) throw std::invalid_argument("half-integer denominator must be 2: " + text);
        return HalfInt(num);
    }
    const double v = std::stod(text);
    const double doubled = 2.0 * v;
    if (std::abs(doubled - std::round(doubled)) > 1e-9)
        throw std::invalid_argument("not a half-integer: " + text);
    return HalfInt(static_cast<int>(std::round(doubled)));
}

} // namespace keplerfock
