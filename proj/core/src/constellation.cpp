#include "slpsec/constellation.hpp"

#include <cmath>
#include <stdexcept>

namespace slpsec {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

bool power_of_two(int m) { return m >= 2 && (m & (m - 1)) == 0; }
}  // namespace

std::complex<double> psk_symbol(int index, int order) {
    if (order < 2) throw std::domain_error("psk_symbol: order must be >= 2");
    if (index < 0 || index >= order)
        throw std::domain_error("psk_symbol: index out of range");
    return std::polar(1.0, kTwoPi * static_cast<double>(index) /
                               static_cast<double>(order));
}

Constellation::Constellation(int order)
    : order_(order), half_angle_(M_PI / static_cast<double>(order)) {
    symbols_.reserve(order);
    for (int k = 0; k < order; ++k) symbols_.push_back(psk_symbol(k, order));
}

Constellation Constellation::mpsk(int order) {
    if (!power_of_two(order))
        throw std::domain_error("Constellation: order must be a power of two >= 2");
    return Constellation(order);
}

std::complex<double> Constellation::symbol(int index) const {
    if (index < 0 || index >= order_)
        throw std::domain_error("Constellation: index out of range");
    return symbols_[static_cast<std::size_t>(index)];
}

double Constellation::phase(int index) const {
    if (index < 0 || index >= order_)
        throw std::domain_error("Constellation: index out of range");
    return kTwoPi * static_cast<double>(index) / static_cast<double>(order_);
}

int Constellation::sector_index(std::complex<double> y) const {
    const double sectors = std::arg(y) / (kTwoPi / order_);
    // Round halves down so boundary ties resolve to the lower index.
    long k = static_cast<long>(std::ceil(sectors - 0.5));
    k %= order_;
    if (k < 0) k += order_;
    return static_cast<int>(k);
}

}  // namespace slpsec
