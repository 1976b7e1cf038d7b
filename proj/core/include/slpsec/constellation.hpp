#pragma once

#include <complex>
#include <vector>

namespace slpsec {

/// Unit-norm M-PSK symbol e^{j 2*pi*index/M}. Throws std::domain_error for an
/// index outside [0, M).
std::complex<double> psk_symbol(int index, int order);

/// M-PSK alphabet with symbols at phases 2*pi*k/M, k = 0..M-1, and the
/// half-angle theta = pi/M of the decision sectors.
class Constellation {
public:
    static Constellation mpsk(int order);

    int order() const { return order_; }
    double half_angle() const { return half_angle_; }
    const std::vector<std::complex<double>>& symbols() const { return symbols_; }
    std::complex<double> symbol(int index) const;
    double phase(int index) const;

    /// Index of the decision sector containing arg(y); sectors are centered on
    /// the symbols and half-open so they tile the circle exactly once. A point
    /// on a sector boundary resolves downward in phase, e.g. QPSK -1-1j -> 2.
    int sector_index(std::complex<double> y) const;

private:
    explicit Constellation(int order);
    int order_;
    double half_angle_;
    std::vector<std::complex<double>> symbols_;
};

}  // namespace slpsec
