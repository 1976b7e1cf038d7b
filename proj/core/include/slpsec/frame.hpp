#pragma once

#include <Eigen/Dense>
#include <vector>

#include "slpsec/constellation.hpp"
#include "slpsec/rng.hpp"

namespace slpsec {

/// One symbol slot: the K data symbols, the wiretapped user index m
/// (0-based), and the jamming phase phi_v. The stacked vector
/// b = [s_1..s_K, e^{j phi_v}] multiplies the precoding matrix from the right.
struct SymbolFrame {
    std::vector<int> indices;  // per-user constellation index
    Eigen::VectorXcd s;        // unit-modulus symbols
    int target = 0;            // m
    double jam_phase = 0.0;    // phi_v

    int K() const { return static_cast<int>(s.size()); }
    std::complex<double> jam_symbol() const { return std::polar(1.0, jam_phase); }

    Eigen::VectorXcd stacked() const {
        Eigen::VectorXcd b(s.size() + 1);
        b.head(s.size()) = s;
        b(s.size()) = jam_symbol();
        return b;
    }
};

SymbolFrame make_frame(const Constellation& c, const std::vector<int>& indices,
                       int target, double jam_phase);

/// Uniform symbols and jamming phase from the given stream.
SymbolFrame random_frame(const Constellation& c, int K, int target, Rng& rng);

/// Per-user noise sigma_k and eavesdropper sigma_e (amplitude units).
struct NoiseModel {
    double sigma_k = 1.0;
    double sigma_e = 1.0;
};

/// Transmit budget P_s, jamming allocation P_n, and jamming floor P_0.
struct PowerBudget {
    double P_s = 1.0;
    double P_n = 0.0;
    double P_0 = 0.0;

    double rho() const { return P_s > 0.0 ? P_0 / P_s : 0.0; }
};

/// Threshold distance t = sigma * sqrt(Gamma) with Gamma given in dB.
double snr_to_threshold(double gamma_db, double sigma);

/// Same mapping with Gamma in linear units (admits the exact Gamma = 0 case).
double snr_to_threshold_linear(double gamma_linear, double sigma);

}  // namespace slpsec
