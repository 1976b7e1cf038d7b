#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

namespace slpsec {

/// Channels of one network realization. H holds the row vectors h_k^T of the
/// K legitimate users (the model applies channels by plain transpose, never
/// conjugate transpose), g_e is the eavesdropper row, and R_e optionally
/// carries the Hermitian positive-definite correlation of g_e for the
/// statistical-CSI scheme.
struct ChannelSet {
    Eigen::MatrixXcd H;    // K x N
    Eigen::VectorXcd g_e;  // N
    std::optional<Eigen::MatrixXcd> R_e;

    int N() const { return static_cast<int>(H.cols()); }
    int K() const { return static_cast<int>(H.rows()); }
};

/// I.i.d. CN(0,1) channels, deterministic in (N, K, seed). Entries are drawn
/// H row by row, then g_e.
ChannelSet draw_channels(int N, int K, std::uint64_t seed);

/// Exponential correlation model [R]_{ij} = r^{|i-j|}, r in [0,1).
Eigen::MatrixXcd exponential_correlation(int N, double r);

/// Like draw_channels but g_e = L w with R_e = L L^H (Cholesky) and
/// w ~ CN(0,I), so E[g_e g_e^H] = R_e. R_e is attached to the result.
ChannelSet draw_channels_correlated_eve(int N, int K, std::uint64_t seed,
                                        const Eigen::MatrixXcd& R_e);

/// Hermitian with minimum eigenvalue > tol?
bool is_hermitian_positive_definite(const Eigen::MatrixXcd& M, double tol = 1e-10);

}  // namespace slpsec
