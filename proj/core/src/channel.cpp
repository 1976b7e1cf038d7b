#include "slpsec/channel.hpp"

#include <stdexcept>

#include "slpsec/rng.hpp"

namespace slpsec {

ChannelSet draw_channels(int N, int K, std::uint64_t seed) {
    if (N < 1 || K < 1) throw std::domain_error("draw_channels: N, K must be >= 1");
    Rng rng(seed);
    ChannelSet cs;
    cs.H.resize(K, N);
    for (int k = 0; k < K; ++k)
        for (int n = 0; n < N; ++n) cs.H(k, n) = rng.cgaussian();
    cs.g_e.resize(N);
    for (int n = 0; n < N; ++n) cs.g_e(n) = rng.cgaussian();
    return cs;
}

Eigen::MatrixXcd exponential_correlation(int N, double r) {
    if (r < 0.0 || r >= 1.0)
        throw std::domain_error("exponential_correlation: r must be in [0,1)");
    Eigen::MatrixXcd R(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            R(i, j) = std::pow(r, std::abs(i - j));
    return R;
}

ChannelSet draw_channels_correlated_eve(int N, int K, std::uint64_t seed,
                                        const Eigen::MatrixXcd& R_e) {
    if (!is_hermitian_positive_definite(R_e))
        throw std::domain_error("draw_channels_correlated_eve: R_e must be Hermitian PD");
    ChannelSet cs = draw_channels(N, K, seed);
    Eigen::LLT<Eigen::MatrixXcd> llt(R_e);
    cs.g_e = llt.matrixL() * cs.g_e;
    cs.R_e = R_e;
    return cs;
}

bool is_hermitian_positive_definite(const Eigen::MatrixXcd& M, double tol) {
    if (M.rows() != M.cols()) return false;
    if ((M - M.adjoint()).cwiseAbs().maxCoeff() > 1e-10) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    return es.eigenvalues().minCoeff() > tol;
}

}  // namespace slpsec
