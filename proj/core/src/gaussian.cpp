#include "dsg/gaussian.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

namespace dsg {

namespace {

// Round-off guard below 1/2 tolerated before declaring the reduced state
// unphysical.
constexpr double kLambdaSlack = 1e-9;

}  // namespace

std::vector<double> SymplecticSpectrum::mean_phonons() const {
    std::vector<double> n(lambdas.size());
    for (size_t i = 0; i < lambdas.size(); ++i) n[i] = lambdas[i] - 0.5;
    return n;
}

CovarianceData covariance(const NormalModes& modes) {
    const Eigen::VectorXd half_inv = (2.0 * modes.omega.array()).inverse();
    const Eigen::VectorXd half = 0.5 * modes.omega.array();
    CovarianceData cov;
    cov.xpos = modes.modes * half_inv.asDiagonal() * modes.modes.transpose();
    cov.ppos = modes.modes * half.asDiagonal() * modes.modes.transpose();
    // gemm round-off is the only source of asymmetry; remove it.
    cov.xpos = 0.5 * (cov.xpos + cov.xpos.transpose()).eval();
    cov.ppos = 0.5 * (cov.ppos + cov.ppos.transpose()).eval();
    return cov;
}

CorrelationProfile correlation_profile(const CovarianceData& cov, int anchor) {
    if (anchor < 0 || anchor >= cov.dimension())
        throw DomainError("correlation anchor site out of range");
    CorrelationProfile profile;
    profile.anchor = anchor;
    profile.xi.resize(cov.dimension());
    for (int i = 0; i < cov.dimension(); ++i) profile.xi[i] = cov.xpos(anchor, i);
    return profile;
}

SymplecticSpectrum symplectic_eigenvalues(const CovarianceData& cov,
                                          int block_length) {
    if (block_length < 1 || block_length > cov.dimension())
        throw DomainError("subblock length out of range");
    const auto xa = cov.xpos.topLeftCorner(block_length, block_length);
    const auto pa = cov.ppos.topLeftCorner(block_length, block_length);

    // X_A P_A is similar to the symmetric positive form L^T P_A L with
    // X_A = L L^T, so one symmetric eigensolve gives the squared spectrum.
    Eigen::LLT<Eigen::MatrixXd> llt(xa);
    if (llt.info() != Eigen::Success)
        throw NumericalDegeneracyError(
            "position block not positive definite");
    const Eigen::MatrixXd l = llt.matrixL();
    Eigen::MatrixXd m = l.transpose() * pa * l;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalDegeneracyError("subblock eigensolve failed");

    SymplecticSpectrum spectrum;
    spectrum.lambdas.resize(block_length);
    spectrum.min_raw = std::numeric_limits<double>::infinity();
    for (int i = 0; i < block_length; ++i) {
        const double e = solver.eigenvalues()[i];
        if (e <= 0.0)
            throw NumericalDegeneracyError(
                "non-positive eigenvalue of X_A P_A");
        const double lambda = std::sqrt(e);
        spectrum.min_raw = std::min(spectrum.min_raw, lambda);
        if (lambda < 0.5 - kLambdaSlack)
            throw NumericalDegeneracyError(
                "symplectic eigenvalue below 1/2 beyond round-off");
        spectrum.lambdas[i] = std::max(lambda, 0.5);
    }
    return spectrum;
}

double mode_entropy(double lambda) {
    const double lp = lambda + 0.5;
    const double lm = lambda - 0.5;
    double s = lp * std::log(lp);
    if (lm > 0.0) s -= lm * std::log(lm);  // x ln x -> 0 at the pure limit
    return s;
}

double entanglement_entropy(const SymplecticSpectrum& spectrum) {
    double total = 0.0;
    for (double lambda : spectrum.lambdas) total += mode_entropy(lambda);
    return total;
}

EntropyScan entropy_scan(const NormalModes& modes,
                         const std::vector<int>& lengths, Sector sector) {
    const CovarianceData cov = covariance(modes);
    EntropyScan scan;
    scan.sector = sector;
    scan.lengths = lengths;
    scan.entropy.assign(lengths.size(), 0.0);

    // Independent per-length evaluations; slot-wise writes keep the result
    // identical to sequential order.
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers = std::min<unsigned>(
        std::max(1u, hw), static_cast<unsigned>(lengths.size()));
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= lengths.size()) return;
            try {
                scan.entropy[i] =
                    entanglement_entropy(symplectic_eigenvalues(cov, lengths[i]));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return scan;
}

}  // namespace dsg
