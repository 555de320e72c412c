#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dsg/model.hpp"
#include "dsg/spectral.hpp"

namespace dsg {

// Ground-state correlation matrices of the canonical variables:
//   xpos(m,n) = <eta(m) eta(n)> = (1/2) sum_l psi_l(m) psi_l(n) / omega_l
//   ppos(m,n) = <pi(m) pi(n)>   = (1/2) sum_l omega_l psi_l(m) psi_l(n)
// The position-momentum cross block vanishes in the ground state and is not
// stored.
struct CovarianceData {
    Eigen::MatrixXd xpos;
    Eigen::MatrixXd ppos;

    int dimension() const { return static_cast<int>(xpos.rows()); }
};

// Symplectic spectrum of a reduced block: lambdas ascending, >= 1/2 after
// clamping. min_raw keeps the smallest value before clamping for round-off
// diagnostics.
struct SymplecticSpectrum {
    std::vector<double> lambdas;
    double min_raw = 0.0;

    std::vector<double> mean_phonons() const;  // n_j = lambda_j - 1/2
};

struct EntropyScan {
    std::vector<int> lengths;
    std::vector<double> entropy;
    Sector sector = Sector::Vacuum;
};

// Row of xpos from an anchor site; xi[i] correlates the anchor with site i,
// i.e. separation i - anchor.
struct CorrelationProfile {
    int anchor = 0;
    std::vector<double> xi;
};

CovarianceData covariance(const NormalModes& modes);

CorrelationProfile correlation_profile(const CovarianceData& cov, int anchor);

/// Symplectic eigenvalues of the left-anchored subblock of sites
/// 0..block_length-1: sqrt of the eigenvalues of X_A P_A, computed through
/// the Cholesky-symmetrized form L^T P_A L. Values within 1e-9 below 1/2 are
/// clamped up to 1/2; anything lower throws NumericalDegeneracyError.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceData& cov,
                                          int block_length);

/// Per-mode entropy S(lambda) = (l+1/2) ln(l+1/2) - (l-1/2) ln(l-1/2), with
/// the second term zero at lambda = 1/2.
double mode_entropy(double lambda);

double entanglement_entropy(const SymplecticSpectrum& spectrum);

/// Entanglement entropy for each requested subblock length. The per-length
/// evaluations are independent and run on a small thread pool; results are
/// identical to sequential evaluation.
EntropyScan entropy_scan(const NormalModes& modes,
                         const std::vector<int>& lengths, Sector sector);

}  // namespace dsg
