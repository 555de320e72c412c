#pragma once

#include <Eigen/Dense>

#include "dsg/statics.hpp"

namespace dsg {

// Fluctuation Hessian around a static configuration: symmetric tridiagonal,
// diagonal V''(phi_n) + 2g, both adjacent bands constant -g. Endpoint rows
// simply drop the missing neighbor (zero fluctuation outside the chain).
struct HessianMatrix {
    std::vector<double> diagonal;
    double off_diagonal = 0.0;

    int dimension() const { return static_cast<int>(diagonal.size()); }
    // Row-sum norm, used for error floors and residual scales.
    double inf_norm() const;
    Eigen::MatrixXd dense() const;
};

// Normal modes of a Hessian: ascending frequencies omega_k > 0 and
// orthonormal real eigenvectors (column k of `modes`), sign-fixed so the
// first component of magnitude > 1e-12 is positive.
struct NormalModes {
    Eigen::VectorXd omega;
    Eigen::MatrixXd modes;
    // Frequencies-squared below stability_floor that were certified positive
    // in exact arithmetic get raised to the floor; floored_count records how
    // many. A kink's boundary-lifted translation mode at weak coupling sits
    // below fp64 eigensolver resolution and lands here.
    double stability_floor = 0.0;
    int floored_count = 0;
};

HessianMatrix build_hessian(const FieldConfiguration& config);

/// Full spectral decomposition. Throws InstabilityError if the matrix has a
/// non-positive eigenvalue in exact arithmetic (Sturm-count certification in
/// extended precision), i.e. the expansion point is not a stable minimum.
NormalModes eigendecompose(const HessianMatrix& hessian);

/// Number of eigenvalues strictly below `shift`, evaluated in extended
/// precision on the exact fp64 matrix entries. Exposed for verification.
int eigenvalues_below(const HessianMatrix& hessian, double shift);

/// Ground-state energy (1/2) sum_k omega_k.
double zero_point_energy(const NormalModes& modes);

}  // namespace dsg
