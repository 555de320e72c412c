#include "dsg/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "dsg/potential.hpp"

namespace dsg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

#if defined(__SIZEOF_FLOAT128__)
using wide_float = __float128;
#else
using wide_float = long double;
#endif

}  // namespace

double HessianMatrix::inf_norm() const {
    double m = 0.0;
    for (double d : diagonal) m = std::max(m, std::abs(d));
    return m + 2.0 * std::abs(off_diagonal);
}

Eigen::MatrixXd HessianMatrix::dense() const {
    const int n = dimension();
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        b(i, i) = diagonal[i];
        if (i + 1 < n) {
            b(i, i + 1) = off_diagonal;
            b(i + 1, i) = off_diagonal;
        }
    }
    return b;
}

HessianMatrix build_hessian(const FieldConfiguration& config) {
    HessianMatrix h;
    const double g = config.params.g;
    h.diagonal.resize(config.phi.size());
    for (size_t i = 0; i < config.phi.size(); ++i)
        h.diagonal[i] = potential_d2(config.phi[i], config.params.a) + 2.0 * g;
    h.off_diagonal = -g;
    return h;
}

int eigenvalues_below(const HessianMatrix& hessian, double shift) {
    // Sturm count via the LDL^T pivot signs of B - shift. Extended precision
    // keeps the count exact even when the matrix has an eigenvalue within
    // fp64 round-off of the shift, which the weak-coupling kink's
    // translational mode does.
    const int n = hessian.dimension();
    const wide_float b2 =
        static_cast<wide_float>(hessian.off_diagonal) * hessian.off_diagonal;
    const wide_float tiny = static_cast<wide_float>(1e-300);
    wide_float d = 1.0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
        d = static_cast<wide_float>(hessian.diagonal[i]) -
            static_cast<wide_float>(shift) - (i > 0 ? b2 / d : wide_float(0));
        if (d < 0) ++count;
        if (d == 0) d = -tiny;
    }
    return count;
}

NormalModes eigendecompose(const HessianMatrix& hessian) {
    const int n = hessian.dimension();
    Eigen::VectorXd diag =
        Eigen::Map<const Eigen::VectorXd>(hessian.diagonal.data(), n);
    Eigen::VectorXd sub = Eigen::VectorXd::Constant(std::max(n - 1, 0),
                                                    hessian.off_diagonal);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw InstabilityError("tridiagonal eigensolver failed to converge",
                               0.0);

    Eigen::VectorXd w2 = solver.eigenvalues();
    NormalModes modes;
    modes.modes = solver.eigenvectors();

    const double floor = std::max(1e-12, 4.0 * n * kEps * hessian.inf_norm());
    modes.stability_floor = floor;
    if (w2[0] < floor) {
        // Computed values this small are below eigensolver resolution; an
        // exact-arithmetic count decides stability. The matrix itself
        // carries jitter of the same scale from the static solver's residual
        // (it shifts the quasi-zero translation mode of a weak-coupling
        // kink), so genuine instability means an eigenvalue below -floor.
        if (eigenvalues_below(hessian, -floor) > 0)
            throw InstabilityError(
                "Hessian has a negative eigenvalue beyond round-off: "
                "expansion point is not a stable minimum",
                w2[0]);
        for (int k = 0; k < n && w2[k] < floor; ++k) {
            w2[k] = floor;
            ++modes.floored_count;
        }
    }

    modes.omega = w2.cwiseSqrt();

    // Deterministic sign: first component of magnitude > 1e-12 positive.
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const double v = modes.modes(i, k);
            if (std::abs(v) > 1e-12) {
                if (v < 0.0) modes.modes.col(k) = -modes.modes.col(k);
                break;
            }
        }
    }
    return modes;
}

double zero_point_energy(const NormalModes& modes) {
    return 0.5 * modes.omega.sum();
}

}  // namespace dsg
