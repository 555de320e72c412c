#pragma once

#include <vector>

#include "dsg/model.hpp"

namespace dsg {

// A static (time-independent) chain configuration. Vacuum: phi identically
// zero. Kink: phi_0 = 0, phi_N = 1 exactly, interior sites solving the
// static difference equations to within the solver tolerance.
struct FieldConfiguration {
    ModelParams params;
    std::vector<double> phi;
    Sector kind = Sector::Vacuum;

    double topological_charge() const;
};

struct EnergyProfile {
    std::vector<double> per_site;
    double total = 0.0;
};

struct KinkSolveOptions {
    // Requested sup-norm residual tolerance. The effective tolerance is
    // max(tol, 8 * eps * g): the residual of doubles is quantized at
    // ~2 g ulp(phi), so tighter requests cannot be met at large g.
    double tol = 1e-12;
    int max_iterations = 200;   // Newton iterations per continuation step
    double continuation_step = 0.1;
};

// Residual of the static difference equations at the interior sites,
// F_n = -V'(phi_n) + g (phi_{n+1} - 2 phi_n + phi_{n-1}), n = 1..N-1.
struct StaticResidual {
    std::vector<double> interior;
    double sup_norm = 0.0;
};
StaticResidual static_residual(const FieldConfiguration& config);

// Effective solver tolerance actually enforced for a given request.
double effective_kink_tolerance(double g, double requested_tol);

/// The homogeneous zero-energy solution.
FieldConfiguration vacuum_configuration(const ModelParams& params);

/// Solve the static difference equations with kink boundary conditions
/// (phi_0 = 0, phi_N = 1) by damped Newton on the interior unknowns with the
/// analytic tridiagonal Jacobian. For a > 1/5 the solve continues in a from
/// 0.2 up to the target in steps <= continuation_step, warm-starting each
/// step, to stay on the low-energy two-step branch. The symmetric initial
/// profile pins the kink at the chain midpoint.
FieldConfiguration solve_kink(const ModelParams& params,
                              const KinkSolveOptions& options = {});

/// Per-site energy: per_site[n] = V(phi_n) + g/2 (phi_{n+1} - phi_n)^2 for
/// n < N, per_site[N] = V(phi_N). total is the sum, equal to the static
/// Hamiltonian.
EnergyProfile energy_profile(const FieldConfiguration& config);

/// Indices of strict local maxima of per_site exceeding
/// threshold * max(per_site), ascending. Throws DomainError when the profile
/// is flat (no such maximum), e.g. for a vacuum profile.
std::vector<int> lump_centers(const EnergyProfile& profile, double threshold);

}  // namespace dsg
