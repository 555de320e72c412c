#pragma once

#include "dsg/errors.hpp"

namespace dsg {

// Complete experiment configuration for one chain: number of lattice points
// n_sites = N+1 (indices 0..N), elastic coupling g, substrate family
// parameter a.
struct ModelParams {
    int n_sites = 501;
    double g = 1e4;
    double a = 0.0;

    // Largest site index N.
    int last_site() const { return n_sites - 1; }

    void validate() const {
        if (n_sites < 3)
            throw DomainError("n_sites must be >= 3");
        if (!(g > 0.0))
            throw DomainError("elastic coupling g must be positive");
        if (!(a >= 0.0 && a <= 1.0))
            throw DomainError("family parameter a must lie in [0,1]");
    }
};

enum class Sector { Vacuum, Kink };

}  // namespace dsg
