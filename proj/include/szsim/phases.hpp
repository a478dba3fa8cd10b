// Phase extensions of the walk: per-node APR phases theta_i and per-edge
// link phases phi(i,j) attached to the edge state |i>_1 |j>_2.

#pragma once

#include "szsim/errors.hpp"
#include "szsim/types.hpp"

namespace szsim {

struct PhaseConfig {
    RealVector apr;   // theta_i, radians, reduced to [0, 2*pi)
    RealMatrix link;  // phi(i,j), radians, reduced to [0, 2*pi)

    // Validates shapes (apr length N, link N x N) and reduces all angles mod 2*pi.
    PhaseConfig(RealVector apr_in, RealMatrix link_in);

    // theta_i = pi for every node, no link phases: the standard walk.
    static PhaseConfig standard(int n);

    // Given APR vector, zero link phases.
    static PhaseConfig with_apr(RealVector apr_in);

    int n_nodes() const { return static_cast<int>(apr.size()); }
};

}  // namespace szsim
