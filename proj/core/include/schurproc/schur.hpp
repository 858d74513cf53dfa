#pragma once

#include "schurproc/partition.hpp"
#include "schurproc/specialization.hpp"

namespace schurproc {

/// Skew Schur function s_{lambda/mu} under the specialization h_k = phi_k:
/// Jacobi-Trudi determinant det(h_{lambda_i - mu_j - i + j}).
/// Returns 0 when mu is not contained in lambda; s_{lambda/lambda} = 1.
double skew_schur(const Partition& lambda, const Partition& mu,
                  const Specialization& s);

/// A plus/minus pair of specializations; the parameter phi[m] of one
/// transition of the Schur process.
struct SpecPair {
    Specialization plus{Orientation::plus};
    Specialization minus{Orientation::minus};

    bool trivial() const { return plus.trivial() && minus.trivial(); }
};

/// Transition weight S_phi(mu, lambda) = sum_nu s_{mu/nu}(phi^-) s_{lambda/nu}(phi^+).
/// The sum is finite: it ranges over nu contained in both mu and lambda.
double transition_weight(const Partition& mu, const Partition& lambda,
                         const SpecPair& phi);

}  // namespace schurproc
