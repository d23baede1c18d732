#pragma once

// Random inputs for property tests. Lives in the test harness only.

#include <array>
#include <random>

#include "qeur/measure.hpp"
#include "qeur/states.hpp"

namespace qeur::testing {

using Rng = std::mt19937_64;

/// Haar-distributed unitary (QR of a complex Ginibre matrix, phases fixed).
ComplexMatrix haar_unitary(int d, Rng& rng);

/// Flat-Dirichlet probability vector of length n.
std::vector<double> random_simplex(int n, Rng& rng);

/// U diag(lambda) U^dagger with Haar U and a random spectrum; about one draw
/// in five has random reduced rank.
DensityMatrix random_mixed_state(Dims dims, Rng& rng);

/// rho_A (x) rho_B with independently drawn factors.
DensityMatrix random_product_state(Dims dims, Rng& rng);

/// Correlation vector of a uniformly random Bell-diagonal state (Dirichlet
/// weights on the four Bell projectors).
std::array<double, 3> random_bell_diagonal_r(Rng& rng);

/// Random orthonormal measurement basis.
ProjectiveObservable random_observable(int d, Rng& rng);

/// A random rotation of the (sigma_x, sigma_z) pair: mutually unbiased.
std::pair<ProjectiveObservable, ProjectiveObservable> random_qubit_mub(Rng& rng);

}  // namespace qeur::testing
