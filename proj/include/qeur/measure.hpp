#pragma once

#include <array>
#include <vector>

#include "qeur/matops.hpp"
#include "qeur/states.hpp"

namespace qeur {

/// Outcomes with probability below this carry a maximally mixed placeholder
/// conditional state and contribute nothing to entropy averages.
inline constexpr double kNegligibleProbability = 1e-14;

/// Unit vector on the Bloch sphere.
class BlochDirection {
 public:
  /// Throws ValidationError when |n| differs from 1 by more than 1e-12.
  explicit BlochDirection(const std::array<double, 3>& n);

  /// (sin t cos f, sin t sin f, cos t)
  static BlochDirection from_angles(double theta, double phi);

  [[nodiscard]] const std::array<double, 3>& components() const { return n_; }
  [[nodiscard]] double x() const { return n_[0]; }
  [[nodiscard]] double y() const { return n_[1]; }
  [[nodiscard]] double z() const { return n_[2]; }
  [[nodiscard]] double theta() const;
  [[nodiscard]] double phi() const;

 private:
  std::array<double, 3> n_;
};

/// A rank-one projective measurement: an orthonormal basis {|x_i>}.
class ProjectiveObservable {
 public:
  /// Columns of `basis` are the measurement vectors. Throws ValidationError if
  /// they are not orthonormal within 1e-10.
  explicit ProjectiveObservable(ComplexMatrix basis);

  [[nodiscard]] int dim() const { return static_cast<int>(basis_.cols()); }
  [[nodiscard]] const ComplexMatrix& basis() const { return basis_; }
  [[nodiscard]] ComplexVector vector(int i) const { return basis_.col(i); }
  [[nodiscard]] ComplexMatrix projector(int i) const;

 private:
  ComplexMatrix basis_;
};

/// Eigenbasis of n.sigma, the +1 eigenvector first.
ProjectiveObservable observable_from_bloch(const BlochDirection& n);

/// Eigenbasis of the Pauli matrix on `axis` (0 = x, 1 = y, 2 = z).
ProjectiveObservable pauli_observable(int axis);

/// c_ij = |<x_i|z_j>|^2
RealMatrix overlap_matrix(const ProjectiveObservable& x, const ProjectiveObservable& z);

/// log2(1/c), c the largest overlap.
double q_mu(const ProjectiveObservable& x, const ProjectiveObservable& z);

/// q_MU + (1 - sqrt c)/2 log2(c/c2), c2 the second element of the overlaps
/// sorted as a multiset (so c2 = c when the maximum is attained twice).
double q_prime(const ProjectiveObservable& x, const ProjectiveObservable& z);

/// The same incompatibility expressed directly in the two largest overlaps.
double coles_piani_q_from_overlaps(double c, double c2);

/// sum_i (|x_i><x_i| (x) I) rho (|x_i><x_i| (x) I)
DensityMatrix post_measurement_state(const DensityMatrix& rho, const ProjectiveObservable& x);

struct MeasurementEnsemble {
  std::vector<double> probs;
  std::vector<DensityMatrix> cond_states;  // Bob's state given each outcome
};

/// Outcome probabilities of measuring `x` on A and the states left on B.
MeasurementEnsemble outcome_ensemble(const DensityMatrix& rho, const ProjectiveObservable& x);

/// Bloch axes of a two-qubit state ordered by the strength of the A-side
/// correlations: the k-th entry carries the k-th largest singular value of the
/// correlation matrix T. For diagonal T these are the coordinate axes sorted by
/// |T_ii|, with ties going to the lower axis index.
std::array<BlochDirection, 3> ranked_correlation_axes(const DensityMatrix& rho);

}  // namespace qeur
