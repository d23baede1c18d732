#pragma once

#include <span>

#include "qeur/measure.hpp"
#include "qeur/states.hpp"

// All entropic quantities are in bits.

namespace qeur {

/// -sum p log2 p with 0 log 0 = 0. Throws ValidationError on entries below
/// -1e-12 or a total more than 1e-9 away from 1.
double shannon_entropy(std::span<const double> probs);

/// h(x); x is clamped into [0,1] if it lies within 1e-12 of the interval.
double binary_entropy(double x);

double von_neumann_entropy(const DensityMatrix& rho);

/// For raw matrices: requires Hermitian, trace 1 and PSD within 1e-9.
double von_neumann_entropy(const ComplexMatrix& rho);

/// S(AB) - S(B); negative for some entangled states.
double conditional_entropy(const DensityMatrix& rho);

/// S(A) + S(B) - S(AB)
double mutual_information(const DensityMatrix& rho);

/// Shannon entropy of the outcome distribution of `x` measured on A.
double outcome_entropy(const DensityMatrix& rho, const ProjectiveObservable& x);

/// S(rho^B) - sum_i p_i S(rho^B_i) for an outcome ensemble.
double holevo(const MeasurementEnsemble& ensemble);

/// Holevo quantity I(P;B) of the ensemble Alice prepares on B by measuring P.
double holevo(const DensityMatrix& rho, const ProjectiveObservable& p);

/// I(A;B) - I(X;B) - I(Z;B)
double delta(const DensityMatrix& rho, const ProjectiveObservable& x,
             const ProjectiveObservable& z);

/// log2 dA + S(A) - H(X) - H(Z). Lower-bounds delta for complementary X, Z.
double delta_floor(const DensityMatrix& rho, const ProjectiveObservable& x,
                   const ProjectiveObservable& z);

struct OptimizerConfig {
  int grid_theta = 60;     // points on [0, pi/2], endpoints included
  int grid_phi = 120;      // points on [0, 2 pi)
  double refine_tol = 1e-6;  // pattern search stops once both steps are below this
  int max_iterations = 100000;
};

struct OptimizerTrace {
  double grid_best = 0.0;
  double refined_best = 0.0;
  int iterations = 0;
};

struct CorrelationReport {
  double classical_correlation = 0.0;  // J_A
  double discord = 0.0;                // D_A = I(A;B) - J_A
  double mutual_information = 0.0;
  BlochDirection optimal_direction{{0.0, 0.0, 1.0}};
  OptimizerTrace trace;
  /// J_A is maximized over rank-one projective qubit measurements, not over
  /// general POVMs.
  bool projective_only = true;
};

/// Classical correlation J_A and discord D_A for a state with a qubit A.
/// Grid search over the upper Bloch hemisphere followed by a pattern search in
/// (theta, phi) that halves its step until it drops below cfg.refine_tol.
/// Throws UnsupportedError when dA != 2.
CorrelationReport classical_correlation(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

}  // namespace qeur
