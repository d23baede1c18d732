#pragma once

#include <optional>

#include "qeur/infoquant.hpp"

namespace qeur {

/// Every bound for one (state, X, Z) triple, with its ingredients.
struct BoundsReport {
  double q_mu = 0.0;
  double q_prime = 0.0;
  double s_cond = 0.0;  // S(A|B)
  double i_ab = 0.0;
  double i_xb = 0.0;
  double i_zb = 0.0;
  double delta = 0.0;
  double bound_mu = 0.0;        // Maassen-Uffink, no memory
  double bound_mu_mixed = 0.0;  // q_MU + S(A)
  double bound_berta = 0.0;
  double bound_coles_piani = 0.0;
  std::optional<double> bound_pati;  // needs a CorrelationReport
  double bound_ours = 0.0;
  double actual = 0.0;  // S(X|B) + S(Z|B)
  std::optional<double> pati_correction;  // max{0, D_A - J_A}
};

/// S(X|B) + S(Z|B) on the post-measurement states.
double actual_uncertainty(const DensityMatrix& rho, const ProjectiveObservable& x,
                          const ProjectiveObservable& z);

double bound_maassen_uffink(const ProjectiveObservable& x, const ProjectiveObservable& z);

/// q_MU + S(A)
double bound_mu_mixed(const DensityMatrix& rho, const ProjectiveObservable& x,
                      const ProjectiveObservable& z);

/// q_MU + S(A|B)
double bound_berta(const DensityMatrix& rho, const ProjectiveObservable& x,
                   const ProjectiveObservable& z);

/// q' + S(A|B)
double bound_coles_piani(const DensityMatrix& rho, const ProjectiveObservable& x,
                         const ProjectiveObservable& z);

/// Berta's bound plus max{0, D_A - J_A}. `corr` must describe the same state.
double bound_pati(const DensityMatrix& rho, const ProjectiveObservable& x,
                  const ProjectiveObservable& z, const CorrelationReport& corr);

/// Berta's bound plus max{0, delta}.
double bound_ours(const DensityMatrix& rho, const ProjectiveObservable& x,
                  const ProjectiveObservable& z);

/// Evaluates everything in one pass; bound_pati and pati_correction are filled
/// only when `corr` is given.
BoundsReport bounds_report(const DensityMatrix& rho, const ProjectiveObservable& x,
                           const ProjectiveObservable& z,
                           const std::optional<CorrelationReport>& corr = std::nullopt);

enum class ClosedFormFamily { BellDiagonalSpecial, XStateSpecial };

/// XY and XZ refer to the ranked correlation axes of the family member (see
/// ranked_correlation_axes); for XStateSpecial only XZ = (sigma_x, sigma_z)
/// has a closed form.
enum class ObservablePair { XY, XZ };

struct ClosedFormCurves {
  double s_cond = 0.0;
  double i_ab = 0.0;
  double i_xb = 0.0;
  double i_zb = 0.0;
  double j_a = 0.0;
  double berta = 0.0;
  double pati = 0.0;
  double ours = 0.0;
};

/// Analytic values for the two one-parameter families, with 0 log 0 = 0 at the
/// endpoints. Throws ValidationError for p outside [0,1] and UnsupportedError
/// for the XY pair on XStateSpecial.
ClosedFormCurves closed_form_curves(ClosedFormFamily family, double p, ObservablePair pair);

}  // namespace qeur
