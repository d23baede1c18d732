#include "qeur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qeur/error.hpp"

namespace qeur {

double actual_uncertainty(const DensityMatrix& rho, const ProjectiveObservable& x,
                          const ProjectiveObservable& z) {
  return conditional_entropy(post_measurement_state(rho, x)) +
         conditional_entropy(post_measurement_state(rho, z));
}

double bound_maassen_uffink(const ProjectiveObservable& x, const ProjectiveObservable& z) {
  return q_mu(x, z);
}

double bound_mu_mixed(const DensityMatrix& rho, const ProjectiveObservable& x,
                      const ProjectiveObservable& z) {
  return q_mu(x, z) + von_neumann_entropy(rho.reduced(Subsystem::A));
}

double bound_berta(const DensityMatrix& rho, const ProjectiveObservable& x,
                   const ProjectiveObservable& z) {
  return q_mu(x, z) + conditional_entropy(rho);
}

double bound_coles_piani(const DensityMatrix& rho, const ProjectiveObservable& x,
                         const ProjectiveObservable& z) {
  return q_prime(x, z) + conditional_entropy(rho);
}

double bound_pati(const DensityMatrix& rho, const ProjectiveObservable& x,
                  const ProjectiveObservable& z, const CorrelationReport& corr) {
  return bound_berta(rho, x, z) + std::max(0.0, corr.discord - corr.classical_correlation);
}

double bound_ours(const DensityMatrix& rho, const ProjectiveObservable& x,
                  const ProjectiveObservable& z) {
  return bound_berta(rho, x, z) + std::max(0.0, delta(rho, x, z));
}

BoundsReport bounds_report(const DensityMatrix& rho, const ProjectiveObservable& x,
                           const ProjectiveObservable& z,
                           const std::optional<CorrelationReport>& corr) {
  BoundsReport r;
  r.q_mu = q_mu(x, z);
  r.q_prime = q_prime(x, z);
  r.s_cond = conditional_entropy(rho);
  r.i_ab = mutual_information(rho);
  r.i_xb = holevo(rho, x);
  r.i_zb = holevo(rho, z);
  r.delta = r.i_ab - r.i_xb - r.i_zb;
  r.bound_mu = r.q_mu;
  r.bound_mu_mixed = r.q_mu + von_neumann_entropy(rho.reduced(Subsystem::A));
  r.bound_berta = r.q_mu + r.s_cond;
  r.bound_coles_piani = r.q_prime + r.s_cond;
  r.bound_ours = r.bound_berta + std::max(0.0, r.delta);
  r.actual = actual_uncertainty(rho, x, z);
  if (corr) {
    r.pati_correction = std::max(0.0, corr->discord - corr->classical_correlation);
    r.bound_pati = r.bound_berta + *r.pati_correction;
  }
  return r;
}

namespace {

// x log2 y with the convention 0 log 0 = 0 (x = 0 wins whatever y is).
double xlog2(double x, double y) { return x == 0.0 ? 0.0 : x * std::log2(y); }

double h(double x) { return binary_entropy(x); }

ClosedFormCurves bell_diagonal_special(double p, ObservablePair pair) {
  // Holevo quantities along the |r| = |1-2p| axis and the two |r| = p axes.
  const double along_r1 = 1.0 - h(p);
  const double along_r23 = 1.0 - h((1.0 + p) / 2.0);
  const double hi = std::max(along_r1, along_r23);
  const double lo = std::min(along_r1, along_r23);

  ClosedFormCurves c;
  const double s_ab = -xlog2(p, p) - xlog2(1.0 - p, (1.0 - p) / 2.0);
  c.s_cond = s_ab - 1.0;
  c.i_ab = 2.0 - s_ab;
  c.j_a = hi;
  c.i_xb = hi;
  // The second-ranked axis always has |r| = p; the third takes what is left.
  c.i_zb = pair == ObservablePair::XY ? along_r23 : lo;
  c.berta = s_ab;
  c.pati = s_ab + std::max(0.0, 2.0 + xlog2(p, p) + xlog2(1.0 - p, (1.0 - p) / 2.0) - 2.0 * hi);
  c.ours = pair == ObservablePair::XY ? 2.0 - hi - (1.0 - h((1.0 + p) / 2.0)) : 2.0 - hi - lo;
  return c;
}

ClosedFormCurves xstate_special(double p) {
  ClosedFormCurves c;
  const double half = p / 2.0;
  c.s_cond = -xlog2(p, p) - xlog2(1.0 - p, 1.0 - p) + xlog2(half, half) +
             xlog2(1.0 - half, 1.0 - half);
  c.i_ab = xlog2(p, p) + xlog2(1.0 - p, 1.0 - p) - 2.0 * xlog2(half, half) -
           2.0 * xlog2(1.0 - half, 1.0 - half);
  const double root = std::sqrt(1.0 - 2.0 * p + 2.0 * p * p);
  const double lam_minus = 0.5 * (1.0 - root);
  const double lam_plus = 0.5 * (1.0 + root);
  const double s_b = -xlog2(half, half) - xlog2(1.0 - half, 1.0 - half);
  c.i_xb = s_b + xlog2(lam_minus, lam_minus) + xlog2(lam_plus, lam_plus);
  c.i_zb = s_b + xlog2(half, p / (2.0 - p)) + xlog2(1.0 - p, 2.0 * (1.0 - p) / (2.0 - p));
  c.j_a = c.i_xb;
  const double discord = c.i_ab - c.j_a;
  c.berta = 1.0 + c.s_cond;
  c.pati = c.berta + std::max(0.0, discord - c.j_a);
  c.ours = c.berta + std::max(0.0, c.i_ab - c.i_xb - c.i_zb);
  return c;
}

}  // namespace

ClosedFormCurves closed_form_curves(ClosedFormFamily family, double p, ObservablePair pair) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "parameter range invariant violated: closed forms need p in [0,1], got " << p;
    throw ValidationError(os.str());
  }
  if (family == ClosedFormFamily::BellDiagonalSpecial) return bell_diagonal_special(p, pair);
  if (pair != ObservablePair::XZ) {
    throw UnsupportedError("closed_form_curves: the X-state family has closed forms for XZ only");
  }
  return xstate_special(p);
}

}  // namespace qeur
