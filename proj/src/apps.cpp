#include "qeur/apps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qeur/error.hpp"

namespace qeur {

namespace {

constexpr double kWitnessMargin = 1e-9;

void require_two_outcomes(const ProjectiveObservable& x) {
  if (x.dim() != 2) {
    throw UnsupportedError("two-outcome observables required for Helstrom discrimination, got " +
                           std::to_string(x.dim()) + " outcomes");
  }
}

// Shared pieces of the threshold q_MU + max{0, delta} and the Fano penalty.
struct FanoSide {
  double threshold = 0.0;
  EofBound eof;
};

FanoSide fano_side(const DensityMatrix& rho, const ProjectiveObservable& x,
                   const ProjectiveObservable& z) {
  require_two_outcomes(x);
  require_two_outcomes(z);
  FanoSide side;
  side.threshold = q_mu(x, z) + std::max(0.0, delta(rho, x, z));
  side.eof.pe_x = helstrom_error(outcome_ensemble(rho, x));
  side.eof.pe_z = helstrom_error(outcome_ensemble(rho, z));
  side.eof.fano = fano_term(FanoInputs{side.eof.pe_x, side.eof.pe_z, x.dim()});
  side.eof.value = side.threshold - side.eof.fano;
  side.eof.vacuous = side.eof.value < 0.0;
  return side;
}

}  // namespace

WitnessVerdict witness(const DensityMatrix& rho, const ProjectiveObservable& x,
                       const ProjectiveObservable& z) {
  const double actual = actual_uncertainty(rho, x, z);
  const double qmu = q_mu(x, z);
  WitnessVerdict v;
  v.margin_berta = qmu - actual;
  v.margin_ours = qmu + std::max(0.0, delta(rho, x, z)) - actual;
  v.entangled_by_berta = v.margin_berta > kWitnessMargin;
  v.entangled_by_ours = v.margin_ours > kWitnessMargin;
  return v;
}

double helstrom_error(const MeasurementEnsemble& ensemble) {
  if (ensemble.probs.size() != 2 || ensemble.cond_states.size() != 2) {
    throw UnsupportedError("helstrom_error supports exactly two outcomes, got " +
                           std::to_string(ensemble.probs.size()));
  }
  const ComplexMatrix difference = ensemble.probs[0] * ensemble.cond_states[0].matrix() -
                                   ensemble.probs[1] * ensemble.cond_states[1].matrix();
  const double pe = 0.5 * (1.0 - trace_norm_hermitian(hermitian_part(difference)));
  return std::clamp(pe, 0.0, 0.5);
}

double fano_term(const FanoInputs& f) {
  if (!(f.pe_x >= 0.0 && f.pe_x <= 1.0 && f.pe_z >= 0.0 && f.pe_z <= 1.0) || f.d < 2) {
    std::ostringstream os;
    os << "fano inputs invariant violated: pe_x=" << f.pe_x << " pe_z=" << f.pe_z
       << " d=" << f.d;
    throw ValidationError(os.str());
  }
  const double log_rest = std::log2(static_cast<double>(f.d - 1));
  return binary_entropy(f.pe_x) + f.pe_x * log_rest + binary_entropy(f.pe_z) +
         f.pe_z * log_rest;
}

EofBound eof_lower_bound(const DensityMatrix& rho, const ProjectiveObservable& x,
                         const ProjectiveObservable& z) {
  return fano_side(rho, x, z).eof;
}

double common_randomness_upper_bound(const DensityMatrix& rho, const ProjectiveObservable& x,
                                     const ProjectiveObservable& z) {
  const auto side = fano_side(rho, x, z);
  return von_neumann_entropy(rho.reduced(Subsystem::B)) + side.eof.fano - side.threshold;
}

ApplicationsReport applications_report(const DensityMatrix& rho, const ProjectiveObservable& x,
                                       const ProjectiveObservable& z) {
  ApplicationsReport r;
  r.witness = witness(rho, x, z);
  const auto side = fano_side(rho, x, z);
  r.eof = side.eof;
  r.s_b = von_neumann_entropy(rho.reduced(Subsystem::B));
  r.crand_upper = r.s_b + side.eof.fano - side.threshold;
  return r;
}

}  // namespace qeur
