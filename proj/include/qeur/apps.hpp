#pragma once

#include "qeur/bounds.hpp"

namespace qeur {

/// Margins are threshold minus actual uncertainty; a flag is raised when its
/// margin exceeds 1e-9.
struct WitnessVerdict {
  bool entangled_by_berta = false;
  bool entangled_by_ours = false;
  double margin_berta = 0.0;
  double margin_ours = 0.0;
};

struct FanoInputs {
  double pe_x = 0.0;
  double pe_z = 0.0;
  int d = 2;
};

/// Entanglement test: S(X|B) + S(Z|B) below q_MU (Berta) or below
/// q_MU + max{0, delta} (ours) certifies entanglement.
WitnessVerdict witness(const DensityMatrix& rho, const ProjectiveObservable& x,
                       const ProjectiveObservable& z);

/// Minimum error of discriminating the two conditional states with their
/// priors: (1 - ||p0 rho0 - p1 rho1||_1) / 2. Throws UnsupportedError for
/// anything but two outcomes.
double helstrom_error(const MeasurementEnsemble& ensemble);

/// h(pe_x) + pe_x log2(d-1) + h(pe_z) + pe_z log2(d-1)
double fano_term(const FanoInputs& f);

struct EofBound {
  double value = 0.0;
  bool vacuous = false;  // value < 0, reported unclamped
  double fano = 0.0;
  double pe_x = 0.0;
  double pe_z = 0.0;
};

/// q_MU + max{0, delta} - b_F with Helstrom-optimal guessing errors.
EofBound eof_lower_bound(const DensityMatrix& rho, const ProjectiveObservable& x,
                         const ProjectiveObservable& z);

/// S(rho^B) + b_F - q_MU - max{0, delta}
double common_randomness_upper_bound(const DensityMatrix& rho, const ProjectiveObservable& x,
                                     const ProjectiveObservable& z);

struct ApplicationsReport {
  WitnessVerdict witness;
  EofBound eof;
  double crand_upper = 0.0;
  double s_b = 0.0;
};

ApplicationsReport applications_report(const DensityMatrix& rho, const ProjectiveObservable& x,
                                       const ProjectiveObservable& z);

}  // namespace qeur
