#include "qeur/infoquant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qeur/error.hpp"

namespace qeur {

namespace {

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// Entropy of a spectrum that is a probability vector up to round-off.
double spectrum_entropy(const RealVector& eigenvalues) {
  double s = 0.0;
  for (double v : eigenvalues) s += entropy_term(std::clamp(v, 0.0, 1.0));
  return s;
}

}  // namespace

double shannon_entropy(std::span<const double> probs) {
  double total = 0.0;
  double s = 0.0;
  for (double p : probs) {
    if (!(p >= -1e-12)) {
      std::ostringstream os;
      os << "probability invariant violated: negative entry " << p;
      throw ValidationError(os.str());
    }
    total += p;
    s += entropy_term(std::max(p, 0.0));
  }
  if (!(std::abs(total - 1.0) <= 1e-9)) {
    std::ostringstream os;
    os << "probability invariant violated: entries sum to " << total;
    throw ValidationError(os.str());
  }
  return s;
}

double binary_entropy(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
    std::ostringstream os;
    os << "binary_entropy argument " << x << " outside [0,1]";
    throw ValidationError(os.str());
  }
  x = std::clamp(x, 0.0, 1.0);
  return entropy_term(x) + entropy_term(1.0 - x);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return spectrum_entropy(herm_eigenvalues(rho.matrix()));
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw DimensionError("von_neumann_entropy needs a non-empty square matrix");
  }
  const RealVector eig = herm_eigenvalues(rho);
  const double trace = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace > 1e-9) throw ValidationError("trace invariant violated in entropy argument");
  if (eig.minCoeff() < -1e-9) throw ValidationError("psd invariant violated in entropy argument");
  return spectrum_entropy(eig);
}

double conditional_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho) - von_neumann_entropy(rho.reduced(Subsystem::B));
}

double mutual_information(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.reduced(Subsystem::A)) +
         von_neumann_entropy(rho.reduced(Subsystem::B)) - von_neumann_entropy(rho);
}

double outcome_entropy(const DensityMatrix& rho, const ProjectiveObservable& x) {
  return shannon_entropy(outcome_ensemble(rho, x).probs);
}

double holevo(const MeasurementEnsemble& ensemble) {
  if (ensemble.cond_states.empty()) return 0.0;
  const int db = ensemble.cond_states.front().dim();
  ComplexMatrix average = ComplexMatrix::Zero(db, db);
  double conditional = 0.0;
  for (std::size_t i = 0; i < ensemble.probs.size(); ++i) {
    const double p = ensemble.probs[i];
    if (p < kNegligibleProbability) continue;
    average += p * ensemble.cond_states[i].matrix();
    conditional += p * von_neumann_entropy(ensemble.cond_states[i]);
  }
  return spectrum_entropy(herm_eigenvalues(hermitian_part(average))) - conditional;
}

double holevo(const DensityMatrix& rho, const ProjectiveObservable& p) {
  const auto ensemble = outcome_ensemble(rho, p);
  double conditional = 0.0;
  for (std::size_t i = 0; i < ensemble.probs.size(); ++i) {
    if (ensemble.probs[i] < kNegligibleProbability) continue;
    conditional += ensemble.probs[i] * von_neumann_entropy(ensemble.cond_states[i]);
  }
  return von_neumann_entropy(rho.reduced(Subsystem::B)) - conditional;
}

double delta(const DensityMatrix& rho, const ProjectiveObservable& x,
             const ProjectiveObservable& z) {
  if (x.dim() != z.dim()) throw DimensionError("delta: observables differ in dimension");
  return mutual_information(rho) - holevo(rho, x) - holevo(rho, z);
}

double delta_floor(const DensityMatrix& rho, const ProjectiveObservable& x,
                   const ProjectiveObservable& z) {
  if (x.dim() != z.dim()) throw DimensionError("delta_floor: observables differ in dimension");
  return std::log2(static_cast<double>(rho.dims().a)) +
         von_neumann_entropy(rho.reduced(Subsystem::A)) - outcome_entropy(rho, x) -
         outcome_entropy(rho, z);
}

namespace {

// Holevo quantity of the two-outcome measurement along (theta, phi), with the
// four dB x dB blocks of rho and S(rho^B) precomputed.
class BlochObjective {
 public:
  explicit BlochObjective(const DensityMatrix& rho) : db_(rho.dims().b) {
    const ComplexMatrix& m = rho.matrix();
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) blocks_[a][b] = m.block(a * db_, b * db_, db_, db_);
    }
    s_b_ = von_neumann_entropy(rho.reduced(Subsystem::B));
  }

  double operator()(double theta, double phi) const {
    const double half = 0.5 * theta;
    const Complex phase = std::polar(1.0, phi);
    const Complex plus[2] = {std::cos(half), phase * std::sin(half)};
    const Complex minus[2] = {std::sin(half), -phase * std::cos(half)};
    return s_b_ - weighted_entropy(plus) - weighted_entropy(minus);
  }

 private:
  double weighted_entropy(const Complex (&x)[2]) const {
    ComplexMatrix block = ComplexMatrix::Zero(db_, db_);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) block += std::conj(x[a]) * x[b] * blocks_[a][b];
    }
    const double p = block.trace().real();
    if (p < kNegligibleProbability) return 0.0;
    return p * spectrum_entropy(herm_eigenvalues(hermitian_part(block / p)));
  }

  int db_;
  ComplexMatrix blocks_[2][2];
  double s_b_ = 0.0;
};

}  // namespace

CorrelationReport classical_correlation(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  if (rho.dims().a != 2) {
    throw UnsupportedError("classical_correlation: Bloch optimizer needs a qubit A (dA = 2), got dA = " +
                           std::to_string(rho.dims().a));
  }
  if (cfg.grid_theta < 1 || cfg.grid_phi < 1 || !(cfg.refine_tol > 0.0)) {
    throw ValidationError("optimizer config invariant violated: grids must be >= 1 and refine_tol > 0");
  }
  const BlochObjective objective(rho);
  const double pi = std::numbers::pi;
  const double dtheta = cfg.grid_theta > 1 ? (pi / 2) / (cfg.grid_theta - 1) : pi / 2;
  const double dphi = 2 * pi / cfg.grid_phi;

  // Row-major scan; a later point only wins on strict improvement, so ties go
  // to the lowest (theta, phi) index.
  double best = -std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (int i = 0; i < cfg.grid_theta; ++i) {
    const double theta = i * dtheta;
    const int phi_points = i == 0 ? 1 : cfg.grid_phi;  // the pole is a single point
    for (int j = 0; j < phi_points; ++j) {
      const double phi = j * dphi;
      const double value = objective(theta, phi);
      if (value > best) {
        best = value;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  CorrelationReport report;
  report.trace.grid_best = best;

  double step_theta = dtheta;
  double step_phi = dphi;
  int iterations = 0;
  while ((step_theta >= cfg.refine_tol || step_phi >= cfg.refine_tol) &&
         iterations < cfg.max_iterations) {
    ++iterations;
    const double candidates[4][2] = {{best_theta + step_theta, best_phi},
                                     {best_theta - step_theta, best_phi},
                                     {best_theta, best_phi + step_phi},
                                     {best_theta, best_phi - step_phi}};
    int chosen = -1;
    double chosen_value = best;
    for (int k = 0; k < 4; ++k) {
      const double value = objective(candidates[k][0], candidates[k][1]);
      if (value > chosen_value) {
        chosen = k;
        chosen_value = value;
      }
    }
    if (chosen < 0) {
      step_theta *= 0.5;
      step_phi *= 0.5;
    } else {
      best = chosen_value;
      best_theta = candidates[chosen][0];
      best_phi = candidates[chosen][1];
    }
  }

  auto direction = BlochDirection::from_angles(best_theta, best_phi).components();
  // n and -n describe the same measurement; report the upper hemisphere.
  if (direction[2] < 0.0) {
    for (double& c : direction) c = -c;
  }
  for (double& c : direction) {
    if (c == 0.0) c = 0.0;  // no negative zeros in reports
  }

  report.classical_correlation = best;
  report.mutual_information = mutual_information(rho);
  report.discord = report.mutual_information - best;
  report.optimal_direction = BlochDirection(direction);
  report.trace.refined_best = best;
  report.trace.iterations = iterations;
  return report;
}

}  // namespace qeur
