#include "qeur/measure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "qeur/error.hpp"

namespace qeur {

namespace {

constexpr double kUnitNormTol = 1e-12;
constexpr double kOrthonormalTol = 1e-10;

void require_same_dim(const ProjectiveObservable& x, const ProjectiveObservable& z) {
  if (x.dim() != z.dim()) {
    throw DimensionError("observables act on spaces of different dimension (" +
                         std::to_string(x.dim()) + " vs " + std::to_string(z.dim()) + ")");
  }
}

void require_acts_on_a(const DensityMatrix& rho, const ProjectiveObservable& x) {
  if (x.dim() != rho.dims().a) {
    throw DimensionError("observable dimension " + std::to_string(x.dim()) +
                         " does not match subsystem A dimension " +
                         std::to_string(rho.dims().a));
  }
}

// <x| (x) I  rho  |x> (x) I, i.e. p_i rho^B_i before normalization.
ComplexMatrix conditional_block(const DensityMatrix& rho, const ComplexVector& x) {
  const int da = rho.dims().a;
  const int db = rho.dims().b;
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int a = 0; a < da; ++a) {
    for (int b = 0; b < da; ++b) {
      const Complex w = std::conj(x[a]) * x[b];
      if (w == Complex{}) continue;
      out += w * m.block(a * db, b * db, db, db);
    }
  }
  return out;
}

}  // namespace

BlochDirection::BlochDirection(const std::array<double, 3>& n) : n_(n) {
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!(std::abs(norm - 1.0) <= kUnitNormTol)) {
    std::ostringstream os;
    os << "unit norm invariant violated: Bloch vector has norm " << norm;
    throw ValidationError(os.str());
  }
}

BlochDirection BlochDirection::from_angles(double theta, double phi) {
  std::array<double, 3> n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                          std::cos(theta)};
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  for (double& c : n) c /= norm;
  return BlochDirection(n);
}

double BlochDirection::theta() const { return std::acos(std::clamp(n_[2], -1.0, 1.0)); }

double BlochDirection::phi() const {
  if (n_[0] == 0.0 && n_[1] == 0.0) return 0.0;
  return std::atan2(n_[1], n_[0]);
}

ProjectiveObservable::ProjectiveObservable(ComplexMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols() || basis_.rows() == 0) {
    throw DimensionError("observable basis must be a non-empty square matrix of column vectors");
  }
  const ComplexMatrix gram = basis_.adjoint() * basis_;
  const double residual = (gram - identity(dim())).cwiseAbs().maxCoeff();
  if (!(residual <= kOrthonormalTol)) {
    std::ostringstream os;
    os << "orthonormal basis invariant violated (Gram residual " << residual << ")";
    throw ValidationError(os.str());
  }
}

ComplexMatrix ProjectiveObservable::projector(int i) const { return qeur::projector(vector(i)); }

ProjectiveObservable observable_from_bloch(const BlochDirection& n) {
  const double half = 0.5 * n.theta();
  const Complex phase = std::polar(1.0, n.phi());
  ComplexMatrix basis(2, 2);
  basis << std::cos(half), std::sin(half),  //
      phase * std::sin(half), -phase * std::cos(half);
  return ProjectiveObservable(basis);
}

ProjectiveObservable pauli_observable(int axis) {
  std::array<double, 3> n{0.0, 0.0, 0.0};
  n.at(static_cast<std::size_t>(axis)) = 1.0;
  return observable_from_bloch(BlochDirection(n));
}

RealMatrix overlap_matrix(const ProjectiveObservable& x, const ProjectiveObservable& z) {
  require_same_dim(x, z);
  return (x.basis().adjoint() * z.basis()).cwiseAbs2();
}

double q_mu(const ProjectiveObservable& x, const ProjectiveObservable& z) {
  return -std::log2(overlap_matrix(x, z).maxCoeff());
}

double coles_piani_q_from_overlaps(double c, double c2) {
  return -std::log2(c) + 0.5 * (1.0 - std::sqrt(c)) * std::log2(c / c2);
}

double q_prime(const ProjectiveObservable& x, const ProjectiveObservable& z) {
  const RealMatrix c = overlap_matrix(x, z);
  std::vector<double> entries(c.data(), c.data() + c.size());
  if (entries.size() < 2) return q_mu(x, z);
  std::partial_sort(entries.begin(), entries.begin() + 2, entries.end(), std::greater<>());
  return coles_piani_q_from_overlaps(entries[0], entries[1]);
}

DensityMatrix post_measurement_state(const DensityMatrix& rho, const ProjectiveObservable& x) {
  require_acts_on_a(rho, x);
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (int i = 0; i < x.dim(); ++i) {
    out += tensor(x.projector(i), conditional_block(rho, x.vector(i)));
  }
  return DensityMatrix::trusted(std::move(out), rho.dims());
}

MeasurementEnsemble outcome_ensemble(const DensityMatrix& rho, const ProjectiveObservable& x) {
  require_acts_on_a(rho, x);
  const int db = rho.dims().b;
  MeasurementEnsemble ens;
  ens.probs.reserve(static_cast<std::size_t>(x.dim()));
  ens.cond_states.reserve(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    ComplexMatrix block = conditional_block(rho, x.vector(i));
    const double p = std::max(0.0, block.trace().real());
    ens.probs.push_back(p);
    if (p < kNegligibleProbability) {
      ens.cond_states.push_back(DensityMatrix::trusted(identity(db) / db, Dims{db, 1}));
    } else {
      ens.cond_states.push_back(DensityMatrix::trusted(block / p, Dims{db, 1}));
    }
  }
  return ens;
}

std::array<BlochDirection, 3> ranked_correlation_axes(const DensityMatrix& rho) {
  const RealMatrix t = correlation_matrix(rho);
  double off_diagonal = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) off_diagonal = std::max(off_diagonal, std::abs(t(i, j)));
    }
  }

  std::array<std::array<double, 3>, 3> axes{};
  if (off_diagonal <= 1e-12) {
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
      return std::abs(t(l, l)) > std::abs(t(r, r));
    });
    for (std::size_t k = 0; k < 3; ++k) axes[k][static_cast<std::size_t>(order[k])] = 1.0;
  } else {
    // Rows of T index A's Bloch axis, so A's directions are left singular vectors.
    Eigen::JacobiSVD<RealMatrix> svd(t, Eigen::ComputeFullU);
    for (std::size_t k = 0; k < 3; ++k) {
      Eigen::Vector3d u = svd.matrixU().col(static_cast<Eigen::Index>(k));
      // Sign convention: first non-negligible component positive.
      for (int c = 0; c < 3; ++c) {
        if (std::abs(u[c]) > 1e-12) {
          if (u[c] < 0) u = -u;
          break;
        }
      }
      u.normalize();
      axes[k] = {u[0], u[1], u[2]};
    }
  }
  return {BlochDirection(axes[0]), BlochDirection(axes[1]), BlochDirection(axes[2])};
}

}  // namespace qeur
