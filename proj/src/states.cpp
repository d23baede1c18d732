#include "qeur/states.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "qeur/error.hpp"

namespace qeur {

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const InvariantCheck* ValidationReport::first_failure() const {
  for (const auto& check : checks) {
    if (!check.passed) return &check;
  }
  return nullptr;
}

ValidationReport validate(const ComplexMatrix& m, Dims dims) {
  ValidationReport report;
  const bool square = m.rows() == m.cols();
  const bool dims_ok = dims.a > 0 && dims.b > 0 && square &&
                       m.rows() == static_cast<Eigen::Index>(dims.total());
  report.checks.push_back(
      {"dimension", dims_ok,
       dims_ok ? 0.0 : std::abs(static_cast<double>(m.rows()) - dims.a * dims.b)});
  if (!dims_ok) return report;

  const double herm = hermiticity_residual(m);
  report.checks.push_back({"hermitian", herm <= kStateTol, herm});

  const double trace = std::abs(m.trace() - Complex(1.0, 0.0));
  report.checks.push_back({"trace", trace <= kStateTol, trace});

  // The spectral check runs on the Hermitian part so it stays meaningful even
  // when the hermitian check itself failed.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  const double psd = std::max(0.0, -min_eig);
  report.checks.push_back({"psd", min_eig >= -kStateTol, psd});
  return report;
}

namespace {

std::string describe(const InvariantCheck& check) {
  std::ostringstream os;
  os << check.name << " invariant violated (residual " << check.residual << ")";
  return os.str();
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, Dims dims) : mat_(std::move(mat)), dims_(dims) {
  const auto report = validate(mat_, dims_);
  if (const auto* failure = report.first_failure()) {
    throw ValidationError(describe(*failure));
  }
  mat_ = hermitian_part(mat_);
}

DensityMatrix::DensityMatrix(TrustedTag, ComplexMatrix mat, Dims dims)
    : mat_(hermitian_part(mat)), dims_(dims) {}

DensityMatrix DensityMatrix::trusted(ComplexMatrix mat, Dims dims) {
  if (mat.rows() != mat.cols() || mat.rows() != static_cast<Eigen::Index>(dims.total())) {
    throw DimensionError("DensityMatrix: matrix size does not match dims");
  }
  return DensityMatrix(TrustedTag{}, std::move(mat), dims);
}

DensityMatrix DensityMatrix::reduced(Subsystem keep) const {
  const int d = keep == Subsystem::A ? dims_.a : dims_.b;
  return trusted(partial_trace(mat_, dims_, keep), Dims{d, 1});
}

ValidationReport validate(const DensityMatrix& rho) { return validate(rho.matrix(), rho.dims()); }

ComplexVector bell_vector(BellState which) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(4);
  switch (which) {
    case BellState::PhiPlus:
      v[0] = s;
      v[3] = s;
      break;
    case BellState::PhiMinus:
      v[0] = s;
      v[3] = -s;
      break;
    case BellState::PsiPlus:
      v[1] = s;
      v[2] = s;
      break;
    case BellState::PsiMinus:
      v[1] = s;
      v[2] = -s;
      break;
  }
  return v;
}

namespace {

void require_probability(double p, const char* family) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "parameter range invariant violated: " << family << " needs p in [0,1], got " << p;
    throw ValidationError(os.str());
  }
}

DensityMatrix build_one(const family::PureSchmidt& spec) {
  const auto k = static_cast<int>(spec.lambda.size());
  if (k == 0) throw ValidationError("schmidt invariant violated: empty coefficient list");
  for (double l : spec.lambda) {
    if (!(l >= 0.0)) throw ValidationError("schmidt invariant violated: negative coefficient");
  }
  const double sum = std::accumulate(spec.lambda.begin(), spec.lambda.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "schmidt invariant violated: coefficients sum to " << sum;
    throw ValidationError(os.str());
  }
  ComplexVector psi = ComplexVector::Zero(k * k);
  for (int i = 0; i < k; ++i) psi[i * k + i] = std::sqrt(spec.lambda[static_cast<std::size_t>(i)]);
  return DensityMatrix(projector(psi), Dims{k, k});
}

DensityMatrix build_one(const family::Werner& spec) {
  require_probability(spec.p, "werner");
  const ComplexMatrix mat =
      (1.0 - spec.p) / 4.0 * identity(4) + spec.p * projector(bell_vector(BellState::PsiMinus));
  return DensityMatrix(mat, Dims{2, 2});
}

DensityMatrix build_one(const family::BellDiagonal& spec) {
  ComplexMatrix mat = identity(4);
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(spec.r[static_cast<std::size_t>(i)])) {
      throw ValidationError("parameter range invariant violated: non-finite correlation vector");
    }
    mat += spec.r[static_cast<std::size_t>(i)] * tensor(pauli(i), pauli(i));
  }
  mat /= 4.0;
  const auto report = validate(mat, Dims{2, 2});
  if (const auto* failure = report.first_failure()) {
    throw ValidationError("bell-diagonal tetrahedron: " + describe(*failure));
  }
  return DensityMatrix(mat, Dims{2, 2});
}

DensityMatrix build_one(const family::BellDiagonalSpecial& spec) {
  require_probability(spec.p, "bell_diagonal_special");
  const ComplexMatrix mat = spec.p * projector(bell_vector(BellState::PsiMinus)) +
                            (1.0 - spec.p) / 2.0 *
                                (projector(bell_vector(BellState::PsiPlus)) +
                                 projector(bell_vector(BellState::PhiPlus)));
  return DensityMatrix(mat, Dims{2, 2});
}

DensityMatrix build_one(const family::XStateSpecial& spec) {
  require_probability(spec.p, "xstate");
  ComplexVector one_one = ComplexVector::Zero(4);
  one_one[3] = 1.0;
  const ComplexMatrix mat =
      spec.p * projector(bell_vector(BellState::PsiPlus)) + (1.0 - spec.p) * projector(one_one);
  return DensityMatrix(mat, Dims{2, 2});
}

DensityMatrix build_one(const family::Explicit& spec) { return DensityMatrix(spec.mat, spec.dims); }

}  // namespace

std::string family_name(const StateFamilySpec& spec) {
  struct Namer {
    std::string operator()(const family::PureSchmidt&) const { return "pure_schmidt"; }
    std::string operator()(const family::Werner&) const { return "werner"; }
    std::string operator()(const family::BellDiagonal&) const { return "bell_diagonal"; }
    std::string operator()(const family::BellDiagonalSpecial&) const {
      return "bell_diagonal_special";
    }
    std::string operator()(const family::XStateSpecial&) const { return "xstate"; }
    std::string operator()(const family::Explicit&) const { return "explicit"; }
  };
  return std::visit(Namer{}, spec);
}

DensityMatrix build(const StateFamilySpec& spec) {
  return std::visit([](const auto& s) { return build_one(s); }, spec);
}

RealMatrix correlation_matrix(const DensityMatrix& rho) {
  if (!(rho.dims() == Dims{2, 2})) {
    throw DimensionError("correlation_matrix needs a two-qubit state");
  }
  RealMatrix t(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t(i, j) = (rho.matrix() * tensor(pauli(i), pauli(j))).trace().real();
    }
  }
  return t;
}

}  // namespace qeur
