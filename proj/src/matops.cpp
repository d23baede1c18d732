#include "qeur/matops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "qeur/error.hpp"

namespace qeur {

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix pauli(int axis) {
  ComplexMatrix s(2, 2);
  switch (axis) {
    case 0:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case 1:
      s << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
      break;
    case 2:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw std::out_of_range("pauli axis must be 0, 1 or 2");
  }
  return s;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Subsystem keep) {
  if (dims.a <= 0 || dims.b <= 0 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(dims.total())) {
    throw DimensionError("partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " but dims are " +
                         std::to_string(dims.a) + "x" + std::to_string(dims.b));
  }
  const int da = dims.a;
  const int db = dims.b;
  if (keep == Subsystem::A) {
    ComplexMatrix out(da, da);
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) {
        out(i, j) = m.block(i * db, j * db, db, db).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int i = 0; i < da; ++i) {
    out += m.block(i * db, i * db, db, db);
  }
  return out;
}

double hermiticity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

namespace {

ComplexMatrix checked_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("eigendecomposition needs a non-empty square matrix");
  }
  const double residual = hermiticity_residual(m);
  if (!(residual <= kHermitianTol)) {
    throw ValidationError("hermitian: residual " + std::to_string(residual) +
                          " exceeds tolerance");
  }
  return hermitian_part(m);
}

// Indices of `values` ordered by descending value; ties keep their position.
std::vector<Eigen::Index> descending_order(const RealVector& values) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index l, Eigen::Index r) { return values[l] > values[r]; });
  return order;
}

}  // namespace

Eigensystem herm_eigensystem(const ComplexMatrix& m) {
  const ComplexMatrix h = checked_hermitian(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("herm_eigensystem: eigen solver did not converge");
  }
  const auto order = descending_order(solver.eigenvalues());
  Eigensystem out{RealVector(h.rows()), ComplexMatrix(h.rows(), h.cols())};
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    out.values[idx] = solver.eigenvalues()[order[k]];
    out.vectors.col(idx) = solver.eigenvectors().col(order[k]);
  }
  return out;
}

RealVector herm_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix h = checked_hermitian(m);
  if (h.rows() == 1) return RealVector::Constant(1, h(0, 0).real());
  if (h.rows() == 2) {
    // Closed form; the optimizer spends most of its time here.
    const double mean = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double radius = std::hypot(0.5 * (h(0, 0).real() - h(1, 1).real()), std::abs(h(0, 1)));
    RealVector out(2);
    out << mean + radius, mean - radius;
    return out;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("herm_eigenvalues: eigen solver did not converge");
  }
  return solver.eigenvalues().reverse();
}

double trace_norm_hermitian(const ComplexMatrix& m) {
  return herm_eigenvalues(m).cwiseAbs().sum();
}

}  // namespace qeur
