#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qeur {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Maximum |M_ij - conj(M_ji)| for a matrix to be treated as Hermitian.
inline constexpr double kHermitianTol = 1e-10;

/// Local dimensions of a bipartite system. A is the left (slow) tensor factor,
/// so the product basis is ordered |00>, |01>, |10>, |11> for two qubits.
struct Dims {
  int a = 1;
  int b = 1;

  [[nodiscard]] int total() const { return a * b; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Subsystem { A, B };

ComplexMatrix identity(int dim);

/// Pauli matrix for axis 0 (x), 1 (y) or 2 (z).
ComplexMatrix pauli(int axis);

/// |v><v|
ComplexMatrix projector(const ComplexVector& v);

/// Kronecker product with `a` as the slow (row-major, left-factor-major) index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix of subsystem `keep`. Throws DimensionError unless `m` is
/// square with side dims.a * dims.b.
ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Subsystem keep);

/// max_ij |m_ij - conj(m_ji)|; infinity for non-square input.
double hermiticity_residual(const ComplexMatrix& m);

/// (m + m^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

struct Eigensystem {
  RealVector values;     // descending
  ComplexMatrix vectors; // column k belongs to values[k]
};

/// Eigen-decomposition of a Hermitian matrix. The input is symmetrized before
/// decomposition; inputs further than kHermitianTol from Hermitian are
/// rejected with ValidationError. Equal eigenvalues keep the solver's
/// original order.
Eigensystem herm_eigensystem(const ComplexMatrix& m);

/// Eigenvalues only, descending. Same contract as herm_eigensystem.
RealVector herm_eigenvalues(const ComplexMatrix& m);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& m);

}  // namespace qeur
