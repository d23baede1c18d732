#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "qeur/matops.hpp"

namespace qeur {

/// Tolerance on trace, Hermiticity and smallest eigenvalue of a state.
inline constexpr double kStateTol = 1e-10;

struct InvariantCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<InvariantCheck> checks;

  [[nodiscard]] bool ok() const;
  /// First failed check, or nullptr when everything passed.
  [[nodiscard]] const InvariantCheck* first_failure() const;
};

/// Checks `m` against the density-matrix invariants for local dimensions
/// `dims`: "dimension", "hermitian", "trace", "psd". When the dimension check
/// fails the remaining checks are not evaluated.
ValidationReport validate(const ComplexMatrix& m, Dims dims);

/// A bipartite density matrix rho^AB. Single-system states use Dims{d, 1}.
class DensityMatrix {
 public:
  /// Validates and throws ValidationError naming the first violated invariant.
  DensityMatrix(ComplexMatrix mat, Dims dims);

  /// Wraps a matrix that is a state by construction (e.g. a conditional state
  /// produced by a measurement). Only symmetrizes; no spectral check.
  static DensityMatrix trusted(ComplexMatrix mat, Dims dims);

  [[nodiscard]] const ComplexMatrix& matrix() const { return mat_; }
  [[nodiscard]] Dims dims() const { return dims_; }
  [[nodiscard]] int dim() const { return dims_.total(); }

  /// Marginal on `keep`, as a single-system state.
  [[nodiscard]] DensityMatrix reduced(Subsystem keep) const;

 private:
  struct TrustedTag {};
  DensityMatrix(TrustedTag, ComplexMatrix mat, Dims dims);

  ComplexMatrix mat_;
  Dims dims_;
};

ValidationReport validate(const DensityMatrix& rho);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// |Phi+-> = (|00> +- |11>)/sqrt2, |Psi+-> = (|01> +- |10>)/sqrt2.
ComplexVector bell_vector(BellState which);

namespace family {

/// sum_i sqrt(lambda_i) |i>|i>, dimensions lambda.size() on both sides.
struct PureSchmidt {
  std::vector<double> lambda;
};

/// (1-p)/4 I + p |Psi-><Psi-|
struct Werner {
  double p = 0.0;
};

/// (I + sum_i r_i sigma_i (x) sigma_i) / 4
struct BellDiagonal {
  std::array<double, 3> r{};
};

/// Bell-diagonal with r = (1-2p, -p, -p):
/// p |Psi-><Psi-| + (1-p)/2 (|Psi+><Psi+| + |Phi+><Phi+|)
struct BellDiagonalSpecial {
  double p = 0.0;
};

/// p |Psi+><Psi+| + (1-p) |11><11|
struct XStateSpecial {
  double p = 0.0;
};

struct Explicit {
  ComplexMatrix mat;
  Dims dims;
};

}  // namespace family

using StateFamilySpec =
    std::variant<family::PureSchmidt, family::Werner, family::BellDiagonal,
                 family::BellDiagonalSpecial, family::XStateSpecial, family::Explicit>;

/// Ingestion name of the variant ("werner", "bell_diagonal", ..., "explicit").
std::string family_name(const StateFamilySpec& spec);

/// Builds and validates the state. Out-of-range parameters and invalid
/// results raise ValidationError naming the violated invariant.
DensityMatrix build(const StateFamilySpec& spec);

/// T_ij = tr(rho sigma_i (x) sigma_j) for a two-qubit state.
RealMatrix correlation_matrix(const DensityMatrix& rho);

}  // namespace qeur
