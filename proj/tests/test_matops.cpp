#include "doctest.h"
#include "qeur/error.hpp"
#include "qeur/matops.hpp"
#include "qeur/states.hpp"
#include "support/random_states.hpp"

using namespace qeur;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix random_hermitian(int d, testing::Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return hermitian_part(g);
}

// Element-wise partial trace straight from the index definition.
ComplexMatrix partial_trace_by_indices(const ComplexMatrix& m, int da, int db, bool keep_a) {
  if (keep_a) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return out;
}

}  // namespace

TEST_CASE("tensor of identities and Paulis") {
  CHECK(max_abs(tensor(identity(2), identity(2)) - identity(4)) == 0.0);

  ComplexMatrix zz = ComplexMatrix::Zero(4, 4);
  zz.diagonal() << 1.0, -1.0, -1.0, 1.0;
  CHECK(max_abs(tensor(pauli(2), pauli(2)) - zz) == 0.0);

  ComplexVector ket00 = ComplexVector::Zero(4);
  ket00[0] = 1.0;
  ComplexVector ket10 = ComplexVector::Zero(4);
  ket10[2] = 1.0;
  CHECK((tensor(pauli(0), identity(2)) * ket00 - ket10).norm() == 0.0);
}

TEST_CASE("tensor trace is multiplicative and the product is associative") {
  testing::Rng rng(11);
  // Small-integer entries keep every product exact, so associativity can be
  // checked entry for entry.
  std::uniform_int_distribution<int> small(-4, 4);
  auto integer_matrix = [&](int d) {
    ComplexMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = Complex(small(rng), small(rng));
    return m;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_hermitian(2, rng);
    const auto b = random_hermitian(3, rng);
    CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) < 1e-12);

    const auto x = integer_matrix(2);
    const auto y = integer_matrix(3);
    const auto z = integer_matrix(2);
    CHECK(tensor(tensor(x, y), z) == tensor(x, tensor(y, z)));
  }
}

TEST_CASE("partial trace examples") {
  const auto singlet = projector(bell_vector(BellState::PsiMinus));
  CHECK(max_abs(partial_trace(singlet, {2, 2}, Subsystem::A) - identity(2) / 2.0) < 1e-15);

  ComplexMatrix r1(2, 2), r2(2, 2);
  r1 << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
  r2 << 0.4, 0.25, 0.25, 0.6;
  CHECK(max_abs(partial_trace(tensor(r1, r2), {2, 2}, Subsystem::A) - r1) < 1e-15);
  CHECK(max_abs(partial_trace(tensor(r1, r2), {2, 2}, Subsystem::B) - r2) < 1e-15);

  for (double p : {0.0, 0.3, 1.0}) {
    const auto rho = build(family::XStateSpecial{p});
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = p / 2;
    expected(1, 1) = 1 - p / 2;
    CHECK(max_abs(partial_trace(rho.matrix(), {2, 2}, Subsystem::A) - expected) < 1e-15);
    CHECK(max_abs(partial_trace(rho.matrix(), {2, 2}, Subsystem::B) - expected) < 1e-15);
  }
}

TEST_CASE("partial trace matches the index definition and scales by the traced factor") {
  testing::Rng rng(5);
  for (auto [da, db] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{4, 3}}) {
    const auto m = random_hermitian(da * db, rng);
    CHECK(max_abs(partial_trace(m, {da, db}, Subsystem::A) -
                  partial_trace_by_indices(m, da, db, true)) < 1e-12);
    CHECK(max_abs(partial_trace(m, {da, db}, Subsystem::B) -
                  partial_trace_by_indices(m, da, db, false)) < 1e-12);

    const auto a = random_hermitian(da, rng);
    const auto b = random_hermitian(db, rng);
    CHECK(max_abs(partial_trace(tensor(a, b), {da, db}, Subsystem::A) - a * b.trace()) < 1e-12);
    CHECK(max_abs(partial_trace(tensor(a, b), {da, db}, Subsystem::B) - b * a.trace()) < 1e-12);
    CHECK(std::abs(partial_trace(m, {da, db}, Subsystem::A).trace() - m.trace()) < 1e-12);
  }
}

TEST_CASE("partial trace rejects inconsistent dimensions") {
  CHECK_THROWS_AS(partial_trace(identity(4), {2, 3}, Subsystem::A), DimensionError);
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::Zero(4, 2), {2, 2}, Subsystem::B), DimensionError);
}

TEST_CASE("eigensystem examples") {
  auto z = herm_eigensystem(pauli(2));
  CHECK(z.values[0] == doctest::Approx(1.0));
  CHECK(z.values[1] == doctest::Approx(-1.0));

  auto mixed = herm_eigensystem(identity(4) / 4.0);
  for (int i = 0; i < 4; ++i) CHECK(mixed.values[i] == doctest::Approx(0.25).epsilon(1e-15));

  auto singlet = herm_eigensystem(build(family::Werner{1.0}).matrix());
  CHECK(std::abs(singlet.values[0] - 1.0) < 1e-12);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(singlet.values[i]) < 1e-12);
}

TEST_CASE("eigensystem reconstructs random Hermitian matrices") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 8;
    const auto m = random_hermitian(d, rng);
    const auto es = herm_eigensystem(m);
    const ComplexMatrix rebuilt =
        es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
    CHECK(max_abs(m - rebuilt) <= 1e-9);
    CHECK(max_abs(es.vectors.adjoint() * es.vectors - identity(d)) <= 1e-10);
    CHECK(std::abs(es.values.sum() - m.trace().real()) <= 1e-10);
    for (int k = 1; k < d; ++k) CHECK(es.values[k - 1] >= es.values[k]);
    const auto values_only = herm_eigenvalues(m);
    CHECK((values_only - es.values).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("eigensystem rejects non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m << 1.0, 1.0, 0.0, 1.0;
  CHECK_THROWS_AS(herm_eigensystem(m), ValidationError);
  CHECK_THROWS_AS(herm_eigenvalues(m), ValidationError);

  // Round-off sized asymmetry is absorbed.
  m << 1.0, 0.5, 0.5 + 1e-13, 1.0;
  CHECK_NOTHROW(herm_eigensystem(m));
}
