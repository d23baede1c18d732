#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qeur/error.hpp"
#include "qeur/infoquant.hpp"
#include "support/random_states.hpp"

using namespace qeur;

namespace {

double h2(double x) {
  if (x <= 0 || x >= 1) return 0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

// Entropy of a qubit with Bloch vector length r.
double qubit_entropy(double r) { return h2((1 + r) / 2); }

DensityMatrix pure_state(const ComplexVector& v, Dims dims) {
  return DensityMatrix(projector(v / v.norm()), dims);
}

// rho = p |Psi+><Psi+| + (1-p) |11><11|, worked out by hand.
double xstate_s_b(double p) { return h2(p / 2); }
double xstate_ixb(double p) {
  // Both sigma_x outcomes leave Bob with Bloch vector (+-p, 0, -(1-p)).
  return xstate_s_b(p) - qubit_entropy(std::hypot(p, 1 - p));
}
double xstate_izb(double p) {
  // Outcome 0 leaves |1>, outcome 1 leaves a diagonal state with weight p/2 on |0>.
  const double p1 = 1 - p / 2;
  return xstate_s_b(p) - p1 * h2((p / 2) / p1);
}

}  // namespace

TEST_CASE("classical and quantum entropies") {
  CHECK(binary_entropy(0.75) == doctest::Approx(0.8112781244591328).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(-1e-13) == 0.0);
  CHECK_THROWS_AS(binary_entropy(-0.01), ValidationError);
  CHECK_THROWS_AS(binary_entropy(1.5), ValidationError);

  const std::vector<double> uniform(8, 0.125);
  CHECK(shannon_entropy(uniform) == doctest::Approx(3.0).epsilon(1e-15));
  const std::vector<double> with_zero{0.5, 0.5, 0.0};
  CHECK(shannon_entropy(with_zero) == doctest::Approx(1.0));
  const std::vector<double> negative{1.1, -0.1};
  CHECK_THROWS_AS(shannon_entropy(negative), ValidationError);
  const std::vector<double> short_sum{0.5, 0.4};
  CHECK_THROWS_AS(shannon_entropy(short_sum), ValidationError);

  for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const auto rho = build(family::Werner{p});
    const double a = (1 + 3 * p) / 4;
    const double b = (1 - p) / 4;
    double expected = 0;
    if (a > 0) expected -= a * std::log2(a);
    if (b > 0) expected -= 3 * b * std::log2(b);
    CHECK(von_neumann_entropy(rho) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(von_neumann_entropy(ComplexMatrix(identity(4) / 4.0)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(von_neumann_entropy(ComplexMatrix(identity(2))), ValidationError);
  ComplexMatrix indefinite(2, 2);
  indefinite << 1.2, 0, 0, -0.2;
  CHECK_THROWS_AS(von_neumann_entropy(indefinite), ValidationError);
}

TEST_CASE("conditional entropy and mutual information") {
  const auto singlet = pure_state(bell_vector(BellState::PsiMinus), {2, 2});
  CHECK(conditional_entropy(singlet) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(mutual_information(singlet) == doctest::Approx(2.0).epsilon(1e-12));

  testing::Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto prod = testing::random_product_state({2, 3}, rng);
    CHECK(conditional_entropy(prod) ==
          doctest::Approx(von_neumann_entropy(prod.reduced(Subsystem::A))).epsilon(1e-9));
    CHECK(std::abs(mutual_information(prod)) < 1e-9);

    const auto schmidt = build(family::PureSchmidt{testing::random_simplex(3, rng)});
    CHECK(mutual_information(schmidt) ==
          doctest::Approx(2 * von_neumann_entropy(schmidt.reduced(Subsystem::B))).epsilon(1e-9));
  }

  for (double p : {0.0, 0.3, 0.7, 1.0}) {
    const auto x = build(family::XStateSpecial{p});
    CHECK(conditional_entropy(x) == doctest::Approx(h2(p) - h2(p / 2)).epsilon(1e-12));
    CHECK(mutual_information(x) == doctest::Approx(2 * h2(p / 2) - h2(p)).epsilon(1e-12));
  }
  CHECK(mutual_information(build(family::XStateSpecial{1.0})) == doctest::Approx(2.0));

  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = testing::random_mixed_state({2 + trial % 2, 2 + trial % 3}, rng);
    const double s_a = von_neumann_entropy(rho.reduced(Subsystem::A));
    CHECK(s_a == doctest::Approx(conditional_entropy(rho) + mutual_information(rho)).epsilon(1e-10));
    CHECK(mutual_information(rho) >= -1e-10);
  }
}

TEST_CASE("Holevo quantities") {
  testing::Rng rng(12);
  std::normal_distribution<double> normal(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = testing::random_bell_diagonal_r(rng);
    const auto rho = build(family::BellDiagonal{r});
    for (int axis = 0; axis < 3; ++axis) {
      const double expected = 1 - qubit_entropy(std::abs(r[static_cast<std::size_t>(axis)]));
      CHECK(holevo(rho, pauli_observable(axis)) == doctest::Approx(expected).epsilon(1e-10));
    }
    // A general direction n leaves Bob with Bloch vector +-(r_i n_i).
    std::array<double, 3> n{normal(rng), normal(rng), normal(rng)};
    const double norm = std::hypot(n[0], n[1], n[2]);
    for (auto& c : n) c /= norm;
    const double len = std::hypot(r[0] * n[0], r[1] * n[1], r[2] * n[2]);
    CHECK(holevo(rho, observable_from_bloch(BlochDirection(n))) ==
          doctest::Approx(1 - qubit_entropy(len)).epsilon(1e-10));
  }

  for (int trial = 0; trial < 50; ++trial) {
    const auto schmidt = build(family::PureSchmidt{testing::random_simplex(2, rng)});
    const auto obs = testing::random_observable(2, rng);
    CHECK(holevo(schmidt, obs) ==
          doctest::Approx(von_neumann_entropy(schmidt.reduced(Subsystem::B))).epsilon(1e-9));

    const auto prod = testing::random_product_state({3, 2}, rng);
    CHECK(std::abs(holevo(prod, testing::random_observable(3, rng))) < 1e-9);
  }

  for (double p : {0.0, 0.25, 0.5, 0.8, 1.0}) {
    const auto x = build(family::XStateSpecial{p});
    CHECK(holevo(x, pauli_observable(0)) == doctest::Approx(xstate_ixb(p)).epsilon(1e-12));
    CHECK(holevo(x, pauli_observable(2)) == doctest::Approx(xstate_izb(p)).epsilon(1e-12));
  }

  for (int trial = 0; trial < 100; ++trial) {
    const Dims dims{2 + trial % 2, 2 + trial % 3};
    const auto rho = testing::random_mixed_state(dims, rng);
    const auto obs = testing::random_observable(dims.a, rng);
    const auto post = post_measurement_state(rho, obs);
    const double ixb = holevo(rho, obs);
    // The Holevo quantity is the mutual information of the classical-quantum state.
    CHECK(ixb == doctest::Approx(mutual_information(post)).epsilon(1e-9));
    CHECK(conditional_entropy(post) + ixb ==
          doctest::Approx(outcome_entropy(rho, obs)).epsilon(1e-9));
    CHECK(ixb >= -1e-9);
    CHECK(ixb <= von_neumann_entropy(rho.reduced(Subsystem::B)) + 1e-9);
  }
}

TEST_CASE("delta and its floor") {
  const auto x = pauli_observable(0);
  const auto z = pauli_observable(2);
  testing::Rng rng(21);

  for (int trial = 0; trial < 30; ++trial) {
    const auto schmidt = build(family::PureSchmidt{testing::random_simplex(2, rng)});
    CHECK(std::abs(delta(schmidt, testing::random_observable(2, rng),
                         testing::random_observable(2, rng))) < 1e-9);
    const auto prod = testing::random_product_state({2, 2}, rng);
    CHECK(std::abs(delta(prod, x, z)) < 1e-9);
  }

  for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    // Werner: J is the same along every axis, so delta = I - 2J = D - J.
    const auto w = build(family::Werner{p});
    const double j = 1 - qubit_entropy(p);
    const double i_ab = mutual_information(w);
    CHECK(delta(w, x, z) == doctest::Approx((i_ab - j) - j).epsilon(1e-10));
  }

  for (int trial = 0; trial < 20; ++trial) {
    const auto r = testing::random_bell_diagonal_r(rng);
    CHECK(std::abs(delta_floor(build(family::BellDiagonal{r}), x, z)) < 1e-12);
  }
  const auto mc = build(family::PureSchmidt{{0.8, 0.2}});
  CHECK(std::abs(delta_floor(mc, x, z)) < 1e-12);
  const DensityMatrix mixed(identity(4) / 4.0, {2, 2});
  CHECK(std::abs(delta_floor(mixed, x, z)) < 1e-12);

  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = testing::random_mixed_state({2, 2 + trial % 3}, rng);
    const auto [a, b] = testing::random_qubit_mub(rng);
    CHECK(delta(rho, a, b) >= delta_floor(rho, a, b) - 1e-9);
  }
}

TEST_CASE("classical correlation optimizer") {
  testing::Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = testing::random_bell_diagonal_r(rng);
    const double rmax = std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
    const auto rep = classical_correlation(build(family::BellDiagonal{r}));
    CHECK(rep.classical_correlation == doctest::Approx(1 - qubit_entropy(rmax)).epsilon(1e-6));
    CHECK(rep.discord == doctest::Approx(rep.mutual_information - rep.classical_correlation));
    CHECK(rep.projective_only);
    CHECK(rep.trace.refined_best >= rep.trace.grid_best);
    CHECK(rep.optimal_direction.z() >= 0.0);
  }

  for (int trial = 0; trial < 10; ++trial) {
    const auto rep = classical_correlation(testing::random_product_state({2, 3}, rng));
    CHECK(std::abs(rep.classical_correlation) < 1e-9);
    CHECK(std::abs(rep.discord) < 1e-9);
  }

  for (double p : {0.1, 0.4, 0.6, 0.9}) {
    const auto rep = classical_correlation(build(family::XStateSpecial{p}));
    CHECK(rep.classical_correlation == doctest::Approx(xstate_ixb(p)).epsilon(1e-8));
  }

  const auto singlet = classical_correlation(build(family::Werner{1.0}));
  CHECK(singlet.classical_correlation == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(singlet.discord == doctest::Approx(1.0).epsilon(1e-9));

  // No probed measurement beats the optimizer.
  std::normal_distribution<double> normal(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = testing::random_mixed_state({2, 2 + trial % 2}, rng);
    const auto rep = classical_correlation(rho);
    for (int axis = 0; axis < 3; ++axis)
      CHECK(rep.classical_correlation >= holevo(rho, pauli_observable(axis)) - 1e-9);
    for (int k = 0; k < 20; ++k) {
      std::array<double, 3> n{normal(rng), normal(rng), normal(rng)};
      const double norm = std::hypot(n[0], n[1], n[2]);
      for (auto& c : n) c /= norm;
      CHECK(rep.classical_correlation >=
            holevo(rho, observable_from_bloch(BlochDirection(n))) - 1e-9);
    }
    CHECK(rep.classical_correlation ==
          doctest::Approx(holevo(rho, observable_from_bloch(rep.optimal_direction))).epsilon(1e-12));
    CHECK(rep.discord >= -1e-9);
  }

  const auto again = classical_correlation(build(family::BellDiagonal{{0.5, 0.3, 0.1}}));
  const auto first = classical_correlation(build(family::BellDiagonal{{0.5, 0.3, 0.1}}));
  CHECK(again.classical_correlation == first.classical_correlation);
  CHECK(again.trace.iterations == first.trace.iterations);

  OptimizerConfig coarse;
  coarse.grid_theta = 5;
  coarse.grid_phi = 8;
  const auto c = classical_correlation(build(family::BellDiagonal{{0.2, -0.6, 0.1}}), coarse);
  CHECK(c.classical_correlation == doctest::Approx(1 - qubit_entropy(0.6)).epsilon(1e-6));

  CHECK_THROWS_AS(classical_correlation(testing::random_mixed_state({3, 2}, rng)), UnsupportedError);
}
