// Copyright 2026 The liftlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include "liftlab/qlift.hpp"
#include "liftlab/random.hpp"
#include "support/oracles.hpp"
#include "support/throws.hpp"

using namespace liftlab;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix eye(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("linear map units and application", "[qlift]") {
  CHECK(throws_code(Errc::kSizeMismatch, [] { LinearMap(2, 2, {eye(2)}); }));
  CHECK(throws_code(Errc::kDimensionMismatch,
                    [] { LinearMap(1, 2, {eye(3)}); }));
  Rng rng(41);
  const ComplexMatrix u = random_unitary(rng, 3);
  const LinearMap conj = LinearMap::unitary_conjugation(u);
  const ComplexMatrix x = random_psd(rng, 3, 2);
  CHECK(max_abs_diff(conj.apply(x), u * x * u.adjoint()) < 1e-14);
  CHECK(conj.is_unital());
  CHECK(conj.is_cp());
  CHECK(conj.is_hermiticity_preserving());
}

TEST_CASE("transpose is positive but not completely positive", "[qlift]") {
  const LinearMap t = LinearMap::from_function(
      2, 2, [](const ComplexMatrix& x) -> ComplexMatrix { return x.transpose(); });
  CHECK(t.is_unital());
  CHECK(t.is_hermiticity_preserving());
  CHECK_FALSE(t.is_cp());
  CHECK(throws_code(Errc::kNotCp, [&] { (void)qcp_from_channel(t); }));
}

TEST_CASE("dual map satisfies the trace pairing", "[qlift]") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + rng.below(3);
    const LinearMap m = random_unital_cp(rng, d, 1 + rng.below(3));
    const ComplexMatrix a = random_psd(rng, d, d) - random_psd(rng, d, 1);
    const ComplexMatrix rho = random_density(rng, d).matrix();
    const Complex lhs = (m.apply(a) * rho).trace();
    const Complex rhs = (a * m.apply_dual(rho)).trace();
    CHECK(std::abs(lhs - rhs) < 1e-13);
    // The dual of a unital map preserves the trace.
    CHECK_THAT(m.apply_dual(rho).trace().real(), WithinAbs(1.0, 1e-13));
  }
}

TEST_CASE("QCP operator of the identity is d times the maximally entangled state", "[qlift]") {
  for (std::size_t d = 2; d <= 4; ++d) {
    const QcpOperator pi = qcp_from_channel(LinearMap::identity(d));
    CHECK(max_abs_diff(pi.matrix(), static_cast<double>(d) * max_entangled(d)) < 1e-15);
    CHECK(max_abs_diff(partial_trace(pi.op(), {1}).matrix(), eye(static_cast<Eigen::Index>(d))) < 1e-15);
  }
}

TEST_CASE("QCP construction rejects non-unital maps", "[qlift]") {
  // Amplitude damping is CP and trace preserving, not unital.
  const double g = 0.3;
  const LinearMap damp = LinearMap::from_kraus(
      {mat2(1.0, 0.0, 0.0, std::sqrt(1 - g)), mat2(0.0, std::sqrt(g), 0.0, 0.0)});
  CHECK(damp.is_cp());
  CHECK_FALSE(damp.is_unital());
  CHECK(throws_code(Errc::kNotUnital, [&] { (void)qcp_from_channel(damp); }));
  CHECK(throws_code(Errc::kDimensionMismatch,
                    [] { (void)qcp_from_channel(LinearMap(1, 2, {eye(2)})); }));
}

TEST_CASE("classical conditional as a diagonal unital map", "[qlift]") {
  Rng rng(43);
  const Eigen::MatrixXd c = random_conditional(rng, 3);
  const LinearMap m = LinearMap::classical(c);
  CHECK(m.is_unital(1e-14));
  CHECK(m.is_cp());
  const QcpOperator pi = qcp_from_channel(m);
  // Diagonal entry (a, b) of pi is p_{a|b}.
  for (Eigen::Index a = 0; a < 3; ++a)
    for (Eigen::Index b = 0; b < 3; ++b) CHECK(pi.matrix()(a * 3 + b, a * 3 + b).real() == c(a, b));
}

TEST_CASE("product lifting and reduced dynamics", "[qlift]") {
  Rng rng(44);
  const DensityOperator omega = random_density(rng, 2);
  const DensityOperator rho = random_density(rng, 3);
  const DensityOperator prod = product_lifting(omega, rho);
  CHECK(prod.dims() == Dims{2, 3});
  CHECK(max_abs_diff(reduce(prod, {1}).matrix(), rho.matrix()) < 1e-15);
  // A product unitary I (x) V gives V rho V^*.
  const ComplexMatrix v = random_unitary(rng, 3);
  const DensityOperator out = reduced_dynamics(omega, rho, kron(eye(2), v));
  CHECK(max_abs_diff(out.matrix(), v * rho.matrix() * v.adjoint()) < 1e-14);
  CHECK(throws_code(Errc::kDimensionMismatch, [&] { (void)reduced_dynamics(omega, rho, v); }));
}

TEST_CASE("nonlinear lifting of the identity at the maximally mixed state", "[qlift]") {
  for (std::size_t d = 2; d <= 4; ++d) {
    const DensityOperator mixed(eye(static_cast<Eigen::Index>(d)) / static_cast<double>(d));
    const DensityOperator theta = nonlinear_lift(qcp_from_channel(LinearMap::identity(d)), mixed);
    CHECK(max_abs_diff(theta.matrix(), max_entangled(d)) < 1e-14);
  }
}

TEST_CASE("nonlinear lifting marginals", "[qlift]") {
  Rng rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + rng.below(3);
    const LinearMap m = random_unital_cp(rng, d, 1 + rng.below(3));
    const DensityOperator rho = random_density(rng, d);
    const DensityOperator theta = nonlinear_lift(qcp_from_channel(m), rho);
    CHECK(max_abs_diff(reduce(theta, {1}).matrix(), rho.matrix()) < 1e-12);
    CHECK(max_abs_diff(reduce(theta, {2}).matrix(), m.apply_dual(rho.matrix()).transpose()) < 1e-12);
  }
}

TEST_CASE("channel recovered from a compound state", "[qlift]") {
  Rng rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + rng.below(2);
    const LinearMap m = random_unital_cp(rng, d, 2);
    const DensityOperator rho = random_density(rng, d);
    const LinearMap back = channel_from_compound(nonlinear_lift(qcp_from_channel(m), rho), rho);
    for (std::size_t k = 0; k < m.units().size(); ++k) {
      CHECK(max_abs_diff(back.units()[k], m.units()[k]) < 1e-9);
    }
  }
  const DensityOperator pure(mat2(1.0, 0.0, 0.0, 0.0));
  const DensityOperator theta = product_lifting(pure, pure);
  CHECK(throws_code(Errc::kNotFaithful, [&] { (void)channel_from_compound(theta, pure); }));
  const DensityOperator mixed(eye(2) / 2.0);
  CHECK(throws_code(Errc::kNotCompatible,
                    [&] { (void)channel_from_compound(product_lifting(mixed, pure), mixed); }));
}

TEST_CASE("composed QCP operators peel back under partial traces", "[qlift]") {
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<QcpOperator> pis;
    for (int k = 0; k < 3; ++k) pis.push_back(qcp_from_channel(random_unital_cp(rng, 2, 1 + rng.below(3))));
    const FactoredOperator chain = n_compose_qcp(pis);
    CHECK(chain.dims() == Dims{2, 2, 2, 2});
    CHECK(is_psd(chain.matrix()).psd);
    const FactoredOperator two = compose_qcp(pis[0], pis[1]);
    CHECK(max_abs_diff(trace_out(chain, {4}).matrix(), two.matrix()) < 1e-12);
    CHECK(max_abs_diff(trace_out(chain, {4, 3}).matrix(), pis[0].matrix()) < 1e-12);
    CHECK(max_abs_diff(trace_out(chain, {4, 3, 2}).matrix(), eye(2)) < 1e-12);
    CHECK(max_abs_diff(trace_out(two, {3}).matrix(), pis[0].matrix()) < 1e-12);
  }
}

TEST_CASE("N-party nonlinear lifting is consistent under tracing", "[qlift]") {
  Rng rng(48);
  const LinearMap m = random_unital_cp(rng, 2, 2);
  const QcpOperator pi = qcp_from_channel(m);
  const DensityOperator rho = random_density(rng, 2);
  const DensityOperator two = nonlinear_lift(pi, rho);
  CHECK(max_abs_diff(n_nonlinear_lift(pi, rho, 2).matrix(), two.matrix()) < 1e-15);
  const DensityOperator four = n_nonlinear_lift(pi, rho, 4);
  CHECK(max_abs_diff(trace_out(four.op(), {4}).matrix(), n_nonlinear_lift(pi, rho, 3).matrix()) < 1e-12);
  CHECK(max_abs_diff(trace_out(four.op(), {4, 3}).matrix(), two.matrix()) < 1e-12);
  CHECK(max_abs_diff(reduce(four, {1}).matrix(), rho.matrix()) < 1e-12);
}

TEST_CASE("quantum Ohya lifting clones the state", "[qlift]") {
  Rng rng(49);
  for (std::size_t parties = 1; parties <= 4; ++parties) {
    const DensityOperator rho = random_density(rng, 3);
    const DensityOperator cloned = ohya_lift(rho, parties);
    for (std::size_t s = 1; s <= parties; ++s) {
      CHECK(max_abs_diff(reduce(cloned, {s}).matrix(), rho.matrix()) < 1e-13);
    }
  }
  // A pure state lifts to a pure product.
  const DensityOperator pure(mat2(0.5, 0.5, 0.5, 0.5));
  const DensityOperator lifted = ohya_lift(pure);
  CHECK(max_abs_diff(lifted.matrix(), kron(pure.matrix(), pure.matrix())) < 1e-14);
}

TEST_CASE("reduction map is positive but not CP in d = 2", "[qlift]") {
  Rng rng(50);
  const LinearMap r = LinearMap::from_function(2, 2, reduction_map);
  CHECK_FALSE(r.is_cp());
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexVector v = random_unitary(rng, 2).col(0);
    CHECK(is_psd(reduction_map(v * v.adjoint())).psd);
  }
}

TEST_CASE("Robertson map is unital and positive", "[qlift]") {
  CHECK(max_abs_diff(robertson_map(eye(4)), eye(4)) < 1e-15);
  CHECK(throws_code(Errc::kDimensionMismatch, [] { (void)robertson_map(eye(2)); }));
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexVector v = random_unitary(rng, 4).col(0);
    CHECK(is_psd(robertson_map(v * v.adjoint())).psd);
  }
  const LinearMap psi = LinearMap::from_function(4, 4, robertson_map);
  CHECK_FALSE(psi.is_cp());
}

TEST_CASE("Robertson lifting-assisted map ignores omega", "[qlift]") {
  Rng rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityOperator omega = random_density(rng, 2);
    const ComplexMatrix rho = random_density(rng, 2).matrix();
    const ComplexMatrix phi = lifting_assisted_map(robertson_map, omega, 2).apply(rho);
    const ComplexMatrix expected =
        0.5 * mat2(2.0 * rho(1, 1), rho(0, 1) + rho(1, 0), rho(0, 1) + rho(1, 0), 2.0 * rho(0, 0));
    CHECK(max_abs_diff(phi, expected) < 1e-14);
  }
}

TEST_CASE("Robertson lifting-assisted Choi matrix", "[qlift]") {
  const DensityOperator omega(eye(2) / 2.0);
  const FactoredOperator choi = choi_matrix(lifting_assisted_map(robertson_map, omega, 2));
  CHECK(choi.dims() == Dims{2, 2});
  CHECK(oracle::max_diff(choi.matrix(), oracle::robertson_choi()) == 0.0);
  CHECK_THAT(oracle::min_eigenvalue(choi.matrix()), WithinAbs(-0.25, 1e-15));
}
