#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sepout/error.hpp"
#include "sepout/quadrature.hpp"

#include "oracles.hpp"

using sepout::GaussHermiteRule;
using sepout::QuadratureSpec;
using sepout::gauss_hermite;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

double moment(const GaussHermiteRule& rule, int power) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.points.size(); ++i)
    acc += rule.weights[i] * std::pow(rule.points[i], power);
  return acc;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(sepout::validate(QuadratureSpec{1, 1e-9}), sepout::DomainError);
  CHECK_THROWS_AS(sepout::validate(QuadratureSpec{64, 0.0}), sepout::DomainError);
  CHECK_THROWS_AS(sepout::validate(QuadratureSpec{64, -1e-9}), sepout::DomainError);
  CHECK_THROWS_AS(sepout::validate(QuadratureSpec{64, std::nan("")}),
                  sepout::DomainError);
  CHECK_NOTHROW(sepout::validate(QuadratureSpec{}));
}

TEST_CASE("small rules match the textbook values") {
  const GaussHermiteRule& r1 = gauss_hermite(1);
  REQUIRE(r1.points.size() == 1);
  CHECK(std::abs(r1.points[0]) <= 1e-15);
  CHECK(std::abs(r1.weights[0] - kSqrtPi) <= 1e-15);

  const GaussHermiteRule& r2 = gauss_hermite(2);
  CHECK(std::abs(r2.points[0] + 1.0 / std::numbers::sqrt2) <= 1e-14);
  CHECK(std::abs(r2.points[1] - 1.0 / std::numbers::sqrt2) <= 1e-14);
  CHECK(std::abs(r2.weights[0] - kSqrtPi / 2.0) <= 1e-14);
  CHECK(std::abs(r2.weights[1] - kSqrtPi / 2.0) <= 1e-14);

  const GaussHermiteRule& r3 = gauss_hermite(3);
  CHECK(std::abs(r3.points[0] + std::sqrt(1.5)) <= 1e-14);
  CHECK(std::abs(r3.points[1]) <= 1e-14);
  CHECK(std::abs(r3.points[2] - std::sqrt(1.5)) <= 1e-14);
  CHECK(std::abs(r3.weights[1] - 2.0 * kSqrtPi / 3.0) <= 1e-14);
  CHECK(std::abs(r3.weights[0] - kSqrtPi / 6.0) <= 1e-14);
}

TEST_CASE("gaussian moments are integrated exactly") {
  const GaussHermiteRule& rule = gauss_hermite(20);
  CHECK(oracles::rel_err(moment(rule, 0), kSqrtPi) <= 1e-14);
  CHECK(oracles::rel_err(moment(rule, 2), kSqrtPi / 2.0) <= 1e-14);
  CHECK(oracles::rel_err(moment(rule, 4), 3.0 * kSqrtPi / 4.0) <= 1e-14);
  CHECK(oracles::rel_err(moment(rule, 6), 15.0 * kSqrtPi / 8.0) <= 1e-13);
  CHECK(std::abs(moment(rule, 1)) <= 1e-14);
  CHECK(std::abs(moment(rule, 3)) <= 1e-13);
}

TEST_CASE("large rules stay normalized and symmetric") {
  for (const int n : {64, 256, 512, 1024}) {
    const GaussHermiteRule& rule = gauss_hermite(n);
    REQUIRE(rule.points.size() == static_cast<std::size_t>(n));
    CHECK(oracles::rel_err(moment(rule, 0), kSqrtPi) <= 1e-13);
    for (int i = 0; i < n / 2; ++i) {
      CHECK(std::abs(rule.points[i] + rule.points[n - 1 - i]) <= 1e-12);
      CHECK(rule.points[i] < rule.points[i + 1]);
      CHECK(rule.weights[i] >= 0.0);
    }
  }
}

TEST_CASE("moment generating function of a standard normal") {
  // E[exp(aZ)] = exp(a^2/2) with Z = sqrt(2) x under the e^{-x^2} weight.
  const GaussHermiteRule& rule = gauss_hermite(64);
  for (const double a : {0.25, 1.0, 2.0}) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.points.size(); ++i)
      acc += rule.weights[i] * std::exp(a * std::numbers::sqrt2 * rule.points[i]);
    acc /= kSqrtPi;
    CHECK(oracles::rel_err(acc, std::exp(a * a / 2.0)) <= 1e-12);
  }
}

TEST_CASE("refinement returns once doublings agree and reports otherwise") {
  int calls = 0;
  const auto smooth = [&calls](int) {
    ++calls;
    return 0.5;
  };
  CHECK(sepout::detail::refine_quadrature(QuadratureSpec{4, 1e-12}, smooth,
                                          "smooth") == 0.5);
  CHECK(calls == 2);

  const auto drifting = [](int n) { return 1.0 / n; };
  CHECK_THROWS_AS(sepout::detail::refine_quadrature(QuadratureSpec{4, 1e-12},
                                                    drifting, "drifting"),
                  sepout::NonConvergence);
}

}  // TEST_SUITE
