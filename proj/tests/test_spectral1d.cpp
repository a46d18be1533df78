#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "oracles.hpp"
#include "plunge/quadrature.hpp"
#include "plunge/spectral1d.hpp"

using namespace plunge;

TEST_CASE("Gauss-Legendre rules") {
    const auto one = gauss_legendre<double>(1, -1.0, 1.0);
    CHECK(one.nodes(0) == doctest::Approx(0.0));
    CHECK(one.weights(0) == doctest::Approx(2.0));
    const auto two = gauss_legendre<double>(2, -1.0, 1.0);
    CHECK(two.nodes(0) == doctest::Approx(-1 / std::sqrt(3.0)));
    CHECK(two.nodes(1) == doctest::Approx(1 / std::sqrt(3.0)));
    CHECK(two.weights(0) == doctest::Approx(1.0));
    const auto r16 = gauss_legendre<double>(16, 0.0, 1.0);
    CHECK(std::abs(r16.weights.dot(r16.nodes.array().pow(5).matrix()) - 1.0 / 6) <= 1e-14);

    for (int n : {5, 12, 40}) {
        const auto r = gauss_legendre<double>(n, -0.5, 2.0);
        CHECK(std::abs(r.weights.sum() - 2.5) <= 1e-12);
        for (Eigen::Index i = 1; i < r.size(); ++i) CHECK(r.nodes(i) > r.nodes(i - 1));
        CHECK((r.weights.array() > 0).all());
        for (int k = 0; k <= std::min(9, 2 * n - 1); ++k) {
            const double exact = (std::pow(2.0, k + 1) - std::pow(-0.5, k + 1)) / (k + 1);
            CHECK(std::abs(r.weights.dot(r.nodes.array().pow(k).matrix()) - exact) <= 1e-12 * std::max(1.0, exact));
        }
        // agrees with the Golub-Welsch construction
        const auto [x, w] = oracle::golub_welsch(n, -0.5, 2.0);
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(r.nodes(i) - x[static_cast<std::size_t>(i)]) <= 1e-13);
            CHECK(std::abs(r.weights(i) - w[static_cast<std::size_t>(i)]) <= 1e-13);
        }
    }
    CHECK_THROWS_AS(gauss_legendre<double>(0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(gauss_legendre<double>(3, 1.0, 1.0), DomainError);
}

TEST_CASE("composite rule and adaptive integration") {
    const auto r = composite_gauss_legendre(0.0, 10.0, 1.0, 8);
    CHECK(r.size() == 80);
    CHECK(r.weights.sum() == doctest::Approx(10.0));
    const auto q = integrate_adaptive([](double x) { return std::exp(-x) * std::cos(5 * x); }, 0.0, 4.0);
    const double exact = (1 - std::exp(-4.0) * (std::cos(20.0) - 5 * std::sin(20.0))) / 26.0;
    CHECK(std::abs(q.value - exact) <= 1e-12);
    CHECK(q.error <= 1e-10);
    CHECK_THROWS_AS(integrate_adaptive([](double) { return std::nan(""); }, 0.0, 1.0), EvaluationError);
}

TEST_CASE("localization spectrum basics") {
    for (double c : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        CAPTURE(c);
        const auto s = localization_spectrum(c);
        CHECK(s.nodes == required_nodes(c));
        CHECK(std::abs(s.values.sum() - c) <= 1e-8 * c);
        for (Eigen::Index i = 1; i < s.size(); ++i) CHECK(s.values(i) <= s.values(i - 1));
        CHECK((s.values.array() >= 0).all());
        CHECK((s.values.array() <= 1).all());
        CHECK(s.descriptor.kind == OperatorKind::localization_1d);
        CHECK(s.descriptor.volume == c);
    }
    // λ₁ < 1 is only resolvable while 1 - λ₁ is above rounding.
    for (double c : {0.5, 1.0, 2.0}) CHECK(localization_spectrum(c).values(0) < 1.0);
    CHECK_THROWS_AS(localization_spectrum(10.0, 50), ResolutionError);
    CHECK_THROWS_AS(localization_spectrum(-1.0), DomainError);
}

TEST_CASE("sum of squares matches the 2-D quadrature oracle") {
    for (double c : {1.0, 3.0, 10.0}) {
        const auto s = localization_spectrum(c);
        CHECK(std::abs(s.values.squaredNorm() - oracle::trs2_brute(c)) <= 1e-8);
    }
}

TEST_CASE("Nystrom convergence under node doubling") {
    for (double c : {1.0, 5.0, 10.0, 20.0}) {
        const auto n = required_nodes(c);
        const auto a = localization_spectrum(c, n);
        const auto b = localization_spectrum(c, 2 * n);
        for (Eigen::Index i = 0; i < a.size() && a.values(i) > 1e-10; ++i) {
            CHECK(std::abs(a.values(i) - b.values(i)) <= 1e-8);
        }
    }
}

TEST_CASE("eigenvalues increase with c") {
    const auto small = localization_spectrum(5.0);
    const auto large = localization_spectrum(7.5);
    for (Eigen::Index i = 0; i < small.trusted_count(); ++i) CHECK(large.values(i) >= small.values(i) - 1e-13);
}

TEST_CASE("spectrum depends only on the product ab") {
    const auto ref = localization_spectrum(6.0, 200);
    for (auto [a, b] : {std::pair{2.0, 3.0}, std::pair{12.0, 0.5}, std::pair{1.5, 4.0}}) {
        const auto s = localization_spectrum_scaled(a, b, 200);
        for (Eigen::Index i = 0; i < 20; ++i) CHECK(std::abs(s.values(i) - ref.values(i)) <= 1e-8);
    }
}

TEST_CASE("eigensolver residual contract") {
    const auto rule = gauss_legendre<double>(120, 0.0, 15.0);
    const Eigen::MatrixXd m = sinc_nystrom_matrix(rule);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> pick(0, 119);
    const double norm = m.norm();
    for (int k = 0; k < 5; ++k) {
        const int i = pick(rng);
        const Eigen::VectorXd v = es.eigenvectors().col(i);
        CHECK((m * v - es.eigenvalues()(i) * v).norm() <= 1e-10 * norm);
    }
    const auto s = localization_spectrum(15.0, 120);
    CHECK(std::abs(s.values(0) - es.eigenvalues().maxCoeff()) <= 1e-13);
}

TEST_CASE("J_r rank-two tail bound") {
    CHECK(jr_rank2_tail_bound(0).bound == doctest::Approx(std::sqrt(2.0) / M_PI));
    CHECK(jr_rank2_tail_bound(10).bound == doctest::Approx(std::sqrt(2.0) / M_PI / 1024));
    for (int N = 0; N <= 20; ++N) {
        const auto b = jr_rank2_tail_bound(N);
        CHECK(b.intermediate_sum <= b.bound);
        double direct = 0.0;
        for (int n = N + 1; n < 200; ++n) direct += std::ldexp(1.0, -n) / (2 * n + 1);
        CHECK(b.intermediate_sum == doctest::Approx(std::sqrt(2.0) / M_PI * direct).epsilon(1e-12));
    }
}

TEST_CASE("J_r singular values") {
    SUBCASE("sigma_3 bound for several r") {
        for (double r : {0.5, 1.0, 5.0, 50.0}) {
            const auto s = jr_singular_values(r, std::max<Eigen::Index>(200, static_cast<Eigen::Index>(4 * r)));
            CHECK(s.values(2) <= jr_rank2_tail_bound(0).bound);
        }
    }
    SUBCASE("r = 2, N = 10") {
        const auto s = jr_singular_values(2.0, 200);
        const double sigma = std::max(s.values(22), s.floor);
        CHECK(sigma + s.truncation_tail <= 1.1 * jr_rank2_tail_bound(10).bound);
    }
    SUBCASE("truncated domain agrees within the Weyl tail") {
        const double r = 1.0;
        const auto full = jr_singular_values(r, 200);
        for (double R : {40.0, 160.0}) {
            const auto cut = jr_singular_values(r, R, 200);
            CHECK(cut.truncation_tail == doctest::Approx(std::sqrt(4 * r / (M_PI * M_PI * (R - r)))));
            for (Eigen::Index k = 0; k < 6; ++k) {
                CHECK(cut.values(k) <= full.values(k) + 1e-7);
                CHECK(full.values(k) - cut.values(k) <= cut.truncation_tail + 1e-7);
            }
        }
    }
    CHECK_THROWS_AS(jr_singular_values(1.0, 2.0, 100), DomainError);
    CHECK(jr_truncation_tail(1.0, 1e6) < jr_truncation_tail(1.0, 1e3));
}

TEST_CASE("I_r singular values") {
    for (double r : {2.0, 10.0, 30.0}) {
        const auto s = ir_singular_values(r, required_nodes(r));
        CHECK((s.values.array() <= 1.0).all());
        CHECK(std::abs(s.values.squaredNorm() - r) <= 1e-8 * r);
        // σ_n² are the localization eigenvalues
        const auto lam = localization_spectrum(r);
        for (Eigen::Index i = 0; i < 10; ++i) CHECK(std::abs(s.values(i) * s.values(i) - lam.values(i)) <= 1e-10);
    }
    const auto big = ir_singular_values(100.0, 1200);
    CHECK(big.values(1000) <= 1e-10);
}
