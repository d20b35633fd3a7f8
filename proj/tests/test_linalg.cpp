#include <random>

#include "doctest.h"
#include "hc/linalg.hpp"

using namespace hc;

TEST_CASE("lu solves random complex systems") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 6;
        CMatrix A(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A.at(i, j) = Complex(gauss(rng), gauss(rng));
        CVec x(n);
        for (Complex& z : x) z = Complex(gauss(rng), gauss(rng));

        CVec b(n, Complex(0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += A.at(i, j) * x[j];

        Lu lu(A);
        REQUIRE_FALSE(lu.singular());
        CHECK(lu.condition_estimate() >= 1.0);
        REQUIRE(lu.solve(b));
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(b[i] - x[i]) < 1e-9);
    }
}

TEST_CASE("lu reports singular matrices") {
    CMatrix A(2, 2);
    A.at(0, 0) = 1.0;
    A.at(0, 1) = 2.0;
    A.at(1, 0) = 2.0;
    A.at(1, 1) = 4.0;
    Lu lu(A);
    CHECK(lu.singular());
    CHECK(std::isinf(lu.condition_estimate()));
    CVec b{1.0, 1.0};
    CHECK_FALSE(lu.solve(b));
}

TEST_CASE("vector helpers") {
    CVec v{Complex(3.0, 4.0), Complex(0.0, 0.0)};
    CHECK(norm2(v) == doctest::Approx(5.0));
    CHECK(max_abs_imag(v) == doctest::Approx(4.0));
    CHECK(all_finite(v));
    v[1] = Complex(std::numeric_limits<double>::infinity(), 0.0);
    CHECK_FALSE(all_finite(v));
}
