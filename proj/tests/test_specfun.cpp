#include <doctest.h>

#include <cmath>
#include <random>

#include "gflat/specfun.hpp"

using namespace gflat;

TEST_CASE("hermite_eval small degrees") {
    CHECK(hermite_eval(0, 0.7) == 1.0);
    CHECK(hermite_eval(1, 0.7) == doctest::Approx(1.4).epsilon(1e-15));
    CHECK(hermite_eval(4, 0.0) == doctest::Approx(12.0).epsilon(1e-15));
    // H_5(x) = 32x^5 - 160x^3 + 120x
    const double x = 0.83;
    const double h5 = 32 * std::pow(x, 5) - 160 * std::pow(x, 3) + 120 * x;
    CHECK(hermite_eval(5, x) == doctest::Approx(h5).epsilon(1e-13));
}

TEST_CASE("hermite_eval satisfies the three-term recurrence") {
    for (int n = 1; n <= 30; ++n) {
        for (double x = -4.0; x <= 4.0; x += 0.5) {
            const double lhs = hermite_eval(n + 1, x);
            const double rhs = 2 * x * hermite_eval(n, x) - 2 * n * hermite_eval(n - 1, x);
            const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
            CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("scaled value encode/decode round trip") {
    for (double x : {0.0, 1.0, -1.0, 0.3, -7.25e12, 5.0e-300, -2.0e300}) {
        const auto s = ScaledValue::encode(x);
        if (x != 0.0) {
            CHECK(std::abs(s.mantissa) >= 0.5);
            CHECK(std::abs(s.mantissa) < 1.0);
        } else {
            CHECK(s.mantissa == 0.0);
        }
        CHECK(s.decode() == x);
    }
}

TEST_CASE("orthonormal sequence by hand") {
    SUBCASE("lambda = 0, N = 3") {
        const auto u = hermite_orthonormal_seq(0.0, 3);
        CHECK(u[0].decode() == 1.0);
        CHECK(u[1].decode() == 0.0);
        CHECK(u[2].decode() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
    }
    SUBCASE("lambda = sqrt(3), N = 3") {
        const auto u = hermite_orthonormal_seq(std::sqrt(3.0), 3);
        CHECK(u[0].decode() == 1.0);
        CHECK(u[1].decode() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
        CHECK(u[2].decode() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    }
    SUBCASE("odd entries vanish at lambda = 0") {
        const auto u = hermite_orthonormal_seq(0.0, 5);
        CHECK(u[1].decode() == 0.0);
        CHECK(u[3].decode() == 0.0);
    }
}

TEST_CASE("orthonormal sequence matches direct Hermite evaluation") {
    // u_k * sqrt(2^k k!) = H_k(lambda / sqrt 2) for every k small enough
    // to compare in doubles.
    for (double lambda : {-3.7, -1.0, 0.25, 2.0, 5.5}) {
        const auto u = hermite_orthonormal_seq(lambda, 26);
        double factorial = 1.0;
        double running_max = 1.0;  // an x near a root of H_k makes a pure
                                   // relative comparison meaningless there
        for (int k = 0; k <= 25; ++k) {
            if (k > 0) factorial *= k;
            const double direct = hermite_eval(k, lambda / std::sqrt(2.0));
            const double scaled = u[k].decode() * std::sqrt(std::ldexp(factorial, k));
            running_max = std::max(running_max, std::abs(direct));
            CHECK(std::abs(scaled - direct) <= 1e-10 * running_max);
        }
    }
}

TEST_CASE("orthonormal sequence parity") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.1, 8.0);
    for (int rep = 0; rep < 20; ++rep) {
        const double lambda = dist(rng);
        const auto up = hermite_orthonormal_seq(lambda, 40);
        const auto um = hermite_orthonormal_seq(-lambda, 40);
        for (int k = 0; k < 40; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            CHECK(um[k].mantissa == doctest::Approx(sign * up[k].mantissa).epsilon(1e-13));
            if (up[k].mantissa != 0.0) CHECK(um[k].exponent2 == up[k].exponent2);
        }
    }
}

TEST_CASE("orthonormal sequence stays finite at high degree") {
    // Raw H_k overflows near k ~ 150 at edge eigenvalues; the scaled
    // recurrence must not.
    const int n = 10000;
    const double lambda = 2.0 * std::sqrt(2.0 * n);
    const auto u = hermite_orthonormal_seq(lambda, n);
    for (const auto& s : u) {
        CHECK(std::isfinite(s.mantissa));
        if (s.mantissa != 0.0) {
            CHECK(std::abs(s.mantissa) >= 0.5);
            CHECK(std::abs(s.mantissa) < 1.0);
        }
    }
}

TEST_CASE("laguerre_eval") {
    CHECK(laguerre_eval(0, 0, 3.2) == 1.0);
    CHECK(laguerre_eval(1, 1, 0.5) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(laguerre_eval(2, 0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // L_2^{(0)}(x) = 1 - 2x + x^2/2
    for (double x : {0.3, 1.7, 9.0}) {
        CHECK(laguerre_eval(2, 0, x) ==
              doctest::Approx(1.0 - 2.0 * x + 0.5 * x * x).epsilon(1e-13));
    }
    // L_2^{(1)}(x) = 3 - 3x + x^2/2
    CHECK(laguerre_eval(2, 1, 2.0) == doctest::Approx(3.0 - 6.0 + 2.0).epsilon(1e-13));
}
