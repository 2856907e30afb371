#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fhmp/jacobi.hpp"
#include "fhmp/quadrature.hpp"
#include "oracles.hpp"

using namespace fhmp;

TEST_CASE("jacobi base cases", "[special]") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> pd(-0.9, 4.0);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double a = pd(rng), b = pd(rng), x = xd(rng);
        REQUIRE(jacobi(0, a, b, x) == 1.0);
        REQUIRE_THAT(jacobi(1, a, b, x),
                     Catch::Matchers::WithinRel(
                         0.5 * (a - b) + 0.5 * (a + b + 2.0) * x, 1e-14));
    }
}

TEST_CASE("jacobi against the Rodrigues-sum reference", "[special]") {
    SECTION("frozen spot values") {
        REQUIRE_THAT(jacobi(5, 1.3, 0.7, 0.25),
                     Catch::Matchers::WithinRel(0.59052571875000000, 1e-12));
        REQUIRE_THAT(jacobi(3, 2.0, 3.0, -0.4),
                     Catch::Matchers::WithinRel(0.655, 1e-12));
        REQUIRE_THAT(jacobi(6, 0.5, 0.5, 0.9),
                     Catch::Matchers::WithinRel(-0.014988187500000000, 1e-12));
    }
    SECTION("random degrees, parameters, and abscissae") {
        std::mt19937 rng(32);
        std::uniform_real_distribution<double> pd(-0.9, 4.0);
        std::uniform_real_distribution<double> xd(-1.0, 1.0);
        std::uniform_int_distribution<int> nd(0, 8);
        for (int i = 0; i < 300; ++i) {
            const int n = nd(rng);
            const double a = pd(rng), b = pd(rng), x = xd(rng);
            const double got = jacobi(n, a, b, x);
            const double ref = testrefs::jacobi_rodrigues(n, a, b, x);
            REQUIRE_THAT(got, Catch::Matchers::WithinAbs(ref, 1e-9) ||
                              Catch::Matchers::WithinRel(ref, 1e-9));
        }
    }
    SECTION("parameters at or below -1 are rejected") {
        REQUIRE_THROWS_AS(jacobi(2, -1.0, 0.0, 0.5), ValidationError);
        REQUIRE_THROWS_AS(jacobi(2, 0.0, -1.5, 0.5), ValidationError);
        REQUIRE_THROWS_AS(jacobi(-1, 0.0, 0.0, 0.5), ValidationError);
    }
}

TEST_CASE("jacobi derivative identity", "[special]") {
    // d/dx P_n^{(a,b)} = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}, checked against
    // central differences
    const double xs[] = {-0.8, -0.3, 0.0, 0.4, 0.85};
    for (int n : {1, 2, 4, 6}) {
        for (double x : xs) {
            const double a = 1.3, b = 0.7;
            const double der = jacobi_derivative(n, a, b, x);
            const double fd = testrefs::central_diff(
                [&](double y) { return jacobi(n, a, b, y); }, x, 1e-6);
            REQUIRE_THAT(der, Catch::Matchers::WithinAbs(fd, 1e-6) ||
                              Catch::Matchers::WithinRel(fd, 1e-6));
        }
    }
}

TEST_CASE("gauss-legendre rules", "[special]") {
    SECTION("one point: midpoint") {
        const auto r = gauss_legendre(1);
        REQUIRE(r.nodes.size() == 1);
        REQUIRE(r.nodes[0] == 0.0);
        REQUIRE(r.weights[0] == 2.0);
    }
    SECTION("two points: +-1/sqrt(3), unit weights") {
        const auto r = gauss_legendre(2);
        REQUIRE_THAT(r.nodes[0],
                     Catch::Matchers::WithinRel(-0.57735026918962576, 1e-14));
        REQUIRE_THAT(r.nodes[1],
                     Catch::Matchers::WithinRel(0.57735026918962576, 1e-14));
        REQUIRE_THAT(r.weights[0], Catch::Matchers::WithinRel(1.0, 1e-14));
        REQUIRE_THAT(r.weights[1], Catch::Matchers::WithinRel(1.0, 1e-14));
    }
    SECTION("x^6 with four points") {
        const auto r = gauss_legendre(4);
        const double got =
            r.integrate([](double x) { return std::pow(x, 6); }, -1.0, 1.0);
        REQUIRE_THAT(got, Catch::Matchers::WithinAbs(2.0 / 7.0, 1e-14));
    }
    SECTION("exactness to degree 2n-1 for monomials") {
        for (int n : {1, 2, 3, 5, 8, 13, 20, 64}) {
            const auto r = gauss_legendre(n);
            for (int deg = 0; deg <= 2 * n - 1; ++deg) {
                const double exact =
                    (deg % 2 == 1) ? 0.0 : 2.0 / (deg + 1.0);
                const double got = r.integrate(
                    [deg](double x) { return std::pow(x, deg); }, -1.0, 1.0);
                REQUIRE_THAT(got, Catch::Matchers::WithinAbs(exact, 1e-13));
            }
        }
    }
    SECTION("structure invariants on a large rule") {
        const auto r = gauss_legendre(128);
        r.validate(); // strictly increasing nodes, positive weights, sum 2
        double sum = 0.0;
        for (double w : r.weights) sum += w;
        REQUIRE_THAT(sum, Catch::Matchers::WithinAbs(2.0, 1e-12));
        REQUIRE(r.nodes.front() > -1.0);
        REQUIRE(r.nodes.back() < 1.0);
    }
    SECTION("npoints must be positive") {
        REQUIRE_THROWS_AS(gauss_legendre(0), ValidationError);
    }
}

TEST_CASE("jacobi orthogonality under the weight", "[special]") {
    // integral over (-1,1) of (1-x)^a (1+x)^b P_m P_n for m != n.
    // Integer exponents keep the integrand polynomial, so a 64-point rule is
    // exact; fractional exponents converge only algebraically and need
    // larger rules for tight tolerances.
    const auto rule64 = gauss_legendre(64);
    const auto weighted = [](const QuadratureRule& r, double a, double b,
                             int m, int n) {
        return r.integrate(
            [&](double x) {
                return std::pow(1.0 - x, a) * std::pow(1.0 + x, b) *
                       jacobi(m, a, b, x) * jacobi(n, a, b, x);
            },
            -1.0, 1.0);
    };
    SECTION("integer-parameter pairs at 1e-8 with 64 points") {
        for (auto [a, b] : {std::pair{0.0, 0.0}, {1.0, 2.0}, {3.0, 3.0},
                            {2.0, 4.0}}) {
            for (int m = 0; m <= 6; ++m)
                for (int n = 0; n <= 6; ++n) {
                    if (m == n) continue;
                    REQUIRE_THAT(weighted(rule64, a, b, m, n),
                                 Catch::Matchers::WithinAbs(0.0, 1e-8));
                }
        }
    }
    SECTION("fractional pairs at measured tolerances") {
        for (int m = 0; m <= 6; ++m)
            for (int n = 0; n <= 6; ++n) {
                if (m == n) continue;
                REQUIRE_THAT(weighted(rule64, 1.5, 2.5, m, n),
                             Catch::Matchers::WithinAbs(0.0, 1e-6));
            }
        const auto rule512 = gauss_legendre(512);
        for (int m = 0; m <= 6; ++m)
            for (int n = 0; n <= 6; ++n) {
                if (m == n) continue;
                REQUIRE_THAT(weighted(rule512, 1.3, 0.7, m, n),
                             Catch::Matchers::WithinAbs(0.0, 1e-7));
            }
    }
}
