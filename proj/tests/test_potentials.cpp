#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fhmp/constants.hpp"
#include "fhmp/potentials.hpp"
#include "oracles.hpp"

using namespace fhmp;

namespace {
GeneralMolecularPotential fig1_potential(double alpha = 0.5) {
    GeneralMolecularPotential p;
    p.A = p.B = 0.6;
    p.C = p.D = 1.0;
    p.q = 0.6;
    p.q_tilde = 1.0;
    p.alpha = alpha;
    p.t_e = 0.0;
    return p;
}
} // namespace

TEST_CASE("general potential evaluation", "[potentials]") {
    const auto p = fig1_potential();

    SECTION("numerator collapses at t = t_e") {
        REQUIRE(p.value(0.0) == 0.0);
    }
    SECTION("approaches A + q~C^2 as t -> infinity") {
        const double v = p.value(p.t_e + 50.0 / p.alpha);
        REQUIRE_THAT(v, Catch::Matchers::WithinRel(1.6, 1e-6));
    }
    SECTION("value at t = 1 matches independent arithmetic") {
        REQUIRE_THAT(p.value(1.0),
                     Catch::Matchers::WithinRel(0.96613917998649990, 1e-15));
    }
    SECTION("asymptote accessor") {
        REQUIRE(p.asymptote() == 1.6);
    }
}

TEST_CASE("near-singular evaluation is a domain error", "[potentials]") {
    GeneralMolecularPotential p = fig1_potential(1.0);
    // t_s = ln(0.6) < 0; evaluation is legal on both sides but not at t_s
    const double ts = p.singular_time().value();
    REQUIRE_THAT(ts, Catch::Matchers::WithinAbs(std::log(0.6), 1e-15));
    REQUIRE_THROWS_AS(p.value(ts), EvalDomainError);
    REQUIRE(std::isfinite(p.value(ts - 0.05)));
    REQUIRE(std::isfinite(p.value(ts + 0.05)));

    SECTION("floor is configurable") {
        const double just_outside = ts + 1e-6;
        REQUIRE(std::isfinite(p.value(just_outside)));
        REQUIRE_THROWS_AS(p.value(just_outside, 1e-3), EvalDomainError);
    }
}

TEST_CASE("parameter validation", "[potentials]") {
    SECTION("physical constants must be strictly positive") {
        REQUIRE_NOTHROW(PhysicalConstants{}.validate());
        REQUIRE_THROWS_AS((PhysicalConstants{0.0, 1.0, 1.0}.validate()),
                          ValidationError);
        REQUIRE_THROWS_AS((PhysicalConstants{1.0, -0.5, 1.0}.validate()),
                          ValidationError);
        REQUIRE_THROWS_AS((PhysicalConstants{1.0, 1.0, 0.0}.validate()),
                          ValidationError);
    }
    SECTION("alpha must be positive") {
        GeneralMolecularPotential p = fig1_potential();
        p.alpha = 0.0;
        REQUIRE_THROWS_AS(p.validate(), ValidationError);
    }
    SECTION("q must be nonzero") {
        GeneralMolecularPotential p = fig1_potential();
        p.q = 0.0;
        REQUIRE_THROWS_AS(p.validate(), ValidationError);
    }
    SECTION("singularity guard reports t_s for q > 0") {
        GeneralMolecularPotential p = fig1_potential(1.0);
        p.q = 2.0; // t_s = ln 2 > 0
        try {
            p.validate();
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            REQUIRE(e.field() == "q");
            REQUIRE(std::string(e.what()).find("0.693") != std::string::npos);
        }
    }
    SECTION("guard is vacuous for q < 0") {
        GeneralMolecularPotential p = fig1_potential();
        p.q = -0.6;
        REQUIRE_NOTHROW(p.validate());
        REQUIRE_FALSE(p.singular_time().has_value());
    }
    SECTION("Wei-Hua rejects q = 1 and q = 0") {
        REQUIRE_THROWS_AS((WeiHuaParams{0.3, 1.0, 1.0, 0.0}.validate()),
                          ValidationError);
        REQUIRE_THROWS_AS((WeiHuaParams{0.3, 0.0, 1.0, 0.0}.validate()),
                          ValidationError);
    }
    SECTION("Manning-Rosen rejects beta(beta-1) + V0 < 0") {
        REQUIRE_THROWS_AS((ManningRosenParams{0.1, -0.5, 1.0, 0.0}.validate()),
                          ValidationError);
    }
}

TEST_CASE("Wei-Hua reduction", "[potentials]") {
    const WeiHuaParams w{0.01, 0.6, 1.0, 0.0};
    const auto p = reduce_wei_hua(w);

    SECTION("parameter substitution") {
        REQUIRE(p.A == 0.0);
        REQUIRE(p.B == 0.0);
        REQUIRE(p.C == 1.0);
        REQUIRE(p.D == 1.0);
        REQUIRE(p.alpha == w.alpha);
        REQUIRE(p.q == w.q);
        REQUIRE(p.q_tilde == w.q_tilde);
        REQUIRE(p.t_e == w.t_e);
    }
    SECTION("zero at the equilibrium time") {
        REQUIRE(p.value(w.t_e) == 0.0);
    }
    SECTION("reduced form equals the direct closed form at t = 100") {
        const double direct = wei_hua_value(w, 100.0);
        REQUIRE_THAT(direct,
                     Catch::Matchers::WithinRel(0.65799306028207710, 1e-15));
        REQUIRE_THAT(p.value(100.0), Catch::Matchers::WithinRel(direct, 1e-12));
    }
    SECTION("equivalence across the whole domain, random parameters") {
        std::mt19937 rng(7101);
        std::uniform_real_distribution<double> aq(0.05, 1.0);
        std::uniform_real_distribution<double> qd(-0.95, 0.95);
        std::uniform_real_distribution<double> qtd(0.1, 5.0);
        for (int trial = 0; trial < 50; ++trial) {
            WeiHuaParams ww{aq(rng), qd(rng), qtd(rng), 0.0};
            if (std::abs(ww.q) < 0.05 || ww.q == 1.0) continue;
            const auto pp = reduce_wei_hua(ww);
            for (double t : {0.0, 0.37, 1.0, 5.0, 25.0 / ww.alpha}) {
                const double a = pp.value(t);
                const double b = wei_hua_value(ww, t);
                REQUIRE(testrefs::rel_diff(a, b) < 1e-12);
            }
        }
    }
    SECTION("non-negative for positive q_tilde") {
        std::mt19937 rng(7102);
        std::uniform_real_distribution<double> td(-3.0, 80.0);
        for (int i = 0; i < 200; ++i) {
            const double t = td(rng);
            if (std::abs(t - (-std::log(0.6) / 0.01)) < 1.0) continue;
            REQUIRE(wei_hua_value(w, t) >= 0.0);
        }
    }
}

TEST_CASE("Manning-Rosen reduction", "[potentials]") {
    const ManningRosenParams mr{0.1, 2.5, 5.0, 0.0};
    const auto p = reduce_manning_rosen(mr);

    SECTION("substitution constants") {
        REQUIRE_THAT(p.B, Catch::Matchers::WithinRel(0.025, 1e-15));
        REQUIRE_THAT(p.D,
                     Catch::Matchers::WithinRel(0.47434164902525690, 1e-15));
        REQUIRE(p.q == 1.0);
        REQUIRE(p.q_tilde == 1.0);
        REQUIRE(p.A == 0.0);
        REQUIRE(p.C == 0.0);
    }
    SECTION("reduced form equals the direct closed form at t = 5") {
        REQUIRE_THAT(p.value(5.0),
                     Catch::Matchers::WithinRel(manning_rosen_value(mr, 5.0),
                                                1e-12));
    }
    SECTION("equivalence over the domain, random parameters") {
        std::mt19937 rng(7103);
        std::uniform_real_distribution<double> ad(0.05, 1.0);
        std::uniform_real_distribution<double> vd(-5.0, 25.0);
        std::uniform_real_distribution<double> bd(1.0, 6.0);
        for (int trial = 0; trial < 50; ++trial) {
            ManningRosenParams m{ad(rng), vd(rng), bd(rng), 0.0};
            if (m.beta * (m.beta - 1.0) + m.V0 < 0.0) continue;
            const auto pp = reduce_manning_rosen(m);
            for (double t : {0.5, 1.0, 5.0, 30.0 / m.alpha}) {
                REQUIRE(testrefs::rel_diff(pp.value(t),
                                           manning_rosen_value(m, t)) < 1e-12);
            }
        }
    }
    SECTION("beta = 1 with V0 = 0 is identically zero") {
        const auto z = reduce_manning_rosen({0.1, 0.0, 1.0, 0.0});
        REQUIRE(z.B == 0.0);
        REQUIRE(z.D == 0.0);
        for (double t : {0.5, 2.0, 10.0, 100.0}) REQUIRE(z.value(t) == 0.0);
    }
}
