#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <hqm/constants.hpp>
#include <hqm/specfun.hpp>

using namespace hqm;

TEST_CASE("truncated 1F1 polynomial cases") {
    CHECK(confluent_1f1_truncated(0, 2.0, 7.5) == 1.0);
    CHECK_THAT(confluent_1f1_truncated(1, 2.0, 3.0), Catch::Matchers::WithinAbs(-0.5, 1e-15));
    CHECK_THAT(confluent_1f1_truncated(2, 1.0, 1.0), Catch::Matchers::WithinAbs(-0.5, 1e-15));
    CHECK_THAT(confluent_1f1_truncated(2, 3.0, 2.0), Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THROWS_AS(confluent_1f1_truncated(-1, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(confluent_1f1_truncated(2, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(confluent_1f1_truncated(2, -3.0, 1.0), std::domain_error);
}

TEST_CASE("generalized Laguerre recurrence") {
    CHECK(laguerre(0, 2.0, 5.0) == 1.0);
    CHECK_THAT(laguerre(1, 2.0, 1.0), Catch::Matchers::WithinAbs(2.0, 1e-15));
    CHECK_THAT(laguerre(3, 0.0, 2.0), Catch::Matchers::WithinRel(-1.0 / 3.0, 1e-14));
    CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), std::domain_error);
}

TEST_CASE("1F1 and Laguerre agree through the polynomial identity") {
    // L_n^(a)(x) = C(n+a, n) 1F1(-n, a+1, x)
    for (int n = 0; n <= 5; ++n) {
        for (const double alpha : {0.0, 2.0, 4.0}) {
            double binom = 1.0;
            for (int j = 1; j <= n; ++j) binom *= (alpha + j) / j;
            for (const double x : {0.5, 2.0, 10.0}) {
                const double lhs = laguerre(n, alpha, x);
                const double rhs = binom * confluent_1f1_truncated(n, alpha + 1.0, x);
                CHECK_THAT(lhs, Catch::Matchers::WithinAbs(rhs, 1e-12 * (1.0 + std::abs(rhs))));
            }
        }
    }
}

namespace {

struct BesselRef {
    int nu;
    double x;
    double j;
    double y;
};

// Reference values computed with 50-digit arithmetic and rounded to double.
const std::vector<BesselRef> bessel_table{
    {0, 0.5, 0.9384698072408129, -0.44451873350670656},
    {0, 1.0, 0.76519768655796655, 0.088256964215676958},
    {0, 5.0, -0.1775967713143383, -0.30851762524903378},
    {0, 13.5, 0.21498916588040082, 0.030077009046785589},
    {0, 14.5, 0.087544868010376223, 0.19030189118784452},
    {0, 50.0, 0.055812327669251815, -0.098064995470077079},
    {1, 0.5, 0.24226845767487389, -1.4714723926702431},
    {1, 2.0, 0.57672480775687339, -0.10703243154093755},
    {1, 14.0, 0.13337515469879325, -0.16664484185617227},
    {1, 80.0, -0.056057296675712578, 0.069395913784588047},
    {2, 1.0, 0.11490348493190048, -1.6506826068162544},
    {2, 10.0, 0.25463031368512062, -0.0058680824422086146},
    {3, 3.0, 0.30906272225525164, -0.53854161610503162},
    {3, 30.0, 0.12921122875972498, -0.068035690253198723},
    {5, 0.1, 2.6030817909644416e-09, -24461484.502303909},
    {5, 25.0, -0.066007995398422993, -0.14705799311372266},
    {8, 4.0, 0.0040286678208190037, -11.471091976491046},
    {8, 100.0, 0.043349559882386455, -0.067137173531197432},
    {12, 6.0, 0.00054515444378321069, -56.316809731863323},
    {12, 40.0, -0.12697799611784806, -0.023626554843633343},
};

}  // namespace

TEST_CASE("Bessel J and Y against high-precision references") {
    for (const BesselRef& ref : bessel_table) {
        const double j = bessel_j(ref.nu, ref.x);
        const double y = bessel_y(ref.nu, ref.x);
        CHECK(std::abs(j - ref.j) / std::max(1.0, std::abs(ref.j)) <= 5e-11);
        CHECK(std::abs(y - ref.y) / std::max(1.0, std::abs(ref.y)) <= 5e-11);
    }
}

TEST_CASE("Bessel edge behavior") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(7, 0.0) == 0.0);
    CHECK_THROWS_AS(bessel_j(-1, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(1, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_y(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_y(2, -0.5), std::domain_error);
}

TEST_CASE("Bessel Wronskian J_{v+1} Y_v - J_v Y_{v+1} = 2/(pi x)") {
    for (const int nu : {0, 1, 3, 6}) {
        for (const double x : {0.7, 3.0, 9.0, 20.0, 60.0}) {
            const double w = bessel_j(nu + 1, x) * bessel_y(nu, x) -
                             bessel_j(nu, x) * bessel_y(nu + 1, x);
            CHECK_THAT(w, Catch::Matchers::WithinRel(2.0 / (pi * x), 1e-9));
        }
    }
}

TEST_CASE("Bessel J satisfies its ODE to second order in h") {
    auto residual = [](int nu, double x, double h) {
        const double d2 = (bessel_j(nu, x + h) - 2.0 * bessel_j(nu, x) + bessel_j(nu, x - h)) /
                          (h * h);
        const double d1 = (bessel_j(nu, x + h) - bessel_j(nu, x - h)) / (2.0 * h);
        return x * x * d2 + x * d1 + (x * x - nu * nu) * bessel_j(nu, x);
    };
    const double r1 = residual(2, 3.0, 1e-2);
    const double r2 = residual(2, 3.0, 5e-3);
    CHECK(std::abs(r1) < 1e-3);
    CHECK_THAT(r1 / r2, Catch::Matchers::WithinRel(4.0, 0.1));
}

TEST_CASE("Gauss-Laguerre small rules match closed forms") {
    const Quadrature q1 = gauss_laguerre(1);
    REQUIRE(q1.nodes.size() == 1);
    CHECK_THAT(q1.nodes[0], Catch::Matchers::WithinRel(1.0, 1e-12));
    CHECK_THAT(q1.weights[0], Catch::Matchers::WithinRel(1.0, 1e-12));

    // Roots of L_2(t) = 1 - 2t + t^2/2 are 2 +- sqrt(2).
    const Quadrature q2 = gauss_laguerre(2);
    REQUIRE(q2.nodes.size() == 2);
    CHECK_THAT(q2.nodes[0], Catch::Matchers::WithinRel(0.5857864376269049, 1e-12));
    CHECK_THAT(q2.nodes[1], Catch::Matchers::WithinRel(3.414213562373095, 1e-12));
    CHECK_THAT(q2.weights[0], Catch::Matchers::WithinRel(0.8535533905932737, 1e-12));
    CHECK_THAT(q2.weights[1], Catch::Matchers::WithinRel(0.1464466094067262, 1e-12));

    CHECK_THROWS_AS(gauss_laguerre(0), std::domain_error);
    CHECK_THROWS_AS(gauss_laguerre(201), std::domain_error);
}

TEST_CASE("Gauss-Laguerre integrates moments exactly") {
    const Quadrature q = gauss_laguerre(20);
    double fact = 1.0;
    for (int p = 0; p <= 15; ++p) {
        if (p > 0) fact *= p;
        double s = 0.0;
        for (std::size_t i = 0; i < q.nodes.size(); ++i)
            s += q.weights[i] * std::pow(q.nodes[i], p);
        CHECK_THAT(s, Catch::Matchers::WithinRel(fact, 1e-12));
    }
}

TEST_CASE("Gauss-Laguerre reproduces Laguerre orthogonality") {
    const Quadrature q = gauss_laguerre(40);
    for (int a = 0; a <= 5; ++a) {
        for (int b = 0; b <= 5; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < q.nodes.size(); ++i)
                s += q.weights[i] * laguerre(a, 0.0, q.nodes[i]) * laguerre(b, 0.0, q.nodes[i]);
            CHECK_THAT(s, Catch::Matchers::WithinAbs(a == b ? 1.0 : 0.0, 1e-9));
        }
    }
}
