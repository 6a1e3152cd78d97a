#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "irlab/util/executor.hpp"
#include "irlab/util/fit.hpp"
#include "irlab/util/hash.hpp"
#include "irlab/util/quadrature.hpp"
#include "irlab/util/rng.hpp"

using namespace irlab;

TEST_CASE("linear fit recovers an exact line") {
    std::vector<double> x{1, 2, 3, 4, 5}, y;
    for (double xi : x) y.push_back(2.5 - 0.75 * xi);
    auto f = util::fit_line(x, y);
    CHECK(f.intercept == Catch::Approx(2.5).margin(1e-14));
    CHECK(f.slope == Catch::Approx(-0.75).margin(1e-14));
    CHECK(f.r_squared == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("loglog fit finds power-law exponents") {
    std::vector<double> x{0.5, 1.0, 2.0, 4.0}, y;
    for (double xi : x) y.push_back(3.0 * std::pow(xi, -1.7));
    auto f = util::fit_loglog(x, y);
    CHECK(f.slope == Catch::Approx(-1.7).margin(1e-12));
}

TEST_CASE("adaptive quadrature on smooth and peaked integrands") {
    auto g = [](double x) { return std::exp(-x * x); };
    auto r = util::integrate_adaptive(g, -8.0, 8.0, 1e-12);
    CHECK(r.value == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-11));
    CHECK(r.converged);

    // narrow peak found through a split hint
    auto peak = [](double x) { return 1.0 / ((x - 3.0) * (x - 3.0) + 1e-6); };
    auto rp = util::integrate_adaptive(peak, 0.0, 10.0, 1e-9, {3.0});
    const double exact = (std::atan((10.0 - 3.0) / 1e-3) + std::atan(3.0 / 1e-3)) / 1e-3;
    CHECK(rp.value == Catch::Approx(exact).epsilon(1e-8));
}

TEST_CASE("gauss-legendre integrates high-degree polynomials exactly") {
    std::vector<double> x, w;
    util::gauss_legendre(8, x, w);
    double s = 0;
    for (int i = 0; i < 8; ++i) s += w[i] * std::pow(x[i], 14); // degree 14 < 2*8
    CHECK(s == Catch::Approx(2.0 / 15.0).margin(1e-14));
}

TEST_CASE("executor keeps results ordered and isolates failures") {
    std::vector<std::function<int()>> tasks;
    for (int i = 0; i < 100; ++i)
        tasks.push_back([i]() {
            if (i == 37) throw std::runtime_error("row failure");
            return i * i;
        });
    for (int threads : {1, 8}) {
        auto res = util::run_indexed(tasks, threads);
        REQUIRE(res.size() == 100);
        for (int i = 0; i < 100; ++i) {
            if (i == 37) {
                CHECK_FALSE(res[i].ok);
                CHECK(res[i].error == "row failure");
            } else {
                CHECK(res[i].ok);
                CHECK(res[i].value == i * i);
            }
        }
    }
    CHECK(util::run_indexed(std::vector<std::function<int()>>{}, 4).empty());
}

TEST_CASE("splitmix is deterministic") {
    util::SplitMix64 a(123), b(123);
    for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("fnv hash is stable") {
    CHECK(util::fnv1a64(std::string("irlab")) == util::fnv1a64(std::string("irlab")));
    CHECK(util::fnv1a64(std::string("a")) != util::fnv1a64(std::string("b")));
    CHECK(util::hash_hex(0x1234abcdull).size() == 16);
}
