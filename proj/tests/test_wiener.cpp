#include <doctest.h>

#include <cmath>
#include <random>

#include "muskat/errors.hpp"
#include "muskat/estimates.hpp"
#include "muskat/wiener.hpp"
#include "support.hpp"

using namespace muskat;

namespace {

// Taylor coefficients of (1+x)^{-3/2} - 1.
SpectralField G_series(const SpectralField& v, int terms) {
    SpectralField out(v.grid()), power = v;
    double c = 1.0;
    for (int n = 1; n <= terms; ++n) {
        c *= (-1.5 - (n - 1)) / n;
        out += c * power;
        power = multiply(power, v);
    }
    return out;
}

}  // namespace

TEST_SUITE("wiener") {

TEST_CASE("constants follow the case split") {
    CHECK(EstimateConstants::K(0.0) == 0.5);
    CHECK(EstimateConstants::K(0.5) == 1.0);
    CHECK(EstimateConstants::K(1.0) == 1.0);
    CHECK(EstimateConstants::K(3.0) == 4.0);
    CHECK(EstimateConstants::K_pow(0.7, 3) == 3.0);
    // 2K = 8 at s = 3: 8 (8^2 - 1)/7 = 72
    CHECK(EstimateConstants::K_pow(3.0, 3) == doctest::Approx(72.0));
    CHECK(EstimateConstants::C_ell == 10.0);
    CHECK(EstimateConstants::C0 == 3120.0);
}

TEST_CASE("report holds iff slack >= -1e-12") {
    CHECK(InequalityReport::make("a", 1.0, 1.0 - 5e-13).holds);
    CHECK_FALSE(InequalityReport::make("a", 1.0, 1.0 - 5e-12).holds);
}

TEST_CASE("compose_G examples") {
    const GridSpec g = GridSpec::with_modes(16);
    CHECK(compose_G(SpectralField(g)).value.is_zero());
    SpectralField three(g);
    three.set(0, 3.0);
    const SpectralField c = compose_G(three).value;
    CHECK(c[0].real() == doctest::Approx(-0.875).epsilon(1e-15));
    SpectralField bad(g);
    bad.set(0, -1.5);
    CHECK_THROWS_AS(compose_G(bad), DomainError);
    CHECK_FALSE(compose_G(three).bound_precondition);
}

TEST_CASE("compose_G matches its power series for small data") {
    const GridSpec g = GridSpec::with_modes(32);
    const SpectralField v = SpectralField::trig(g, {0.0, 0.1});
    CHECK(support::max_coeff_diff(compose_G(v).value, G_series(v, 20)) < 1e-10);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        SpectralField w = support::random_field(g, 4, rng);
        w *= 0.2 / wiener_norm(w, {});
        CHECK(support::max_coeff_diff(compose_G(w).value, G_series(w, 60)) < 1e-10);
    }
}

TEST_CASE("curvature examples") {
    const GridSpec g = GridSpec::with_modes(32);
    const SpectralField c = SpectralField::trig(g, {0.0, 1.0});
    CHECK(support::max_coeff_diff(curvature(c, 0.0, 0.3), -1.0 * c) < 1e-15);
    SpectralField k(g);
    k.set(0, 0.7);
    CHECK(curvature(k, 1.0, 0.5).is_zero());
    const SpectralField z = SpectralField::trig(g, {0.0, 0.3});
    const std::vector<double> x = g.nodes(), v = to_physical(curvature(z, 1.0, 0.25));
    double err = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double zx = -0.3 * std::sin(x[j]), zxx = -0.3 * std::cos(x[j]);
        err = std::max(err, std::abs(v[j] - zxx / std::pow(1.0 + 0.25 * zx * zx, 1.5)));
    }
    CHECK(err < 1e-10);
    std::mt19937_64 rng(2);
    const SpectralField r = support::random_field(g, 10, rng);
    CHECK(support::max_coeff_diff(curvature(r, 0.0, 0.4), derivative(r, 2)) == 0.0);
}

TEST_CASE("inequality report examples") {
    const GridSpec g = GridSpec::with_modes(16);
    const SpectralField c = SpectralField::trig(g, {0.0, 1.0});
    const auto r = inequality_report(c, c, {0.0, 0.0}, 0.5, 2);
    CHECK(r[0].name == "product");
    CHECK(r[0].lhs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r[0].rhs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(r[0].slack) < 1e-15);
    const SpectralField zero(g);
    for (const auto& rep : inequality_report(zero, zero, {1.5, 0.2}, 0.3, 3)) {
        CHECK(rep.lhs == 0.0);
        CHECK(rep.slack >= 0.0);
    }
    // G report omitted when the smallness precondition fails
    const auto big = inequality_report(c, c, {0.0, 0.0}, 0.5, 2);
    for (const auto& rep : big) CHECK(rep.name != "composition_G");
    CHECK_THROWS_AS(inequality_report(c, SpectralField(GridSpec::with_modes(8)), {}, 0.5, 2), ShapeError);
}

TEST_CASE("interpolation at s=2, s1=0, s2=4 over random draws") {
    std::mt19937_64 rng(99);
    const GridSpec g = GridSpec::with_modes(32);
    for (int d = 0; d < 200; ++d) {
        const SpectralField f = random_trig(g, 1 + static_cast<int>(rng() % 16), rng);
        const InequalityReport r = interpolation_report(f, 0.0, 4.0, 0.5, 0.0);
        CHECK(r.holds);
    }
}

TEST_CASE("randomized suite: products, powers, interpolation, composition") {
    const auto reports = wiener_draws(50, 1234, GridSpec::with_modes(32));
    CHECK(reports.size() == 50u * 10u);
    for (const auto& r : reports) {
        INFO(r.name << " lhs " << r.lhs << " rhs " << r.rhs);
        CHECK(r.holds);
    }
}

TEST_CASE("products leave no round-off above the combined degree") {
    const GridSpec g = GridSpec::with_modes(64);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const SpectralField f = support::random_field(g, 40, rng), h = support::random_field(g, 30, rng);
        const SpectralField fft = multiply(f, h), direct = convolve(f, h);
        CHECK(support::max_coeff_diff(fft, direct) < 1e-12);
        CHECK(degree(fft) <= 64);
        const SpectralField a = support::random_field(g, 3, rng), b = support::random_field(g, 2, rng);
        CHECK(degree(multiply(a, b)) <= 5);
        CHECK(degree(convolve(a, b)) <= 5);
    }
}

TEST_CASE("randomized suite holds under heavy weights on a wide band") {
    // s near 4 and lambda near 1/2 weight mode 64 by about 1e20.
    for (std::uint64_t seed : {1u, 2u}) {
        for (const auto& r : wiener_draws(100, seed, GridSpec::with_modes(64))) {
            INFO(r.name << " lhs " << r.lhs << " rhs " << r.rhs);
            CHECK(r.holds);
        }
    }
}

}
