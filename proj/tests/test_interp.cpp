#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "lcheb/interp.hpp"

using namespace lcheb;

namespace {

GridFunction rand_grid(const NodeSet& ns, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(ns.size());
    for (auto& x : v) x = dist(rng);
    return GridFunction(ns, std::move(v));
}

}  // namespace

TEST_CASE("chebyshev products") {
    CHECK(cheb_T({0, 0}, {0.3, -0.7}) == 1.0);
    CHECK(cheb_T({2}, {0.0}) == -1.0);
    CHECK_THROWS_AS((void)cheb_T({1}, {1.5}), std::domain_error);

    // Fundamental relation T_gamma(z_i) = chi_gamma(i).
    NodeSet ns(ParamVec({4, 4}, {0, 1}));
    SpectralBasis sb(ns.params());
    for (auto& gamma : sb.gamma_bar())
        for (std::size_t k = 0; k < ns.size(); ++k)
            CHECK(cheb_T(gamma, ns.points()[k]) ==
                  doctest::Approx(chi(ns.params(), gamma, ns.indices()[k].i)).epsilon(1e-12));
}

TEST_CASE("d=1 kernel closed form") {
    ParamVec pv({2}, {0});
    NodeSet ns(pv);
    SpectralBasis sb(pv);
    auto L = [&](double z, double x) {
        double t2z = 2 * z * z - 1, t2x = 2 * x * x - 1;
        return 1.0 + 2.0 * z * x + t2z * t2x;
    };
    for (double z : {1.0, 0.0, -1.0, 0.3})
        for (double x : {0.25, -0.8, 1.0}) {
            CHECK(kernel_plain(sb, {z}, {x}) == doctest::Approx(L(z, x)).epsilon(1e-14));
            CHECK(kernel_averaged(sb, {z}, {x}) == doctest::Approx(L(z, x)).epsilon(1e-14));
        }
    // Fundamental polynomial at node 0 (z=1): L_{0,0}(x) = x(x+1)/2.
    for (double x : {0.5, -0.25, 1.0, -1.0})
        CHECK(ns.weight(0) * kernel_plain(sb, ns.points()[0], {x}) ==
              doctest::Approx(x * (x + 1) / 2).epsilon(1e-14));
}

TEST_CASE("delta property of both kernels") {
    for (auto& [m, kappa] : std::vector<std::pair<ivec, ivec>>{
             {{10, 5}, {0, 0}}, {{4, 4}, {0, 1}}, {{5, 4, 2}, {0, 0, 1}}}) {
        NodeSet ns(ParamVec(m, kappa));
        SpectralBasis sb(ns.params());
        for (std::size_t a = 0; a < ns.size(); ++a)
            for (std::size_t b = 0; b < ns.size(); ++b) {
                double want = a == b ? 1.0 : 0.0;
                CHECK(std::abs(ns.weight(a) *
                                   kernel_plain(sb, ns.points()[a], ns.points()[b]) -
                               want) <= 1e-9);
                CHECK(std::abs(ns.weight(a) *
                                   kernel_averaged(sb, ns.points()[a], ns.points()[b]) -
                               want) <= 1e-9);
            }
    }
}

TEST_CASE("interpolation reproduces data and basis indicators") {
    NodeSet ns(ParamVec({10, 5}, {0, 0}));
    SpectralBasis sb(ns.params());

    GridFunction ones(ns, std::vector<double>(ns.size(), 1.0));
    auto cc = interpolate(ns, sb, ones, Space::plain);
    for (std::size_t g = 0; g < cc.gamma.size(); ++g)
        CHECK(cc.c[g] == doctest::Approx(e_count(cc.gamma[g]) == 0 ? 1.0 : 0.0).epsilon(1e-12));

    // chi_gamma for a representative gamma interpolates to an indicator.
    for (auto g : {sb.representatives()[3], sb.representatives()[10]}) {
        auto data = chi_on_nodes(ns, sb.gamma_bar()[g]);
        auto ci = interpolate(ns, sb, data, Space::plain);
        for (std::size_t q = 0; q < ci.gamma.size(); ++q)
            CHECK(ci.c[q] == doctest::Approx(q == g ? 1.0 : 0.0).epsilon(1e-11));
    }

    for (Space space : {Space::plain, Space::averaged}) {
        auto h = rand_grid(ns, 7);
        auto ch = interpolate(ns, sb, h, space);
        CHECK(interpolation_residual(ns, ch, h) <= 1e-10);
        // Pointwise evaluation agrees with the grid fast path.
        auto grid_vals = ch.evaluate_nodes(ns);
        for (std::size_t k = 0; k < ns.size(); k += 5)
            CHECK(std::abs(ch.evaluate(ns.points()[k]) - grid_vals[k]) <= 1e-11);
    }
}

TEST_CASE("averaged coefficients satisfy the class symmetry") {
    NodeSet ns(ParamVec({4, 4}, {0, 1}));
    SpectralBasis sb(ns.params());
    auto h = rand_grid(ns, 99);
    auto cc = interpolate(ns, sb, h, Space::averaged);
    for (auto& cls : sb.classes()) {
        double crep = cc.c[cls.representative];
        for (std::size_t k = 0; k < cls.members.size(); ++k)
            CHECK(cc.c[cls.members[k]] ==
                  doctest::Approx(cls.signs[k] * crep).epsilon(1e-10));
    }
}

TEST_CASE("dct path equals direct path") {
    for (auto& [m, kappa] : std::vector<std::pair<ivec, ivec>>{
             {{10, 5}, {0, 0}}, {{4, 4}, {0, 0}}, {{5, 4, 2}, {0, 0, 1}},
             {{3, 4, 5}, {0, 0, 0}}}) {
        NodeSet ns(ParamVec(m, kappa));
        SpectralBasis sb(ns.params());
        for (unsigned seed = 0; seed < 5; ++seed) {
            auto h = rand_grid(ns, seed);
            auto cd = coefficients_direct(ns, sb, h);
            auto cf = coefficients_dct(ns, sb, h);
            double scale = 1e-300;
            for (auto x : cd) scale = std::max(scale, std::abs(x));
            for (std::size_t g = 0; g < cd.size(); ++g)
                CHECK(std::abs(cd[g] - cf[g]) / scale <= 1e-10);
        }
    }
}

TEST_CASE("fftw and naive transforms agree") {
    // 65*65 = 4225 >= 4096 exercises the fftw branch.
    ivec m{64, 64};
    std::int64_t total = 65 * 65;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> a(total);
    for (auto& x : a) x = dist(rng);
    std::vector<double> b = a;
    dct1_multi(a, m, /*force_naive=*/false);
    dct1_multi(b, m, /*force_naive=*/true);
    for (std::int64_t k = 0; k < total; ++k) CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-10));
}

TEST_CASE("quadrature values") {
    NodeSet ns(ParamVec({2}, {0}));
    GridFunction ones(ns, std::vector<double>(3, 1.0));
    CHECK(quadrature(ns, ones) == doctest::Approx(1.0));
    CHECK(quadrature(ns, chi_on_nodes(ns, {2})) == doctest::Approx(0.0));
    // gamma = 4 = 2m aliases: the rule returns 1 although the true integral is 0.
    CHECK(quadrature(ns, chi_on_nodes(ns, {4})) == doctest::Approx(1.0));
    CHECK(weight_sum_is_one(ns));
}

TEST_CASE("interpolating zero gives zero and the map is linear") {
    NodeSet ns(ParamVec({4, 4}, {0, 0}));
    SpectralBasis sb(ns.params());
    GridFunction zero(ns, std::vector<double>(ns.size(), 0.0));
    auto cz = interpolate(ns, sb, zero, Space::plain);
    for (auto c : cz.c) CHECK(c == 0.0);

    auto h1 = rand_grid(ns, 1), h2 = rand_grid(ns, 2);
    std::vector<double> mix(ns.size());
    for (std::size_t k = 0; k < ns.size(); ++k) mix[k] = 2.5 * h1[k] - 0.75 * h2[k];
    auto c1 = interpolate(ns, sb, h1, Space::averaged);
    auto c2 = interpolate(ns, sb, h2, Space::averaged);
    auto cm = interpolate(ns, sb, GridFunction(ns, std::move(mix)), Space::averaged);
    for (std::size_t g = 0; g < cm.c.size(); ++g)
        CHECK(cm.c[g] == doctest::Approx(2.5 * c1.c[g] - 0.75 * c2.c[g]).epsilon(1e-12));
}
