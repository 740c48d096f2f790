#include <gtest/gtest.h>

#include <cmath>

#include "ratlab/bounds.hpp"
#include "ratlab/errors.hpp"
#include "ratlab/random.hpp"
#include "ratlab/test_functions.hpp"

using namespace ratlab;
using namespace std::complex_literals;

namespace {

RationalFunction monomial(int n) {
    std::vector<cplx> c(static_cast<std::size_t>(n + 1), 0.0);
    c.back() = 1.0;
    return RationalFunction::polynomial(c);
}

const QuadratureConfig kCfg{};

}  // namespace

TEST(PoleSummaryTest, Examples) {
    const auto a = pole_summary(PoleSet({{2.0, 2}}));
    EXPECT_EQ(a.n1, 0);
    EXPECT_EQ(a.n2, 2);
    EXPECT_DOUBLE_EQ(a.d2, 6.0);
    const auto b = pole_summary(PoleSet({{0.5, 1}, {-2.0, 1}}));
    EXPECT_DOUBLE_EQ(b.d1, 3.0);
    EXPECT_DOUBLE_EQ(b.d2, 3.0);
    for (int n : {2, 5, 9})
        for (double r : {0.25, 0.5, 0.9}) {
            const auto s = pole_summary(testfunc_f(n, r).poles());
            EXPECT_NEAR(s.d2, n * (1 + r) / (1 - r), 1e-12 * s.d2);
            EXPECT_EQ(s.n1, 0);
        }
}

TEST(PointwiseRhs, Examples) {
    EXPECT_DOUBLE_EQ(levin_rusak_rhs(PoleSet::single(0.0, 5), CirclePoint(2.1)), 5.0);
    EXPECT_DOUBLE_EQ(levin_rusak_rhs(PoleSet::single(2.0, 1), CirclePoint(0.0)), 3.0);
    const PoleSet two({{0.5, 1}, {2.0, 1}});
    EXPECT_DOUBLE_EQ(borwein_erdelyi_rhs(two, CirclePoint(0.0)), 3.0);
    EXPECT_DOUBLE_EQ(levin_rusak_rhs(two, CirclePoint(0.0)), 6.0);
    const PoleSet outside({{2.0, 1}, {-3.0 + 1i, 2}});
    EXPECT_EQ(borwein_erdelyi_rhs(outside, CirclePoint(1.0)), levin_rusak_rhs(outside, CirclePoint(1.0)));
    EXPECT_EQ(bep_rhs(PoleSet{}, CirclePoint(0.3), 2.0), 0.0);
}

TEST(PointwiseRhs, BepSubstitution) {
    for (double r : {0.3, 0.5, 0.8}) {
        const PoleSet p = PoleSet::single(-1.0 / r, 1);
        const double k = (1 + r) / (1 - r);
        EXPECT_NEAR(bep_rhs(p, CirclePoint(std::numbers::pi), 1.0), k * k, 1e-12 * k * k);
    }
}

TEST(PointwiseRhs, RandomOrdering) {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto poles = random_rational(rng, 1 + trial % 10, 0.1, true).poles();
        const CirclePoint xi = random_circle_point(rng);
        const double be = borwein_erdelyi_rhs(poles, xi);
        const double lr = levin_rusak_rhs(poles, xi);
        EXPECT_LE(be, lr);
        EXPECT_LE(lr, 2 * be);
        EXPECT_EQ(bep_rhs(poles, xi, Exponent::infinity()), lr);
    }
}

TEST(GenSpijker, Examples) {
    EXPECT_DOUBLE_EQ(gen_spijker_rhs(PoleSet::single(0.0, 1), Exponent::infinity()), 1.0);
    const PoleSet p({{0.5, 1}, {0.2i, 2}, {-3.0, 1}});
    const auto s = pole_summary(p);
    EXPECT_NEAR(gen_spijker_rhs(p, 1.0), s.d1 + s.d2, 1e-14);
    const RationalFunction inv(Polynomial::constant(1.0), PoleSet::single(0.0, 1));
    const auto rep = check_inequality(InequalityKind::GenSpijker, inv, {Exponent::infinity()}, kCfg);
    EXPECT_NEAR(rep.lhs, 1.0, 1e-10);
    EXPECT_NEAR(rep.ratio, 1.0, 1e-9);
}

TEST(GenSpijker, TestfuncG) {
    for (int n : {6, 10}) {
        const auto g = testfunc_g(n, 0.5);
        const int n2 = g.poles().degree();
        EXPECT_NEAR(gen_spijker_rhs(g.poles(), 2.0), n2 * std::sqrt(3.0), 1e-12 * n2);
        const auto rep = check_inequality(InequalityKind::GenSpijker, g, {2.0}, kCfg);
        EXPECT_TRUE(rep.holds);
        EXPECT_GT(rep.ratio, 0.0);
    }
}

TEST(GenSpijker, MonotoneInProximity) {
    for (double p : {1.0, 2.0, 5.0}) {
        double prev = 0.0;
        for (double rad : {0.2, 0.5, 0.8, 0.95}) {
            const double v = gen_spijker_rhs(PoleSet({{rad * 1i, 1}, {3.0, 1}}), p);
            EXPECT_GT(v, prev);
            prev = v;
        }
        prev = 0.0;
        for (double rad : {4.0, 2.0, 1.3, 1.05}) {
            const double v = gen_spijker_rhs(PoleSet({{0.3, 1}, {rad, 2}}), p);
            EXPECT_GT(v, prev);
            prev = v;
        }
    }
}

TEST(BernsteinUpper, Examples) {
    EXPECT_NEAR(bernstein_upper(4, 0.5, 2.0, 2.0), 12.0, 1e-12);
    EXPECT_NEAR(bernstein_upper(4, 0.5, 1.0, Exponent::infinity()), 144.0, 1e-10);
    EXPECT_NEAR(bernstein_upper(4, 0.5, Exponent::infinity(), 1.0), 4.0, 1e-14);
    for (int n : {1, 3, 17})
        for (double r : {0.1, 0.6, 0.95})
            for (double p : {1.0, 2.0, 7.5}) {
                // Both branches coincide at p = q.
                const double e = 1.0;
                EXPECT_NEAR(bernstein_upper(n, r, p, p), (1 + r) * n / std::pow(1 - r, e), 1e-9 * n / (1 - r));
            }
    EXPECT_NEAR(bernstein_upper(5, 0.5, Exponent::infinity(), Exponent::infinity()), 15.0, 1e-12);
}

TEST(NikolskiiUpper, Examples) {
    EXPECT_NEAR(nikolskii_upper(0, 8, 0.5, 2.0, Exponent::infinity()), std::sqrt(3.0) * 3.0, 1e-12);
    EXPECT_THROW(nikolskii_upper(0, 8, 0.5, 2.0, 2.0), DomainError);
    EXPECT_THROW(nikolskii_upper(0, 8, 0.5, 3.0, 2.0), DomainError);
    const auto f = nikolskii_family(8, 0.5);
    const QuadratureConfig cfg = QuadratureConfig::for_function(f);
    const double ratio = lp_norm([&](cplx z) { return f(z); }, Exponent::infinity(), cfg).checked() /
                         lp_norm([&](cplx z) { return f(z); }, 2.0, cfg).checked();
    EXPECT_NEAR(ratio, 16.0 / std::sqrt(32.0 / 3.0), 1e-8);
    EXPECT_LE(ratio, nikolskii_upper(0, 8, 0.5, 2.0, Exponent::infinity()));
    const auto rep = check_inequality(InequalityKind::Nikolskii, f, {2.0, Exponent::infinity()}, kCfg);
    EXPECT_TRUE(rep.holds);
    EXPECT_NEAR(rep.ratio, ratio / (std::sqrt(3.0) * 3.0), 1e-8);
    EXPECT_THROW(check_inequality(InequalityKind::Nikolskii, f, {2.0, 2.0}, kCfg), DomainError);
}

TEST(BlaschkeDerivBound, Examples) {
    const BlaschkeProduct b({0.5, 0.5});
    EXPECT_DOUBLE_EQ(blaschke_deriv_lp_bound(b, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(blaschke_deriv_lp_bound(b, Exponent::infinity()), 6.0);
    EXPECT_NEAR(blaschke_deriv_lp_bound(b, 2.0), std::sqrt(12.0), 1e-14);
    const double l2 = lp_norm([&](cplx z) { return b.derivative(z); }, 2.0, kCfg).checked();
    EXPECT_LE(l2, blaschke_deriv_lp_bound(b, 2.0));
    const double l1 = lp_norm([&](cplx z) { return b.derivative(z); }, 1.0, kCfg).checked();
    EXPECT_NEAR(l1, 2.0, 1e-8);
}

TEST(Spijker, Equality) {
    for (int n : {1, 8, 32}) {
        const auto rep = spijker_check(reflect(monomial(n)), kCfg);
        EXPECT_NEAR(rep.ratio, 1.0, 1e-9);
        EXPECT_EQ(rep.n, n);
        const auto direct = spijker_check(monomial(n), kCfg);
        EXPECT_NEAR(direct.ratio, 1.0, 1e-9);
    }
    const RationalFunction inv(Polynomial::constant(1.0), PoleSet::single(0.0, 1));
    const auto rep = spijker_check(inv, kCfg);
    EXPECT_NEAR(rep.lhs, 1.0, 1e-10);
    EXPECT_NEAR(rep.rhs, 1.0, 1e-10);
}

TEST(Dolzhenko, Monomial) {
    for (int n : {1, 4, 9}) {
        const auto full = dolzhenko_subset_check(monomial(n), Arc::full(), kCfg);
        EXPECT_NEAR(full.lhs, kTwoPi * n, 1e-9 * n);
        EXPECT_NEAR(full.rhs, kTwoPi * n, 1e-12);
        const auto half = dolzhenko_subset_check(monomial(n), Arc(0.0, std::numbers::pi), kCfg);
        EXPECT_NEAR(half.lhs, std::numbers::pi * n, 1e-9 * n);
        EXPECT_TRUE(half.holds);
    }
}

TEST(Dolzhenko, RandomArcs) {
    Rng rng(404);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_rational(rng, 1 + trial % 8, 0.1, true);
        const double a = kTwoPi * unit(rng);
        const Arc e(a, a + 0.05 + (kTwoPi - 0.05) * unit(rng));
        const auto rep = dolzhenko_subset_check(f, e, QuadratureConfig{}.adapted_to(f));
        EXPECT_TRUE(rep.holds) << trial << " ratio " << rep.ratio;
    }
}

TEST(CheckInequality, BepOnTestfunc) {
    const auto f = testfunc_f(3, 0.5);
    InequalityParams params;
    params.p = Exponent::infinity();
    params.xi = CirclePoint(std::numbers::pi);
    const auto rep = check_inequality(InequalityKind::Bep, f, params, kCfg);
    EXPECT_NEAR(rep.lhs, 21.0, 1e-10);
    EXPECT_GE(rep.rhs, 21.0);
    EXPECT_TRUE(rep.holds);
    ASSERT_TRUE(rep.xi.has_value());
}

TEST(CheckInequality, LevinRusakGeometric) {
    const RationalFunction f(Polynomial::constant(1.0), PoleSet::single(2.0, 1));
    InequalityParams params;
    params.xi = CirclePoint(0.0);
    const auto rep = check_inequality(InequalityKind::LevinRusak, f, params, kCfg);
    EXPECT_NEAR(rep.lhs, 2.0, 1e-12);
    EXPECT_NEAR(rep.rhs, 6.0, 1e-8);
}

TEST(CheckInequality, BernsteinRandomInClass) {
    Rng rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Pole> poles;
        for (int k = 0; k < 8; ++k) {
            const double rad = unit(rng) < 0.5 ? 0.5 * unit(rng) : 2.0 + 2.0 * unit(rng);
            poles.push_back({std::polar(rad, kTwoPi * unit(rng)), 1});
        }
        std::vector<cplx> c;
        for (int k = 0; k <= 8; ++k) c.push_back(standard_complex_normal(rng));
        const RationalFunction f(Polynomial::from_coefficients(c), PoleSet(poles));
        const auto rep = check_inequality(InequalityKind::Bernstein, f, {2.0, 2.0}, kCfg);
        EXPECT_LE(rep.r, 0.5 + 1e-15);
        EXPECT_LE(rep.ratio, 1.0);
    }
}

TEST(CheckInequality, ReflectionMatters) {
    // D_n has no finite poles; the bound must use the reflected pole at 0.
    const auto d = dirichlet(16);
    const auto rep = check_inequality(InequalityKind::Nikolskii, d, {2.0, Exponent::infinity()}, kCfg);
    EXPECT_TRUE(rep.holds);
    EXPECT_NEAR(rep.lhs, 16.0, 1e-8);
    EXPECT_NEAR(rep.rhs, (std::sqrt(15.0) + 1.0) * 4.0, 1e-8);
}

TEST(CheckInequality, KindNames) {
    for (InequalityKind k : all_inequality_kinds()) EXPECT_EQ(parse_inequality_kind(to_string(k)), k);
    EXPECT_THROW(parse_inequality_kind("markov"), UnknownKind);
}

TEST(CheckInequality, RatioConventions) {
    EXPECT_EQ(bound_ratio(0.0, 0.0), 0.0);
    EXPECT_TRUE(std::isinf(bound_ratio(1.0, 0.0)));
    EXPECT_DOUBLE_EQ(bound_slack(1e-9), 4e-9);
    EXPECT_FALSE(make_report(InequalityKind::Spijker, 1.0 + 1e-6, 1.0, 1e-9).holds);
    EXPECT_TRUE(make_report(InequalityKind::Spijker, 1.0 + 1e-9, 1.0, 1e-9).holds);
}

TEST(CheckInequality, RandomAllKinds) {
    Rng rng(31337);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::vector<Exponent> exps{1.0, 2.0, 3.0, Exponent::infinity()};
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = random_rational(rng, 1 + trial % 10, 0.1, trial % 3 == 0);
        NormOracle oracle(f, QuadratureConfig{});
        for (InequalityKind kind : all_inequality_kinds()) {
            InequalityParams params;
            params.p = exps[trial % 4];
            params.q = exps[(trial / 4) % 4];
            params.xi = random_circle_point(rng);
            if (kind == InequalityKind::Nikolskii && !(params.p < params.q)) params.q = Exponent::infinity();
            if (kind == InequalityKind::Nikolskii && params.p.is_infinite()) params.p = 1.0;
            if (kind == InequalityKind::Dolzhenko) {
                const double a = kTwoPi * unit(rng);
                params.arc = Arc(a, a + 0.1 + 6.0 * unit(rng));
            }
            const auto rep = check_inequality(kind, oracle, params);
            EXPECT_TRUE(rep.holds) << to_string(kind) << " trial " << trial << " ratio " << rep.ratio;
        }
    }
}

TEST(CheckInequality, RandomWithPolynomialPart) {
    Rng rng(4711);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 6;
        const auto base = random_rational(rng, n, 0.1);
        std::vector<cplx> c;
        for (int k = 0; k <= n + 1 + trial % 3; ++k) c.push_back(standard_complex_normal(rng));
        const RationalFunction f(Polynomial::from_coefficients(c), base.poles());
        ASSERT_FALSE(f.normalized());
        NormOracle oracle(f, QuadratureConfig{});
        for (InequalityKind kind : {InequalityKind::LevinRusak, InequalityKind::BorweinErdelyi, InequalityKind::Bep,
                                    InequalityKind::GenSpijker, InequalityKind::Bernstein, InequalityKind::Nikolskii}) {
            InequalityParams params;
            params.p = trial % 2 == 0 ? Exponent(1.0) : Exponent(2.0);
            params.q = Exponent::infinity();
            params.xi = random_circle_point(rng);
            const auto rep = check_inequality(kind, oracle, params);
            EXPECT_TRUE(rep.holds) << to_string(kind) << " trial " << trial << " ratio " << rep.ratio;
        }
    }
}
