#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "quintic/errors.hpp"
#include "quintic/oracle.hpp"
#include "quintic/trig_solver.hpp"

using namespace quintic;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_near(Complex got, Complex want, double tol) {
    EXPECT_NEAR(got.real(), want.real(), tol) << got << " vs " << want;
    EXPECT_NEAR(got.imag(), want.imag(), tol) << got << " vs " << want;
}

Form3Problem reduce(Complex a) { return form2_to_form3(form1_to_form2({a})); }

const AngularInterval& interval(const std::vector<AngularInterval>& v, int k) {
    for (const auto& i : v) {
        if (i.k == k) return i;
    }
    throw std::out_of_range("no interval");
}

}  // namespace

TEST(FSigma, ZeroAtLowerEndOfI0) {
    for (double theta : {0.05, 0.2, 0.6}) EXPECT_NEAR(f_sigma(-theta / 4, theta), 0.0, 1e-30);
}

TEST(FSigma, BlowsUpBelowZero) {
    const double theta = 0.3;
    EXPECT_GT(f_sigma(-1e-6, theta), 1e12);
    EXPECT_GT(f_sigma(-1e-9, theta), f_sigma(-1e-6, theta));
}

TEST(FSigma, ExampleTwo) {
    const double theta = 0.2288411534;
    const double sigma = std::arg(Complex{2.5580193297, -0.0347499177});
    EXPECT_NEAR(sigma, -0.0135838615, 1e-10);
    EXPECT_NEAR(f_sigma(sigma, theta), 151.50655744, 5e-6);
}

TEST(FSigma, PoleThrows) {
    try {
        f_sigma(0.0, 0.1);
        FAIL();
    } catch (const SolverError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PoleEvaluation);
    }
    EXPECT_THROW(radius_from_sigma(0.0, 0.1), SolverError);
}

TEST(Radius, Values) {
    const double theta = 0.2288411534;
    const Complex y{2.5580193297, -0.0347499177};
    EXPECT_NEAR(radius_from_sigma(std::arg(y), theta), 2.558255, 1e-6);
    EXPECT_NEAR(radius_from_sigma(-theta / 4, theta), 0.0, 1e-15);
    EXPECT_GT(radius_from_sigma(-kPi / 40 + 1e-3, kPi / 10), 0.0);
    EXPECT_LT(radius_from_sigma(-kPi / 40 - 1e-3, kPi / 10), 0.0);
}

TEST(Intervals, GenericTheta) {
    const auto v = intervals_for(kPi / 10);
    ASSERT_EQ(v.size(), 5u);
    EXPECT_DOUBLE_EQ(interval(v, 0).lo, -kPi / 40);
    EXPECT_DOUBLE_EQ(interval(v, 0).hi, 0.0);
}

TEST(Intervals, EndpointThetas) {
    const auto at0 = intervals_for(0.0);
    ASSERT_EQ(at0.size(), 4u);
    EXPECT_THROW(interval(at0, 0), std::out_of_range);
    EXPECT_DOUBLE_EQ(interval(at0, -2).lo, -kPi);
    EXPECT_DOUBLE_EQ(interval(at0, -2).hi, -4 * kPi / 5);

    const auto at5 = intervals_for(kPi / 5);
    ASSERT_EQ(at5.size(), 4u);
    EXPECT_THROW(interval(at5, -2), std::out_of_range);
    EXPECT_NEAR(interval(at5, 2).lo, 4 * kPi / 5, 1e-15);
    EXPECT_NEAR(interval(at5, 2).hi, 19 * kPi / 20, 1e-15);
}

TEST(Intervals, RejectsThetaOutOfRange) {
    try {
        intervals_for(0.7);
        FAIL();
    } catch (const SolverError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
    }
}

TEST(Intervals, DisjointAndAnnotated) {
    for (int i = 1; i < 50; ++i) {
        const double theta = kPi / 5 * i / 50;
        auto v = intervals_for(theta);
        ASSERT_EQ(v.size(), 5u);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
        for (std::size_t j = 0; j < v.size(); ++j) {
            EXPECT_LT(v[j].lo, v[j].hi);
            if (j > 0) {
                EXPECT_LE(v[j - 1].hi, v[j].lo);
            }
        }
        for (const auto& iv : v) {
            const double expected_zero_end = iv.k <= 0 ? iv.lo : iv.hi;
            EXPECT_EQ(iv.zero(), expected_zero_end) << iv.k;
            EXPECT_EQ(iv.zero_end == IntervalEnd::Lower, iv.k <= 0);
            EXPECT_NE(iv.zero_end, iv.singular_end);
            EXPECT_NEAR(f_sigma(iv.zero(), theta), 0.0, 1e-12) << iv.k;
            const double dir = iv.singular_end == IntervalEnd::Upper ? -1.0 : 1.0;
            EXPECT_GT(f_sigma(iv.pole() + dir * 1e-9, theta), 1e12) << "k=" << iv.k << " theta=" << theta;
        }
    }
}

TEST(Bisect, ExampleTwoI0) {
    const Form3Problem p = reduce({3.08, 1.68});
    const auto v = intervals_for(p.theta);
    const double sigma = bisect_sigma(interval(v, 0), p.theta, p.xi);
    EXPECT_NEAR(sigma, -0.0135838615, 1e-10);
    EXPECT_NEAR(f_sigma(sigma, p.theta), 2 * p.xi, 1e-8 * p.xi);
    expect_near(std::polar(radius_from_sigma(sigma, p.theta), sigma), {2.5580193297, -0.0347499177}, 5e-10);
}

TEST(Bisect, SmallXiCollapsesToZeroEnd) {
    const double theta = kPi / 10;
    const auto v = intervals_for(theta);
    double prev = 0.0;
    for (double xi : {1e-3, 1e-6, 1e-9, 1e-12}) {
        const double s = bisect_sigma(interval(v, 0), theta, xi);
        const double gap = s + theta / 4;
        EXPECT_GT(gap, 0.0);
        if (prev > 0.0) {
            EXPECT_LT(gap, prev);
        }
        prev = gap;
    }
    EXPECT_LT(prev, 1e-3);
}

TEST(AllRootsForm3, ExampleOne) {
    const RootSet s = all_roots_form3(reduce(0.01));
    const Complex expected[] = {{-0.8090170025, -0.5877852582}, {-0.0015494319, -0.0098971415},
                                {0.0098621565, -0.0015443338},  {0.0015788252, 0.0098566936},
                                {-0.0098915418, 0.0015847876}};
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(s.roots[i].k, i - 2);
        expect_near(s.roots[i].value, expected[i], 5e-10);
    }
    EXPECT_EQ(s.roots[0].via, RootSource::Vieta);
    for (int i = 1; i < 5; ++i) EXPECT_EQ(s.roots[i].via, RootSource::Bisection);
}

TEST(AllRootsForm3, ExampleTwo) {
    const RootSet s = all_roots_form3(reduce({3.08, 1.68}));
    const Complex expected[] = {{-2.4358363319, -1.6419437613}, {0.6487113516, -2.6125840601},
                                {2.5580193297, -0.0347499177},  {0.6697215821, 2.5335199517},
                                {-2.4145458637, 1.5289087467}};
    for (int i = 0; i < 5; ++i) {
        expect_near(s.roots[i].value, expected[i], 5e-10);
        EXPECT_EQ(s.roots[i].via, RootSource::Bisection);
    }
}

TEST(AllRootsForm3, ThetaZeroMatchesOracle) {
    const Form3Problem p = make_form3(1.0, 0.0);
    const RootSet s = all_roots_form3(p);
    EXPECT_EQ(s.roots[2].via, RootSource::Vieta);
    std::array<Complex, 5> values;
    for (int i = 0; i < 5; ++i) values[i] = s.roots[i].value;
    EXPECT_LT(oracle::multiset_distance(values, oracle::oracle_roots(oracle::form3_polynomial(1.0, p.u))), 1e-9);
    expect_near(s.roots[2].value, Complex{1.0}, 1e-14);
}

TEST(AllRootsForm3, ThetaZeroSmallXiHasTwoNegativeRealRoots) {
    // Below 2 xi = 4^4/5^5 the k = -2 and k = 2 roots lie on the negative axis.
    for (double xi : {1e-9, 2e-4, 0.04, 0.0409}) {
        const Form3Problem p = make_form3(xi, 0.0);
        const RootSet s = all_roots_form3(p);
        const Complex near_minus_one = s.roots[0].value;
        const Complex near_zero = s.roots[4].value;
        EXPECT_EQ(near_minus_one.imag(), 0.0);
        EXPECT_EQ(near_zero.imag(), 0.0);
        EXPECT_LT(near_minus_one.real(), -0.8);
        EXPECT_GT(near_zero.real(), -0.8);
        std::array<Complex, 5> values;
        for (int i = 0; i < 5; ++i) values[i] = s.roots[i].value;
        EXPECT_LT(oracle::multiset_distance(values, oracle::oracle_roots(oracle::form3_polynomial(xi, p.u))), 1e-12);
    }
}

TEST(AllRootsForm3, TinyThetaNearBothEnds) {
    // Roots within theta xi of the zero ends near +-pi and 0.
    for (double theta : {2e-14, 1e-12, 1e-9, kPi / 5 - 2e-14, kPi / 5 - 1e-12}) {
        for (double xi : {1e-12, 1e-6, 1e-2, 0.0409, 0.0411, 1e3, 1e12}) {
            const Form3Problem p = make_form3(xi, theta);
            const RootSet s = all_roots_form3(p);
            std::array<Complex, 5> values;
            double scale = 1.0;
            for (int i = 0; i < 5; ++i) {
                values[i] = s.roots[i].value;
                scale = std::max(scale, std::abs(values[i]));
                EXPECT_LT(s.roots[i].residual, 1e-12) << "theta=" << theta << " xi=" << xi;
            }
            const auto want = oracle::oracle_roots(oracle::form3_polynomial(xi, p.u));
            EXPECT_LT(oracle::multiset_distance(values, want), 1e-9 * scale)
                << "theta=" << theta << " xi=" << xi;
        }
    }
}

TEST(AllRootsForm3, DoubleRootAtSeamBound) {
    const double xi = 128.0 / 3125.0;
    const Form3Problem p = make_form3(xi, 0.0);
    const RootSet s = all_roots_form3(p);
    EXPECT_NEAR(s.roots[0].value.real(), -0.8, 1e-7);
    EXPECT_NEAR(s.roots[4].value.real(), -0.8, 1e-7);
    EXPECT_NO_THROW(oracle::oracle_roots(oracle::form3_polynomial(xi, p.u)));
}

TEST(AllRootsForm3, ReconstructionBeforePolish) {
    for (double theta : {0.05, 0.3, 0.55}) {
        for (double xi : {1e-6, 1.0, 1e6}) {
            const RootSet s = all_roots_form3(make_form3(xi, theta));
            for (const auto& rec : s.roots) {
                EXPECT_LT(std::abs(std::polar(rec.r, rec.sigma) - rec.value), 1e-6 * std::max(1.0, rec.r));
                EXPECT_LT(rec.residual, 1e-10);
            }
        }
    }
}

TEST(AllRootsForm3, VietaIdentities) {
    const Form3Problem p = make_form3(3.5, 0.4);
    const RootSet s = all_roots_form3(p);
    Complex sum{}, prod{1.0};
    for (const auto& rec : s.roots) {
        sum += rec.value;
        prod *= rec.value;
    }
    EXPECT_LT(std::abs(sum + p.u), 1e-9);
    EXPECT_LT(std::abs(prod - 2 * p.xi) / (2 * p.xi), 1e-9);
}

TEST(AllRootsForm1, ExampleTables) {
    const RootSet s1 = all_roots_form1({0.01});
    const Complex x1[] = {{-0.0099999999, 0.0}, {-0.704595734, 0.7071179873}, {0.7095957339, 0.7071176748},
                          {0.7095957339, -0.7071176748}, {-0.704595734, -0.7071179873}};
    for (int i = 0; i < 5; ++i) expect_near(s1.roots[i].value, x1[i], 5e-10);

    const RootSet s2 = all_roots_form1({Complex{3.08, 1.68}});
    const Complex x2[] = {{-1.1834415151, -0.1608289168}, {-0.607389619, 1.1531182439}, {1.0110954185, 0.9265109088},
                          {1.116784747, -0.7383651957}, {-0.3370490315, -1.1804350402}};
    for (int i = 0; i < 5; ++i) expect_near(s2.roots[i].value, x2[i], 5e-10);
}

TEST(AllRootsForm1, VietaIdentities) {
    const Complex a{-0.4, 2.2};
    const RootSet s = all_roots_form1({a});
    std::array<Complex, 5> roots;
    for (int i = 0; i < 5; ++i) roots[i] = s.roots[i].value;
    const auto report = oracle::vieta_check(oracle::form1_polynomial(a), roots, 1e-9);
    EXPECT_TRUE(report.all_passed());
    EXPECT_LT(report.deviation[1], 1e-9);
}

TEST(AllRootsForm1, NegativeTwoHasOneRealRoot) {
    const RootSet s = all_roots_form1({-2.0});
    int real_positive = 0;
    for (const auto& rec : s.roots) {
        if (std::abs(rec.value.imag()) < 1e-12 && rec.value.real() > 0) {
            ++real_positive;
            EXPECT_NEAR(rec.value.real(), 1.0, 1e-12);
        }
    }
    EXPECT_EQ(real_positive, 1);
}
