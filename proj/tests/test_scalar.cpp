#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qgl/scalar.hpp"

using namespace qgl;

namespace {

using cd = std::complex<double>;

// Test-side numeric oracle: evaluate a scalar at complex values of al, be.
cd eval_lpoly(const LPoly& p, cd al, cd be) {
    cd s = 0;
    for (const auto& t : p.terms()) s += t.c.get_d() * std::pow(al, t.a) * std::pow(be, t.b);
    return s;
}
cd eval_generic(const Scalar& x, cd al, cd be) {
    return eval_lpoly(x.ratfun().num(), al, be) / eval_lpoly(x.ratfun().den(), al, be);
}
cd eval_root(const Scalar& x) {
    const Cyclo& c = x.cyclo();
    cd z = std::polar(1.0, 2 * M_PI / c.ell());
    cd s = 0;
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) s += c.coeffs()[i].get_d() * std::pow(z, static_cast<int>(i));
    return s;
}
constexpr double kTol = 1e-9;

Scalar random_scalar(const Field& f, std::mt19937& rng, bool allow_fraction = true) {
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), nterms(1, 3);
    auto poly = [&] {
        Scalar s = f.zero();
        for (int k = nterms(rng); k > 0; --k) s += f.integer(c(rng)) * f.monomial(e(rng), e(rng));
        return s;
    };
    Scalar num = poly();
    if (!allow_fraction) return num;
    Scalar den = poly();
    if (den.is_zero()) den = f.one();
    return num / den;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

TEST(Cyclotomic, SmallCases) {
    EXPECT_EQ(cyclotomic_poly(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic_poly(3), (IntPoly{1, 1, 1}));
    EXPECT_EQ(cyclotomic_poly(9), (IntPoly{1, 0, 0, 1, 0, 0, 1}));
}

TEST(Cyclotomic, ProductOverDivisorsIsZmMinusOne) {
    for (int m = 1; m <= 36; ++m) {
        IntPoly prod{1};
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) prod = poly_mul(prod, cyclotomic_poly(d));
        IntPoly want(m + 1, 0);
        want[0] = -1;
        want[m] = 1;
        EXPECT_EQ(prod, want) << "m=" << m;
        EXPECT_EQ(static_cast<int>(cyclotomic_poly(m).size()) - 1, euler_phi(m));
    }
}

TEST(ScalarArith, Examples) {
    Field f;
    Scalar al = f.alpha(), be = f.beta();
    EXPECT_TRUE((al + (-al)).is_zero());
    EXPECT_EQ(al.inverse() * be * al, be);
    Scalar inv = (al - be).inverse();
    EXPECT_EQ(inv * (al - be), f.one());
    EXPECT_EQ((al * al - be * be) / (al - be), al + be);
}

TEST(ScalarArith, DivisionByZeroIsDistinctError) {
    Field f;
    EXPECT_THROW(f.zero().inverse(), DivisionByZero);
    Field r(ParameterSpec::root(5, 2, 3));
    EXPECT_THROW(r.one() / r.zero(), DivisionByZero);
}

TEST(ScalarArith, FieldAxiomsGenericMatchNumericOracle) {
    Field f;
    std::mt19937 rng(7);
    const cd al(1.3, 0.4), be(-0.7, 1.1);
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), f.one());
        EXPECT_NEAR(std::abs(eval_generic(a * b + c, al, be) -
                             (eval_generic(a, al, be) * eval_generic(b, al, be) + eval_generic(c, al, be))),
                    0, kTol);
    }
}

TEST(ScalarArith, FieldAxiomsRootModeMatchNumericOracle) {
    for (int ell : {3, 5, 9}) {
        Field f(ParameterSpec::root(ell, 1, 2));
        std::mt19937 rng(ell);
        for (int trial = 0; trial < 40; ++trial) {
            Scalar a = random_scalar(f, rng, false), b = random_scalar(f, rng, false), c = random_scalar(f, rng, false);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.inverse(), f.one());
                EXPECT_NEAR(std::abs(eval_root(a.inverse()) - 1.0 / eval_root(a)), 0, kTol);
            }
            EXPECT_NEAR(std::abs(eval_root(a * b) - eval_root(a) * eval_root(b)), 0, kTol);
        }
    }
}

TEST(ScalarArith, CanonicalFormsAreStructural) {
    Field f;
    Scalar al = f.alpha(), be = f.beta();
    Scalar x = (al * be - be * be) / (al * al - al * be);  // = be / al
    EXPECT_EQ(x, be / al);
    EXPECT_EQ(x.to_string(), (be / al).to_string());
    Scalar y = f.one() / (be - al);
    EXPECT_EQ(y, -(f.one() / (al - be)));
    EXPECT_EQ(y.to_string(), (-(f.one() / (al - be))).to_string());
}

TEST(Specialize, Examples) {
    Field g;
    for (auto [ell, na] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}, {7, 3}, {9, 4}}) {
        Field r(ParameterSpec::root(ell, na, (na + 1) % ell));
        EXPECT_EQ(r.specialize(g.alpha().inverse() * g.beta()), r.zeta());
        EXPECT_EQ(r.specialize(g.alpha().pow(ell)), r.one());
        EXPECT_EQ(r.specialize(g.beta().pow(ell)), r.one());
    }
    Field r3(ParameterSpec::root(3, 1, 2));
    Scalar z = r3.zeta();
    EXPECT_EQ(r3.specialize((g.alpha() - g.beta()).inverse()), (z - z * z).inverse());
}

TEST(Specialize, VanishingDenominatorIsReported) {
    Field g;
    Field r(ParameterSpec::root(3, 1, 2));
    // al^3 - 1 vanishes at al = zeta
    EXPECT_THROW(r.specialize((g.alpha().pow(3) - g.one()).inverse()), ComputationError);
}

TEST(Specialize, IsAHomomorphism) {
    Field g;
    Field r(ParameterSpec::root(5, 1, 2));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a = random_scalar(g, rng, false), b = random_scalar(g, rng, false);
        EXPECT_EQ(r.specialize(a + b), r.specialize(a) + r.specialize(b));
        EXPECT_EQ(r.specialize(a * b), r.specialize(a) * r.specialize(b));
        // numeric oracle: evaluate at al = zeta^1, be = zeta^2
        cd z = std::polar(1.0, 2 * M_PI / 5);
        EXPECT_NEAR(std::abs(eval_root(r.specialize(a * b)) - eval_generic(a * b, z, z * z)), 0, kTol);
    }
}

TEST(RootOfUnity, ZetaIsPrimitive) {
    for (int ell : {3, 5, 7, 9, 15}) {
        Field f(ParameterSpec::root(ell, 1, 2));
        Scalar z = f.zeta();
        EXPECT_EQ(z.pow(ell), f.one());
        for (int k = 1; k < ell; ++k) EXPECT_NE(z.pow(k), f.one()) << "ell=" << ell << " k=" << k;
        EXPECT_EQ(f.alpha().inverse() * f.beta(), z);
    }
}

TEST(GeometricSum, Examples) {
    Field f;
    Scalar a2 = f.alpha() * f.alpha();
    EXPECT_TRUE(geometric_sum(0, a2).is_zero());
    EXPECT_EQ(geometric_sum(1, a2), f.one());
    EXPECT_EQ(geometric_sum(2, a2), f.one() + a2);
    EXPECT_EQ(geometric_sum(3, f.one()), f.integer(3));
    for (int s = 1; s < 7; ++s) EXPECT_EQ(geometric_sum(s, a2) * (a2 - f.one()), a2.pow(s) - f.one());
}

TEST(ParameterSpecValidation, RejectsExactlyTheInvalidTuples) {
    for (int ell = 0; ell <= 9; ++ell)
        for (int na = -1; na <= ell; ++na)
            for (int nb = -1; nb <= ell; ++nb)
                for (bool strict : {false, true}) {
                    ParameterSpec s = ParameterSpec::root(ell, na, nb);
                    bool ok = ell >= 3 && ell % 2 == 1 && na > 0 && na < ell && nb > 0 && nb < ell &&
                              ((nb - na) % ell + ell) % ell == 1 % ell && (!strict || (na + nb) % ell != 0);
                    if (ok)
                        EXPECT_NO_THROW(s.validate(strict)) << ell << " " << na << " " << nb;
                    else
                        EXPECT_THROW(s.validate(strict), ValidationError) << ell << " " << na << " " << nb;
                }
}
