#include <gtest/gtest.h>

#include <random>

#include "qgl/expr.hpp"
#include "qgl/io.hpp"

using namespace qgl;

namespace {

const ParameterSpec kGeneric = ParameterSpec::generic();
const ParameterSpec kRoot5 = ParameterSpec::root(5, 2, 3);

Scalar random_scalar(const Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> e(-2, 2), c(-4, 4);
    Scalar num = f.integer(c(rng)) * f.monomial(e(rng), e(rng)) + f.integer(c(rng)) * f.monomial(e(rng), e(rng));
    if (f.is_root()) return num;
    Scalar den = f.monomial(e(rng), 0) + f.integer(1 + std::abs(c(rng))) * f.monomial(0, 1);
    return num / den;
}

NCPoly random_poly(const Field& f, std::mt19937& rng, int max_len, int max_letter) {
    std::uniform_int_distribution<int> letter(0, max_letter - 1), len(0, max_len);
    NCPoly p;
    for (int t = 0; t < 3; ++t) {
        Word w;
        for (int k = len(rng); k > 0; --k) w.push_back(static_cast<Letter>(letter(rng)));
        p.add_term(w, random_scalar(f, rng));
    }
    return p;
}

}  // namespace

TEST(ScalarSyntax, Examples) {
    Field f;
    EXPECT_EQ(parse_scalar("al", f), f.alpha());
    EXPECT_EQ(parse_scalar("-al^-1", f), -f.alpha().inverse());
    EXPECT_EQ(parse_scalar("q", f), f.alpha().inverse() * f.beta());
    EXPECT_EQ(parse_scalar("(al - be)/(al + 2 be)", f), (f.alpha() - f.beta()) / (f.alpha() + f.integer(2) * f.beta()));
    EXPECT_EQ(parse_scalar("3/4", f), f.rational(Rat(3, 4)));
    Field r(ParameterSpec::root(3, 1, 2));
    EXPECT_EQ(parse_scalar("z^2 + z + 1", r), r.zero());
    EXPECT_THROW(parse_scalar("z", f), ValidationError);
    EXPECT_THROW(parse_scalar("al +", f), ValidationError);
    EXPECT_THROW(parse_scalar("1/0", f), ComputationError);
}

TEST(ScalarSyntax, PrintedFormsReparse) {
    for (const ParameterSpec& spec : {kGeneric, kRoot5}) {
        Field f(spec);
        std::mt19937 rng(21);
        for (int t = 0; t < 100; ++t) {
            Scalar s = random_scalar(f, rng);
            EXPECT_EQ(parse_scalar(s.to_string(), f), s) << s.to_string();
            EXPECT_EQ(scalar_from_json(scalar_to_json(s), f), s);
        }
    }
}

TEST(ElementSyntax, Examples) {
    auto o = o_session(OVariant::GLn, 2, kGeneric);
    GLElement g = parse_o("g", *o);
    EXPECT_TRUE(o->equal(g, o->g()));
    EXPECT_TRUE(o->equal(parse_o("gi", *o), o->ginv()));
    EXPECT_TRUE(o->equal(parse_o("g^-2 x[1,2]", *o), o->mul(o->pow(o->ginv(), 2), o->gen(1, 2))));
    EXPECT_THROW(parse_o("x[3,1]", *o), ValidationError);
    EXPECT_THROW(parse_o("e[1]", *o), ValidationError);

    auto u = u_session(UVariant::U, 3, kGeneric);
    EXPECT_EQ(parse_u("E[2,1]", *u), u->E(2, 1));
    EXPECT_EQ(parse_u("w[1]", *u), u->w(1));
    EXPECT_EQ(parse_u("wp[2]", *u), u->wprime(2));
    EXPECT_EQ(parse_u("a[1]^-2 h[2]", *u), u->mul(u->a(1, -2), u->h(2)));
    EXPECT_THROW(parse_u("e[3]", *u), ValidationError);
    EXPECT_THROW(parse_u("x[1,1]", *u), ValidationError);
}

TEST(ElementSyntax, PrintedFormsReparse) {
    for (const ParameterSpec& spec : {kGeneric, kRoot5}) {
        for (OVariant v : {OVariant::Mn, OVariant::GLn}) {
            auto o = o_session(v, 2, spec);
            std::mt19937 rng(5);
            for (int t = 0; t < 40; ++t) {
                int t_inv = v == OVariant::GLn ? t % 3 : 0;
                GLElement x = o->simplify(o->element(random_poly(o->field(), rng, 4, 4), t_inv));
                EXPECT_TRUE(o->equal(parse_o(o->to_string(x), *o), x)) << o->to_string(x);
                EXPECT_TRUE(o->equal(element_from_json(*o, element_to_json(*o, x)), x)) << o->to_string(x);
            }
        }
        auto u = u_session(UVariant::U, 3, spec);
        std::mt19937 rng(9);
        for (int t = 0; t < 40; ++t) {
            NCPoly p = u->reduce(random_poly(u->field(), rng, 4, u->alphabet().size()));
            EXPECT_EQ(parse_u(u->to_string(p), *u), p) << u->to_string(p);
            EXPECT_EQ(poly_from_json(poly_to_json(p, u->alphabet()), u->alphabet(), u->field()), p);
        }
    }
}

TEST(ElementSyntax, FiniteVariants) {
    auto uh = u_session(UVariant::uhat, 2, ParameterSpec::root(3, 1, 2));
    EXPECT_EQ(parse_u("h[1]^3", *uh), uh->one());
    EXPECT_TRUE(parse_u("E[1,1]^3", *uh).is_zero());
    auto hb = o_session(OVariant::Hbar, 2, ParameterSpec::root(3, 1, 2));
    EXPECT_TRUE(parse_o("x[1,2]^3", *hb).p.is_zero());
    EXPECT_TRUE(hb->equal(parse_o("x[1,1]^3", *hb), hb->one()));
}

TEST(TensorJson, Shape) {
    auto o = o_session(OVariant::GLn, 2, kGeneric);
    json j = tensor_to_json(o->coproduct(o->gen(1, 1)), o->alphabet());
    ASSERT_TRUE(j.contains("terms"));
    ASSERT_EQ(j["terms"].size(), 2u);
    for (const auto& t : j["terms"]) {
        EXPECT_EQ(t["legs"].size(), 2u);
        EXPECT_TRUE(t.contains("coeff"));
    }
}
