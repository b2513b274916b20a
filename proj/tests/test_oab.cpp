#include <gtest/gtest.h>

#include "qgl/expr.hpp"
#include "qgl/oab.hpp"

using namespace qgl;

namespace {

const ParameterSpec kGeneric = ParameterSpec::generic();
const ParameterSpec kRoot3 = ParameterSpec::root(3, 1, 2);

Tensor pure(const std::vector<std::pair<std::pair<Word, Word>, Scalar>>& terms) {
    Tensor t;
    for (const auto& [legs, c] : terms) t.add_term({Leg{0, legs.first}, Leg{0, legs.second}}, c);
    return t;
}

long long count_basis(const OSession& s, int max_len) {
    long long count = 0;
    long long beyond = s.system().enumerate_irreducible(max_len, [&](const Word&) { ++count; });
    EXPECT_EQ(beyond, 0) << "irreducible words longer than " << max_len;
    return count;
}

}  // namespace

TEST(QuantumDeterminant, Examples) {
    auto s1 = o_session(OVariant::Mn, 1, kGeneric);
    EXPECT_EQ(s1->qdet({0}, {0}), parse_o("x[1,1]", *s1).p);
    auto s2 = o_session(OVariant::Mn, 2, kGeneric);
    EXPECT_EQ(s2->qdet({0, 1}, {0, 1}), parse_o("x[1,1] x[2,2] - al x[1,2] x[2,1]", *s2).p);
    // the raw row sum before reduction
    EXPECT_EQ(s2->reduce(parse_o("x[1,1] x[2,2]", *s2).p - parse_o("be^-1 x[2,1]", *s2).p *
                                                                 NCPoly::term({s2->x(1, 2)}, s2->field().one())),
              s2->qdet({0, 1}, {0, 1}));
    EXPECT_ANY_THROW(s2->qdet({0, 1}, {0}));
}

TEST(QuantumDeterminant, RowAndColumnExpansionsAgree) {
    for (int n = 1; n <= 3; ++n) {
        auto s = o_session(OVariant::Mn, n, kGeneric);
        std::vector<int> all;
        for (int i = 0; i < n; ++i) all.push_back(i);
        EXPECT_EQ(s->qdet(all, all), s->qdet_column(all, all)) << "n=" << n;
        auto rep = determinant_check(*s);
        EXPECT_TRUE(rep.coherent);
        EXPECT_TRUE(rep.grouplike);
    }
}

TEST(QuantumDeterminant, NormalityMatchesCommutationOracle) {
    for (int n = 1; n <= 3; ++n) {
        auto s = o_session(OVariant::GLn, n, kGeneric);
        EXPECT_TRUE(g_normality_check(*s));
        const Field& f = s->field();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Scalar c = (f.beta() * f.alpha()).pow(i - j);
                EXPECT_TRUE(s->equal(s->mul(s->gen(i, j), s->g()), s->scaled(s->mul(s->g(), s->gen(i, j)), c)))
                    << i << "," << j;
            }
    }
}

TEST(Coproduct, Examples) {
    auto s = o_session(OVariant::GLn, 2, kGeneric);
    const Scalar one = s->field().one();
    Letter x11 = s->x(1, 1), x12 = s->x(1, 2), x21 = s->x(2, 1);
    EXPECT_EQ(s->coproduct(s->gen(1, 1)), pure({{{{x11}, {x11}}, one}, {{{x12}, {x21}}, one}}));
    EXPECT_EQ(s->coproduct(s->one()), pure({{{{}, {}}, one}}));
    const Tensor g = s->as_tensor(s->g());
    Tensor gg;
    for (const auto& [k, c] : g.terms())
        for (const auto& [k2, c2] : g.terms()) gg.add_term({k[0], k2[0]}, c * c2);
    EXPECT_EQ(s->coproduct(s->g()), gg);
}

TEST(Coproduct, IsAnAlgebraMapOnWords) {
    auto s = o_session(OVariant::GLn, 2, kGeneric);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    GLElement a = s->gen(i, j), b = s->gen(k, l);
                    EXPECT_EQ(s->coproduct(s->mul(a, b)), s->tensor_mul(s->coproduct(a), s->coproduct(b)));
                }
}

TEST(Antipode, Examples) {
    auto s = o_session(OVariant::GLn, 2, kGeneric);
    const Field& f = s->field();
    GLElement want{1, NCPoly::term({s->x(1, 2)}, -f.beta())};
    EXPECT_TRUE(s->equal(s->antipode(s->gen(1, 2)), want));
    EXPECT_TRUE(s->equal(s->antipode(s->ginv()), s->g()));
    EXPECT_TRUE(s->equal(s->antipode(s->antipode(s->gen(1, 2))),
                         s->scaled(s->gen(1, 2), f.alpha().inverse() * f.beta())));
    auto mn = o_session(OVariant::Mn, 2, kGeneric);
    EXPECT_THROW(mn->antipode(mn->gen(1, 1)), ComputationError);
}

TEST(Antipode, MatrixInverseIdentities) {
    for (int n = 1; n <= 3; ++n) {
        auto s = o_session(OVariant::GLn, n, kGeneric);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                GLElement left = s->scalar(s->field().zero()), right = left;
                for (int k = 1; k <= n; ++k) {
                    left = s->add(left, s->mul(s->antipode(s->gen(i, k)), s->gen(k, j)));
                    right = s->add(right, s->mul(s->gen(i, k), s->antipode(s->gen(k, j))));
                }
                GLElement want = i == j ? s->one() : s->scalar(s->field().zero());
                EXPECT_TRUE(s->equal(left, want)) << n << ": " << i << "," << j;
                EXPECT_TRUE(s->equal(right, want)) << n << ": " << i << "," << j;
            }
    }
}

TEST(HopfAxioms, HoldOnGeneratorsOfEveryVariant) {
    for (int n = 1; n <= 3; ++n)
        for (OVariant v : {OVariant::GLn, OVariant::Bplus, OVariant::Bminus})
            for (const auto& r : hopf_axioms_O(*o_session(v, n, kGeneric)))
                EXPECT_TRUE(r.ok) << ovariant_name(v) << " n=" << n << " " << r.id << " " << r.witness;
    for (OVariant v : {OVariant::Hbar, OVariant::Kplus, OVariant::Kminus})
        for (const auto& r : hopf_axioms_O(*o_session(v, 2, kRoot3)))
            EXPECT_TRUE(r.ok) << ovariant_name(v) << " " << r.id << " " << r.witness;
}

TEST(SquareOfAntipode, EigenvaluesFollowTheInverseParameterRatio) {
    for (int n = 1; n <= 3; ++n) {
        auto s = o_session(OVariant::GLn, n, kGeneric);
        const Field& f = s->field();
        auto table = s2_spectrum(*s);
        ASSERT_EQ(static_cast<int>(table.size()), n * n);
        for (const auto& e : table) {
            Scalar want = (f.alpha().inverse() * f.beta()).pow(e.j - e.i);
            EXPECT_EQ(e.eigenvalue, want) << e.i << "," << e.j;
            EXPECT_TRUE(e.matches_qinv);
            EXPECT_EQ(e.matches_ab, e.i == e.j);
        }
    }
}

TEST(BorelIdeals, AreCoideals) {
    // Delta(x_ij) for i > j lies in J (x) O + O (x) J.
    for (int n = 2; n <= 3; ++n) {
        auto gl = o_session(OVariant::GLn, n, kGeneric);
        for (OVariant v : {OVariant::Bplus, OVariant::Bminus}) {
            auto b = o_session(v, n, kGeneric);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    bool in_ideal = v == OVariant::Bplus ? i > j : i < j;
                    if (!in_ideal) continue;
                    EXPECT_TRUE(b->is_zero(b->project_from_gl(gl->gen(i, j))));
                    const Tensor d = gl->coproduct(gl->gen(i, j));
                    for (const auto& [key, c] : d.terms()) {
                        bool left = b->is_zero(b->project_from_gl(gl->leg_element(key[0])));
                        bool right = b->is_zero(b->project_from_gl(gl->leg_element(key[1])));
                        EXPECT_TRUE(left || right) << gl->tensor_to_string(d);
                    }
                }
        }
    }
}

TEST(BasisCounts, HbarAndBorelQuotients) {
    for (int ell : {3, 5}) {
        auto hb = o_session(OVariant::Hbar, 2, ParameterSpec::root(ell, 1, 2));
        long long want = 1;
        for (int i = 0; i < 4; ++i) want *= ell;
        EXPECT_EQ(count_basis(*hb, 4 * (ell - 1)), want);
        EXPECT_EQ(static_cast<long long>(hb->basis_words(4 * (ell - 1)).size()), want);
    }
    EXPECT_EQ(count_basis(*o_session(OVariant::Hbar, 3, kRoot3), 18), 19683);
    for (OVariant v : {OVariant::Kplus, OVariant::Kminus}) {
        EXPECT_EQ(count_basis(*o_session(v, 2, kRoot3), 6), 27);
        EXPECT_EQ(count_basis(*o_session(v, 3, kRoot3), 12), 729);
    }
}

TEST(Frobenius, Examples) {
    auto s = o_session(OVariant::GLn, 2, kRoot3);
    EXPECT_TRUE(s->equal(frobenius_embed(*s, {1, 0, 0, 0}), s->pow(s->gen(1, 1), 3)));
    EXPECT_TRUE(s->equal(frobenius_embed(*s, {1, 0, 0, 1}), s->mul(s->pow(s->gen(1, 1), 3), s->pow(s->gen(2, 2), 3))));
    GLElement x12l = s->pow(s->gen(1, 2), 3), x21 = s->gen(2, 1);
    EXPECT_TRUE(s->is_zero(s->sub(s->mul(x12l, x21), s->mul(x21, x12l))));
    EXPECT_THROW(frobenius_embed(*o_session(OVariant::GLn, 2, kGeneric), {1, 0, 0, 0}), ValidationError);
}

TEST(Frobenius, PowersAreCentral) {
    EXPECT_TRUE(frobenius_centrality(*o_session(OVariant::GLn, 2, kRoot3)).empty());
    EXPECT_TRUE(frobenius_centrality(*o_session(OVariant::GLn, 2, ParameterSpec::root(5, 2, 3))).empty());
    EXPECT_TRUE(frobenius_centrality(*o_session(OVariant::GLn, 3, kRoot3)).empty());
}

TEST(HbarProjection, Examples) {
    auto gl = o_session(OVariant::GLn, 2, kRoot3);
    auto hb = o_session(OVariant::Hbar, 2, kRoot3);
    EXPECT_TRUE(hbar_project(*hb, gl->pow(gl->gen(1, 2), 3)).is_zero());
    EXPECT_EQ(hbar_project(*hb, gl->pow(gl->gen(1, 1), 3)), NCPoly::constant(hb->field().one()));
    Word w{hb->x(1, 1), hb->x(1, 2)};
    EXPECT_TRUE(gl->equal(gamma_section(*gl, *hb, w), gl->mul(gl->gen(1, 1), gl->gen(1, 2))));
}

TEST(HbarProjection, IsMultiplicative) {
    auto gl = o_session(OVariant::GLn, 2, kRoot3);
    auto hb = o_session(OVariant::Hbar, 2, kRoot3);
    std::vector<GLElement> xs{gl->gen(1, 1), gl->gen(1, 2), gl->gen(2, 1), gl->gen(2, 2), gl->ginv(),
                              gl->pow(gl->gen(2, 1), 2)};
    for (const auto& a : xs)
        for (const auto& b : xs)
            EXPECT_EQ(hbar_project(*hb, gl->mul(a, b)), hb->reduce(hbar_project(*hb, a) * hbar_project(*hb, b)));
}

TEST(GammaSection, IsASectionAndCompatibleAfterProjection) {
    auto gl = o_session(OVariant::GLn, 2, kRoot3);
    auto hb = o_session(OVariant::Hbar, 2, kRoot3);
    GammaReport r = gamma_check(*gl, *hb);
    EXPECT_EQ(r.words, 81);
    EXPECT_EQ(r.section_ok, 81);
    EXPECT_EQ(r.projected_ok, 81);
}

TEST(GammaSection, CoalgebraMapBelowDegreeEll) {
    // On words of degree < l no l-th power appears in the coproduct.
    auto gl = o_session(OVariant::GLn, 2, kRoot3);
    auto hb = o_session(OVariant::Hbar, 2, kRoot3);
    GammaReport r = gamma_check(*gl, *hb, 15);  // all 15 words of degree <= 2
    EXPECT_EQ(r.coalgebra_ok, 15) << r.first_failure;
}

TEST(GammaSection, CoalgebraMapOnEveryBasisWord) {
    auto gl = o_session(OVariant::GLn, 2, kRoot3);
    auto hb = o_session(OVariant::Hbar, 2, kRoot3);
    GammaReport r = gamma_check(*gl, *hb);
    EXPECT_EQ(r.coalgebra_ok, r.words) << "first failure: " << r.first_failure;
}

TEST(DeltaBorel, Examples) {
    auto gl = o_session(OVariant::GLn, 2, kGeneric);
    auto bp = o_session(OVariant::Bplus, 2, kGeneric);
    auto bm = o_session(OVariant::Bminus, 2, kGeneric);
    const Scalar one = gl->field().one();
    EXPECT_EQ(delta_borel(*gl, *bp, *bm, gl->gen(1, 1)),
              pure({{{{bp->x(1, 1)}, {bm->x(1, 1)}}, one}, {{{bp->x(1, 2)}, {bm->x(2, 1)}}, one}}));
    EXPECT_EQ(delta_borel(*gl, *bp, *bm, gl->one()), pure({{{{}, {}}, one}}));
}

TEST(DeltaBorel, IsInjectiveOnLowDegrees) {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 2}}) {
        auto r = delta_borel_rank(*o_session(OVariant::GLn, n, kGeneric), d);
        EXPECT_GT(r.monomials, 0);
        EXPECT_EQ(r.rank, r.monomials) << "n=" << n << " d=" << d;
    }
}

TEST(Substitution, ExactlyOneCandidatePreservesRelations) {
    Field f;
    for (int n : {2, 3}) {
        auto c = substitution_check(n, f);
        ASSERT_EQ(c.size(), 4u);
        int winners = 0;
        for (const auto& e : c) {
            winners += e.ok;
            if (e.ok) {
                EXPECT_EQ(e.al, f.alpha().inverse());
                EXPECT_EQ(e.be, f.beta().inverse());
            }
        }
        EXPECT_EQ(winners, 1);
    }
}

TEST(Characters, OffDiagonalEntriesForced) {
    for (int n = 1; n <= 3; ++n) {
        auto r = characters_O(*o_session(OVariant::GLn, n, kGeneric));
        EXPECT_EQ(static_cast<int>(r.forced_zero.size()), n * (n - 1));
        EXPECT_EQ(static_cast<int>(r.free.size()), n);
        for (auto [i, j] : r.free) EXPECT_EQ(i, j);
    }
}
