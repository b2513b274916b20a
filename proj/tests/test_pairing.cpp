#include <gtest/gtest.h>

#include <random>

#include "qgl/expr.hpp"
#include "qgl/linalg.hpp"
#include "qgl/pairing.hpp"

using namespace qgl;

namespace {

const ParameterSpec kGeneric = ParameterSpec::generic();
const ParameterSpec kRoot3 = ParameterSpec::root(3, 1, 2);

PairingContext context(UVariant uv, OVariant ov, int n, const ParameterSpec& spec) {
    return PairingContext(u_session(uv, n, spec), o_session(ov, n, spec));
}

// Independent oracle.  Each U-letter acts by an n x n matrix built from
// the generator table; a U-word pairs with x_st through the matrix
// product, and with an O-word x_{s1 t1} ... x_{sr tr} through the
// (r-1)-fold U-side coproduct.
class Oracle {
public:
    explicit Oracle(const USession& u) : u_(u), f_(u.field()) {}

    using M = std::vector<std::vector<Scalar>>;

    M letter_matrix(Letter l) const {
        const int n = u_.n();
        M m(n, std::vector<Scalar>(n, f_.zero()));
        const ULetter& info = u_.info(l);
        switch (info.kind) {
            case ULetter::torus:
                for (int s = 0; s < n; ++s) m[s][s] = f_.alpha().pow(info.exp.a[s]) * f_.beta().pow(info.exp.b[s]);
                break;
            case ULetter::e: m[info.index - 1][info.index] = f_.one(); break;
            case ULetter::f: m[info.index][info.index - 1] = f_.one(); break;
        }
        return m;
    }

    M word_matrix(const Word& w) const {
        const int n = u_.n();
        M r(n, std::vector<Scalar>(n, f_.zero()));
        for (int i = 0; i < n; ++i) r[i][i] = f_.one();
        for (Letter l : w) {
            M a = letter_matrix(l), p(n, std::vector<Scalar>(n, f_.zero()));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    if (!r[i][k].is_zero())
                        for (int j = 0; j < n; ++j) p[i][j] += r[i][k] * a[k][j];
            r = std::move(p);
        }
        return r;
    }

    /// <uw, x_{s1 t1} ... x_{sr tr}> with 1-based (s, t) pairs.
    Scalar pair(const Word& uw, const std::vector<std::pair<int, int>>& ow) const {
        if (ow.empty()) return u_.counit(NCPoly::term(uw, f_.one()));
        Tensor t = u_.as_tensor(NCPoly::term(uw, f_.one()));
        for (std::size_t k = 1; k < ow.size(); ++k) t = u_.apply_coproduct(t, k - 1);
        Scalar sum = f_.zero();
        for (const auto& [key, c] : t.terms()) {
            Scalar term = c;
            for (std::size_t k = 0; k < ow.size() && !term.is_zero(); ++k)
                term *= word_matrix(key[k].w)[ow[k].first - 1][ow[k].second - 1];
            sum += term;
        }
        return sum;
    }

private:
    const USession& u_;
    Field f_;
};

std::vector<std::pair<int, int>> positions(const OSession& o, const Word& w) {
    std::vector<std::pair<int, int>> out;
    for (Letter l : w) {
        auto [i, j] = o.position(l);
        out.push_back({i + 1, j + 1});
    }
    return out;
}

}  // namespace

TEST(Pairing, Examples) {
    auto c2 = context(UVariant::U, OVariant::GLn, 2, kGeneric);
    const Field& f = c2.field();
    EXPECT_EQ(c2.pair(c2.u().a(1), c2.o().gen(1, 1)), f.alpha());
    EXPECT_EQ(c2.pair(c2.u().one(), c2.o().one()), f.one());
    auto c3 = context(UVariant::U, OVariant::GLn, 3, kGeneric);
    EXPECT_EQ(c3.pair(c3.u().E(2, 1), c3.o().gen(1, 3)), -f.alpha().inverse());
}

TEST(Pairing, BaseTableMatchesGeneratorMatrices) {
    for (int n : {2, 3}) {
        auto ctx = context(UVariant::U, OVariant::GLn, n, kGeneric);
        Oracle oracle(ctx.u());
        for (int l = 0; l < ctx.u().alphabet().size(); ++l) {
            auto m = oracle.letter_matrix(static_cast<Letter>(l));
            for (int s = 1; s <= n; ++s)
                for (int t = 1; t <= n; ++t)
                    EXPECT_EQ(ctx.base(static_cast<Letter>(l), s, t), m[s - 1][t - 1])
                        << ctx.u().alphabet().names[l] << " x[" << s << "," << t << "]";
        }
    }
}

TEST(Pairing, AgreesWithIteratedCoproductOracle) {
    struct Case {
        UVariant uv;
        OVariant ov;
        int n;
        ParameterSpec spec;
        int ulen, olen;
    };
    for (const Case& c : {Case{UVariant::U, OVariant::Mn, 2, kGeneric, 4, 3}, Case{UVariant::U, OVariant::Mn, 3, kGeneric, 3, 3},
                          Case{UVariant::uhat, OVariant::Hbar, 2, kRoot3, 3, 3},
                          Case{UVariant::U, OVariant::Mn, 3, ParameterSpec::root(5, 2, 3), 3, 2}}) {
        auto ctx = context(c.uv, c.ov, c.n, c.spec);
        Oracle oracle(ctx.u());
        std::mt19937 rng(c.n * 31 + c.ulen);
        std::uniform_int_distribution<int> ul(0, ctx.u().alphabet().size() - 1), ol(0, c.n * c.n - 1),
            ulen(0, c.ulen), olen(0, c.olen);
        int nonzero = 0;
        for (int trial = 0; trial < 300; ++trial) {
            Word uw, ow;
            for (int k = ulen(rng); k > 0; --k) uw.push_back(static_cast<Letter>(ul(rng)));
            for (int k = olen(rng); k > 0; --k) {
                int p = ol(rng);
                ow.push_back(ctx.o().x(p / c.n + 1, p % c.n + 1));
            }
            Scalar got = ctx.pair_word(uw, ow);
            Scalar want = oracle.pair(uw, positions(ctx.o(), ow));
            EXPECT_EQ(got, want) << ctx.u().alphabet().word_to_string(uw) << " | " << ctx.o().alphabet().word_to_string(ow);
            nonzero += !want.is_zero();
        }
        EXPECT_GT(nonzero, 20);  // the sample is not trivially zero
    }
}

TEST(Pairing, AxiomsOnGeneratorsAndRandomWords) {
    for (int n : {2, 3})
        for (const auto& r : pairing_axioms(context(UVariant::U, OVariant::GLn, n, kGeneric), 3, 40))
            EXPECT_TRUE(r.ok) << "n=" << n << " " << r.id << " " << r.witness;
    for (const auto& r : pairing_axioms(context(UVariant::uhat, OVariant::Hbar, 2, kRoot3), 3, 40))
        EXPECT_TRUE(r.ok) << r.id << " " << r.witness;
}

TEST(Pairing, AntipodeCompatibility) {
    for (int n : {2, 3})
        for (const auto& r : antipode_compatibility(context(UVariant::U, OVariant::GLn, n, kGeneric)))
            EXPECT_TRUE(r.ok) << r.id << " " << r.witness;
}

TEST(Pairing, InverseDeterminantThroughAntipode) {
    auto ctx = context(UVariant::U, OVariant::GLn, 2, kGeneric);
    const USession& u = ctx.u();
    for (NCPoly h : {u.a(1), u.b(2), u.letter(u.e(1)), u.letter(u.f(1)), u.mul(u.a(2), u.letter(u.e(1)))})
        EXPECT_EQ(ctx.pair(h, ctx.o().ginv()), ctx.pair(u.antipode(h), ctx.o().g())) << u.to_string(h);
}

TEST(Pairing, RelationsPairToZero) {
    for (int n : {2, 3})
        EXPECT_TRUE(pairing_welldefined_check(context(UVariant::U, OVariant::GLn, n, kGeneric), 2).empty());
    EXPECT_TRUE(pairing_welldefined_check(context(UVariant::U, OVariant::GLn, 2, kGeneric), 3).empty());
    // explicit instances
    auto ctx = context(UVariant::U, OVariant::Mn, 2, kGeneric);
    const USession& u = ctx.u();
    const OSession& o = ctx.o();
    const Field& f = ctx.field();
    NCPoly comm = NCPoly::term({u.e(1), u.f(1)}, f.one()) - NCPoly::term({u.f(1), u.e(1)}, f.one());
    NCPoly rhs = (u.w(1) - u.wprime(1)).scaled((f.alpha() - f.beta()).inverse());
    for (const Word& w : free_words(o.alphabet(), 2))
        EXPECT_TRUE((ctx.pair(comm, GLElement{0, NCPoly::term(w, f.one())}) -
                     ctx.pair(rhs, GLElement{0, NCPoly::term(w, f.one())})).is_zero());
    NCPoly orel = NCPoly::term({o.x(1, 2), o.x(1, 1)}, f.one()) - NCPoly::term({o.x(1, 1), o.x(1, 2)}, f.alpha().inverse());
    for (const Word& w : free_words(u.alphabet(), 2))
        EXPECT_TRUE(ctx.pair(NCPoly::term(w, f.one()), GLElement{0, orel}).is_zero()) << u.alphabet().word_to_string(w);
}

TEST(Pairing, RootVectorsAgainstGenerators) {
    for (int n = 2; n <= 4; ++n) {
        auto r = pair_ef_check(context(UVariant::U, OVariant::GLn, n, kGeneric));
        EXPECT_GT(r.checked, 0);
        EXPECT_TRUE(r.failures.empty()) << "n=" << n << ": " << r.failures.front();
    }
}

TEST(Radical, Examples) {
    auto ctx = context(UVariant::U, OVariant::GLn, 2, kRoot3);
    const OSession& o = ctx.o();
    auto uw = free_words(ctx.u().alphabet(), 3);
    for (int s = 1; s <= 2; ++s)
        for (int t = 1; t <= 2; ++t) {
            GLElement cand = o.pow(o.gen(s, t), 3);
            if (s == t) cand = o.sub(cand, o.one());
            auto r = radical_right(ctx, cand, uw);
            EXPECT_TRUE(r.ok) << s << "," << t << ": " << r.witness;
        }
    EXPECT_TRUE(ctx.pair(ctx.u().letter(ctx.u().e(1)), o.pow(o.gen(1, 1), 3)).is_zero());

    std::vector<GLElement> ow;
    for (const Word& w : free_words(o.alphabet(), 3)) ow.push_back(o.word_element(w));
    auto left = radical_left(ctx, ctx.u().h(1, 3) - ctx.u().one(), ow);
    EXPECT_TRUE(left.ok) << left.witness;
    // a non-member is caught
    EXPECT_FALSE(radical_left(ctx, ctx.u().h(1, 1) - ctx.u().one(), ow).ok);

    auto c3 = context(UVariant::U, OVariant::Mn, 3, kRoot3);
    std::vector<GLElement> ow3;
    for (const Word& w : free_words(c3.o().alphabet(), 3)) ow3.push_back(c3.o().word_element(w));
    auto r3 = radical_left(c3, c3.u().power(c3.u().E(2, 1), 3), ow3);
    EXPECT_TRUE(r3.ok) << r3.witness;
}

TEST(Radical, DescentInclusions) {
    for (const auto& r : restricted_radical_checks(2, kRoot3)) EXPECT_TRUE(r.ok) << r.id << " " << r.witness;
}

TEST(Gram, FullMatrixIsInvertibleAtRankTwo) {
    GramReport g = uhat_hbar_gram(2, kRoot3);
    EXPECT_EQ(g.rows, 81);
    EXPECT_EQ(g.cols, 81);
    EXPECT_EQ(g.rank, 81);
    EXPECT_EQ(rank(g.matrix), 81);
}

TEST(Gram, SmallBlocks) {
    auto ctx = context(UVariant::uhat, OVariant::Hbar, 2, kRoot3);
    Matrix one = gram_matrix(ctx, {Word{}}, {ctx.o().one()});
    EXPECT_EQ(rank(one), 1);
    // torus block {h_1^r} x {xbar_11^e}: entries zeta^{re}
    std::vector<Word> rows;
    std::vector<GLElement> cols;
    for (int r = 0; r < 3; ++r) {
        NCPoly h = ctx.u().h(1, r);
        rows.push_back(h.terms().begin()->first);
        cols.push_back(ctx.o().pow(ctx.o().gen(1, 1), r));
    }
    Matrix m = gram_matrix(ctx, rows, cols);
    const Scalar z = ctx.field().zeta();
    for (int r = 0; r < 3; ++r)
        for (int e = 0; e < 3; ++e) EXPECT_EQ(m[r][e], z.pow(r * e)) << r << "," << e;
    EXPECT_EQ(rank(m), 3);
}

TEST(Gram, SizeGuard) {
    EXPECT_THROW(uhat_hbar_gram(2, kRoot3, 100), ComputationError);
}

TEST(EMxN, DiagonalStructure) {
    auto r2 = em_xn_diagonal_check(2, kRoot3);
    EXPECT_EQ(r2.size, 3);
    EXPECT_TRUE(r2.diagonal) << r2.witness;
    EXPECT_TRUE(r2.nonzero_diagonal) << r2.witness;
    auto r3 = em_xn_diagonal_check(3, kRoot3);
    EXPECT_EQ(r3.size, 27);
    EXPECT_TRUE(r3.diagonal) << r3.witness;
    EXPECT_TRUE(r3.nonzero_diagonal) << r3.witness;
    auto ctx = context(UVariant::U, OVariant::Kplus, 2, kRoot3);
    EXPECT_EQ(ctx.pair(ctx.u().E(1, 1), ctx.o().gen(1, 2)), ctx.field().one());
}

TEST(EMxN, LongestRootClosedFormAtRootOfUnity) {
    for (int n : {2, 3})
        for (const auto& e : em_xn_closed_form(n, kRoot3, 2))
            EXPECT_TRUE(e.ok) << "n=" << n << " r=" << e.r << " s=" << e.s << " brute " << e.brute.to_string()
                              << " closed " << e.closed.to_string();
}

TEST(EMxN, BruteForceValuesMatchOracle) {
    for (const ParameterSpec& spec : {kGeneric, kRoot3}) {
        auto ctx = context(UVariant::U, OVariant::Mn, 3, spec);
        Oracle oracle(ctx.u());
        for (const auto& e : em_xn_closed_form(3, spec, 2)) {
            NCPoly er = ctx.u().power(ctx.u().E(2, 1), e.r);
            Scalar want = ctx.field().zero();
            std::vector<std::pair<int, int>> ow(e.s, {1, 3});
            for (const auto& [w, c] : er.terms()) want += c * oracle.pair(w, ow);
            EXPECT_EQ(e.brute, want) << e.r << "," << e.s;
        }
    }
}
