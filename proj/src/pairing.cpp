#include "qgl/pairing.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "qgl/linalg.hpp"
#include "qgl/parallel.hpp"

namespace qgl {

namespace {

using State = std::vector<std::int8_t>;

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

PairingContext::PairingContext(std::shared_ptr<const USession> u, std::shared_ptr<const OSession> o)
    : u_(std::move(u)), o_(std::move(o)) {
    if (u_->n() != o_->n()) throw ValidationError("pairing: sessions have different n");
    if (u_->field().spec().describe() != o_->field().spec().describe())
        throw ValidationError("pairing: sessions use different parameters");
    const int n = u_->n();
    for (int l = 0; l < u_->alphabet().size(); ++l) {
        std::vector<int> w(n, 0);
        const ULetter& li = u_->info(static_cast<Letter>(l));
        if (li.kind == ULetter::e) {
            w[li.index] += 1;
            w[li.index - 1] -= 1;
        } else if (li.kind == ULetter::f) {
            w[li.index - 1] += 1;
            w[li.index] -= 1;
        }
        uweight_.push_back(std::move(w));
    }
}

Scalar PairingContext::base(Letter ul, int s, int t) const {
    return pair_word({ul}, {o_->x(s, t)});
}

Scalar PairingContext::pair_word(const Word& uw, const Word& ow, int t) const {
    const Field& f = field();
    const int n = u_->n();
    // weight filter
    std::vector<int> wt(n, 0);
    State start, target;
    for (Letter l : ow) {
        auto [r, c] = o_->position(l);
        if (r < 0) throw ValidationError("pairing: O-side letter " + o_->alphabet().names[l] + " is not a matrix coefficient");
        wt[c] += 1;
        wt[r] -= 1;
        start.push_back(static_cast<std::int8_t>(r));
        target.push_back(static_cast<std::int8_t>(c));
    }
    for (Letter l : uw)
        for (int i = 0; i < n; ++i) wt[i] -= uweight_[l][i];
    for (int v : wt)
        if (v) return f.zero();

    std::map<State, Scalar> states{{start, f.one()}};
    Scalar gfactor = f.one();
    for (Letter l : uw) {
        const ULetter& li = u_->info(l);
        std::map<State, Scalar> next;
        auto add = [&](State s, const Scalar& c) {
            auto [it, inserted] = next.emplace(std::move(s), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) next.erase(it);
            }
        };
        if (li.kind == ULetter::torus) {
            int sa = 0, sb = 0;
            for (int i = 0; i < n; ++i) {
                sa += li.exp.a[i];
                sb += li.exp.b[i];
            }
            if (t) gfactor *= f.monomial(-t * sa, -t * sb);
            for (auto& [s, c] : states) {
                int ea = 0, eb = 0;
                for (auto k : s) {
                    ea += li.exp.a[k];
                    eb += li.exp.b[k];
                }
                add(s, c * f.monomial(ea, eb));
            }
        } else if (li.kind == ULetter::e) {
            // Delta^{(r-1)} e_j = sum_p w_j^{(x)p} (x) e_j (x) 1...; w_j = a_j b_{j+1}
            const int j = li.index - 1;  // 0-based: j -> j + 1
            if (t) gfactor *= f.monomial(-t, -t);
            for (const auto& [s, c] : states) {
                int ea = 0, eb = 0;
                for (std::size_t p = 0; p < s.size(); ++p) {
                    if (s[p] == j) {
                        State ns = s;
                        ns[p] = static_cast<std::int8_t>(j + 1);
                        add(std::move(ns), c * f.monomial(ea, eb));
                    }
                    ea += delta(s[p], j);
                    eb += delta(s[p], j + 1);
                }
            }
        } else {
            // Delta^{(r-1)} f_j = sum_p 1...(x) f_j (x) w'_j^{(x)...}; w'_j = a_{j+1} b_j
            const int j = li.index - 1;  // 0-based: j + 1 -> j
            for (const auto& [s, c] : states) {
                int ea = 0, eb = 0;
                for (std::size_t p = s.size(); p-- > 0;) {
                    if (s[p] == j + 1) {
                        State ns = s;
                        ns[p] = static_cast<std::int8_t>(j);
                        add(std::move(ns), c * f.monomial(ea, eb));
                    }
                    ea += delta(s[p], j + 1);
                    eb += delta(s[p], j);
                }
            }
        }
        states = std::move(next);
        if (states.empty()) return f.zero();
    }
    auto it = states.find(target);
    return it == states.end() ? f.zero() : it->second * gfactor;
}

Scalar PairingContext::pair(const NCPoly& u, const GLElement& x) const {
    Scalar s = field().zero();
    for (const auto& [uw, cu] : u.terms())
        for (const auto& [ow, co] : x.p.terms()) {
            Scalar v = pair_word(uw, ow, x.t);
            if (!v.is_zero()) s += cu * co * v;
        }
    return s;
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

/// sum over the U coproduct of u of <u_(1), x> <u_(2), y>.
Scalar pair_split_u(const PairingContext& ctx, const NCPoly& u, const GLElement& x, const GLElement& y) {
    Tensor d = ctx.u().coproduct(u);
    Scalar s = ctx.field().zero();
    for (const auto& [key, c] : d.terms()) {
        Scalar a = ctx.pair(NCPoly::term(key[0].w, ctx.field().one()), x);
        if (a.is_zero()) continue;
        s += c * a * ctx.pair(NCPoly::term(key[1].w, ctx.field().one()), y);
    }
    return s;
}

/// sum over the O coproduct of x of <u, x_(1)> <v, x_(2)>.
Scalar pair_split_o(const PairingContext& ctx, const NCPoly& u, const NCPoly& v, const GLElement& x) {
    Tensor d = ctx.o().coproduct(x);
    Scalar s = ctx.field().zero();
    for (const auto& [key, c] : d.terms()) {
        Scalar a = ctx.pair(u, ctx.o().leg_element(key[0]));
        if (a.is_zero()) continue;
        s += c * a * ctx.pair(v, ctx.o().leg_element(key[1]));
    }
    return s;
}

std::vector<Letter> x_letters(const OSession& o) {
    std::vector<Letter> out;
    for (int l = 0; l < o.alphabet().size(); ++l)
        if (o.position(static_cast<Letter>(l)).first >= 0) out.push_back(static_cast<Letter>(l));
    return out;
}

}  // namespace

std::vector<PairingAxiomResult> pairing_axioms(const PairingContext& ctx, int degree, int samples, std::uint64_t seed) {
    const USession& U = ctx.u();
    const OSession& O = ctx.o();
    const Field& f = ctx.field();
    std::vector<PairingAxiomResult> out;
    auto uword = [&](const Word& w) { return NCPoly::term(w, f.one()); };
    auto oword = [&](const Word& w) { return GLElement{0, NCPoly::term(w, f.one())}; };
    const auto xs = x_letters(O);
    std::vector<Letter> us;
    for (int l = 0; l < U.alphabet().size(); ++l) us.push_back(static_cast<Letter>(l));

    auto check_i = [&](const std::string& id, const Word& uw, const Word& ow1, const Word& ow2) {
        NCPoly u = U.reduce(uword(uw));
        Word cat = ow1;
        cat.insert(cat.end(), ow2.begin(), ow2.end());
        GLElement xy = O.mul(oword(ow1), oword(ow2));
        Scalar lhs = ctx.pair(u, xy);
        Scalar raw = ctx.pair_word(uw, cat);
        Scalar rhs = pair_split_u(ctx, u, oword(ow1), oword(ow2));
        bool ok = lhs == rhs && raw == rhs;
        out.push_back({id, ok,
                       ok ? "" : "u=" + U.alphabet().word_to_string(uw) + " x=" + O.alphabet().word_to_string(ow1) +
                                     " y=" + O.alphabet().word_to_string(ow2) + " lhs=" + lhs.to_string() +
                                     " rhs=" + rhs.to_string()});
    };
    auto check_ii = [&](const std::string& id, const Word& uw1, const Word& uw2, const Word& ow) {
        Word cat = uw1;
        cat.insert(cat.end(), uw2.begin(), uw2.end());
        NCPoly uv = U.reduce(uword(cat));
        GLElement x = O.element(NCPoly::term(ow, f.one()));
        Scalar lhs = ctx.pair(uv, x);
        Scalar raw = ctx.pair_word(cat, ow);
        Scalar rhs = pair_split_o(ctx, uword(uw1), uword(uw2), x);
        bool ok = lhs == rhs && raw == rhs;
        out.push_back({id, ok,
                       ok ? "" : "u=" + U.alphabet().word_to_string(uw1) + " v=" + U.alphabet().word_to_string(uw2) +
                                     " x=" + O.alphabet().word_to_string(ow) + " lhs=" + lhs.to_string() +
                                     " rhs=" + rhs.to_string()});
    };

    // generator pairs
    for (Letter u : us)
        for (Letter x : xs)
            for (Letter y : xs) check_i("(i) gen", {u}, {x}, {y});
    for (Letter u : us)
        for (Letter v : us)
            for (Letter x : xs) check_ii("(ii) gen", {u}, {v}, {x});
    for (Letter u : us) {
        Scalar v = ctx.pair(uword({u}), O.one());
        bool ok = v == U.counit(uword({u}));
        out.push_back({"(iii) <u,1> = eps(u)", ok, ok ? "" : U.alphabet().names[u] + ": " + v.to_string()});
    }
    for (Letter x : xs) {
        Scalar v = ctx.pair(U.one(), oword({x}));
        bool ok = v == O.counit(oword({x}));
        out.push_back({"(iv) <1,x> = eps(x)", ok, ok ? "" : O.alphabet().names[x] + ": " + v.to_string()});
    }
    // random words
    std::mt19937_64 rng(seed);
    auto rand_word = [&](const std::vector<Letter>& ls, int len) {
        Word w;
        for (int i = 0; i < len; ++i) w.push_back(ls[std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng)]);
        return w;
    };
    std::uniform_int_distribution<int> len(1, std::max(1, degree));
    for (int s = 0; s < samples; ++s) {
        int a = len(rng), b = len(rng);
        Word uw = rand_word(us, len(rng));
        Word o1 = rand_word(xs, a), o2 = rand_word(xs, std::max(0, std::min(b, degree - a)));
        if (o2.empty()) o2 = rand_word(xs, 1);
        check_i("(i) random", uw, o1, o2);
        Word u1 = rand_word(us, a), u2 = rand_word(us, std::max(1, std::min(b, degree - a)));
        check_ii("(ii) random", u1, u2, rand_word(xs, len(rng)));
    }
    return out;
}

std::vector<PairingAxiomResult> antipode_compatibility(const PairingContext& ctx) {
    const USession& U = ctx.u();
    const OSession& O = ctx.o();
    if (!O.is_gl()) throw ValidationError("antipode compatibility needs the GLn session");
    std::vector<PairingAxiomResult> out;
    for (int l = 0; l < U.alphabet().size(); ++l) {
        NCPoly u = U.letter(static_cast<Letter>(l));
        NCPoly su = U.antipode(u);
        for (Letter x : x_letters(O)) {
            GLElement xe = O.word_element({x});
            Scalar a = ctx.pair(u, O.antipode(xe));
            Scalar b = ctx.pair(su, xe);
            bool ok = a == b;
            out.push_back({"<S(u),x> = <u,S(x)> " + U.alphabet().names[l] + " " + O.alphabet().names[x], ok,
                           ok ? "" : a.to_string() + " vs " + b.to_string()});
        }
    }
    return out;
}

std::vector<Word> free_words(const Alphabet& a, int max_len, const std::vector<Letter>& letters) {
    std::vector<Letter> ls = letters;
    if (ls.empty())
        for (int l = 0; l < a.size(); ++l) ls.push_back(static_cast<Letter>(l));
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (Letter l : ls) {
                Word w = out[i];
                w.push_back(l);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

std::vector<std::string> pairing_welldefined_check(const PairingContext& ctx, int degree_bound) {
    if (degree_bound < 1) throw ValidationError("degree bound must be >= 1");
    std::vector<std::string> failures;
    const USession& U = ctx.u();
    const OSession& O = ctx.o();
    const Field& f = ctx.field();
    const auto owords = free_words(O.alphabet(), degree_bound, x_letters(O));
    for (const Rule& r : U.system().rules()) {
        NCPoly rel = NCPoly::term(r.lhs, f.one()) - r.rhs;
        for (const Word& w : owords) {
            Scalar v = ctx.pair(rel, NCPoly::term(w, f.one()));
            if (!v.is_zero())
                failures.push_back("U relation " + U.alphabet().word_to_string(r.lhs) + " vs " +
                                   O.alphabet().word_to_string(w) + ": " + v.to_string());
        }
    }
    const auto uwords = free_words(U.alphabet(), degree_bound);
    for (const Rule& r : O.system().rules()) {
        bool pure = true;
        for (Letter l : r.lhs) pure = pure && O.position(l).first >= 0;
        for (const auto& [w, c] : r.rhs.terms())
            for (Letter l : w) pure = pure && O.position(l).first >= 0;
        if (!pure) continue;
        NCPoly rel = NCPoly::term(r.lhs, f.one()) - r.rhs;
        for (const Word& w : uwords) {
            Scalar v = ctx.pair(NCPoly::term(w, f.one()), rel);
            if (!v.is_zero())
                failures.push_back("O relation " + O.alphabet().word_to_string(r.lhs) + " vs " +
                                   U.alphabet().word_to_string(w) + ": " + v.to_string());
        }
    }
    return failures;
}

PairEFReport pair_ef_check(const PairingContext& ctx) {
    PairEFReport rep;
    const USession& U = ctx.u();
    const OSession& O = ctx.o();
    const Field& f = ctx.field();
    const int n = U.n();
    for (int l = 1; l < n; ++l)
        for (int k = l; k < n; ++k) {
            NCPoly E = U.E(k, l), F = U.F(k, l);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    GLElement x = O.gen(i, j);
                    Scalar e = ctx.pair(E, x), fv = ctx.pair(F, x);
                    Scalar ee = f.integer(((k - l) % 2 ? -1 : 1) * delta(l, i) * delta(k + 1, j)) * f.monomial(l - k, 0);
                    Scalar fe = f.integer(delta(k + 1, i) * delta(l, j));
                    rep.checked += 2;
                    auto idx = [&] {
                        return std::to_string(k) + "," + std::to_string(l) + "> x[" + std::to_string(i) + "," +
                               std::to_string(j) + "]";
                    };
                    if (e != ee) rep.failures.push_back("<E" + idx() + ": " + e.to_string() + " expected " + ee.to_string());
                    if (fv != fe)
                        rep.failures.push_back("<F" + idx() + ": " + fv.to_string() + " expected " + fe.to_string());
                }
        }
    return rep;
}

RadicalReport radical_right(const PairingContext& ctx, const GLElement& candidate, const std::vector<Word>& u_words) {
    RadicalReport rep;
    for (const Word& w : u_words) {
        ++rep.tested;
        Scalar v = ctx.pair(NCPoly::term(w, ctx.field().one()), candidate);
        if (!v.is_zero()) {
            rep.ok = false;
            rep.witness = "<" + ctx.u().alphabet().word_to_string(w) + ", candidate> = " + v.to_string();
            return rep;
        }
    }
    return rep;
}

RadicalReport radical_left(const PairingContext& ctx, const NCPoly& candidate, const std::vector<GLElement>& o_elements) {
    RadicalReport rep;
    for (const GLElement& x : o_elements) {
        ++rep.tested;
        Scalar v = ctx.pair(candidate, x);
        if (!v.is_zero()) {
            rep.ok = false;
            rep.witness = "<candidate, " + ctx.o().to_string(x) + "> = " + v.to_string();
            return rep;
        }
    }
    return rep;
}

Matrix gram_matrix(const PairingContext& ctx, const std::vector<Word>& u_words, const std::vector<GLElement>& o_elements,
                   std::size_t max_entries) {
    if (u_words.size() * o_elements.size() > max_entries)
        throw ComputationError("Gram matrix has " + std::to_string(u_words.size() * o_elements.size()) +
                               " entries, above the cap of " + std::to_string(max_entries));
    Matrix m(u_words.size(), std::vector<Scalar>(o_elements.size(), ctx.field().zero()));
    parallel_for(u_words.size(), [&](std::size_t i) {
        NCPoly u = NCPoly::term(u_words[i], ctx.field().one());
        for (std::size_t j = 0; j < o_elements.size(); ++j) m[i][j] = ctx.pair(u, o_elements[j]);
    });
    return m;
}

GramReport uhat_hbar_gram(int n, const ParameterSpec& spec, std::size_t max_entries) {
    auto uh = u_session(UVariant::uhat, n, spec);
    auto hbar = o_session(OVariant::Hbar, n, spec);
    auto gl = o_session(OVariant::GLn, n, spec);
    PairingContext ctx(uh, gl);
    std::vector<Word> rows = uh->finite_basis();
    long long hdim = 1;
    for (int i = 0; i < n * n; ++i) hdim *= spec.ell;
    std::vector<Word> hwords;
    for (const Word& w : hbar->basis_words(n * n * (spec.ell - 1)))
        hwords.push_back(w);
    std::vector<GLElement> cols;
    for (const Word& w : hwords) cols.push_back(gamma_section(*gl, *hbar, w));
    GramReport rep;
    rep.rows = static_cast<int>(rows.size());
    rep.cols = static_cast<int>(cols.size());
    for (const Word& w : rows) rep.row_labels.push_back(uh->alphabet().word_to_string(w));
    for (const Word& w : hwords) rep.col_labels.push_back(hbar->alphabet().word_to_string(w));
    rep.matrix = gram_matrix(ctx, rows, cols, max_entries);
    rep.rank = rank(rep.matrix);
    (void)hdim;
    return rep;
}

// ---------------------------------------------------------------------------
// <E^M, xbar^N>

namespace {

/// Strictly upper exponent matrices with entries in [0, l), listed by the
/// row-major entries (i, j), i < j.
std::vector<std::vector<int>> upper_exponents(int n, int ell) {
    int npos = n * (n - 1) / 2;
    std::vector<std::vector<int>> out;
    std::vector<int> cur(npos, 0);
    for (;;) {
        out.push_back(cur);
        int p = npos - 1;
        while (p >= 0 && cur[p] == ell - 1) cur[p--] = 0;
        if (p < 0) break;
        ++cur[p];
    }
    return out;
}

}  // namespace

EMxNReport em_xn_diagonal_check(int n, const ParameterSpec& spec) {
    if (spec.mode != Mode::root) throw ValidationError("the E^M / x^N check needs root-of-unity mode");
    auto U = u_session(UVariant::U, n, spec);
    auto gl = o_session(OVariant::GLn, n, spec);
    auto kp = o_session(OVariant::Kplus, n, spec);
    PairingContext ctx(U, gl);
    const int ell = spec.ell;
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pos.push_back({i, j});
    auto exps = upper_exponents(n, ell);
    // E^M and xbar^N
    std::vector<NCPoly> es;
    std::vector<GLElement> xs;
    for (const auto& m : exps) {
        NCPoly e = U->one();
        for (int i = n; i >= 1; --i)
            for (int j = n; j >= i + 1; --j) {
                std::size_t p = std::find(pos.begin(), pos.end(), std::make_pair(i, j)) - pos.begin();
                e = U->mul(e, U->power(U->E(j - 1, i), m[p]));
            }
        es.push_back(e);
        Word w;
        for (std::size_t p = 0; p < pos.size(); ++p) w.insert(w.end(), m[p], kp->x(pos[p].first, pos[p].second));
        // the K_+ word lifted to the same word in O(GL_n)
        Word lifted;
        for (Letter l : w) {
            auto [r, c] = kp->position(l);
            lifted.push_back(gl->x(r + 1, c + 1));
        }
        xs.push_back(gl->element(NCPoly::term(lifted, gl->field().one())));
    }
    EMxNReport rep;
    rep.size = static_cast<int>(exps.size());
    std::vector<std::vector<Scalar>> vals(es.size());
    parallel_for(es.size(), [&](std::size_t a) {
        for (std::size_t b = 0; b < xs.size(); ++b) vals[a].push_back(ctx.pair(es[a], xs[b]));
    });
    auto label = [&](const std::vector<int>& m) {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
        os << ")";
        return os.str();
    };
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = 0; b < xs.size(); ++b) {
            const Scalar& v = vals[a][b];
            if (a == b) {
                rep.diag.push_back(v);
                if (v.is_zero() && rep.nonzero_diagonal) {
                    rep.nonzero_diagonal = false;
                    if (rep.witness.empty()) rep.witness = "zero diagonal entry at M=" + label(exps[a]);
                }
            } else if (!v.is_zero() && rep.diagonal) {
                rep.diagonal = false;
                if (rep.witness.empty())
                    rep.witness = "M=" + label(exps[a]) + " N=" + label(exps[b]) + " value " + v.to_string();
            }
        }
    return rep;
}

std::vector<ClosedFormEntry> em_xn_closed_form(int n, const ParameterSpec& spec, int rmax) {
    if (n < 2) throw ValidationError("n must be >= 2");
    auto U = u_session(UVariant::U, n, spec);
    auto gl = o_session(OVariant::GLn, n, spec);
    PairingContext ctx(U, gl);
    const Field& f = U->field();
    NCPoly E = U->E(n - 1, 1);
    GLElement x = gl->gen(1, n);
    Scalar base = ctx.pair(E, x);
    Scalar a2 = f.alpha() * f.alpha();
    std::vector<ClosedFormEntry> out;
    for (int r = 0; r <= rmax; ++r)
        for (int s = 0; s <= rmax; ++s) {
            ClosedFormEntry c;
            c.r = r;
            c.s = s;
            c.brute = ctx.pair(U->power(E, r), gl->pow(x, s));
            if (r != s) {
                c.closed = f.zero();
            } else {
                Scalar v = f.beta().pow(static_cast<long>(r) * (r - 1) / 2) * base.pow(r);
                for (int j = 0; j < r; ++j) v *= geometric_sum(r - j, a2);
                c.closed = v;
            }
            c.ok = c.brute == c.closed;
            out.push_back(c);
        }
    return out;
}


std::vector<PairingAxiomResult> restricted_radical_checks(int n, const ParameterSpec& spec) {
    if (spec.mode != Mode::root) throw ValidationError("radical checks need root-of-unity mode");
    auto U = u_session(UVariant::U, n, spec);
    auto gl = o_session(OVariant::GLn, n, spec);
    auto mn = o_session(OVariant::Mn, n, spec);
    auto hbar = o_session(OVariant::Hbar, n, spec);
    PairingContext ctx(U, gl);
    const Field& f = U->field();
    const int ell = spec.ell;
    std::vector<PairingAxiomResult> out;
    auto st = [](int s, int t) { return "x[" + std::to_string(s) + "," + std::to_string(t) + "]"; };

    for (int l = 0; l < U->alphabet().size(); ++l) {
        NCPoly u = U->letter(static_cast<Letter>(l));
        Scalar eps = U->counit(u);
        bool ok = true;
        std::string witness;
        for (int s = 1; s <= n && ok; ++s)
            for (int t = 1; t <= n && ok; ++t) {
                Scalar v = ctx.pair(u, gl->pow(gl->gen(s, t), ell));
                Scalar expect = s == t ? eps : f.zero();
                if (v != expect) {
                    ok = false;
                    witness = "<" + U->alphabet().names[l] + ", " + st(s, t) + "^l> = " + v.to_string();
                }
            }
        out.push_back({"<" + U->alphabet().names[l] + ", x_st^l> = d_st eps", ok, witness});
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<std::string, NCPoly>> cands = {
            {"h[" + std::to_string(i) + "]^l", U->h(i, ell)},
            {"h[" + std::to_string(i) + "]^na a[" + std::to_string(i) + "]^-1", U->mul(U->h(i, spec.na), U->a(i, -1))},
            {"h[" + std::to_string(i) + "]^nb b[" + std::to_string(i) + "]^-1", U->mul(U->h(i, spec.nb), U->b(i, -1))}};
        for (const auto& [name, c] : cands) {
            bool ok = true;
            std::string witness;
            for (int s = 1; s <= n && ok; ++s)
                for (int t = 1; t <= n && ok; ++t) {
                    Scalar v = ctx.pair(c, gl->gen(s, t));
                    if (v != f.integer(s == t ? 1 : 0)) {
                        ok = false;
                        witness = "<" + name + ", " + st(s, t) + "> = " + v.to_string();
                    }
                }
            out.push_back({"<" + name + ", x_st> = d_st", ok, witness});
        }
    }
    // root-vector powers in the left radical
    std::vector<GLElement> hlifts;
    for (const Word& w : hbar->basis_words(n * n * (ell - 1))) hlifts.push_back(gamma_section(*gl, *hbar, w));
    for (int j = 1; j < n; ++j)
        for (int k = j; k < n; ++k) {
            int deg = ell * (k - j + 1) + 1;
            std::vector<GLElement> words;
            for (const Word& w : mn->basis_words(deg)) {
                Word lifted;
                for (Letter l : w) {
                    auto [r, c] = mn->position(l);
                    lifted.push_back(gl->x(r + 1, c + 1));
                }
                words.push_back(GLElement{0, NCPoly::term(lifted, f.one())});
            }
            std::string idx = "[" + std::to_string(k) + "," + std::to_string(j) + "]^l";
            for (auto [name, c] : {std::pair{"E" + idx, U->power(U->E(k, j), ell)},
                                   std::pair{"F" + idx, U->power(U->F(k, j), ell)}}) {
                RadicalReport a = radical_left(ctx, c, hlifts);
                RadicalReport b = radical_left(ctx, c, words);
                out.push_back({name + " in left radical (Hbar lifts, O(M_n) words to degree " + std::to_string(deg) + ")",
                               a.ok && b.ok, a.ok ? b.witness : a.witness});
            }
        }
    return out;
}

}  // namespace qgl
