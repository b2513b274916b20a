// qgl: command-line front end to the library.
//
// Exit codes: 0 success, 1 a verification suite reported failures,
// 2 invalid input (bad parameters, malformed expression, invalid datum,
// unknown verb), 3 computation error (size cap, unsupported variant).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "qgl/error.hpp"
#include "qgl/expr.hpp"
#include "qgl/io.hpp"
#include "qgl/linalg.hpp"
#include "qgl/oab.hpp"
#include "qgl/pairing.hpp"
#include "qgl/subgroup.hpp"
#include "qgl/suite.hpp"
#include "qgl/uab.hpp"

using namespace qgl;

namespace {

struct Options {
    int n = 2;
    std::string mode;
    int ell = 0, na = 0, nb = 0;
    std::string variant;
    int degree = 0;
    std::string format = "json";
    std::string out;
    // verb-specific
    std::string u, o, word, sign = "E", side = "right", file, file2, name, name2, corpus, matrix, action, suite;
    std::vector<int> rows, cols, exponents, iplus, iminus;
    int k = 1, l = 1, limit = -1;
};

/// Result of a verb: a JSON value plus its text rendering.
struct Output {
    json j;
    std::string text;
    int code = 0;
};

ParameterSpec spec_of(const Options& o) {
    bool root = o.mode == "root" || (o.mode.empty() && o.ell != 0);
    if (!o.mode.empty() && o.mode != "root" && o.mode != "generic")
        throw ValidationError("--mode must be 'generic' or 'root'");
    if (!root) {
        if (o.ell != 0) throw ValidationError("--ell given with --mode generic");
        return ParameterSpec::generic();
    }
    if (o.ell == 0) throw ValidationError("root mode needs --ell");
    int na = o.na, nb = o.nb;
    if (na == 0 && nb == 0) {
        na = 1;
        nb = 2 % o.ell;
    } else if (nb == 0) {
        nb = (na + 1) % o.ell;
    } else if (na == 0) {
        na = ((nb - 1) % o.ell + o.ell) % o.ell;
    }
    ParameterSpec s = ParameterSpec::root(o.ell, na, nb);
    s.validate();
    return s;
}

void check_n(const Options& o) {
    if (o.n < 1) throw ValidationError("--n must be >= 1");
}

OVariant o_variant(const Options& o, OVariant dflt) { return o.variant.empty() ? dflt : parse_ovariant(o.variant); }
UVariant u_variant(const Options& o, UVariant dflt) { return o.variant.empty() ? dflt : parse_uvariant(o.variant); }

std::shared_ptr<const USession> u_side(const Options& o, UVariant dflt = UVariant::U) {
    return u_session(u_variant(o, dflt), o.n, spec_of(o), o.iplus, o.iminus);
}

std::string scalar_text(const Scalar& s) { return s.to_string(); }

Output element_out(const OSession& s, const GLElement& x) { return {element_to_json(s, x), s.to_string(x)}; }
Output upoly_out(const USession& s, const NCPoly& p) { return {poly_to_json(p, s.alphabet()), s.to_string(p)}; }

void require(const std::string& value, const std::string& flag) {
    if (value.empty()) throw ValidationError(flag + " is required");
}

// ---------------------------------------------------------------------------
// Verbs

Output cmd_reduce(const Options& o) {
    check_n(o);
    if (!o.u.empty()) {
        auto s = u_side(o);
        return upoly_out(*s, parse_u(o.u, *s));
    }
    require(o.o, "--o or --u");
    auto s = o_session(o_variant(o, OVariant::GLn), o.n, spec_of(o));
    return element_out(*s, parse_o(o.o, *s));
}

std::vector<int> all_indices(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    return v;
}

Output cmd_qdet(const Options& o) {
    check_n(o);
    auto s = o_session(o_variant(o, OVariant::GLn), o.n, spec_of(o));
    // the command line is 1-based, the session API 0-based
    std::vector<int> rows = o.rows.empty() ? all_indices(o.n) : o.rows;
    std::vector<int> cols = o.cols.empty() ? all_indices(o.n) : o.cols;
    for (auto* v : {&rows, &cols})
        for (int& i : *v) {
            if (i < 1 || i > o.n) throw ValidationError("qdet: index " + std::to_string(i) + " outside 1.." + std::to_string(o.n));
            --i;
        }
    NCPoly d = s->qdet(rows, cols);
    Output out{poly_to_json(d, s->alphabet()), d.to_string(s->alphabet())};
    if (rows == cols) {
        NCPoly c = s->qdet_column(rows, cols);
        out.j["column_expansion_agrees"] = c == d;
        out.text += c == d ? "\n(row and column expansions agree)" : "\ncolumn expansion differs: " + c.to_string(s->alphabet());
    }
    return out;
}

Output cmd_antipode(const Options& o) {
    check_n(o);
    if (!o.u.empty()) {
        auto s = u_side(o);
        return upoly_out(*s, s->antipode(parse_u(o.u, *s)));
    }
    require(o.o, "--o or --u");
    auto s = o_session(o_variant(o, OVariant::GLn), o.n, spec_of(o));
    return element_out(*s, s->antipode(parse_o(o.o, *s)));
}

Output cmd_coproduct(const Options& o) {
    check_n(o);
    require(o.o, "--o");
    auto s = o_session(o_variant(o, OVariant::GLn), o.n, spec_of(o));
    Tensor t = s->coproduct(parse_o(o.o, *s));
    return {tensor_to_json(t, s->alphabet()), s->tensor_to_string(t)};
}

Output cmd_s2(const Options& o) {
    check_n(o);
    auto s = o_session(OVariant::GLn, o.n, spec_of(o));
    Output out;
    out.j["entries"] = json::array();
    bool all_q = true, all_ab = true;
    std::ostringstream os;
    for (const S2Entry& e : s2_spectrum(*s)) {
        out.j["entries"].push_back({{"i", e.i}, {"j", e.j}, {"eigenvalue", e.eigenvalue.to_string()},
                                    {"matches_al^-1_be", e.matches_qinv}, {"matches_al_be", e.matches_ab}});
        os << "S^2(x[" << e.i << "," << e.j << "]) = " << e.eigenvalue.to_string() << " x[" << e.i << "," << e.j << "]\n";
        all_q = all_q && e.matches_qinv;
        all_ab = all_ab && e.matches_ab;
    }
    std::string basis = all_q && all_ab ? "both" : all_q ? "(al^-1 be)^{j-i}" : all_ab ? "(al be)^{j-i}" : "neither";
    out.j["matching_base"] = basis;
    os << "matching base: " << basis;
    out.text = os.str();
    return out;
}

Output cmd_frobenius(const Options& o) {
    check_n(o);
    auto s = o_session(OVariant::GLn, o.n, spec_of(o));
    std::vector<int> ex = o.exponents;
    if (ex.empty()) throw ValidationError("--exponents (n^2 values, row-major) is required");
    Output out = element_out(*s, frobenius_embed(*s, ex));
    std::vector<std::string> fails = frobenius_centrality(*s);
    out.j = {{"image", out.j}, {"central", fails.empty()}, {"central_failures", fails}};
    out.text += fails.empty() ? "\n(central)" : "\nnot central: " + fails.front();
    return out;
}

Output cmd_project(const Options& o) {
    check_n(o);
    require(o.o, "--o");
    ParameterSpec sp = spec_of(o);
    auto gl = o_session(OVariant::GLn, o.n, sp);
    auto hb = o_session(OVariant::Hbar, o.n, sp);
    NCPoly p = hbar_project(*hb, parse_o(o.o, *gl));
    return {poly_to_json(p, hb->alphabet()), p.to_string(hb->alphabet())};
}

Output cmd_section(const Options& o) {
    check_n(o);
    require(o.word, "--word");
    ParameterSpec sp = spec_of(o);
    auto gl = o_session(OVariant::GLn, o.n, sp);
    auto hb = o_session(OVariant::Hbar, o.n, sp);
    GLElement w = parse_o(o.word, *hb);
    if (w.p.size() != 1 || !w.p.terms().begin()->second.is_one())
        throw ValidationError("--word must reduce to a single Hbar basis word, got " + hb->to_string(w));
    return element_out(*gl, gamma_section(*gl, *hb, w.p.terms().begin()->first));
}

Output cmd_delta_borel(const Options& o) {
    check_n(o);
    ParameterSpec sp = spec_of(o);
    auto gl = o_session(OVariant::GLn, o.n, sp);
    auto bp = o_session(OVariant::Bplus, o.n, sp);
    auto bm = o_session(OVariant::Bminus, o.n, sp);
    Output out;
    if (!o.o.empty()) {
        Tensor t = delta_borel(*gl, *bp, *bm, parse_o(o.o, *gl));
        json terms = json::array();
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, c] : t.terms()) {
            json legs = json::array();
            std::string txt;
            for (std::size_t i = 0; i < key.size(); ++i) {
                const Alphabet& a = i == 0 ? bp->alphabet() : bm->alphabet();
                json w = json::array();
                for (Letter x : key[i].w) w.push_back(a.names[x]);
                legs.push_back(w);
                txt += (i ? " (x) " : "") + (key[i].w.empty() ? std::string("1") : a.word_to_string(key[i].w));
            }
            terms.push_back({{"coeff", scalar_to_json(c)}, {"legs", legs}});
            os << (first ? "" : " + ") << "(" << c.to_string() << ") " << txt;
            first = false;
        }
        out.j["image"] = {{"terms", terms}};
        out.text = first ? "0" : os.str();
    }
    if (o.degree > 0) {
        DeltaRankReport r = delta_borel_rank(*o_session(OVariant::GLn, o.n, ParameterSpec::generic()), o.degree);
        out.j["rank_check"] = {{"degree", o.degree}, {"monomials", r.monomials}, {"rank", r.rank}, {"injective", r.rank == r.monomials}};
        out.text += (out.text.empty() ? "" : "\n") + std::string("degree <= ") + std::to_string(o.degree) + ": rank " +
                    std::to_string(r.rank) + " of " + std::to_string(r.monomials) + " monomials";
    }
    if (o.o.empty() && o.degree <= 0) throw ValidationError("delta-borel needs --o and/or --degree");
    return out;
}

Output cmd_subst(const Options& o) {
    check_n(o);
    Field f(spec_of(o));
    Output out;
    out.j = json::array();
    std::ostringstream os;
    for (const auto& c : substitution_check(o.n, f)) {
        out.j.push_back({{"candidate", c.label}, {"al'", c.al.to_string()}, {"be'", c.be.to_string()}, {"ok", c.ok}});
        os << c.label << ": " << (c.ok ? "relations preserved" : "fails") << "\n";
    }
    out.text = os.str();
    if (!out.text.empty()) out.text.pop_back();
    return out;
}

Output cmd_characters(const Options& o) {
    check_n(o);
    auto s = o_session(OVariant::GLn, o.n, spec_of(o));
    CharacterReport r = characters_O(*s);
    auto pairs = [](const std::vector<std::pair<int, int>>& v) {
        json a = json::array();
        for (auto [i, j] : v) a.push_back({i, j});
        return a;
    };
    json sup = json::array();
    for (const auto& x : r.supports) sup.push_back(pairs(x));
    return {{{"forced_zero", pairs(r.forced_zero)}, {"free", pairs(r.free)}, {"supports", sup}, {"description", r.describe()}},
            r.describe()};
}

Output cmd_rootvec(const Options& o) {
    check_n(o);
    auto s = u_side(o);
    if (o.sign != "E" && o.sign != "F") throw ValidationError("--sign must be E or F");
    if (!(1 <= o.l && o.l <= o.k && o.k < o.n))
        throw ValidationError("root vector indices need 1 <= l <= k < n");
    return upoly_out(*s, o.sign == "E" ? s->E(o.k, o.l) : s->F(o.k, o.l));
}

Output cmd_u_coproduct(const Options& o) {
    check_n(o);
    require(o.u, "--u");
    auto s = u_side(o);
    Tensor t = s->coproduct(parse_u(o.u, *s));
    return {tensor_to_json(t, s->alphabet()), s->tensor_to_string(t)};
}

Output cmd_central(const Options& o) {
    check_n(o);
    require(o.u, "--u");
    ParameterSpec sp = spec_of(o);
    if (sp.mode != Mode::root) throw ValidationError("central needs root-of-unity mode (--ell)");
    auto s = u_side(o);
    CentralReport r = central_check(*s, parse_u(o.u, *s));
    return {{{"central", r.central}, {"witness", r.witness}}, r.central ? "central" : "not central: " + r.witness};
}

Output cmd_finite_basis(const Options& o) {
    check_n(o);
    auto s = u_side(o, UVariant::uhat);
    std::vector<Word> b = s->finite_basis();
    json words = json::array();
    std::ostringstream os;
    os << "dimension " << b.size();
    std::size_t shown = o.limit < 0 ? b.size() : std::min<std::size_t>(b.size(), static_cast<std::size_t>(o.limit));
    for (std::size_t i = 0; i < shown; ++i) {
        std::string w = b[i].empty() ? "1" : s->alphabet().word_to_string(b[i]);
        words.push_back(w);
        os << "\n" << w;
    }
    return {{{"dimension", b.size()}, {"basis", words}}, os.str()};
}

Output cmd_dims(const Options& o) {
    check_n(o);
    require(o.variant, "--variant");
    ParameterSpec sp = spec_of(o);
    long long d = 0;
    if (o.variant == "u" || o.variant == "uhat" || o.variant == "uhatl") {
        d = u_session(parse_uvariant(o.variant), o.n, sp, o.iplus, o.iminus)->dimension();
    } else {
        OVariant v = parse_ovariant(o.variant);
        if (v != OVariant::Hbar && v != OVariant::Kplus && v != OVariant::Kminus)
            throw ValidationError("dims supports u, uhat, uhatl, Hbar, Kplus, Kminus");
        if (sp.mode != Mode::root) throw ValidationError("finite quotients need root-of-unity mode (--ell)");
        auto s = o_session(v, o.n, sp);
        long long beyond = s->system().enumerate_irreducible(o.n * o.n * (sp.ell - 1), [&](const Word&) { ++d; });
        if (beyond != 0) throw ComputationError("presentation has irreducible words beyond the expected basis length");
    }
    return {json(d), std::to_string(d)};
}

Output cmd_pair(const Options& o) {
    check_n(o);
    require(o.u, "--u");
    require(o.o, "--o");
    ParameterSpec sp = spec_of(o);
    auto us = u_session(UVariant::U, o.n, sp);
    auto os = o_session(OVariant::GLn, o.n, sp);
    PairingContext ctx(us, os);
    Scalar v = ctx.pair(parse_u(o.u, *us), parse_o(o.o, *os));
    return {json(v.to_string()), v.to_string()};
}

json matrix_json(const Matrix& m) {
    json a = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Scalar& x : row) r.push_back(x.to_string());
        a.push_back(r);
    }
    return a;
}

Output cmd_gram(const Options& o) {
    check_n(o);
    ParameterSpec sp = spec_of(o);
    if (sp.mode != Mode::root) throw ValidationError("gram needs root-of-unity mode (--ell)");
    std::cerr << "computing the uhat x Hbar Gram matrix (n=" << o.n << ", " << sp.describe() << ")...\n";
    GramReport g = uhat_hbar_gram(o.n, sp, 1000000);
    std::cerr << "done: " << g.rows << "x" << g.cols << ", rank " << g.rank << "\n";
    json j = {{"n", o.n},       {"ell", sp.ell},          {"na", sp.na},          {"nb", sp.nb},
              {"rows", g.rows}, {"cols", g.cols},         {"rank", g.rank},       {"row_labels", g.row_labels},
              {"col_labels", g.col_labels}, {"matrix", matrix_json(g.matrix)}};
    return {j, std::to_string(g.rows) + "x" + std::to_string(g.cols) + " Gram matrix, rank " + std::to_string(g.rank)};
}

Output cmd_rank(const Options& o) {
    require(o.matrix, "--matrix");
    std::ifstream in(o.matrix);
    if (!in) throw ValidationError("cannot open " + o.matrix);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("matrix file is not valid JSON: ") + e.what());
    }
    if (j.is_object()) j = j.at("matrix");
    Field f(spec_of(o));
    Matrix m;
    for (const auto& row : j) {
        std::vector<Scalar> r;
        for (const auto& x : row) r.push_back(x.is_string() ? parse_scalar(x.get<std::string>(), f) : scalar_from_json(x, f));
        if (!m.empty() && r.size() != m[0].size()) throw ValidationError("matrix rows have different lengths");
        m.push_back(std::move(r));
    }
    int r = rank(m);
    return {json(r), std::to_string(r)};
}

Output cmd_radical(const Options& o) {
    check_n(o);
    ParameterSpec sp = spec_of(o);
    if (sp.mode != Mode::root) throw ValidationError("radical needs root-of-unity mode (--ell)");
    auto us = u_session(UVariant::U, o.n, sp);
    auto gl = o_session(OVariant::GLn, o.n, sp);
    PairingContext ctx(us, gl);
    RadicalReport r;
    if (o.side == "right") {
        require(o.o, "--o");
        int deg = o.degree > 0 ? o.degree : 3;
        r = radical_right(ctx, parse_o(o.o, *gl), free_words(us->alphabet(), deg));
    } else if (o.side == "left") {
        require(o.u, "--u");
        auto hb = o_session(OVariant::Hbar, o.n, sp);
        auto mn = o_session(OVariant::Mn, o.n, sp);
        std::vector<GLElement> tests;
        for (const Word& w : hb->basis_words(o.n * o.n * (sp.ell - 1))) tests.push_back(gamma_section(*gl, *hb, w));
        int deg = o.degree > 0 ? o.degree : sp.ell + 1;
        for (const Word& w : mn->basis_words(deg)) {
            Word lifted;
            for (Letter x : w) {
                auto [row, col] = mn->position(x);
                lifted.push_back(gl->x(row + 1, col + 1));
            }
            tests.push_back(GLElement{0, NCPoly::term(lifted, gl->field().one())});
        }
        r = radical_left(ctx, parse_u(o.u, *us), tests);
    } else {
        throw ValidationError("--side must be left or right");
    }
    return {{{"side", o.side}, {"in_radical", r.ok}, {"tested", r.tested}, {"witness", r.witness}},
            (r.ok ? "in the " : "not in the ") + o.side + " radical (" + std::to_string(r.tested) + " pairings tested)" +
                (r.ok ? "" : ": " + r.witness)};
}

Output cmd_diag_check(const Options& o) {
    check_n(o);
    ParameterSpec sp = spec_of(o);
    if (sp.mode != Mode::root) throw ValidationError("diag-check needs root-of-unity mode (--ell)");
    EMxNReport r = em_xn_diagonal_check(o.n, sp);
    int rmax = o.degree > 0 ? o.degree : 2;
    json closed = json::array();
    std::ostringstream os;
    os << "<E^M, xbar^N>: " << r.size << "x" << r.size << ", diagonal " << (r.diagonal ? "yes" : "no") << ", nonzero diagonal "
       << (r.nonzero_diagonal ? "yes" : "no");
    if (!r.witness.empty()) os << " (" << r.witness << ")";
    for (const auto& e : em_xn_closed_form(o.n, sp, rmax)) {
        closed.push_back({{"r", e.r}, {"s", e.s}, {"brute", e.brute.to_string()}, {"closed", e.closed.to_string()}, {"ok", e.ok}});
        os << "\nr=" << e.r << " s=" << e.s << ": brute " << e.brute.to_string() << ", closed form " << e.closed.to_string()
           << (e.ok ? "" : "  MISMATCH");
    }
    json diag = json::array();
    for (const Scalar& d : r.diag) diag.push_back(d.to_string());
    return {{{"size", r.size}, {"diagonal", r.diagonal}, {"nonzero_diagonal", r.nonzero_diagonal}, {"witness", r.witness},
             {"diagonal_entries", diag}, {"closed_form", closed}},
            os.str()};
}

std::vector<SubgroupDatum> read_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open datum file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("datum file " + path + " is not valid JSON: " + e.what());
    }
    if (j.is_object() && j.contains("data")) return load_corpus(path);
    if (j.is_array()) {
        std::vector<SubgroupDatum> out;
        for (const auto& d : j) out.push_back(datum_from_json(d));
        return out;
    }
    return {datum_from_json(j)};
}

SubgroupDatum pick(const std::vector<SubgroupDatum>& data, const std::string& name, const std::string& path) {
    if (name.empty()) {
        if (data.size() != 1) throw ValidationError(path + " holds several data; select one with --name");
        return data[0];
    }
    for (const auto& d : data)
        if (d.name == name) return d;
    throw ValidationError("no datum named '" + name + "' in " + path);
}

json charvecs(const std::vector<CharVec>& v) { return json(v); }

json invariants_json(const DatumInvariants& v) {
    auto pairs = [](const std::vector<std::pair<int, int>>& p) {
        json a = json::array();
        for (auto [i, j] : p) a.push_back({i, j});
        return a;
    };
    const Predicates& p = v.predicates;
    return {{"I_plus_positions", pairs(v.positions.plus)},
            {"I_minus_positions", pairs(v.positions.minus)},
            {"M_I", charvecs(v.M_I)},
            {"N", charvecs(v.N_elems)},
            {"Sigma", charvecs(v.Sigma)},
            {"gamma_order", v.gamma_order},
            {"dim_uhat_l", v.dim_uhatl},
            {"dim_H", v.dim_H},
            {"dim_H_pbw", v.dim_H_pbw},
            {"dim_A_l_sigma", v.dim_Alsigma},
            {"dim_A_D", v.dim_AD},
            {"predicates",
             {{"semisimple", p.semisimple},
              {"pointed_possible", p.pointed_possible},
              {"dual_pointed_possible", p.dual_pointed_possible},
              {"pulenta", p.pulenta},
              {"pulenta_strong", p.pulenta_strong}}}};
}

std::string predicates_text(const Predicates& p) {
    std::ostringstream os;
    os << "semisimple " << p.semisimple << "\npointed_possible " << p.pointed_possible << "\ndual_pointed_possible "
       << p.dual_pointed_possible << "\npulenta " << p.pulenta << "\npulenta_strong " << p.pulenta_strong;
    return os.str();
}

Output cmd_datum(const Options& o) {
    require(o.file, "--file");
    std::vector<SubgroupDatum> data = read_data(o.file);
    if (o.action == "validate") {
        json arr = json::array();
        std::ostringstream os;
        bool all = true;
        for (const auto& d : data) {
            if (!o.name.empty() && d.name != o.name) continue;
            DatumReport r = datum_validate(d);
            all = all && r.valid;
            arr.push_back({{"name", d.name}, {"valid", r.valid}, {"errors", r.errors}});
            os << (d.name.empty() ? "datum" : d.name) << ": " << (r.valid ? "valid" : "INVALID") << "\n";
            for (const auto& e : r.errors) os << "  " << e << "\n";
        }
        std::string t = os.str();
        if (!t.empty()) t.pop_back();
        return {data.size() == 1 ? arr[0] : arr, t, all ? 0 : 2};
    }
    if (o.action == "dims" || o.action == "predicates") {
        SubgroupDatum d = pick(data, o.name, o.file);
        DatumInvariants v = datum_dims(d);
        if (o.action == "predicates") {
            json j = invariants_json(v)["predicates"];
            return {j, predicates_text(v.predicates)};
        }
        std::ostringstream os;
        os << "|Gamma| " << v.gamma_order << "\n|N| " << v.N_elems.size() << "\ndim uhat(l) " << v.dim_uhatl << "\ndim A_{l,sigma} "
           << v.dim_Alsigma << "\ndim H " << v.dim_H << "\ndim A_D " << v.dim_AD;
        return {invariants_json(v), os.str()};
    }
    if (o.action == "compare") {
        SubgroupDatum d = pick(data, o.name, o.file);
        std::string f2 = o.file2.empty() ? o.file : o.file2;
        SubgroupDatum d2 = pick(o.file2.empty() ? data : read_data(f2), o.name2, f2);
        DatumOrder r = datum_compare(d, d2);
        std::string why1, why2;
        datum_le(d, d2, &why1);
        datum_le(d2, d, &why2);
        return {{{"relation", datum_order_name(r)}, {"d<=d'", why1.empty() ? "holds" : why1}, {"d'<=d", why2.empty() ? "holds" : why2}},
                datum_order_name(r)};
    }
    throw ValidationError("datum action must be validate, dims, compare or predicates");
}

Output cmd_verify(const Options& o) {
    SuiteConfig c;
    c.n = o.n;
    c.spec = o.mode.empty() && o.ell == 0 ? ParameterSpec::root(3, 1, 2) : spec_of(o);
    if (o.mode == "generic") c.spec = ParameterSpec::generic();
    if (o.degree > 0) c.degree = o.degree;
    c.corpus = o.corpus;
    c.progress = [](const std::string& line) { std::cerr << line << std::endl; };
    SuiteReport r = run_suite(o.suite, c);
    return {r.to_json(), r.to_text(), r.passed() ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qgl: exact computations with two-parameter quantum groups"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options opt;
    app.add_option("--n", opt.n, "matrix size n (default 2)");
    app.add_option("--mode", opt.mode, "generic or root (default: root when --ell is given)");
    app.add_option("--ell", opt.ell, "odd order l of the root of unity");
    app.add_option("--na", opt.na, "al = zeta^na (default 1)");
    app.add_option("--nb", opt.nb, "be = zeta^nb (default na + 1)");
    app.add_option("--variant", opt.variant, "algebra variant (Mn, GLn, Bplus, Bminus, Hbar, Kplus, Kminus, U, u, uhat, Ul, uhatl)");
    app.add_option("--degree", opt.degree, "degree bound");
    app.add_option("--format", opt.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", opt.out, "write the output to this file");
    app.add_option("--iplus", opt.iplus, "I_+ for Ul/uhatl")->delimiter(',');
    app.add_option("--iminus", opt.iminus, "I_- for Ul/uhatl")->delimiter(',');

    using Handler = Output (*)(const Options&);
    std::vector<std::pair<CLI::App*, Handler>> verbs;
    auto verb = [&](const char* name, const char* help, Handler h) {
        CLI::App* s = app.add_subcommand(name, help);
        verbs.push_back({s, h});
        return s;
    };
    auto ex_u = [&](CLI::App* s) { s->add_option("--u", opt.u, "U-side expression"); };
    auto ex_o = [&](CLI::App* s) { s->add_option("--o", opt.o, "O-side expression"); };

    auto s = verb("reduce", "normal form of an expression", cmd_reduce);
    ex_u(s);
    ex_o(s);
    s = verb("qdet", "quantum determinant or minor", cmd_qdet);
    s->add_option("--rows", opt.rows, "row indices")->delimiter(',');
    s->add_option("--cols", opt.cols, "column indices")->delimiter(',');
    s = verb("antipode", "antipode of an O- or U-side expression", cmd_antipode);
    ex_u(s);
    ex_o(s);
    ex_o(verb("coproduct", "coproduct on the O side", cmd_coproduct));
    verb("s2", "eigenvalues of S^2 on the generators x_ij", cmd_s2);
    verb("frobenius", "quantum Frobenius image of a monomial in X_ij", cmd_frobenius)
        ->add_option("--exponents", opt.exponents, "n^2 exponents, row-major")
        ->delimiter(',');
    ex_o(verb("project", "projection O(GL_n) -> Hbar", cmd_project));
    verb("section", "the section gamma on an Hbar basis word", cmd_section)->add_option("--word", opt.word, "Hbar basis word");
    ex_o(verb("delta-borel", "the map into B+ (x) B- and its injectivity check", cmd_delta_borel));
    verb("subst-check", "parameter substitutions x_ij -> y_{n+1-i,n+1-j}", cmd_subst);
    verb("characters", "algebra maps O -> k (torus characters)", cmd_characters);
    s = verb("rootvec", "root vector E[k,l] or F[k,l]", cmd_rootvec);
    s->add_option("--sign", opt.sign, "E or F");
    s->add_option("--k", opt.k, "k");
    s->add_option("--l", opt.l, "l");
    ex_u(verb("u-coproduct", "coproduct on the U side", cmd_u_coproduct));
    ex_u(verb("central", "centrality test on the U side", cmd_central));
    verb("finite-basis", "basis of u, uhat or uhatl", cmd_finite_basis)->add_option("--limit", opt.limit, "list at most this many words");
    verb("dims", "dimension of a finite quotient", cmd_dims);
    s = verb("pair", "Hopf pairing <u, x>", cmd_pair);
    ex_u(s);
    ex_o(s);
    verb("gram", "uhat x Hbar Gram matrix and its rank", cmd_gram);
    verb("rank", "exact rank of a matrix of scalars", cmd_rank)->add_option("--matrix", opt.matrix, "JSON file with the matrix");
    s = verb("radical", "radical membership of the pairing", cmd_radical);
    s->add_option("--side", opt.side, "left (U-side candidate) or right (O-side candidate)");
    ex_u(s);
    ex_o(s);
    verb("diag-check", "diagonal structure of <E^M, xbar^N>", cmd_diag_check);
    s = verb("datum", "subgroup data: validate | dims | compare | predicates", cmd_datum);
    s->add_option("action", opt.action, "validate, dims, compare or predicates")->required();
    s->add_option("--file", opt.file, "datum or corpus JSON file");
    s->add_option("--name", opt.name, "datum name inside a corpus");
    s->add_option("--file2", opt.file2, "second datum file (compare)");
    s->add_option("--name2", opt.name2, "second datum name (compare)");
    s = verb("verify", "run a verification suite", cmd_verify);
    s->add_option("suite", opt.suite, "hopf-axioms, pairing-axioms, pbw, frobenius, restricted, gram, datum-lattice, predicates, all")
        ->required();
    s->add_option("--corpus", opt.corpus, "datum corpus for datum-lattice");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Output out;
        for (auto& [sub, h] : verbs)
            if (sub->parsed()) out = h(opt);
        std::string text = opt.format == "json" ? out.j.dump(2) : out.text;
        if (!opt.out.empty()) {
            std::ofstream f(opt.out);
            if (!f) throw ValidationError("cannot write " + opt.out);
            f << text << "\n";
        } else {
            std::cout << text << "\n";
        }
        return out.code;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ComputationError& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 3;
    }
}
