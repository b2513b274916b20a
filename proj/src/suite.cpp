#include "qgl/suite.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "qgl/error.hpp"
#include "qgl/oab.hpp"
#include "qgl/pairing.hpp"
#include "qgl/subgroup.hpp"
#include "qgl/uab.hpp"

namespace qgl {

bool SuiteReport::passed() const { return count("fail") == 0; }

int SuiteReport::count(const std::string& status) const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == status; }));
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = name;
    j["passed"] = passed();
    j["counts"] = {{"pass", count("pass")}, {"fail", count("fail")}, {"skipped", count("skipped")}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"id", c.id}, {"status", c.status}, {"witness", c.witness}, {"seconds", c.seconds}});
    return j;
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.status == "pass" ? "PASS " : c.status == "fail" ? "FAIL " : "SKIP ") << c.id;
        if (!c.witness.empty()) os << "  -- " << c.witness;
        os << "\n";
    }
    os << "suite " << name << ": " << count("pass") << " passed, " << count("fail") << " failed, " << count("skipped")
       << " skipped\n";
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"hopf-axioms", "pairing-axioms", "pbw",        "frobenius",
                                                   "restricted",  "gram",           "datum-lattice", "predicates"};
    return names;
}

std::string default_corpus_path() { return std::string(QGL_DATA_DIR) + "/corpus_n2_l3.json"; }

namespace {

using Clock = std::chrono::steady_clock;

/// Collects checks, timing each and converting exceptions into failures.
class Runner {
public:
    Runner(std::string prefix, const SuiteConfig& cfg) : prefix_(std::move(prefix)), cfg_(cfg) {}

    /// body returns the witness of a failure, or "" on success.
    void check(const std::string& id, const std::function<std::string()>& body) {
        auto t0 = Clock::now();
        CheckResult r{prefix_ + "/" + id, "pass", "", 0};
        try {
            r.witness = body();
            if (!r.witness.empty()) r.status = "fail";
        } catch (const std::exception& e) {
            r.status = "fail";
            r.witness = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        add(std::move(r));
    }
    /// A check that also carries an informational note on success.
    void check_note(const std::string& id, const std::function<std::pair<bool, std::string>()>& body) {
        auto t0 = Clock::now();
        CheckResult r{prefix_ + "/" + id, "pass", "", 0};
        try {
            auto [ok, note] = body();
            r.status = ok ? "pass" : "fail";
            r.witness = note;
        } catch (const std::exception& e) {
            r.status = "fail";
            r.witness = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        add(std::move(r));
    }
    void skip(const std::string& id, const std::string& why) { add({prefix_ + "/" + id, "skipped", why, 0}); }

    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::string prefix_;
    const SuiteConfig& cfg_;
    std::vector<CheckResult> out_;

    void add(CheckResult r) {
        if (cfg_.progress)
            cfg_.progress(r.status + " " + r.id + " (" + std::to_string(static_cast<int>(r.seconds * 1000)) + " ms)");
        out_.push_back(std::move(r));
    }
};

bool is_root(const SuiteConfig& c) { return c.spec.mode == Mode::root; }

std::string first_failures(const std::vector<std::string>& f) {
    if (f.empty()) return "";
    return std::to_string(f.size()) + " failure(s); first: " + f.front();
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// ---------------------------------------------------------------------------

void suite_hopf(Runner& R, const SuiteConfig& c) {
    const int n = c.n;
    auto gl = o_session(OVariant::GLn, n, c.spec);
    R.check("O.GLn.confluence", [&]() -> std::string {
        auto m = gl->system().confluence_check(4);
        return m.empty() ? "" : std::to_string(m.size()) + " unresolved ambiguities, first at " + gl->alphabet().word_to_string(m[0].word);
    });
    DeterminantReport dr = determinant_check(*gl);
    R.check("O.GLn.qdet.row-equals-column", [&]() -> std::string {
        return dr.coherent ? "" : "row " + dr.row.to_string(gl->alphabet()) + " vs column " + dr.column.to_string(gl->alphabet());
    });
    R.check("O.GLn.qdet.grouplike", [&]() -> std::string { return dr.grouplike ? "" : "Delta(g) != g (x) g"; });
    R.check("O.GLn.qdet.normal", [&]() -> std::string { return dr.normal ? "" : "x_ij g != (be al)^{i-j} g x_ij for some (i,j)"; });
    std::vector<OVariant> ovars = {OVariant::GLn};
    if (is_root(c)) ovars.insert(ovars.end(), {OVariant::Hbar, OVariant::Kplus, OVariant::Kminus});
    for (OVariant v : ovars) {
        auto s = o_session(v, n, c.spec);
        for (const AxiomResult& a : hopf_axioms_O(*s))
            R.check("O." + ovariant_name(v) + "." + a.id, [&]() -> std::string { return a.ok ? "" : a.witness.empty() ? "failed" : a.witness; });
    }
    R.check_note("O.GLn.s2-spectrum", [&] {
        bool all_q = true, all_ab = true;
        std::string bad;
        for (const S2Entry& e : s2_spectrum(*gl)) {
            all_q = all_q && e.matches_qinv;
            all_ab = all_ab && e.matches_ab;
            if (!e.matches_qinv && bad.empty())
                bad = "S^2(x[" + std::to_string(e.i) + "," + std::to_string(e.j) + "]) = " + e.eigenvalue.to_string() + " x";
        }
        if (!all_q) return std::pair{false, bad};
        return std::pair{true, std::string("eigenvalues (al^-1 be)^{j-i}") +
                                   (all_ab ? "; (al be)^{j-i} also matches" : "; the base (al be) does not match")};
    });

    auto U = u_session(UVariant::U, n, c.spec);
    R.check("U.confluence", [&]() -> std::string {
        auto m = U->system().confluence_check(n <= 2 ? 6 : 5);
        return m.empty() ? "" : std::to_string(m.size()) + " unresolved ambiguities, first at " + U->alphabet().word_to_string(m[0].word);
    });
    std::vector<UVariant> uvars = {UVariant::U};
    if (is_root(c) && n <= 2) uvars.insert(uvars.end(), {UVariant::u, UVariant::uhat});
    for (UVariant v : uvars) {
        auto s = u_session(v, n, c.spec);
        for (const UAxiomResult& a : hopf_axioms_U(*s))
            R.check(uvariant_name(v) + "." + a.id, [&]() -> std::string { return a.ok ? "" : a.witness.empty() ? "failed" : a.witness; });
    }
    for (int k = 1; k < n; ++k)
        for (int l = 1; l <= k; ++l)
            R.check("U.comult-E[" + std::to_string(k) + "," + std::to_string(l) + "]", [&]() -> std::string {
                ComultReport r = comult_E_check(*U, k, l);
                return r.ok ? "" : "direct " + r.direct + " vs closed " + r.closed;
            });
}

void suite_pairing(Runner& R, const SuiteConfig& c) {
    const int n = c.n;
    PairingContext ctx(u_session(UVariant::U, n, c.spec), o_session(OVariant::GLn, n, c.spec));
    std::vector<PairingAxiomResult> ax = pairing_axioms(ctx, 3, 100, 1);
    // group the many per-pair results by axiom id
    std::map<std::string, std::pair<int, std::string>> grouped;
    for (const auto& r : ax) {
        std::string key = r.id.substr(0, r.id.find(" <"));
        std::replace(key.begin(), key.end(), ' ', '-');
        auto& g = grouped[key];
        if (!r.ok && g.second.empty()) g.second = r.id + ": " + r.witness;
        ++g.first;
    }
    for (const auto& [key, g] : grouped) R.check("axiom." + key, [&]() -> std::string { return g.second; });
    R.check("antipode-compatibility", [&]() -> std::string {
        for (const auto& r : antipode_compatibility(ctx))
            if (!r.ok) return r.id + ": " + r.witness;
        return std::string();
    });
    R.check("well-defined.degree-2", [&]() -> std::string { return first_failures(pairing_welldefined_check(ctx, 2)); });
    R.check("pair-E-F.closed-forms", [&]() -> std::string { return first_failures(pair_ef_check(ctx).failures); });
}

void suite_pbw(Runner& R, const SuiteConfig& c) {
    const int n = c.n;
    auto U = u_session(UVariant::U, n, c.spec);
    for (int sign : {+1, -1})
        R.check_note(std::string(sign > 0 ? "U+" : "U-") + ".graded-dimensions", [&] {
            std::string dims;
            for (int d = 0; d <= c.degree; ++d) {
                long long got = U->half(sign).graded_dimension(d), want = pbw_count(n, d);
                if (got != want)
                    return std::pair{false, "degree " + std::to_string(d) + ": " + std::to_string(got) + " irreducible words, " +
                                                std::to_string(want) + " PBW monomials"};
                dims += (d ? "," : "") + std::to_string(got);
            }
            return std::pair{true, "(" + dims + ")"};
        });
    R.check("U.triangular-decomposition", [&]() -> std::string {
        std::string bad;
        int len = n <= 2 ? 4 : 3;
        U->system().enumerate_irreducible(len, [&](const Word& w) {
            int last = 0;
            for (Letter l : w) {
                int k = U->info(l).kind == ULetter::f ? 0 : U->info(l).kind == ULetter::torus ? 1 : 2;
                if (k < last && bad.empty()) bad = "irreducible word " + U->alphabet().word_to_string(w) + " is not F.T.E ordered";
                last = std::max(last, k);
            }
        });
        return bad;
    });
    if (!is_root(c)) {
        R.skip("finite-dimensions", "root-of-unity mode only");
        return;
    }
    const int ell = c.spec.ell;
    struct Dim {
        UVariant v;
        long long expect;
    };
    std::vector<Dim> dims = {{UVariant::uhat, ipow(ell, n * n)}, {UVariant::uhatl, ipow(ell, n)}};
    if (ipow(ell, n * n + n) <= 1000000) dims.insert(dims.begin(), {UVariant::u, ipow(ell, n * n + n)});
    for (const Dim& d : dims)
        R.check("dim." + uvariant_name(d.v), [&]() -> std::string {
            long long got = u_session(d.v, n, c.spec)->dimension();
            return got == d.expect ? "" : std::to_string(got) + " basis words, expected " + std::to_string(d.expect);
        });
}

void suite_frobenius(Runner& R, const SuiteConfig& c) {
    if (!is_root(c)) {
        R.skip("all", "root-of-unity mode only");
        return;
    }
    const int n = c.n, ell = c.spec.ell;
    auto gl = o_session(OVariant::GLn, n, c.spec);
    auto hbar = o_session(OVariant::Hbar, n, c.spec);
    R.check("frobenius.central", [&]() -> std::string { return first_failures(frobenius_centrality(*gl)); });
    struct Count {
        OVariant v;
        long long expect;
    };
    for (const Count& k : {Count{OVariant::Hbar, ipow(ell, n * n)}, Count{OVariant::Kplus, ipow(ell, n * (n + 1) / 2)},
                           Count{OVariant::Kminus, ipow(ell, n * (n + 1) / 2)}})
        R.check("basis." + ovariant_name(k.v), [&]() -> std::string {
            auto s = o_session(k.v, n, c.spec);
            long long cnt = 0;
            long long beyond = s->system().enumerate_irreducible(n * n * (ell - 1), [&](const Word&) { ++cnt; });
            if (beyond != 0) return std::string("irreducible words beyond the maximal basis length");
            return cnt == k.expect ? std::string() : std::to_string(cnt) + " basis words, expected " + std::to_string(k.expect);
        });
    // all basis words up to 729 of them, the shortest 729 beyond that
    const std::size_t cap = 729;
    GammaReport g = gamma_check(*gl, *hbar, ipow(ell, n * n) <= static_cast<long long>(cap) ? 0 : cap);
    R.check("gamma.section", [&]() -> std::string {
        return g.section_ok == g.words ? "" : std::to_string(g.words - g.section_ok) + " words with pi(gamma(w)) != w";
    });
    R.check("gamma.coalgebra-after-projection", [&]() -> std::string {
        return g.projected_ok == g.words ? "" : std::to_string(g.words - g.projected_ok) + " words fail";
    });
    R.check("gamma.coalgebra-map", [&]() -> std::string {
        return g.coalgebra_ok == g.words ? ""
                                         : "Delta gamma = (gamma (x) gamma) Delta-bar holds on " + std::to_string(g.coalgebra_ok) +
                                               " of " + std::to_string(g.words) + " basis words; first failure " + g.first_failure;
    });
    auto U = u_session(UVariant::U, n, c.spec);
    for (int k = 1; k < n; ++k)
        for (int sign : {+1, -1})
            R.check(std::string("l-th-power-coproduct.") + (sign > 0 ? "e[" : "f[") + std::to_string(k) + "]", [&]() -> std::string {
                return coproduct_power_check(*U, sign, k, ell) ? "" : "Delta(x^l) is not the two-term form";
            });
}

void suite_restricted(Runner& R, const SuiteConfig& c) {
    if (!is_root(c)) {
        R.skip("all", "root-of-unity mode only");
        return;
    }
    const int n = c.n, ell = c.spec.ell;
    auto U = u_session(UVariant::U, n, c.spec);
    for (const auto& [name, g] : ideal_generators(*U))
        R.check("central." + name, [&, g = g]() -> std::string {
            CentralReport r = central_check(*U, g);
            return r.central ? "" : r.witness;
        });
    for (const auto& r : restricted_radical_checks(n, c.spec))
        R.check("radical." + r.id, [&]() -> std::string { return r.ok ? "" : r.witness; });
    auto uh = u_session(UVariant::uhat, n, c.spec);
    R.check("uhat.ideal-vanishes", [&]() -> std::string {
        std::vector<std::pair<std::string, NCPoly>> gens;
        for (int k = 1; k < n; ++k)
            for (int l = 1; l <= k; ++l) {
                std::string idx = "[" + std::to_string(k) + "," + std::to_string(l) + "]^l";
                gens.push_back({"E" + idx, uh->power(uh->E(k, l), ell)});
                gens.push_back({"F" + idx, uh->power(uh->F(k, l), ell)});
            }
        for (int i = 1; i <= n; ++i) {
            std::string s = std::to_string(i);
            gens.push_back({"h[" + s + "]^l - 1", uh->h(i, ell) - uh->one()});
            gens.push_back({"h[" + s + "]^na a[" + s + "]^-1 - 1", uh->mul(uh->h(i, c.spec.na), uh->a(i, -1)) - uh->one()});
            gens.push_back({"h[" + s + "]^nb b[" + s + "]^-1 - 1", uh->mul(uh->h(i, c.spec.nb), uh->b(i, -1)) - uh->one()});
        }
        for (const auto& [name, p] : gens)
            if (!uh->reduce(p).is_zero()) return name + " reduces to " + uh->to_string(uh->reduce(p));
        return std::string();
    });
}

void suite_gram(Runner& R, const SuiteConfig& c) {
    if (!is_root(c)) {
        R.skip("all", "root-of-unity mode only");
        return;
    }
    const int n = c.n;
    const long long side = ipow(c.spec.ell, n * n);
    if (side * side > 1000000)
        R.skip("uhat-x-Hbar.full-rank", "Gram matrix would have " + std::to_string(side) + "^2 entries");
    else
        R.check_note("uhat-x-Hbar.full-rank", [&] {
        GramReport g = uhat_hbar_gram(n, c.spec, 1000000);
        bool ok = g.rows == g.cols && g.rank == g.rows;
        return std::pair{ok, std::to_string(g.rows) + "x" + std::to_string(g.cols) + " rank " + std::to_string(g.rank)};
    });
    R.check("EM-xN.diagonal", [&]() -> std::string {
        EMxNReport r = em_xn_diagonal_check(n, c.spec);
        return r.diagonal && r.nonzero_diagonal ? "" : r.witness;
    });
    R.check("EM-xN.closed-form", [&]() -> std::string {
        for (const auto& e : em_xn_closed_form(n, c.spec, 2))
            if (!e.ok)
                return "r=" + std::to_string(e.r) + ", s=" + std::to_string(e.s) + ": brute " + e.brute.to_string() + " vs closed " +
                       e.closed.to_string();
        return std::string();
    });
}

std::string datum_label(const SubgroupDatum& d, std::size_t i) {
    return d.name.empty() ? "#" + std::to_string(i + 1) : d.name;
}

void suite_datum(Runner& R, const SuiteConfig& c) {
    std::string path = c.corpus.empty() ? default_corpus_path() : c.corpus;
    std::vector<SubgroupDatum> data;
    R.check("corpus.load", [&]() -> std::string {
        data = load_corpus(path);
        return data.size() >= 20 ? "" : "corpus has only " + std::to_string(data.size()) + " data";
    });
    std::vector<DatumInvariants> inv(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const SubgroupDatum& d = data[i];
        std::string label = datum_label(d, i);
        R.check("datum." + label + ".valid", [&]() -> std::string {
            DatumReport r = datum_validate(d);
            inv[i] = r.inv;
            return r.valid ? std::string() : r.errors.front();
        });
        R.check("datum." + label + ".dimensions", [&]() -> std::string {
            const DatumInvariants& v = inv[i];
            std::set<std::pair<int, int>> uni(v.positions.plus.begin(), v.positions.plus.end());
            uni.insert(v.positions.minus.begin(), v.positions.minus.end());
            const int ell = d.spec.ell, n = d.n;
            long long g = static_cast<long long>(v.gamma_order);
            if (v.dim_Alsigma != g * ipow(ell, n * n - static_cast<int>(uni.size()))) return std::string("dim A_{l,sigma} identity fails");
            if (v.dim_H * static_cast<long long>(v.N_elems.size()) != ipow(ell, static_cast<int>(d.iplus.size() + d.iminus.size()) + n))
                return std::string("dim H identity fails");
            if (v.dim_AD != g * v.dim_H) return std::string("dim A_D != |Gamma| dim H");
            return std::string();
        });
        R.check("datum." + label + ".N-in-M_I", [&]() -> std::string {
            std::set<CharVec> m(inv[i].M_I.begin(), inv[i].M_I.end());
            for (const CharVec& x : inv[i].N_elems)
                if (!m.count(x)) return std::string("element of N outside M_I");
            return std::string();
        });
    }
    // order properties
    const std::size_t m = data.size();
    std::vector<std::vector<char>> le(m, std::vector<char>(m, 0));
    R.check("order.reflexive", [&]() -> std::string {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) le[a][b] = datum_le(data[a], data[b]);
        for (std::size_t a = 0; a < m; ++a)
            if (!le[a][a]) return datum_label(data[a], a) + " is not <= itself";
        return std::string();
    });
    R.check("order.transitive", [&]() -> std::string {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (le[a][b])
                    for (std::size_t x = 0; x < m; ++x)
                        if (le[b][x] && !le[a][x])
                            return datum_label(data[a], a) + " <= " + datum_label(data[b], b) + " <= " + datum_label(data[x], x) +
                                   " but not " + datum_label(data[a], a) + " <= " + datum_label(data[x], x);
        return std::string();
    });
    R.check("order.antisymmetric-up-to-equivalence", [&]() -> std::string {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                if (le[a][b] && le[b][a]) {
                    const SubgroupDatum &x = data[a], &y = data[b];
                    std::set<CharVec> nx(inv[a].N_elems.begin(), inv[a].N_elems.end()), ny(inv[b].N_elems.begin(), inv[b].N_elems.end());
                    std::set<std::string> gx, gy;
                    for (const Mat& e : x.gamma->elements()) gx.insert(FiniteMatrixGroup::key(e));
                    for (const Mat& e : y.gamma->elements()) gy.insert(FiniteMatrixGroup::key(e));
                    if (x.iplus != y.iplus || x.iminus != y.iminus || nx != ny || gx != gy || inv[a].dim_AD != inv[b].dim_AD)
                        return "equivalent data " + datum_label(x, a) + ", " + datum_label(y, b) + " differ";
                }
        return std::string();
    });
    R.check("position-sets.segments", [&]() -> std::string {
        for (int n = 2; n <= 4; ++n)
            for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
                std::vector<int> ip;
                for (int k = 1; k < n; ++k)
                    if (mask >> (k - 1) & 1) ip.push_back(k);
                PositionSets ps = position_sets(n, ip, ip);
                for (auto [i, j] : ps.plus)
                    if (i >= j) return std::string("(i,j) in I_+ with i >= j");
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        bool seg = true;
                        for (int k = i; k < j; ++k) seg = seg && (mask >> (k - 1) & 1);
                        bool in = std::find(ps.plus.begin(), ps.plus.end(), std::pair{i, j}) != ps.plus.end();
                        if (seg == in) return "position (" + std::to_string(i) + "," + std::to_string(j) + ") misclassified";
                    }
            }
        return std::string();
    });
    R.check("dim-uhatl.matches-presentation", [&]() -> std::string {
        ParameterSpec sp = ParameterSpec::root(3, 1, 2);
        for (int n = 2; n <= 3; ++n)
            for (int mp = 0; mp < (1 << (n - 1)); ++mp)
                for (int mm = 0; mm < (1 << (n - 1)); ++mm) {
                    std::vector<int> ip, im;
                    for (int k = 1; k < n; ++k) {
                        if (mp >> (k - 1) & 1) ip.push_back(k);
                        if (mm >> (k - 1) & 1) im.push_back(k);
                    }
                    auto ps = position_sets(n, ip, im);
                    std::set<std::pair<int, int>> uni(ps.plus.begin(), ps.plus.end());
                    uni.insert(ps.minus.begin(), ps.minus.end());
                    long long formula = ipow(3, n * n - static_cast<int>(uni.size()));
                    long long counted = USession(UVariant::uhatl, n, sp, ip, im).dimension();
                    if (formula != counted)
                        return "n=" + std::to_string(n) + ": formula " + std::to_string(formula) + ", basis " + std::to_string(counted);
                }
        return std::string();
    });
}

SubgroupDatum example_datum(const std::string& text) { return datum_from_json(nlohmann::json::parse(text)); }

void suite_predicates(Runner& R, const SuiteConfig&) {
    const std::string head = R"("n":2,"ell":3,"na":1,"nb":2,)";
    R.check("semisimple.torus-data", [&]() -> std::string {
        for (const char* g : {"[]", "[[[-1,0],[0,1]]]", R"([[["z",0],[0,1]]])"}) {
            auto d = example_datum("{" + head + R"("Gamma":)" + g + "}");
            if (!datum_predicates(d).semisimple) return std::string("I_+- empty but not flagged semisimple");
        }
        return std::string();
    });
    R.check("pulenta.swap-example", [&]() -> std::string {
        auto d = example_datum("{" + head + R"("Iplus":[1],"Iminus":[1],"Gamma":[[[0,1],[1,0]]]})");
        DatumInvariants v = datum_dims(d);
        if (!v.predicates.pulenta || !v.predicates.pulenta_strong) return std::string("not flagged pulenta_strong");
        if (v.dim_AD != 162) return "dim A_D = " + std::to_string(v.dim_AD);
        return std::string();
    });
    R.check("pulenta.diagonal-gamma-excluded", [&]() -> std::string {
        auto d = example_datum("{" + head + R"("Iplus":[1],"Iminus":[1],"Gamma":[[[-1,0],[0,-1]]]})");
        return datum_predicates(d).pulenta ? "diagonal Gamma flagged pulenta" : "";
    });
    R.check("pointed-possible.borel", [&]() -> std::string {
        auto d = example_datum("{" + head + R"("Iplus":[1],"Gamma":[[[-1,1],[0,1]]]})");
        Predicates p = datum_predicates(d);
        return p.pointed_possible && !p.pulenta && !p.dual_pointed_possible ? "" : "unexpected flags";
    });
    R.check("pulenta-strong.needs-interval", [&]() -> std::string {
        nlohmann::json j = {{"n", 4}, {"ell", 3}, {"na", 1}, {"nb", 2}, {"Iplus", {1, 3}}, {"Iminus", {1, 3}}};
        j["Gamma"] = nlohmann::json::array({nlohmann::json::array({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})});
        Predicates p = datum_predicates(datum_from_json(j));
        return p.pulenta && !p.pulenta_strong ? "" : "I = {1,3} accepted as connected";
    });
    Field f(ParameterSpec::root(3, 1, 2));
    auto I = [&](long k) { return f.integer(k); };
    R.check("characters.trivial", [&]() -> std::string {
        FiniteMatrixGroup g(2, f, {});
        return g.characters().size() == 1 ? "" : "nontrivial character group";
    });
    R.check("characters.swap", [&]() -> std::string {
        FiniteMatrixGroup g(2, f, {{{I(0), I(1)}, {I(1), I(0)}}});
        return g.order() == 2 && g.invariant_factors() == std::vector<Int>{2} ? "" : "expected Z/2";
    });
    R.check("characters.S3-sign", [&]() -> std::string {
        Mat t = {{I(0), I(1), I(0)}, {I(1), I(0), I(0)}, {I(0), I(0), I(1)}};
        Mat cyc = {{I(0), I(1), I(0)}, {I(0), I(0), I(1)}, {I(1), I(0), I(0)}};
        FiniteMatrixGroup g(3, f, {t, cyc});
        if (g.order() != 6 || g.commutator_order() != 3) return std::string("wrong S_3 structure");
        return g.invariant_factors() == std::vector<Int>{2} && g.characters().size() == 2 ? "" : "expected Z/2 (sign)";
    });
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
    SuiteReport rep;
    rep.name = name;
    if (config.n < 1) throw ValidationError("n must be >= 1");
    config.spec.validate();
    std::vector<std::string> names;
    if (name == "all")
        names = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end())
        names = {name};
    else
        throw ValidationError("unknown suite '" + name + "'");
    for (const std::string& s : names) {
        Runner R(s, config);
        if (s == "hopf-axioms") suite_hopf(R, config);
        else if (s == "pairing-axioms") suite_pairing(R, config);
        else if (s == "pbw") suite_pbw(R, config);
        else if (s == "frobenius") suite_frobenius(R, config);
        else if (s == "restricted") suite_restricted(R, config);
        else if (s == "gram") suite_gram(R, config);
        else if (s == "datum-lattice") suite_datum(R, config);
        else if (s == "predicates") suite_predicates(R, config);
        auto checks = R.take();
        rep.checks.insert(rep.checks.end(), checks.begin(), checks.end());
    }
    std::stable_sort(rep.checks.begin(), rep.checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return rep;
}

}  // namespace qgl
