#include "qgl/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "qgl/expr.hpp"
#include "qgl/linalg.hpp"

namespace qgl {

using nlohmann::json;

Rat qz(const Rat& r) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Rat out = r - Rat(fl);
    out.canonicalize();
    return out;
}

PositionSets position_sets(int n, const std::vector<int>& iplus, const std::vector<int>& iminus) {
    PositionSets ps;
    ps.forced_zero.assign(n, std::vector<bool>(n, false));
    auto in = [](const std::vector<int>& v, int k) { return std::find(v.begin(), v.end(), k) != v.end(); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool plus = false, minus = false;
            for (int k = i; k < j; ++k) {
                plus = plus || !in(iplus, k);
                minus = minus || !in(iminus, k);
            }
            if (plus) {
                ps.plus.push_back({i, j});
                ps.forced_zero[i - 1][j - 1] = true;
            }
            if (minus) {
                ps.minus.push_back({j, i});
                ps.forced_zero[j - 1][i - 1] = true;
            }
        }
    std::sort(ps.minus.begin(), ps.minus.end());
    return ps;
}

// ---------------------------------------------------------------------------
// Integer lattices

SmithForm smith_normal_form(std::vector<std::vector<Int>> a, std::size_t cols) {
    const std::size_t rows = a.size();
    SmithForm sf;
    sf.Q.assign(cols, std::vector<Int>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) sf.Q[i][i] = 1;
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto& r : a) std::swap(r[x], r[y]);
        for (auto& r : sf.Q) std::swap(r[x], r[y]);
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (auto& r : a) r[dst] -= q * r[src];
        for (auto& r : sf.Q) r[dst] -= q * r[src];
    };
    const std::size_t m = std::min(rows, cols);
    for (std::size_t t = 0; t < m; ++t) {
        for (;;) {
            // smallest nonzero entry of the remaining block
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) {
                for (std::size_t k = t; k < m; ++k) sf.diagonal.push_back(0);
                return sf;
            }
            std::swap(a[t], a[pi]);
            if (pj != t) swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                col_sub(j, t, q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block by the pivot
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a[t][t] < 0) {
            for (auto& r : a) r[t] = -r[t];
            for (auto& r : sf.Q) r[t] = -r[t];
        }
        sf.diagonal.push_back(a[t][t]);
    }
    return sf;
}

namespace {

/// Adds v to a row-echelon lattice basis (rows sorted by pivot column).
void lattice_insert(std::vector<std::vector<Int>>& basis, std::vector<Int> v) {
    auto lead = [](const std::vector<Int>& r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0) return i;
        return r.size();
    };
    std::size_t lv = lead(v);
    for (std::size_t k = 0; k < basis.size() && lv < v.size(); ++k) {
        std::size_t p = lead(basis[k]);
        if (lv < p) {
            basis.insert(basis.begin() + static_cast<long>(k), v);
            return;
        }
        if (lv > p) continue;
        // combine rows with the extended gcd on column p
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), basis[k][p].get_mpz_t(), v[p].get_mpz_t());
        Int ra = basis[k][p] / g, va = v[p] / g;
        std::vector<Int> nr(v.size()), nv(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            nr[i] = s * basis[k][i] + t * v[i];
            nv[i] = ra * v[i] - va * basis[k][i];
        }
        basis[k] = std::move(nr);
        v = std::move(nv);
        lv = lead(v);
    }
    if (lv < v.size()) basis.push_back(std::move(v));
}

Mat mat_mul(const Mat& x, const Mat& y, const Field& f) {
    const std::size_t n = x.size();
    Mat r(n, std::vector<Scalar>(n, f.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (x[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!y[k][j].is_zero()) r[i][j] += x[i][k] * y[k][j];
        }
    return r;
}

Mat identity(int n, const Field& f) {
    Mat m(n, std::vector<Scalar>(n, f.zero()));
    for (int i = 0; i < n; ++i) m[i][i] = f.one();
    return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Finite matrix groups

std::string FiniteMatrixGroup::key(const Mat& m) {
    std::string s;
    for (const auto& r : m)
        for (const auto& e : r) s += e.to_string() + ";";
    return s;
}

FiniteMatrixGroup::FiniteMatrixGroup(int n, const Field& f, std::vector<Mat> generators, std::size_t cap)
    : n_(n), field_(f), gens_(std::move(generators)) {
    for (const Mat& g : gens_) {
        if (static_cast<int>(g.size()) != n) throw ValidationError("group generator is not " + std::to_string(n) + "x" + std::to_string(n));
        for (const auto& r : g)
            if (static_cast<int>(r.size()) != n)
                throw ValidationError("group generator is not " + std::to_string(n) + "x" + std::to_string(n));
        if (rank(g) != n) throw ValidationError("group generator " + key(g) + " is singular");
    }
    const std::size_t k = gens_.size();
    // breadth-first closure under right multiplication
    elems_.push_back(identity(n, f));
    expvec_.push_back(std::vector<long>(k, 0));
    index_.emplace(key(elems_[0]), 0);
    std::vector<std::vector<Int>> edges;  // abelianized Schreier relations
    for (std::size_t c = 0; c < elems_.size(); ++c)
        for (std::size_t i = 0; i < k; ++i) {
            Mat m = mat_mul(elems_[c], gens_[i], f);
            std::string kk = key(m);
            auto it = index_.find(kk);
            std::vector<long> v = expvec_[c];
            ++v[i];
            if (it == index_.end()) {
                if (elems_.size() >= cap)
                    throw ComputationError("group closure exceeds the cap of " + std::to_string(cap) + " elements");
                index_.emplace(kk, elems_.size());
                elems_.push_back(std::move(m));
                expvec_.push_back(std::move(v));
            } else {
                std::vector<Int> rel(k);
                bool nonzero = false;
                for (std::size_t j = 0; j < k; ++j) {
                    rel[j] = Int(v[j] - expvec_[it->second][j]);
                    nonzero = nonzero || rel[j] != 0;
                }
                if (nonzero) lattice_insert(relations_, std::move(rel));
            }
        }
    // commutator subgroup: normal closure of the generator commutators
    auto mul = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(index_of(mat_mul(elems_[a], elems_[b], f))); };
    std::vector<std::size_t> inv(elems_.size());
    for (std::size_t a = 0; a < elems_.size(); ++a) {
        std::size_t p = a, prev = 0;
        while (p != 0) {
            prev = p;
            p = mul(p, a);
        }
        inv[a] = a == 0 ? 0 : prev;
    }
    std::vector<std::size_t> gidx;
    for (const Mat& g : gens_) gidx.push_back(static_cast<std::size_t>(index_of(g)));
    std::set<std::size_t> comm{0};
    std::deque<std::size_t> todo;
    auto add = [&](std::size_t x) {
        if (comm.insert(x).second) todo.push_back(x);
    };
    for (std::size_t a : gidx)
        for (std::size_t b : gidx) add(mul(mul(a, b), mul(inv[a], inv[b])));
    while (!todo.empty()) {
        std::size_t x = todo.front();
        todo.pop_front();
        std::vector<std::size_t> cur(comm.begin(), comm.end());
        for (std::size_t y : cur) add(mul(x, y));
        for (std::size_t g : gidx) add(mul(mul(g, x), inv[g]));
    }
    commutator_order_ = comm.size();
    // abelianization by Smith normal form of the relation lattice
    if (k > 0) {
        SmithForm sf = smith_normal_form(relations_, k);
        Int order = 1;
        for (std::size_t t = 0; t < k; ++t) {
            Int d = t < sf.diagonal.size() ? sf.diagonal[t] : Int(0);
            if (d == 0) throw ComputationError("abelianization is infinite; the group is not finite");
            order *= d;
            if (d == 1) continue;
            inv_factors_.push_back(d);
            QZVec chi(k);
            for (std::size_t j = 0; j < k; ++j) chi[j] = qz(Rat(sf.Q[j][t], d));
            char_gens_.push_back(std::move(chi));
            char_orders_.push_back(d);
        }
        if (order * Int(static_cast<unsigned long>(commutator_order_)) != Int(static_cast<unsigned long>(elems_.size())))
            throw ComputationError("abelianization order does not match |G|/|[G,G]|");
    }
}

long FiniteMatrixGroup::index_of(const Mat& m) const {
    auto it = index_.find(key(m));
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

bool FiniteMatrixGroup::all_diagonal() const {
    for (const Mat& g : gens_)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j && !g[i][j].is_zero()) return false;
    return true;
}

std::vector<QZVec> FiniteMatrixGroup::characters(std::size_t cap) const {
    const std::size_t k = gens_.size();
    std::vector<QZVec> out{QZVec(k, Rat(0))};
    for (std::size_t t = 0; t < char_gens_.size(); ++t) {
        std::vector<QZVec> next;
        long d = char_orders_[t].get_si();
        for (const QZVec& c : out)
            for (long m = 0; m < d; ++m) {
                QZVec v(k);
                for (std::size_t j = 0; j < k; ++j) v[j] = qz(c[j] + Rat(m) * char_gens_[t][j]);
                next.push_back(std::move(v));
                if (next.size() > cap) throw ComputationError("character group exceeds the cap");
            }
        out = std::move(next);
    }
    return out;
}

bool FiniteMatrixGroup::is_character(const QZVec& values) const {
    if (values.size() != gens_.size()) return false;
    for (const auto& rel : relations_) {
        Rat s = 0;
        for (std::size_t j = 0; j < rel.size(); ++j) s += Rat(rel[j]) * values[j];
        if (qz(s) != 0) return false;
    }
    return true;
}

Rat FiniteMatrixGroup::character_value(const QZVec& chi, std::size_t i) const {
    Rat s = 0;
    for (std::size_t j = 0; j < chi.size(); ++j) s += Rat(expvec_[i][j]) * chi[j];
    return qz(s);
}

// ---------------------------------------------------------------------------
// Characters of the torus

namespace {

long long checked_power(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1LL << 62) / base) throw ComputationError("dimension overflows 64-bit integers");
        r *= base;
    }
    return r;
}

void enumerate_all(int n, int ell, const std::function<void(const CharVec&)>& visit) {
    long long total = checked_power(ell, n);
    if (total > 2000000) throw ComputationError("character group too large to enumerate");
    CharVec c(n, 0);
    for (long long t = 0; t < total; ++t) {
        visit(c);
        for (int i = n - 1; i >= 0; --i) {
            if (++c[i] < ell) break;
            c[i] = 0;
        }
    }
}

/// Elements of the span with a coefficient vector for each.
std::map<CharVec, std::vector<int>> span_with_coeffs(const std::vector<CharVec>& gens, int n, int ell) {
    std::map<CharVec, std::vector<int>> seen;
    std::deque<CharVec> todo;
    CharVec zero(n, 0);
    seen.emplace(zero, std::vector<int>(gens.size(), 0));
    todo.push_back(zero);
    while (!todo.empty()) {
        CharVec c = todo.front();
        todo.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            CharVec d(n);
            for (int i = 0; i < n; ++i) d[i] = (c[i] + gens[k][i]) % ell;
            if (seen.count(d)) continue;
            std::vector<int> co = seen[c];
            ++co[k];
            seen.emplace(d, co);
            todo.push_back(d);
        }
    }
    return seen;
}

}  // namespace

std::vector<CharVec> kernel_mod(const std::vector<std::vector<int>>& forms, int n, int ell) {
    std::vector<CharVec> out;
    enumerate_all(n, ell, [&](const CharVec& c) {
        for (const auto& f : forms) {
            long s = 0;
            for (int i = 0; i < n; ++i) s += static_cast<long>(f[i]) * c[i];
            if (((s % ell) + ell) % ell) return;
        }
        out.push_back(c);
    });
    return out;
}

std::vector<CharVec> span_mod(const std::vector<CharVec>& gens, int n, int ell) {
    std::vector<CharVec> out;
    for (const auto& [c, co] : span_with_coeffs(gens, n, ell)) out.push_back(c);
    return out;
}

// ---------------------------------------------------------------------------
// Data

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Rat parse_qz(const json& v) {
    if (v.is_number_integer()) return qz(Rat(v.get<long>()));
    if (v.is_string()) {
        Rat r(v.get<std::string>());
        r.canonicalize();
        return qz(r);
    }
    throw ValidationError("character value must be an integer or a string 'a/b': " + v.dump());
}

std::string qz_string(const Rat& r) { return r.get_str(); }

std::string charvec_string(const CharVec& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

}  // namespace

SubgroupDatum datum_from_json(const json& j) {
    SubgroupDatum d;
    try {
        d.name = j.value("name", "");
        d.n = j.at("n").get<int>();
        d.spec = ParameterSpec::root(j.at("ell").get<int>(), j.at("na").get<int>(), j.at("nb").get<int>());
        d.spec.validate();
        if (d.n < 1) throw ValidationError("n must be >= 1");
        d.iplus = sorted_unique(j.value("Iplus", std::vector<int>{}));
        d.iminus = sorted_unique(j.value("Iminus", std::vector<int>{}));
        const int ell = d.spec.ell;
        for (const auto& c : j.value("N", json::array())) {
            CharVec v = c.get<CharVec>();
            if (static_cast<int>(v.size()) != d.n) throw ValidationError("character " + c.dump() + " has the wrong length");
            for (int& x : v) x = ((x % ell) + ell) % ell;
            d.N.push_back(std::move(v));
        }
        Field f(d.spec);
        std::vector<Mat> gens;
        for (const auto& m : j.value("Gamma", json::array())) {
            Mat g;
            for (const auto& row : m) {
                std::vector<Scalar> r;
                for (const auto& e : row)
                    r.push_back(e.is_string() ? parse_scalar(e.get<std::string>(), f) : f.integer(e.get<long>()));
                g.push_back(std::move(r));
            }
            gens.push_back(std::move(g));
        }
        d.gamma = std::make_shared<FiniteMatrixGroup>(d.n, f, std::move(gens));
        for (const auto& row : j.value("delta", json::array())) {
            QZVec v;
            for (const auto& e : row) v.push_back(parse_qz(e));
            d.delta.push_back(std::move(v));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed datum JSON: ") + e.what());
    }
    return d;
}

json datum_to_json(const SubgroupDatum& d) {
    json j;
    if (!d.name.empty()) j["name"] = d.name;
    j["n"] = d.n;
    j["ell"] = d.spec.ell;
    j["na"] = d.spec.na;
    j["nb"] = d.spec.nb;
    j["Iplus"] = d.iplus;
    j["Iminus"] = d.iminus;
    j["N"] = d.N;
    json gam = json::array();
    for (const Mat& g : d.gamma->generators()) {
        json m = json::array();
        for (const auto& r : g) {
            json row = json::array();
            for (const auto& e : r) row.push_back(e.to_string());
            m.push_back(row);
        }
        gam.push_back(m);
    }
    j["Gamma"] = gam;
    json del = json::array();
    for (const auto& v : d.delta) {
        json row = json::array();
        for (const Rat& r : v) row.push_back(qz_string(r));
        del.push_back(row);
    }
    j["delta"] = del;
    return j;
}

std::vector<SubgroupDatum> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open corpus file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("corpus file " + path + " is not valid JSON: " + e.what());
    }
    std::vector<SubgroupDatum> out;
    for (const auto& d : j.at("data")) out.push_back(datum_from_json(d));
    return out;
}

Predicates datum_predicates(const SubgroupDatum& d) {
    Predicates p;
    std::vector<int> both;
    std::set_intersection(d.iplus.begin(), d.iplus.end(), d.iminus.begin(), d.iminus.end(), std::back_inserter(both));
    p.semisimple = d.iplus.empty() && d.iminus.empty();
    p.pointed_possible = both.empty();
    p.dual_pointed_possible = d.gamma->all_diagonal();
    p.pulenta = !both.empty() && !d.gamma->all_diagonal();
    bool interval = !d.iplus.empty();
    for (std::size_t i = 1; i < d.iplus.size(); ++i) interval = interval && d.iplus[i] == d.iplus[i - 1] + 1;
    p.pulenta_strong = p.pulenta && d.iplus == d.iminus && interval;
    return p;
}

DatumReport datum_validate(const SubgroupDatum& d) {
    DatumReport rep;
    const int n = d.n, ell = d.spec.ell;
    auto err = [&](const std::string& s) {
        rep.valid = false;
        rep.errors.push_back(s);
    };
    for (const auto* set : {&d.iplus, &d.iminus})
        for (int k : *set)
            if (k < 1 || k >= n) err("index " + std::to_string(k) + " of I_+/I_- outside {1, ..., n-1}");
    const int na = d.spec.na, nb = d.spec.nb;
    // Sigma-compatibility on the generators of N
    for (const CharVec& c : d.N) {
        for (int i : d.iplus)
            if (i >= 1 && i < n && (na * c[i - 1] + nb * c[i]) % ell != 0)
                err("character " + charvec_string(c) + " does not kill w_" + std::to_string(i) + ": n_al c_" +
                    std::to_string(i) + " + n_be c_" + std::to_string(i + 1) + " = " +
                    std::to_string((na * c[i - 1] + nb * c[i]) % ell) + " mod " + std::to_string(ell));
        for (int j : d.iminus)
            if (j >= 1 && j < n && (nb * c[j - 1] + na * c[j]) % ell != 0)
                err("character " + charvec_string(c) + " does not kill w'_" + std::to_string(j) + ": n_be c_" +
                    std::to_string(j) + " + n_al c_" + std::to_string(j + 1) + " = " +
                    std::to_string((nb * c[j - 1] + na * c[j]) % ell) + " mod " + std::to_string(ell));
    }
    rep.inv.positions = position_sets(n, d.iplus, d.iminus);
    // zero pattern of Gamma
    for (std::size_t g = 0; g < d.gamma->generators().size(); ++g) {
        const Mat& m = d.gamma->generators()[g];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rep.inv.positions.forced_zero[i][j] && !m[i][j].is_zero())
                    err("Gamma generator " + std::to_string(g + 1) + " has nonzero entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") = " + m[i][j].to_string() + " in a forced-zero position");
    }
    // delta
    const std::size_t kg = d.gamma->generators().size();
    std::vector<QZVec> delta = d.delta;
    if (delta.empty()) delta.assign(d.N.size(), QZVec(kg, Rat(0)));
    if (delta.size() != d.N.size()) {
        err("delta has " + std::to_string(delta.size()) + " rows but N has " + std::to_string(d.N.size()) + " generators");
    } else {
        bool shapes = true;
        for (std::size_t k = 0; k < delta.size(); ++k) {
            if (delta[k].size() != kg) {
                err("delta row " + std::to_string(k + 1) + " must list one value per Gamma generator");
                shapes = false;
            } else if (!d.gamma->is_character(delta[k])) {
                err("delta row " + std::to_string(k + 1) + " is not a character of Gamma");
                shapes = false;
            }
        }
        if (shapes) {
            auto coeffs = span_with_coeffs(d.N, n, ell);
            for (const auto& [c, co] : coeffs)
                for (std::size_t k = 0; k < d.N.size(); ++k) {
                    CharVec e(n);
                    for (int i = 0; i < n; ++i) e[i] = (c[i] + d.N[k][i]) % ell;
                    const auto& co2 = coeffs.at(e);
                    for (std::size_t g = 0; g < kg; ++g) {
                        Rat s = 0;
                        for (std::size_t m = 0; m < d.N.size(); ++m) {
                            long u = co[m] + (m == k ? 1 : 0) - co2[m];
                            s += Rat(u) * delta[m][g];
                        }
                        if (qz(s) != 0) {
                            err("delta does not extend to a homomorphism N -> Gamma^: relation through " +
                                charvec_string(c) + " + N_" + std::to_string(k + 1) + " maps to a nontrivial character");
                            goto delta_done;
                        }
                    }
                }
        }
    }
delta_done:
    // invariants
    std::vector<std::vector<int>> forms;
    for (int i : d.iplus)
        if (i >= 1 && i < n) {
            std::vector<int> f(n, 0);
            f[i - 1] = na;
            f[i] = nb;
            forms.push_back(f);
        }
    for (int j : d.iminus)
        if (j >= 1 && j < n) {
            std::vector<int> f(n, 0);
            f[j - 1] = nb;
            f[j] = na;
            forms.push_back(f);
        }
    rep.inv.M_I = kernel_mod(forms, n, ell);
    rep.inv.N_elems = span_mod(d.N, n, ell);
    rep.inv.Sigma = kernel_mod(d.N, n, ell);
    rep.inv.gamma_order = d.gamma->order();
    std::set<std::pair<int, int>> uni(rep.inv.positions.plus.begin(), rep.inv.positions.plus.end());
    uni.insert(rep.inv.positions.minus.begin(), rep.inv.positions.minus.end());
    const long long gam = static_cast<long long>(rep.inv.gamma_order);
    const long long nsize = static_cast<long long>(rep.inv.N_elems.size());
    rep.inv.dim_uhatl = checked_power(ell, n * n - static_cast<int>(uni.size()));
    rep.inv.dim_H = checked_power(ell, static_cast<int>(d.iplus.size() + d.iminus.size()) + n) / nsize;
    rep.inv.dim_H_pbw = rep.inv.dim_uhatl / nsize;
    rep.inv.dim_Alsigma = gam * rep.inv.dim_uhatl;
    rep.inv.dim_AD = gam * rep.inv.dim_H;
    rep.inv.predicates = datum_predicates(d);
    return rep;
}

DatumInvariants datum_dims(const SubgroupDatum& d) {
    DatumReport rep = datum_validate(d);
    if (!rep.valid) {
        std::string msg = "invalid datum";
        if (!d.name.empty()) msg += " '" + d.name + "'";
        for (const auto& e : rep.errors) msg += "\n  " + e;
        throw ValidationError(msg);
    }
    return rep.inv;
}

std::string datum_order_name(DatumOrder o) {
    switch (o) {
        case DatumOrder::incomparable: return "incomparable";
        case DatumOrder::le: return "d <= d'";
        case DatumOrder::ge: return "d' <= d";
        case DatumOrder::equivalent: return "equivalent";
    }
    return "?";
}

bool datum_le(const SubgroupDatum& d, const SubgroupDatum& d2, std::string* why) {
    if (d.n != d2.n || d.spec.describe() != d2.spec.describe())
        throw ValidationError("datum comparison needs the same n and parameters");
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    if (!subset(d2.iplus, d.iplus)) return fail("I'_+ is not contained in I_+");
    if (!subset(d2.iminus, d.iminus)) return fail("I'_- is not contained in I_-");
    const int n = d.n, ell = d.spec.ell;
    auto span2 = span_with_coeffs(d2.N, n, ell);
    for (const CharVec& c : d.N)
        if (!span2.count(c)) return fail("N is not contained in N' (" + charvec_string(c) + ")");
    const auto& G = *d.gamma;
    const auto& G2 = *d2.gamma;
    std::vector<std::size_t> image;  // tau on the generators of Gamma'
    for (const Mat& g : G2.generators()) {
        long idx = G.index_of(g);
        if (idx < 0) return fail("sigma'(Gamma') is not contained in sigma(Gamma)");
        image.push_back(static_cast<std::size_t>(idx));
    }
    const std::size_t kg = G.generators().size(), kg2 = G2.generators().size();
    auto delta_row = [](const SubgroupDatum& x, std::size_t k, std::size_t kgx) {
        return x.delta.empty() ? QZVec(kgx, Rat(0)) : x.delta[k];
    };
    for (std::size_t k = 0; k < d.N.size(); ++k) {
        const auto& co = span2.at(d.N[k]);
        QZVec lhs(kg2, Rat(0));  // delta'(eta(c)) on Gamma' generators
        for (std::size_t m = 0; m < d2.N.size(); ++m) {
            QZVec row = delta_row(d2, m, kg2);
            for (std::size_t g = 0; g < kg2; ++g) lhs[g] += Rat(co[m]) * row[g];
        }
        QZVec chi = delta_row(d, k, kg);
        for (std::size_t g = 0; g < kg2; ++g)
            if (qz(lhs[g]) != G.character_value(chi, image[g]))
                return fail("delta' eta differs from the transpose of tau composed with delta on N_" + std::to_string(k + 1));
    }
    return true;
}

DatumOrder datum_compare(const SubgroupDatum& d, const SubgroupDatum& d2) {
    datum_dims(d);
    datum_dims(d2);
    bool a = datum_le(d, d2), b = datum_le(d2, d);
    if (a && b) return DatumOrder::equivalent;
    if (a) return DatumOrder::le;
    if (b) return DatumOrder::ge;
    return DatumOrder::incomparable;
}

}  // namespace qgl
