#include "qgl/oab.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "qgl/linalg.hpp"

namespace qgl {

std::string ovariant_name(OVariant v) {
    switch (v) {
        case OVariant::Mn: return "Mn";
        case OVariant::GLn: return "GLn";
        case OVariant::Bplus: return "Bplus";
        case OVariant::Bminus: return "Bminus";
        case OVariant::Hbar: return "Hbar";
        case OVariant::Kplus: return "Kplus";
        case OVariant::Kminus: return "Kminus";
    }
    return "?";
}

OVariant parse_ovariant(const std::string& s) {
    for (OVariant v : {OVariant::Mn, OVariant::GLn, OVariant::Bplus, OVariant::Bminus, OVariant::Hbar,
                       OVariant::Kplus, OVariant::Kminus})
        if (ovariant_name(v) == s) return v;
    throw ValidationError("unknown coordinate-algebra variant '" + s + "'");
}

namespace {

bool is_borel(OVariant v) {
    return v == OVariant::Bplus || v == OVariant::Bminus || v == OVariant::Kplus || v == OVariant::Kminus;
}

bool is_upper_variant(OVariant v) { return v == OVariant::Bplus || v == OVariant::Kplus; }

bool needs_root(OVariant v) { return v == OVariant::Hbar || v == OVariant::Kplus || v == OVariant::Kminus; }

int inversions(const std::vector<int>& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++c;
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

OSession::OSession(OVariant v, int n, const ParameterSpec& spec)
    : variant_(v), n_(n), field_(spec), al_(field_.alpha()), be_(field_.beta()) {
    build();
}

OSession::OSession(OVariant v, int n, const Field& field, const Scalar& al, const Scalar& be)
    : variant_(v), n_(n), field_(field), al_(al), be_(be) {
    if (v != OVariant::Mn && v != OVariant::GLn)
        throw ValidationError("explicit parameters are only supported for Mn/GLn");
    build();
}

void OSession::build_matrix_rules(RewriteSystem& sys, const std::vector<std::vector<int>>& id,
                                  bool borel) const {
    // Rules for a pair of positions A < B (row-major): the word B A.
    auto letter = [&](int i, int j) { return id[i][j]; };
    for (int a1 = 0; a1 < n_; ++a1)
        for (int a2 = 0; a2 < n_; ++a2)
            for (int b1 = a1; b1 < n_; ++b1)
                for (int b2 = 0; b2 < n_; ++b2) {
                    if (b1 == a1 && b2 <= a2) continue;
                    int A = letter(a1, a2), B = letter(b1, b2);
                    if (A < 0 || B < 0) continue;
                    Word lhs{static_cast<Letter>(B), static_cast<Letter>(A)};
                    Word ab{static_cast<Letter>(A), static_cast<Letter>(B)};
                    NCPoly rhs;
                    if (a1 == b1) {
                        rhs = NCPoly::term(ab, al_.inverse());
                    } else if (a2 == b2) {
                        rhs = NCPoly::term(ab, be_);
                    } else if (a2 < b2) {
                        rhs = NCPoly::term(ab, field_.one());
                        int il = letter(a1, b2), jk = letter(b1, a2);
                        if (il >= 0 && jk >= 0)
                            rhs.add_term({static_cast<Letter>(il), static_cast<Letter>(jk)}, be_ - al_);
                    } else {
                        rhs = NCPoly::term(ab, be_ * al_);
                    }
                    if (borel) {
                        // Both letters present; the quotient relation may still
                        // reorient once letter ids are permuted.
                        sys.add_relation(NCPoly::term(lhs, field_.one()) - rhs);
                    } else {
                        sys.add_rule(lhs, rhs);
                    }
                }
}

void OSession::build() {
    if (n_ < 1) throw ValidationError("n must be >= 1");
    if (n_ > 6) throw ValidationError("n must be <= 6");
    if (needs_root(variant_) && !field_.is_root())
        throw ValidationError(ovariant_name(variant_) + " requires root-of-unity mode");
    auto alpha = std::make_shared<Alphabet>();
    xid_.assign(n_, std::vector<int>(n_, -1));
    invid_.assign(n_, -1);
    const bool borel = is_borel(variant_);
    const bool upper = is_upper_variant(variant_);
    const bool inverses = variant_ == OVariant::Bplus || variant_ == OVariant::Bminus;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (borel && (upper ? i > j : i < j)) continue;
            xid_[i][j] = alpha->add("x[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
            pos_.push_back({i, j});
            if (inverses && i == j) {
                invid_[i] = alpha->add("xinv[" + std::to_string(i + 1) + "]");
                pos_.push_back({-1, -1});
            }
        }
    sys_ = RewriteSystem(alpha, field_);
    build_matrix_rules(sys_, xid_, borel);
    if (inverses) {
        // Diagonal letters q-commute with everything present; the scalar of
        // each commutation is read off the rule just built.
        std::vector<Rule> base = sys_.rules();
        for (const Rule& r : base) {
            if (r.rhs.size() != 1) continue;
            const auto& [w, c] = *r.rhs.terms().begin();
            Letter u = r.lhs[0], v = r.lhs[1];
            if (w != Word{v, u}) continue;
            auto inv_of = [&](Letter l) -> int {
                auto [i, j] = pos_[l];
                return (i >= 0 && i == j) ? invid_[i] : -1;
            };
            int ui = inv_of(u), vi = inv_of(v);
            Scalar ci = c.inverse();
            if (ui >= 0) sys_.add_rule({static_cast<Letter>(ui), v}, NCPoly::term({v, static_cast<Letter>(ui)}, ci));
            if (vi >= 0) sys_.add_rule({u, static_cast<Letter>(vi)}, NCPoly::term({static_cast<Letter>(vi), u}, ci));
            if (ui >= 0 && vi >= 0)
                sys_.add_rule({static_cast<Letter>(ui), static_cast<Letter>(vi)},
                              NCPoly::term({static_cast<Letter>(vi), static_cast<Letter>(ui)}, c));
        }
        for (int i = 0; i < n_; ++i) {
            Letter d = static_cast<Letter>(xid_[i][i]), e = static_cast<Letter>(invid_[i]);
            sys_.add_rule({d, e}, NCPoly::constant(field_.one()));
            sys_.add_rule({e, d}, NCPoly::constant(field_.one()));
        }
    }
    if (needs_root(variant_)) {
        const int l = field_.ell();
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (xid_[i][j] < 0) continue;
                Word w(l, static_cast<Letter>(xid_[i][j]));
                sys_.add_rule(w, i == j ? NCPoly::constant(field_.one()) : NCPoly());
            }
    }
    // g and its inverse in this presentation
    std::vector<int> all(n_);
    std::iota(all.begin(), all.end(), 0);
    g_ = qdet(all, all);
    if (variant_ == OVariant::Hbar || variant_ == OVariant::Kplus || variant_ == OVariant::Kminus) {
        NCPoly p = NCPoly::constant(field_.one());
        for (int k = 0; k + 1 < field_.ell(); ++k) p = reduce(p * g_);
        ginv_ = p;
    } else if (inverses) {
        NCPoly p = NCPoly::constant(field_.one());
        for (int i = n_ - 1; i >= 0; --i) p = p * NCPoly::term({static_cast<Letter>(invid_[i])}, field_.one());
        ginv_ = reduce(p);
    }
    if (variant_ != OVariant::GLn && variant_ != OVariant::Mn) {
        ParameterSpec spec = field_.spec();
        gl_ = o_session(OVariant::GLn, n_, spec);
    }
}

const OSession& OSession::gl_session() const {
    if (variant_ == OVariant::GLn) return *this;
    if (!gl_) throw ComputationError("no GLn session attached to " + ovariant_name(variant_));
    return *gl_;
}

bool OSession::has_x(int i, int j) const {
    return i >= 1 && j >= 1 && i <= n_ && j <= n_ && xid_[i - 1][j - 1] >= 0;
}

Letter OSession::x(int i, int j) const {
    if (!has_x(i, j))
        throw ValidationError("generator x[" + std::to_string(i) + "," + std::to_string(j) + "] is not in " +
                              ovariant_name(variant_));
    return static_cast<Letter>(xid_[i - 1][j - 1]);
}

bool OSession::has_inverse(int i) const { return i >= 1 && i <= n_ && invid_[i - 1] >= 0; }

Letter OSession::xinv(int i) const {
    if (!has_inverse(i)) throw ValidationError("no inverse letter for x[" + std::to_string(i) + "," +
                                               std::to_string(i) + "]");
    return static_cast<Letter>(invid_[i - 1]);
}

// ---------------------------------------------------------------------------
// Elements

GLElement OSession::one() const { return {0, NCPoly::constant(field_.one())}; }

GLElement OSession::scalar(const Scalar& c) const { return {0, NCPoly::constant(c)}; }

GLElement OSession::gen(int i, int j) const {
    if (!has_x(i, j)) return {};
    return {0, NCPoly::term({x(i, j)}, field_.one())};
}

GLElement OSession::ginv() const { return element(NCPoly::constant(field_.one()), 1); }

GLElement OSession::g() const { return {0, g_}; }

GLElement OSession::element(const NCPoly& p, int t) const {
    if (t < 0) throw ValidationError("negative power of g^-1");
    if (variant_ == OVariant::GLn) return {t, reduce(p)};
    if (t == 0) return {0, reduce(p)};
    if (variant_ == OVariant::Mn) throw ComputationError("g^-1 is not available in Mn");
    NCPoly q = p;
    for (int k = 0; k < t; ++k) q = ginv_ * q;
    return {0, reduce(q)};
}

GLElement OSession::word_element(const Word& w) const { return element(NCPoly::term(w, field_.one())); }

GLElement OSession::word_element_t(const Leg& l) const {
    if (variant_ == OVariant::GLn) return {l.t, NCPoly::term(l.w, field_.one())};
    return element(NCPoly::term(l.w, field_.one()), l.t);
}

GLElement OSession::mul(const GLElement& x, const GLElement& y) const {
    if (x.p.is_zero() || y.p.is_zero()) return {};
    if (variant_ != OVariant::GLn || y.t == 0) return {x.t + y.t, reduce(x.p * y.p)};
    // p g^{-t} = g^{-t} theta^t(p), theta(x_ij) = (be al)^{j-i} x_ij
    NCPoly tp;
    const Scalar ba = be_ * al_;
    for (const auto& [w, c] : x.p.terms()) {
        int d = 0;
        for (Letter l : w) d += pos_[l].second - pos_[l].first;
        tp.add_term(w, c * ba.pow(static_cast<long>(d) * y.t));
    }
    return {x.t + y.t, reduce(tp * y.p)};
}

namespace {

NCPoly g_power_times(const OSession& s, int k, const NCPoly& p) {
    NCPoly r = p;
    NCPoly g = s.g().p;
    for (int i = 0; i < k; ++i) r = s.reduce(g * r);
    return r;
}

}  // namespace

GLElement OSession::add(const GLElement& x, const GLElement& y) const {
    if (x.p.is_zero()) return y;
    if (y.p.is_zero()) return x;
    int m = std::max(x.t, y.t);
    return {m, g_power_times(*this, m - x.t, x.p) + g_power_times(*this, m - y.t, y.p)};
}

GLElement OSession::sub(const GLElement& x, const GLElement& y) const { return add(x, scaled(y, field_.integer(-1))); }

GLElement OSession::scaled(const GLElement& x, const Scalar& c) const { return {x.t, x.p.scaled(c)}; }

GLElement OSession::pow(const GLElement& x, int k) const {
    if (k < 0) throw ValidationError("negative exponent on a non-invertible element");
    GLElement r = one();
    for (int i = 0; i < k; ++i) r = mul(r, x);
    return r;
}

bool OSession::equal(const GLElement& x, const GLElement& y) const {
    int m = std::max(x.t, y.t);
    return g_power_times(*this, m - x.t, x.p) == g_power_times(*this, m - y.t, y.p);
}

std::optional<NCPoly> OSession::left_divide_by_g(const NCPoly& p) const {
    const Alphabet& a = alphabet();
    auto lead = [&](const NCPoly& q) {
        const Word* best = nullptr;
        for (const auto& [w, c] : q.terms())
            if (!best || a.compare(w, *best) > 0) best = &w;
        return *best;
    };
    Word lg = lead(g_);
    NCPoly rem = p, quot;
    while (!rem.is_zero()) {
        Word w = lead(rem);
        std::vector<int> cnt(a.size(), 0);
        for (Letter l : w) ++cnt[l];
        for (Letter l : lg)
            if (--cnt[l] < 0) return std::nullopt;
        Word v;
        for (int l = 0; l < a.size(); ++l) v.insert(v.end(), cnt[l], static_cast<Letter>(l));
        NCPoly prod = reduce(g_ * NCPoly::term(v, field_.one()));
        if (prod.is_zero() || lead(prod) != w) return std::nullopt;
        Scalar c = *rem.coeff(w) / *prod.coeff(w);
        quot.add_term(v, c);
        rem -= prod.scaled(c);
    }
    return quot;
}

GLElement OSession::simplify(const GLElement& x) const {
    GLElement r = x;
    if (variant_ != OVariant::GLn) return r;
    if (r.p.is_zero()) return {};
    while (r.t > 0) {
        auto q = left_divide_by_g(r.p);
        if (!q) break;
        r.p = *q;
        --r.t;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Minors

NCPoly OSession::qdet(const std::vector<int>& rows, const std::vector<int>& cols) const {
    if (rows.size() != cols.size()) throw ValidationError("qdet: row and column sets differ in size");
    for (int r : rows)
        if (r < 0 || r >= n_) throw ValidationError("qdet: row index out of range");
    for (int c : cols)
        if (c < 0 || c >= n_) throw ValidationError("qdet: column index out of range");
    const std::size_t k = rows.size();
    if (k == 0) return NCPoly::constant(field_.one());
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    NCPoly sum;
    const Scalar mb = -be_;
    do {
        Word w;
        bool zero = false;
        for (std::size_t t = 0; t < k; ++t) {
            int id = xid_[rows[sigma[t]]][cols[t]];
            if (id < 0) {
                zero = true;
                break;
            }
            w.push_back(static_cast<Letter>(id));
        }
        if (!zero) sum.add_term(w, mb.pow(-inversions(sigma)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return reduce(sum);
}

NCPoly OSession::qdet_column(const std::vector<int>& rows, const std::vector<int>& cols) const {
    if (rows.size() != cols.size()) throw ValidationError("qdet: row and column sets differ in size");
    const std::size_t k = rows.size();
    if (k == 0) return NCPoly::constant(field_.one());
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    NCPoly sum;
    const Scalar ma = -al_.inverse();
    do {
        Word w;
        bool zero = false;
        for (std::size_t t = 0; t < k; ++t) {
            int id = xid_[rows[t]][cols[sigma[t]]];
            if (id < 0) {
                zero = true;
                break;
            }
            w.push_back(static_cast<Letter>(id));
        }
        if (!zero) sum.add_term(w, ma.pow(-inversions(sigma)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return reduce(sum);
}

// ---------------------------------------------------------------------------
// Hopf structure

Tensor OSession::as_tensor(const GLElement& x) const {
    Tensor t;
    for (const auto& [w, c] : x.p.terms()) t.add_term({Leg{x.t, w}}, c);
    return t;
}

Tensor OSession::tensor_mul(const Tensor& x, const Tensor& y) const {
    Tensor out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            if (kx.size() != ky.size()) throw ComputationError("tensor arity mismatch");
            std::vector<GLElement> legs;
            bool zero = false;
            for (std::size_t i = 0; i < kx.size(); ++i) {
                legs.push_back(mul(word_element_t(kx[i]), word_element_t(ky[i])));
                if (legs.back().p.is_zero()) {
                    zero = true;
                    break;
                }
            }
            if (zero) continue;
            // expand the product of leg sums
            std::vector<std::pair<TensorKey, Scalar>> acc{{TensorKey{}, cx * cy}};
            for (const auto& leg : legs) {
                std::vector<std::pair<TensorKey, Scalar>> next;
                for (const auto& [k, c] : acc)
                    for (const auto& [w, d] : leg.p.terms()) {
                        TensorKey nk = k;
                        nk.push_back(Leg{leg.t, w});
                        next.push_back({std::move(nk), c * d});
                    }
                acc = std::move(next);
            }
            for (const auto& [k, c] : acc) out.add_term(k, c);
        }
    return out;
}

Tensor OSession::coproduct_word(const Word& w) const {
    Tensor t;
    t.add_term({Leg{}, Leg{}}, field_.one());
    for (Letter l : w) {
        Tensor d;
        auto [i, j] = pos_[l];
        if (i < 0) {
            d.add_term({Leg{0, {l}}, Leg{0, {l}}}, field_.one());
        } else {
            for (int s = 0; s < n_; ++s) {
                int a = xid_[i][s], b = xid_[s][j];
                if (a < 0 || b < 0) continue;
                d.add_term({Leg{0, {static_cast<Letter>(a)}}, Leg{0, {static_cast<Letter>(b)}}}, field_.one());
            }
        }
        t = tensor_mul(t, d);
    }
    return t;
}

Tensor OSession::coproduct(const GLElement& x) const {
    Tensor t;
    for (const auto& [w, c] : x.p.terms()) t += coproduct_word(w).scaled(c);
    if (x.t == 0) return t;
    Tensor gt;
    gt.add_term({Leg{x.t, {}}, Leg{x.t, {}}}, field_.one());
    return tensor_mul(gt, t);
}

Scalar OSession::counit(const GLElement& x) const {
    Scalar s = field_.zero();
    for (const auto& [w, c] : x.p.terms()) {
        bool ok = true;
        for (Letter l : w) {
            auto [i, j] = pos_[l];
            if (i >= 0 && i != j) {
                ok = false;
                break;
            }
        }
        if (ok) s += c;
    }
    return s;
}

GLElement OSession::antipode_letter(Letter l) const {
    auto [i, j] = pos_[l];
    if (i < 0) {
        // inverse of a diagonal letter in a Borel quotient
        for (int k = 0; k < n_; ++k)
            if (invid_[k] == l) return gen(k + 1, k + 1);
        throw ComputationError("unknown letter");
    }
    if (variant_ == OVariant::GLn) {
        std::vector<int> rows, cols;
        for (int r = 0; r < n_; ++r)
            if (r != j) rows.push_back(r);
        for (int c = 0; c < n_; ++c)
            if (c != i) cols.push_back(c);
        NCPoly minor = qdet(rows, cols);
        return {1, minor.scaled((-be_).pow(j - i))};
    }
    const OSession& gl = gl_session();
    return project_from_gl(gl.antipode_letter(gl.x(i + 1, j + 1)));
}

GLElement OSession::antipode(const GLElement& x) const {
    if (variant_ == OVariant::Mn) throw ComputationError("Mn has no antipode");
    GLElement total;
    for (const auto& [w, c] : x.p.terms()) {
        GLElement r = scalar(c);
        for (auto it = w.rbegin(); it != w.rend(); ++it) r = mul(r, antipode_letter(*it));
        total = add(total, r);
    }
    if (x.t > 0) total = mul(total, {0, g_power_times(*this, x.t, NCPoly::constant(field_.one()))});
    return simplify(total);
}

Tensor OSession::apply_coproduct(const Tensor& x, std::size_t k) const {
    Tensor out;
    for (const auto& [key, c] : x.terms()) {
        Tensor d = coproduct(word_element_t(key[k]));
        for (const auto& [dk, dc] : d.terms()) {
            TensorKey nk(key.begin(), key.begin() + static_cast<long>(k));
            nk.insert(nk.end(), dk.begin(), dk.end());
            nk.insert(nk.end(), key.begin() + static_cast<long>(k + 1), key.end());
            out.add_term(nk, c * dc);
        }
    }
    return out;
}

Tensor OSession::apply_counit(const Tensor& x, std::size_t k) const {
    Tensor out;
    for (const auto& [key, c] : x.terms()) {
        Scalar e = counit(word_element_t(key[k]));
        if (e.is_zero()) continue;
        TensorKey nk = key;
        nk.erase(nk.begin() + static_cast<long>(k));
        out.add_term(nk, c * e);
    }
    return out;
}

GLElement OSession::multiply_legs(const Tensor& x, int s) const {
    GLElement total;
    for (const auto& [key, c] : x.terms()) {
        GLElement r = scalar(c);
        for (std::size_t i = 0; i < key.size(); ++i) {
            GLElement leg = word_element_t(key[i]);
            if (static_cast<int>(i) == s) leg = antipode(leg);
            r = mul(r, leg);
        }
        total = add(total, r);
    }
    return total;
}

std::string OSession::to_string(const GLElement& x) const {
    std::string body = x.p.to_string(alphabet());
    if (x.t == 0) return body;
    std::string g = x.t == 1 ? "gi" : "gi^" + std::to_string(x.t);
    if (x.p.size() == 1 && x.p.terms().begin()->first.empty() && body == "1") return g;
    return g + " (" + body + ")";
}

std::string OSession::tensor_to_string(const Tensor& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : x.terms()) {
        os << (first ? "" : " + ");
        first = false;
        std::string cs = c.to_string();
        if (cs != "1") os << "(" << cs << ") ";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) os << " (x) ";
            os << to_string({key[i].t, NCPoly::term(key[i].w, field_.one())});
        }
    }
    return os.str();
}

std::vector<Word> OSession::basis_words(int max_len) const {
    std::vector<Word> out;
    sys_.enumerate_irreducible(max_len, [&](const Word& w) { out.push_back(w); });
    return out;
}

GLElement OSession::project_from_gl(const GLElement& x) const {
    if (variant_ == OVariant::GLn) return x;
    const OSession& gl = gl_session();
    NCPoly p;
    for (const auto& [w, c] : x.p.terms()) {
        Word v;
        bool zero = false;
        for (Letter l : w) {
            auto [i, j] = gl.position(l);
            int id = xid_[i][j];
            if (id < 0) {
                zero = true;
                break;
            }
            v.push_back(static_cast<Letter>(id));
        }
        if (!zero) p.add_term(v, c);
    }
    return element(p, x.t);
}

std::shared_ptr<const OSession> o_session(OVariant v, int n, const ParameterSpec& spec) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const OSession>> cache;
    std::string key = ovariant_name(v) + "/" + std::to_string(n) + "/" + spec.describe();
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto s = std::make_shared<const OSession>(v, n, spec);
    std::lock_guard lock(mu);
    return cache.emplace(key, s).first->second;
}

// ---------------------------------------------------------------------------
// Checks

bool g_normality_check(const OSession& s) {
    NCPoly g = s.g().p;
    const Scalar ba = s.be() * s.al();
    for (int i = 1; i <= s.n(); ++i)
        for (int j = 1; j <= s.n(); ++j) {
            NCPoly x = s.gen(i, j).p;
            NCPoly lhs = s.reduce(x * g);
            NCPoly rhs = s.reduce(g * x).scaled(ba.pow(i - j));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

DeterminantReport determinant_check(const OSession& s) {
    DeterminantReport r;
    std::vector<int> all(s.n());
    std::iota(all.begin(), all.end(), 0);
    r.row = s.qdet(all, all);
    r.column = s.qdet_column(all, all);
    r.coherent = r.row == r.column;
    Tensor gg;
    for (const auto& [w, c] : r.row.terms())
        for (const auto& [v, d] : r.row.terms()) gg.add_term({Leg{0, w}, Leg{0, v}}, c * d);
    r.grouplike = s.coproduct({0, r.row}) == gg;
    r.normal = g_normality_check(s);
    return r;
}

std::vector<AxiomResult> hopf_axioms_O(const OSession& s) {
    std::vector<AxiomResult> out;
    std::vector<std::pair<std::string, GLElement>> gens;
    for (int l = 0; l < s.alphabet().size(); ++l)
        gens.push_back({s.alphabet().names[l], s.word_element({static_cast<Letter>(l)})});
    if (s.is_gl()) gens.push_back({"gi", s.ginv()});
    const bool has_s = s.variant() != OVariant::Mn;
    for (const auto& [name, x] : gens) {
        Tensor d = s.coproduct(x);
        Tensor l = s.apply_coproduct(d, 0), r = s.apply_coproduct(d, 1);
        out.push_back({"coassociativity " + name, l == r, l == r ? "" : s.tensor_to_string(l)});
        Tensor x1 = s.as_tensor(x);
        bool c1 = s.apply_counit(d, 0) == x1, c2 = s.apply_counit(d, 1) == x1;
        out.push_back({"counit " + name, c1 && c2, c1 && c2 ? "" : s.tensor_to_string(d)});
        if (!has_s) continue;
        GLElement e = s.scalar(s.counit(x));
        GLElement a = s.multiply_legs(d, 0), b = s.multiply_legs(d, 1);
        bool ok1 = s.equal(a, e), ok2 = s.equal(b, e);
        out.push_back({"antipode-left " + name, ok1, ok1 ? "" : s.to_string(a)});
        out.push_back({"antipode-right " + name, ok2, ok2 ? "" : s.to_string(b)});
    }
    return out;
}

std::vector<S2Entry> s2_spectrum(const OSession& s) {
    if (!s.is_gl()) throw ValidationError("s2 requires a GLn session");
    std::vector<S2Entry> out;
    const Scalar q = s.al().inverse() * s.be();
    const Scalar ab = s.al() * s.be();
    const Alphabet& a = s.alphabet();
    for (int i = 1; i <= s.n(); ++i)
        for (int j = 1; j <= s.n(); ++j) {
            GLElement x = s.gen(i, j);
            GLElement y = s.antipode(s.antipode(x));
            NCPoly z = g_power_times(s, y.t, x.p);
            const Word* lead = nullptr;
            for (const auto& [w, c] : z.terms())
                if (!lead || a.compare(w, *lead) > 0) lead = &w;
            const Scalar* cy = y.p.coeff(*lead);
            if (!cy) throw ComputationError("S^2 is not diagonal on x[" + std::to_string(i) + "," + std::to_string(j) + "]");
            Scalar c = *cy / *z.coeff(*lead);
            if (!(y.p == z.scaled(c)))
                throw ComputationError("S^2 is not diagonal on x[" + std::to_string(i) + "," + std::to_string(j) + "]");
            S2Entry e;
            e.i = i;
            e.j = j;
            e.eigenvalue = c;
            e.matches_qinv = c == q.pow(j - i);
            e.matches_ab = c == ab.pow(j - i);
            out.push_back(e);
        }
    return out;
}

GLElement frobenius_embed(const OSession& s, const std::vector<int>& exponents) {
    if (!s.field().is_root()) throw ValidationError("the quantum Frobenius map requires root-of-unity mode");
    const int n = s.n();
    if (static_cast<int>(exponents.size()) != n * n) throw ValidationError("expected n*n exponents");
    NCPoly p = NCPoly::constant(s.field().one());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int e = exponents[i * n + j];
            if (e < 0) throw ValidationError("negative exponent");
            if (e == 0) continue;
            if (!s.has_x(i + 1, j + 1)) return {};
            p = p * NCPoly::term(Word(static_cast<std::size_t>(e) * s.field().ell(), s.x(i + 1, j + 1)),
                                 s.field().one());
        }
    return s.element(p);
}

std::vector<std::string> frobenius_centrality(const OSession& s) {
    if (!s.field().is_root()) throw ValidationError("the quantum Frobenius map requires root-of-unity mode");
    std::vector<std::string> bad;
    const int n = s.n(), l = s.field().ell();
    std::vector<std::pair<std::string, GLElement>> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (s.has_x(i, j)) gens.push_back({s.alphabet().names[s.x(i, j)], s.gen(i, j)});
    if (s.is_gl()) gens.push_back({"gi", s.ginv()});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (!s.has_x(i, j)) continue;
            GLElement p = s.pow(s.gen(i, j), l);
            for (const auto& [name, y] : gens) {
                if (!s.equal(s.mul(p, y), s.mul(y, p)))
                    bad.push_back("[x[" + std::to_string(i) + "," + std::to_string(j) + "]^" + std::to_string(l) +
                                  ", " + name + "]");
            }
        }
    return bad;
}

NCPoly hbar_project(const OSession& hbar, const GLElement& x) {
    if (!hbar.field().is_root()) throw ValidationError("Hbar requires root-of-unity mode");
    return hbar.project_from_gl(x).p;
}

GLElement gamma_section(const OSession& gl, const OSession& hbar, const Word& w) {
    if (!hbar.field().is_root()) throw ValidationError("the section requires root-of-unity mode");
    if (hbar.system().is_reducible(w)) throw ValidationError("gamma is defined on basis words only");
    Word v;
    for (Letter l : w) {
        auto [i, j] = hbar.position(l);
        v.push_back(gl.x(i + 1, j + 1));
    }
    return {0, NCPoly::term(v, gl.field().one())};
}

GammaReport gamma_check(const OSession& gl, const OSession& hbar, std::size_t max_words) {
    GammaReport r;
    const int maxlen = hbar.n() * hbar.n() * (hbar.field().ell() - 1);
    auto lift_leg = [&](const Leg& l) { return Leg{0, gamma_section(gl, hbar, l.w).p.terms().begin()->first}; };
    std::vector<Word> words = hbar.basis_words(maxlen);
    std::stable_sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    if (max_words != 0 && words.size() > max_words) words.resize(max_words);
    for (const Word& w : words) {
        ++r.words;
        GLElement gw = gamma_section(gl, hbar, w);
        NCPoly back = hbar_project(hbar, gw);
        if (back == NCPoly::term(w, hbar.field().one())) ++r.section_ok;
        Tensor dbar = hbar.coproduct(hbar.word_element(w));
        Tensor lifted;
        for (const auto& [k, c] : dbar.terms()) lifted.add_term({lift_leg(k[0]), lift_leg(k[1])}, c);
        Tensor d = gl.coproduct(gw);
        if (d == lifted)
            ++r.coalgebra_ok;
        else if (r.first_failure.empty())
            r.first_failure = hbar.alphabet().word_to_string(w);
        Tensor proj;
        for (const auto& [k, c] : d.terms()) {
            NCPoly a = hbar_project(hbar, gl.leg_element(k[0]));
            NCPoly b = hbar_project(hbar, gl.leg_element(k[1]));
            for (const auto& [u, cu] : a.terms())
                for (const auto& [v, cv] : b.terms()) proj.add_term({Leg{0, u}, Leg{0, v}}, c * cu * cv);
        }
        if (proj == dbar) ++r.projected_ok;
    }
    return r;
}

Tensor delta_borel(const OSession& gl, const OSession& bplus, const OSession& bminus, const GLElement& x) {
    Tensor d = gl.coproduct(x);
    Tensor out;
    for (const auto& [k, c] : d.terms()) {
        NCPoly a = bplus.project_from_gl(gl.leg_element(k[0])).p;
        if (a.is_zero()) continue;
        NCPoly b = bminus.project_from_gl(gl.leg_element(k[1])).p;
        for (const auto& [u, cu] : a.terms())
            for (const auto& [v, cv] : b.terms()) out.add_term({Leg{0, u}, Leg{0, v}}, c * cu * cv);
    }
    return out;
}

DeltaRankReport delta_borel_rank(const OSession& gl, int d, const Rat& al, const Rat& be) {
    auto bp = o_session(OVariant::Bplus, gl.n(), gl.field().spec());
    auto bm = o_session(OVariant::Bminus, gl.n(), gl.field().spec());
    std::vector<Tensor> images;
    std::map<TensorKey, std::size_t> cols;
    for (const Word& w : gl.basis_words(d)) {
        Tensor t = delta_borel(gl, *bp, *bm, gl.word_element(w));
        for (const auto& [k, c] : t.terms()) cols.emplace(k, cols.size());
        images.push_back(std::move(t));
    }
    DeltaRankReport r;
    r.monomials = static_cast<int>(images.size());
    if (gl.field().is_root()) {
        std::vector<std::vector<Scalar>> m(images.size(), std::vector<Scalar>(cols.size(), gl.field().zero()));
        for (std::size_t i = 0; i < images.size(); ++i)
            for (const auto& [k, c] : images[i].terms()) m[i][cols[k]] = c;
        r.rank = rank(std::move(m));
    } else {
        std::vector<std::vector<Rat>> m(images.size(), std::vector<Rat>(cols.size()));
        for (std::size_t i = 0; i < images.size(); ++i)
            for (const auto& [k, c] : images[i].terms()) m[i][cols[k]] = evaluate_rational(c, al, be);
        r.rank = rank_rational(std::move(m));
    }
    return r;
}

bool substitution_holds(int n, const Field& f, const Scalar& al2, const Scalar& be2) {
    OSession src(OVariant::Mn, n, f, f.alpha(), f.beta());
    OSession dst(OVariant::Mn, n, f, al2, be2);
    auto map_word = [&](const Word& w) {
        Word v;
        for (Letter l : w) {
            auto [i, j] = src.position(l);
            v.push_back(dst.x(n - i, n - j));
        }
        return v;
    };
    for (const Rule& r : src.system().rules()) {
        NCPoly rel = NCPoly::term(map_word(r.lhs), f.one());
        for (const auto& [w, c] : r.rhs.terms()) rel.add_term(map_word(w), -c);
        if (!dst.reduce(rel).is_zero()) return false;
    }
    return true;
}

std::vector<SubstitutionCandidate> substitution_check(int n, const Field& f) {
    const Scalar a = f.alpha(), b = f.beta();
    std::vector<SubstitutionCandidate> c{{"(al, be)", a, b},
                                         {"(be, al)", b, a},
                                         {"(al^-1, be^-1)", a.inverse(), b.inverse()},
                                         {"(be^-1, al^-1)", b.inverse(), a.inverse()}};
    for (auto& x : c) x.ok = substitution_holds(n, f, x.al, x.be);
    return c;
}

std::string CharacterReport::describe() const {
    std::ostringstream os;
    bool diag_only = supports.size() == 1;
    if (diag_only)
        for (auto [i, j] : supports[0])
            if (i != j) diag_only = false;
    if (diag_only) {
        std::size_t n = supports[0].size();
        os << "theta(x_ij) = 0 for i != j; theta(x_ii) = lambda_i with (lambda_1..lambda_" << n << ") in (C^x)^"
           << n;
        return os.str();
    }
    os << supports.size() << " maximal admissible supports";
    return os.str();
}

CharacterReport characters_O(const OSession& s) {
    if (s.variant() != OVariant::GLn && s.variant() != OVariant::Mn)
        throw ValidationError("characters are computed for Mn/GLn sessions");
    const int n = s.n(), np = n * n;
    if (np > 20) throw ComputationError("characters: n too large");
    // commutative images of the relations
    std::vector<unsigned> exclusions;
    for (const Rule& r : s.system().rules()) {
        std::map<Word, Scalar> comm;
        auto add = [&](Word w, const Scalar& c) {
            std::sort(w.begin(), w.end());
            auto it = comm.find(w);
            if (it == comm.end())
                comm.emplace(w, c);
            else
                it->second += c;
        };
        add(r.lhs, s.field().one());
        for (const auto& [w, c] : r.rhs.terms()) add(w, -c);
        std::vector<Word> live;
        for (const auto& [w, c] : comm)
            if (!c.is_zero()) live.push_back(w);
        if (live.size() != 1) continue;
        unsigned mask = 0;
        for (Letter l : live[0]) {
            auto [i, j] = s.position(l);
            mask |= 1u << (i * n + j);
        }
        exclusions.push_back(mask);
    }
    auto admissible = [&](unsigned S) {
        for (unsigned e : exclusions)
            if ((S & e) == e) return false;
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            bool ok = true;
            for (int c = 0; c < n && ok; ++c) ok = (S >> (sigma[c] * n + c)) & 1u;
            if (ok) return true;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return false;
    };
    std::vector<unsigned> adm;
    for (unsigned S = 0; S < (1u << np); ++S)
        if (admissible(S)) adm.push_back(S);
    CharacterReport rep;
    unsigned uni = 0;
    for (unsigned S : adm) {
        uni |= S;
        bool maximal = true;
        for (unsigned T : adm)
            if (T != S && (T & S) == S) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<std::pair<int, int>> sup;
        for (int p = 0; p < np; ++p)
            if ((S >> p) & 1u) sup.push_back({p / n + 1, p % n + 1});
        rep.supports.push_back(sup);
    }
    for (int p = 0; p < np; ++p) ((uni >> p) & 1u ? rep.free : rep.forced_zero).push_back({p / n + 1, p % n + 1});
    return rep;
}

}  // namespace qgl
