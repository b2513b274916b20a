#include "qgl/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qgl {

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

IntPoly trim(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Exact division of integer polynomials with monic divisor.
IntPoly div_monic(IntPoly num, const IntPoly& den) {
    const int dn = static_cast<int>(den.size()) - 1;
    int dq = static_cast<int>(num.size()) - 1 - dn;
    if (dq < 0) return {};
    IntPoly q(dq + 1);
    for (int k = dq; k >= 0; --k) {
        Int c = num[k + dn];
        q[k] = c;
        if (c != 0)
            for (int i = 0; i <= dn; ++i) num[k + i] -= c * den[i];
    }
    if (!trim(num).empty()) throw ComputationError("inexact cyclotomic division");
    return q;
}

}  // namespace

IntPoly cyclotomic_poly(int m) {
    if (m < 1) throw ValidationError("cyclotomic_poly: m must be >= 1");
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    IntPoly p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = div_monic(p, cyclotomic_poly(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(m, p);
    return p;
}

int euler_phi(int m) {
    int r = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

std::string intpoly_to_string(const IntPoly& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i] == 0) continue;
        Int c = p[i];
        bool neg = c < 0;
        Int ac = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << ac;
            continue;
        }
        if (ac != 1) os << ac << " ";
        os << var;
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// LPoly

namespace {

bool term_less(const LPoly::Term& x, const LPoly::Term& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
}

// Graded order used for "leading" (sign normalization).
bool graded_less(const LPoly::Term& x, const LPoly::Term& y) {
    int dx = x.a + x.b, dy = y.a + y.b;
    if (dx != dy) return dx < dy;
    return x.a < y.a;
}

}  // namespace

LPoly LPoly::constant(const Int& c) { return monomial(c, 0, 0); }

LPoly LPoly::monomial(const Int& c, int a, int b) {
    LPoly p;
    if (c != 0) p.terms_.push_back({a, b, c});
    return p;
}

LPoly LPoly::from_terms(std::vector<Term> t) {
    LPoly p;
    p.terms_ = std::move(t);
    p.canonicalize();
    return p;
}

void LPoly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_less);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().a == t.a && out.back().b == t.b)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

bool LPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].a == 0 && terms_[0].b == 0);
}

bool LPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].a == 0 && terms_[0].b == 0 && terms_[0].c == 1;
}

LPoly LPoly::operator-() const {
    LPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

LPoly operator+(const LPoly& x, const LPoly& y) {
    LPoly r;
    auto i = x.terms_.begin(), j = y.terms_.begin();
    while (i != x.terms_.end() || j != y.terms_.end()) {
        if (j == y.terms_.end() || (i != x.terms_.end() && term_less(*i, *j))) {
            r.terms_.push_back(*i++);
        } else if (i == x.terms_.end() || term_less(*j, *i)) {
            r.terms_.push_back(*j++);
        } else {
            Int c = i->c + j->c;
            if (c != 0) r.terms_.push_back({i->a, i->b, c});
            ++i;
            ++j;
        }
    }
    return r;
}

LPoly operator-(const LPoly& x, const LPoly& y) { return x + (-y); }

LPoly operator*(const LPoly& x, const LPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    LPoly r;
    r.terms_.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& s : x.terms_)
        for (const auto& t : y.terms_) r.terms_.push_back({s.a + t.a, s.b + t.b, s.c * t.c});
    if (x.terms_.size() > 1 && y.terms_.size() > 1) r.canonicalize();
    return r;
}

bool operator==(const LPoly& x, const LPoly& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (size_t i = 0; i < x.terms_.size(); ++i) {
        const auto &s = x.terms_[i], &t = y.terms_[i];
        if (s.a != t.a || s.b != t.b || s.c != t.c) return false;
    }
    return true;
}

bool operator<(const LPoly& x, const LPoly& y) {
    size_t n = std::min(x.terms_.size(), y.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        const auto &s = x.terms_[i], &t = y.terms_[i];
        if (s.a != t.a) return s.a < t.a;
        if (s.b != t.b) return s.b < t.b;
        if (s.c != t.c) return s.c < t.c;
    }
    return x.terms_.size() < y.terms_.size();
}

LPoly LPoly::shifted(int da, int db) const {
    LPoly r = *this;
    for (auto& t : r.terms_) {
        t.a += da;
        t.b += db;
    }
    return r;
}

LPoly LPoly::scaled(const Int& c) const {
    if (c == 0) return {};
    LPoly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

LPoly LPoly::divided_exact(const Int& c) const {
    LPoly r = *this;
    for (auto& t : r.terms_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
    return r;
}

int LPoly::min_a() const {
    int m = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.a < m) m = t.a;
        first = false;
    }
    return m;
}

int LPoly::min_b() const {
    int m = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.b < m) m = t.b;
        first = false;
    }
    return m;
}

Int LPoly::content() const {
    Int g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

const LPoly::Term& LPoly::leading() const {
    return *std::max_element(terms_.begin(), terms_.end(), graded_less);
}

std::string LPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<Term> t = terms_;
    std::sort(t.begin(), t.end(), [](const Term& x, const Term& y) { return graded_less(y, x); });
    std::ostringstream os;
    bool first = true;
    for (const auto& term : t) {
        bool neg = term.c < 0;
        Int ac = abs(term.c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        auto add = [&](const char* s, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += " ";
            mono += s;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        add("al", term.a);
        add("be", term.b);
        if (mono.empty())
            os << ac;
        else if (ac == 1)
            os << mono;
        else
            os << ac << " " << mono;
    }
    return os.str();
}

// Exact division using the lexicographic leading term on (a, b).
LPoly lpoly_div_exact(const LPoly& x, const LPoly& y) {
    if (y.is_zero()) throw DivisionByZero("division by zero polynomial");
    if (y.is_monomial()) {
        const auto& t = y.terms()[0];
        std::vector<LPoly::Term> out;
        for (const auto& s : x.terms()) {
            Int q;
            if (!mpz_divisible_p(s.c.get_mpz_t(), t.c.get_mpz_t()))
                throw ComputationError("inexact polynomial division");
            mpz_divexact(q.get_mpz_t(), s.c.get_mpz_t(), t.c.get_mpz_t());
            out.push_back({s.a - t.a, s.b - t.b, q});
        }
        return LPoly::from_terms(std::move(out));
    }
    const auto& lt = y.terms().back();
    LPoly rem = x, quo;
    size_t guard = 0;
    while (!rem.is_zero()) {
        const auto& r = rem.terms().back();
        if (!mpz_divisible_p(r.c.get_mpz_t(), lt.c.get_mpz_t()) || ++guard > 100000)
            throw ComputationError("inexact polynomial division");
        Int q;
        mpz_divexact(q.get_mpz_t(), r.c.get_mpz_t(), lt.c.get_mpz_t());
        LPoly qt = LPoly::monomial(q, r.a - lt.a, r.b - lt.b);
        quo = quo + qt;
        rem = rem - qt * y;
    }
    return quo;
}

// ---------------------------------------------------------------------------
// gcd in Z[al, be] via recursive primitive remainder sequences.

namespace {

using UPoly = std::vector<Int>;   // dense in al
using BPoly = std::vector<UPoly>;  // dense in be, coefficients in Z[al]

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int ucontent(const UPoly& p) {
    Int g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

UPoly umul(const UPoly& x, const UPoly& y) {
    if (x.empty() || y.empty()) return {};
    UPoly r(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    utrim(r);
    return r;
}

UPoly usub(const UPoly& x, const UPoly& y) {
    UPoly r(std::max(x.size(), y.size()));
    for (size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
    utrim(r);
    return r;
}

UPoly uscale(const UPoly& x, const Int& c) {
    UPoly r = x;
    for (auto& v : r) v *= c;
    utrim(r);
    return r;
}

UPoly udivint(const UPoly& x, const Int& c) {
    UPoly r = x;
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return r;
}

UPoly uprimitive(const UPoly& x) {
    if (x.empty()) return x;
    Int c = ucontent(x);
    if (x.back() < 0) c = -c;
    return udivint(x, c);
}

UPoly uprem(UPoly a, const UPoly& b) {
    const size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        size_t shift = a.size() - 1 - db;
        Int la = a.back();
        UPoly t(shift, Int(0));
        t.insert(t.end(), b.begin(), b.end());
        a = usub(uscale(a, lb), uscale(t, la));
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    if (a.empty()) return uprimitive(b).empty() ? b : uscale(uprimitive(b), ucontent(b));
    if (b.empty()) return uscale(uprimitive(a), ucontent(a));
    Int g;
    Int ca = ucontent(a), cb = ucontent(b);
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = uprimitive(a);
    b = uprimitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        UPoly r = uprem(a, b);
        a = std::move(b);
        b = r.empty() ? r : uprimitive(r);
    }
    return uscale(uprimitive(a), g);
}

// Exact division in Z[al].
UPoly udiv(UPoly a, const UPoly& b) {
    utrim(a);
    if (a.empty()) return {};
    const size_t db = b.size() - 1;
    if (a.size() - 1 < db) throw ComputationError("inexact univariate division");
    UPoly q(a.size() - db);
    for (size_t k = q.size(); k-- > 0;) {
        Int c = a[k + db];
        if (c == 0) continue;
        if (!mpz_divisible_p(c.get_mpz_t(), b.back().get_mpz_t()))
            throw ComputationError("inexact univariate division");
        Int qc;
        mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), b.back().get_mpz_t());
        q[k] = qc;
        for (size_t i = 0; i <= db; ++i) a[k + i] -= qc * b[i];
    }
    utrim(a);
    if (!a.empty()) throw ComputationError("inexact univariate division");
    utrim(q);
    return q;
}

void btrim(BPoly& p) {
    for (auto& c : p) utrim(c);
    while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly bcontent(const BPoly& p) {
    UPoly g;
    for (const auto& c : p) {
        if (c.empty()) continue;
        g = g.empty() ? uscale(uprimitive(c), ucontent(c)) : ugcd(g, c);
    }
    return g;
}

BPoly bdivu(const BPoly& p, const UPoly& u) {
    BPoly r;
    for (const auto& c : p) r.push_back(c.empty() ? c : udiv(c, u));
    return r;
}

BPoly bprem(BPoly a, const BPoly& b) {
    const size_t db = b.size() - 1;
    const UPoly& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        size_t shift = a.size() - 1 - db;
        UPoly la = a.back();
        BPoly r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = umul(a[i], lb);
        for (size_t i = 0; i <= db; ++i) r[i + shift] = usub(r[i + shift], umul(b[i], la));
        btrim(r);
        a = std::move(r);
    }
    return a;
}

BPoly bprimitive(const BPoly& p) {
    if (p.empty()) return p;
    UPoly c = bcontent(p);
    BPoly r = bdivu(p, c);
    // make the leading coefficient's leading integer positive
    if (r.back().back() < 0)
        for (auto& u : r)
            for (auto& v : u) v = -v;
    return r;
}

BPoly to_bpoly(const LPoly& p) {
    BPoly r;
    for (const auto& t : p.terms()) {
        if (t.a < 0 || t.b < 0) throw ComputationError("gcd requires non-negative exponents");
        if (static_cast<int>(r.size()) <= t.b) r.resize(t.b + 1);
        auto& u = r[t.b];
        if (static_cast<int>(u.size()) <= t.a) u.resize(t.a + 1);
        u[t.a] += t.c;
    }
    btrim(r);
    return r;
}

LPoly from_bpoly(const BPoly& p) {
    std::vector<LPoly::Term> t;
    for (size_t b = 0; b < p.size(); ++b)
        for (size_t a = 0; a < p[b].size(); ++a)
            if (p[b][a] != 0) t.push_back({static_cast<int>(a), static_cast<int>(b), p[b][a]});
    return LPoly::from_terms(std::move(t));
}

}  // namespace

LPoly lpoly_gcd(const LPoly& x, const LPoly& y) {
    BPoly a = to_bpoly(x), b = to_bpoly(y);
    if (a.empty()) return y;
    if (b.empty()) return x;
    UPoly ca = bcontent(a), cb = bcontent(b);
    UPoly g = ugcd(ca, cb);
    a = bdivu(a, ca);
    b = bdivu(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty() && b.size() > 1) {
        BPoly r = bprem(a, b);
        a = std::move(b);
        b = r.empty() ? r : bprimitive(r);
    }
    BPoly res;
    if (!b.empty()) {
        // b is constant in be: gcd with a primitive polynomial is 1 in be
        res = BPoly{UPoly{Int(1)}};
    } else {
        res = bprimitive(a);
    }
    for (auto& u : res) u = umul(u, g);
    btrim(res);
    return from_bpoly(res);
}

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(LPoly num) : num_(std::move(num)), den_(LPoly::constant(1)) {}

RatFun::RatFun(LPoly num, LPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = LPoly::constant(1);
        return;
    }
    // Move monomial factors of the denominator into the numerator.
    int ma = den_.min_a(), mb = den_.min_b();
    if (ma != 0 || mb != 0) {
        den_ = den_.shifted(-ma, -mb);
        num_ = num_.shifted(-ma, -mb);
    }
    if (den_.is_constant()) {
        Int d = den_.terms()[0].c;
        Int g;
        Int cn = num_.content();
        mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), d.get_mpz_t());
        if (d < 0) g = -g;
        if (g != 1) {
            num_ = num_.divided_exact(g);
            den_ = den_.divided_exact(g);
        }
        return;
    }
    int na = num_.min_a(), nb = num_.min_b();
    LPoly np = num_.shifted(-na, -nb);
    LPoly g = lpoly_gcd(np, den_);
    if (!g.is_constant()) {
        num_ = lpoly_div_exact(num_, g);
        den_ = lpoly_div_exact(den_, g);
        int ma2 = den_.min_a(), mb2 = den_.min_b();
        den_ = den_.shifted(-ma2, -mb2);
        num_ = num_.shifted(-ma2, -mb2);
    }
    Int cn = num_.content(), cd = den_.content(), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading().c < 0) c = -c;
    if (c != 1) {
        num_ = num_.divided_exact(c);
        den_ = den_.divided_exact(c);
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& x, const RatFun& y) {
    if (x.is_polynomial() && y.is_polynomial()) return RatFun(x.num_ + y.num_);
    if (y.is_polynomial()) return y + x;
    if (x.is_polynomial()) {
        // gcd(x*d + c, d) = gcd(c, d) = 1; only contents may need fixing
        RatFun r;
        r.num_ = x.num_ * y.den_ + y.num_;
        r.den_ = y.den_;
        if (r.num_.is_zero()) return RatFun();
        if (!r.den_.is_constant() && r.den_.content() == 1) return r;
        r.normalize();
        return r;
    }
    if (x.den_ == y.den_) return RatFun(x.num_ + y.num_, x.den_);
    return RatFun(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFun operator-(const RatFun& x, const RatFun& y) { return x + (-y); }

RatFun operator*(const RatFun& x, const RatFun& y) {
    if (x.is_zero() || y.is_zero()) return RatFun();
    if (x.is_polynomial() && y.is_polynomial()) return RatFun(x.num_ * y.num_);
    return RatFun(x.num_ * y.num_, x.den_ * y.den_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RatFun(den_, num_);
}

std::string RatFun::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (den_.terms().size() > 1 || d.find(' ') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Cyclo

std::shared_ptr<const CycloField> CycloField::get(int ell) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<CycloField>();
    f->ell = ell;
    f->modulus = cyclotomic_poly(ell);
    f->phi = static_cast<int>(f->modulus.size()) - 1;
    cache.emplace(ell, f);
    return f;
}

namespace {

// Reduce a coefficient vector of arbitrary length modulo the monic modulus.
std::vector<Rat> reduce_mod(std::vector<Rat> v, const CycloField& f) {
    const int phi = f.phi;
    for (int k = static_cast<int>(v.size()) - 1; k >= phi; --k) {
        if (v[k] == 0) continue;
        Rat c = v[k];
        for (int i = 0; i <= phi; ++i) v[k - phi + i] -= c * f.modulus[i];
    }
    v.resize(phi);
    return v;
}

}  // namespace

Cyclo::Cyclo(std::shared_ptr<const CycloField> f, std::vector<Rat> coeffs) : field_(std::move(f)) {
    c_ = reduce_mod(std::move(coeffs), *field_);
}

Cyclo Cyclo::zeta_power(std::shared_ptr<const CycloField> f, long k) {
    long e = ((k % f->ell) + f->ell) % f->ell;
    std::vector<Rat> v(std::max<long>(e + 1, f->phi));
    v[e] = 1;
    return Cyclo(f, std::move(v));
}

Cyclo Cyclo::constant(std::shared_ptr<const CycloField> f, const Rat& c) {
    std::vector<Rat> v(f->phi);
    v[0] = c;
    return Cyclo(f, std::move(v));
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo operator+(const Cyclo& x, const Cyclo& y) {
    Cyclo r = x;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
    return r;
}

Cyclo operator-(const Cyclo& x, const Cyclo& y) {
    Cyclo r = x;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= y.c_[i];
    return r;
}

Cyclo operator*(const Cyclo& x, const Cyclo& y) {
    const size_t n = x.c_.size();
    std::vector<Rat> v(2 * n);
    for (size_t i = 0; i < n; ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
            if (y.c_[j] != 0) v[i + j] += x.c_[i] * y.c_[j];
    }
    Cyclo r;
    r.field_ = x.field_;
    r.c_ = reduce_mod(std::move(v), *x.field_);
    return r;
}

namespace {

using QPoly = std::vector<Rat>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial division over Q: returns quotient, leaves remainder in a.
QPoly qdivmod(QPoly& a, const QPoly& b) {
    qtrim(a);
    QPoly q;
    const size_t db = b.size() - 1;
    if (a.size() < b.size()) return q;
    q.assign(a.size() - db, Rat(0));
    for (size_t k = q.size(); k-- > 0;) {
        Rat c = a[k + db] / b.back();
        q[k] = c;
        if (c != 0)
            for (size_t i = 0; i <= db; ++i) a[k + i] -= c * b[i];
    }
    a.resize(db);
    qtrim(a);
    return q;
}

QPoly qmul(const QPoly& x, const QPoly& y) {
    if (x.empty() || y.empty()) return {};
    QPoly r(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    qtrim(r);
    return r;
}

QPoly qsub(const QPoly& x, const QPoly& y) {
    QPoly r(std::max(x.size(), y.size()));
    for (size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
    qtrim(r);
    return r;
}

}  // namespace

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(ell()) + ")");
    // extended Euclid: s*a + t*m = gcd = const
    QPoly m(field_->modulus.begin(), field_->modulus.end());
    QPoly a = c_;
    qtrim(a);
    QPoly r0 = m, r1 = a, t0, t1{Rat(1)};
    while (!(r1.size() == 1)) {
        QPoly r = r0;
        QPoly q = qdivmod(r, r1);
        QPoly t = qsub(t0, qmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
        if (r1.empty()) throw ComputationError("non-invertible cyclotomic element");
    }
    Rat inv = 1 / r1[0];
    for (auto& x : t1) x *= inv;
    return Cyclo(field_, t1);
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        if (c_[i] == 0) continue;
        Rat c = c_[i];
        bool neg = c < 0;
        Rat ac = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << ac;
            continue;
        }
        if (ac != 1) os << ac << " ";
        os << "z";
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// Scalar

void Scalar::same_field(const Scalar& y) const {
    if (v_.index() != y.v_.index() || (v_.index() == 1 && cyclo().ell() != y.cyclo().ell()))
        throw ValidationError("scalars from different fields");
}

bool Scalar::is_zero() const {
    return is_generic() ? ratfun().is_zero() : cyclo().is_zero();
}

bool Scalar::is_one() const {
    if (is_generic()) return ratfun().num().is_one() && ratfun().den().is_one();
    const auto& c = cyclo().coeffs();
    if (c.empty() || c[0] != 1) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

Scalar Scalar::make_int(long k) const {
    if (is_generic()) return Scalar(RatFun(LPoly::constant(Int(k))));
    return Scalar(Cyclo::constant(cyclo().field(), Rat(k)));
}

Scalar Scalar::operator-() const {
    if (is_generic()) return Scalar(-ratfun());
    return Scalar(-cyclo());
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    x.same_field(y);
    if (x.is_generic()) return Scalar(x.ratfun() + y.ratfun());
    return Scalar(x.cyclo() + y.cyclo());
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    x.same_field(y);
    if (x.is_generic()) return Scalar(x.ratfun() - y.ratfun());
    return Scalar(x.cyclo() - y.cyclo());
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    x.same_field(y);
    if (x.is_generic()) return Scalar(x.ratfun() * y.ratfun());
    return Scalar(x.cyclo() * y.cyclo());
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("division by zero scalar");
    if (is_generic()) return Scalar(ratfun().inverse());
    return Scalar(cyclo().inverse());
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r = make_int(1), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.v_.index() != y.v_.index()) return false;
    if (x.is_generic()) return x.ratfun() == y.ratfun();
    return x.cyclo() == y.cyclo();
}

std::string Scalar::to_string() const {
    return is_generic() ? ratfun().to_string() : cyclo().to_string();
}

// ---------------------------------------------------------------------------
// ParameterSpec and Field

void ParameterSpec::validate(bool strict) const {
    if (mode == Mode::generic) return;
    if (ell < 3 || ell % 2 == 0)
        throw ValidationError("ell must be odd and >= 3 (got " + std::to_string(ell) + ")");
    if (na <= 0 || na >= ell || nb <= 0 || nb >= ell)
        throw ValidationError("exponents na, nb must lie strictly between 0 and ell");
    if (((nb - na) % ell + ell) % ell != 1)
        throw ValidationError("nb - na must be 1 mod ell so that al^-1 be is the chosen primitive root");
    if (strict && !alpha_not_beta_inverse())
        throw ValidationError("na + nb = 0 mod ell means al = be^-1, excluded in strict mode");
}

bool ParameterSpec::alpha_not_beta_inverse() const {
    if (mode == Mode::generic) return true;
    return (na + nb) % ell != 0;
}

std::string ParameterSpec::describe() const {
    if (mode == Mode::generic) return "generic";
    return "root(ell=" + std::to_string(ell) + ", na=" + std::to_string(na) +
           ", nb=" + std::to_string(nb) + ")";
}

Field::Field(ParameterSpec spec) : spec_(spec) {
    spec_.validate(false);
    if (spec_.mode == Mode::root) {
        cf_ = CycloField::get(spec_.ell);
        alpha_ = Scalar(Cyclo::zeta_power(cf_, spec_.na));
        beta_ = Scalar(Cyclo::zeta_power(cf_, spec_.nb));
    } else {
        alpha_ = Scalar(RatFun(LPoly::monomial(1, 1, 0)));
        beta_ = Scalar(RatFun(LPoly::monomial(1, 0, 1)));
    }
}

Scalar Field::integer(long k) const {
    if (is_root()) return Scalar(Cyclo::constant(cf_, Rat(k)));
    return Scalar(RatFun(LPoly::constant(Int(k))));
}

Scalar Field::rational(const Rat& q) const {
    if (is_root()) return Scalar(Cyclo::constant(cf_, q));
    return Scalar(RatFun(LPoly::constant(q.get_num()), LPoly::constant(q.get_den())));
}

Scalar Field::zeta() const {
    if (!is_root()) throw ValidationError("zeta is only defined in root mode");
    return Scalar(Cyclo::zeta_power(cf_, 1));
}

Scalar Field::monomial(int i, int j) const {
    if (is_root()) return Scalar(Cyclo::zeta_power(cf_, static_cast<long>(i) * spec_.na +
                                                           static_cast<long>(j) * spec_.nb));
    return Scalar(RatFun(LPoly::monomial(1, i, j)));
}

namespace {

Cyclo eval_lpoly(const LPoly& p, const std::shared_ptr<const CycloField>& cf, int na, int nb) {
    std::vector<Rat> v(std::max(cf->ell, cf->phi));
    for (const auto& t : p.terms()) {
        long e = (static_cast<long>(t.a) * na + static_cast<long>(t.b) * nb) % cf->ell;
        if (e < 0) e += cf->ell;
        v[e] += Rat(t.c);
    }
    return Cyclo(cf, std::move(v));
}

}  // namespace

Scalar Field::specialize(const Scalar& s) const {
    if (!s.is_generic()) {
        if (is_root() && s.cyclo().ell() == spec_.ell) return s;
        throw ValidationError("specialize expects a generic scalar");
    }
    if (!is_root()) return s;
    Cyclo num = eval_lpoly(s.ratfun().num(), cf_, spec_.na, spec_.nb);
    Cyclo den = eval_lpoly(s.ratfun().den(), cf_, spec_.na, spec_.nb);
    if (den.is_zero())
        throw DivisionByZero("denominator factor " + s.ratfun().den().to_string() +
                             " vanishes at " + spec_.describe());
    return Scalar(num * den.inverse());
}

Rat evaluate_rational(const Scalar& s, const Rat& al, const Rat& be) {
    if (!s.is_generic()) throw ValidationError("evaluate_rational expects a generic scalar");
    auto ev = [&](const LPoly& p) {
        Rat r = 0;
        for (const auto& t : p.terms()) {
            Rat m = Rat(t.c);
            Rat x = t.a >= 0 ? al : 1 / al;
            for (int i = 0; i < std::abs(t.a); ++i) m *= x;
            Rat y = t.b >= 0 ? be : 1 / be;
            for (int i = 0; i < std::abs(t.b); ++i) m *= y;
            r += m;
        }
        return r;
    };
    Rat d = ev(s.ratfun().den());
    if (d == 0) throw DivisionByZero("denominator vanishes at the chosen rational point");
    return ev(s.ratfun().num()) / d;
}

Scalar geometric_sum(int s, const Scalar& x) {
    if (s < 0) throw ValidationError("geometric_sum: s must be non-negative");
    Scalar r = x.make_int(0), p = x.make_int(1);
    for (int i = 0; i < s; ++i) {
        r += p;
        p *= x;
    }
    return r;
}

}  // namespace qgl
