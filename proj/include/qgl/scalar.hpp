#pragma once
// Exact coefficient arithmetic: rational functions in two commuting
// parameters al, be (generic mode) and cyclotomic fields Q(zeta_l)
// (root-of-unity mode), plus the specialization map between them.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qgl/error.hpp"

namespace qgl {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense integer polynomial, coefficient i multiplies z^i.
using IntPoly = std::vector<Int>;

/// The m-th cyclotomic polynomial, obtained by exact division of z^m - 1
/// by the cyclotomic polynomials of the proper divisors of m.
IntPoly cyclotomic_poly(int m);
int euler_phi(int m);
std::string intpoly_to_string(const IntPoly& p, const std::string& var = "z");

/// Laurent polynomial in al, be with integer coefficients.
/// Terms are kept sorted by (al-exponent, be-exponent), no zero coefficients.
class LPoly {
public:
    struct Term {
        int a = 0;
        int b = 0;
        Int c;
    };

    LPoly() = default;
    static LPoly constant(const Int& c);
    static LPoly monomial(const Int& c, int a, int b);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const std::vector<Term>& terms() const { return terms_; }

    LPoly operator-() const;
    friend LPoly operator+(const LPoly& x, const LPoly& y);
    friend LPoly operator-(const LPoly& x, const LPoly& y);
    friend LPoly operator*(const LPoly& x, const LPoly& y);
    friend bool operator==(const LPoly& x, const LPoly& y);
    friend bool operator<(const LPoly& x, const LPoly& y);

    LPoly shifted(int da, int db) const;
    LPoly scaled(const Int& c) const;
    LPoly divided_exact(const Int& c) const;
    int min_a() const;
    int min_b() const;
    Int content() const;
    /// Leading term under graded order on (a+b, a).
    const Term& leading() const;
    std::string to_string() const;

    static LPoly from_terms(std::vector<Term> t);

private:
    std::vector<Term> terms_;
    void canonicalize();
};

/// Exact quotient x / y of Laurent polynomials; throws if not exact.
LPoly lpoly_div_exact(const LPoly& x, const LPoly& y);
/// gcd of two polynomials (non-negative exponents) in Z[al, be].
LPoly lpoly_gcd(const LPoly& x, const LPoly& y);

/// Element of Q(al, be): num/den with gcd(num, den) = 1, den free of
/// monomial factors and with positive leading coefficient.
class RatFun {
public:
    RatFun() : den_(LPoly::constant(1)) {}
    explicit RatFun(LPoly num);
    RatFun(LPoly num, LPoly den);

    const LPoly& num() const { return num_; }
    const LPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& x, const RatFun& y);
    friend RatFun operator-(const RatFun& x, const RatFun& y);
    friend RatFun operator*(const RatFun& x, const RatFun& y);
    RatFun inverse() const;
    friend bool operator==(const RatFun& x, const RatFun& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    std::string to_string() const;

private:
    LPoly num_, den_;
    void normalize();
};

/// Shared data of a cyclotomic field Q(zeta_l).
struct CycloField {
    int ell = 0;
    int phi = 0;
    IntPoly modulus;  // Phi_ell, monic of degree phi
    static std::shared_ptr<const CycloField> get(int ell);
};

/// Element of Q[z]/Phi_ell(z), stored as a reduced coefficient vector.
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(std::shared_ptr<const CycloField> f, std::vector<Rat> coeffs);
    static Cyclo zeta_power(std::shared_ptr<const CycloField> f, long k);
    static Cyclo constant(std::shared_ptr<const CycloField> f, const Rat& c);

    int ell() const { return field_ ? field_->ell : 0; }
    const std::shared_ptr<const CycloField>& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& x, const Cyclo& y);
    friend Cyclo operator-(const Cyclo& x, const Cyclo& y);
    friend Cyclo operator*(const Cyclo& x, const Cyclo& y);
    Cyclo inverse() const;
    friend bool operator==(const Cyclo& x, const Cyclo& y) {
        return x.ell() == y.ell() && x.c_ == y.c_;
    }
    std::string to_string() const;

private:
    std::shared_ptr<const CycloField> field_;
    std::vector<Rat> c_;
};

enum class Mode { generic, root };

/// An exact scalar in either mode.  Operands of a binary operation must
/// share the same mode (and, in root mode, the same l).
class Scalar {
public:
    Scalar() : v_(RatFun()) {}
    explicit Scalar(RatFun r) : v_(std::move(r)) {}
    explicit Scalar(Cyclo c) : v_(std::move(c)) {}

    Mode mode() const { return v_.index() == 0 ? Mode::generic : Mode::root; }
    bool is_generic() const { return v_.index() == 0; }
    const RatFun& ratfun() const { return std::get<RatFun>(v_); }
    const Cyclo& cyclo() const { return std::get<Cyclo>(v_); }

    bool is_zero() const;
    bool is_one() const;
    /// The integer k in the same field as this scalar.
    Scalar make_int(long k) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar inverse() const;
    Scalar pow(long k) const;
    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    std::string to_string() const;

private:
    std::variant<RatFun, Cyclo> v_;
    void same_field(const Scalar& y) const;
};

/// Parameters of a session: generic (al, be independent symbols) or an
/// odd root of unity l with al = zeta^na, be = zeta^nb.
struct ParameterSpec {
    Mode mode = Mode::generic;
    int ell = 0;
    int na = 0;
    int nb = 0;

    static ParameterSpec generic() { return {}; }
    static ParameterSpec root(int ell, int na, int nb) { return {Mode::root, ell, na, nb}; }

    /// Throws ValidationError on l even or < 3, exponents outside (0, l),
    /// or nb - na != 1 (mod l).  With strict = true also rejects
    /// na + nb = 0 (mod l), i.e. al = be^{-1}.
    void validate(bool strict = false) const;
    /// True when al != be^{-1}, the extra non-degeneracy condition.
    bool alpha_not_beta_inverse() const;
    std::string describe() const;
};

/// Factory for scalars of a given ParameterSpec.
class Field {
public:
    explicit Field(ParameterSpec spec = {});
    const ParameterSpec& spec() const { return spec_; }
    Mode mode() const { return spec_.mode; }
    bool is_root() const { return spec_.mode == Mode::root; }
    int ell() const { return spec_.ell; }

    Scalar zero() const { return integer(0); }
    Scalar one() const { return integer(1); }
    Scalar integer(long k) const;
    Scalar rational(const Rat& q) const;
    Scalar alpha() const { return alpha_; }
    Scalar beta() const { return beta_; }
    /// Root mode only: the chosen primitive l-th root zeta = al^{-1} be.
    Scalar zeta() const;
    /// al^i be^j evaluated in this field.
    Scalar monomial(int i, int j) const;
    /// Image of a generic scalar under al -> zeta^na, be -> zeta^nb
    /// (identity in generic mode).
    Scalar specialize(const Scalar& generic) const;

private:
    ParameterSpec spec_;
    std::shared_ptr<const CycloField> cf_;
    Scalar alpha_, beta_;
};

/// Evaluate a generic scalar at rational values of al and be.
Rat evaluate_rational(const Scalar& s, const Rat& al, const Rat& be);

/// 1 + x + ... + x^{s-1} (zero for s = 0).
Scalar geometric_sum(int s, const Scalar& x);

}  // namespace qgl
