#pragma once
// Enveloping-algebra side: U_{al,be}(gl_n), its root vectors, the finite
// quotients u, uhat and their subalgebras attached to I_+, I_-, with the
// Hopf structure maps and the PBW / centrality checks.

#include <memory>
#include <string>
#include <vector>

#include "qgl/ncpoly.hpp"

namespace qgl {

enum class UVariant { U, u, uhat, Ul, uhatl };

std::string uvariant_name(UVariant v);
UVariant parse_uvariant(const std::string& s);

/// Exponents of a torus element prod a_i^{a[i]} b_i^{b[i]} (0-based i).
struct TorusExp {
    std::vector<int> a, b;
};

/// Classification of a letter of a U-side alphabet.
struct ULetter {
    enum Kind { torus, e, f } kind = torus;
    int index = 0;  // j for e_j, f_j (1-based)
    TorusExp exp;   // torus letters only
};

class USession {
public:
    USession(UVariant v, int n, const ParameterSpec& spec, std::vector<int> iplus = {},
             std::vector<int> iminus = {});

    UVariant variant() const { return variant_; }
    int n() const { return n_; }
    const Field& field() const { return field_; }
    const RewriteSystem& system() const { return sys_; }
    const Alphabet& alphabet() const { return sys_.alphabet(); }
    const std::vector<int>& iplus() const { return iplus_; }
    const std::vector<int>& iminus() const { return iminus_; }
    bool is_finite() const;

    bool has_e(int j) const;
    bool has_f(int j) const;
    Letter e(int j) const;
    Letter f(int j) const;
    const ULetter& info(Letter l) const { return info_[l]; }

    NCPoly reduce(const NCPoly& p) const { return sys_.reduce(p); }
    NCPoly mul(const NCPoly& x, const NCPoly& y) const { return reduce(x * y); }
    NCPoly one() const { return NCPoly::constant(field_.one()); }
    NCPoly letter(Letter l) const { return NCPoly::term({l}, field_.one()); }
    NCPoly power(const NCPoly& x, int k) const;

    /// Normal form of a torus element.
    NCPoly torus(const TorusExp& t) const;
    TorusExp unit_exp(char which, int i, int k = 1) const;  // which = 'a' or 'b'
    NCPoly a(int i, int k = 1) const { return torus(unit_exp('a', i, k)); }
    NCPoly b(int i, int k = 1) const { return torus(unit_exp('b', i, k)); }
    /// h_i = a_i^{-1} b_i.
    NCPoly h(int i, int k = 1) const;
    TorusExp w_exp(int j, int k = 1) const;       // w_j = a_j b_{j+1}
    TorusExp wprime_exp(int j, int k = 1) const;  // w'_j = a_{j+1} b_j
    NCPoly w(int j, int k = 1) const { return torus(w_exp(j, k)); }
    NCPoly wprime(int j, int k = 1) const { return torus(wprime_exp(j, k)); }

    /// Root vectors E_{k,l}, F_{k,l} (1 <= l <= k < n).
    NCPoly E(int k, int l) const;
    NCPoly F(int k, int l) const;

    Tensor coproduct(const NCPoly& p) const;
    Tensor coproduct_word(const Word& w) const;
    Scalar counit(const NCPoly& p) const;
    NCPoly antipode(const NCPoly& p) const;

    Tensor tensor_mul(const Tensor& x, const Tensor& y) const;
    Tensor apply_coproduct(const Tensor& x, std::size_t k) const;
    Tensor apply_counit(const Tensor& x, std::size_t k) const;
    Tensor as_tensor(const NCPoly& p) const;
    Tensor tensor2(const NCPoly& x, const NCPoly& y) const;
    NCPoly multiply_legs(const Tensor& x, int s) const;

    std::string to_string(const NCPoly& p) const { return p.to_string(alphabet()); }
    std::string tensor_to_string(const Tensor& x) const;

    /// The e-only (sign = +1) or f-only (sign = -1) subsystem on its own
    /// alphabet, including the l-th power relations in finite variants.
    const RewriteSystem& half(int sign) const { return sign > 0 ? pos_ : neg_; }

    /// Irreducible words of a finite variant; throws if the presentation
    /// has irreducible words beyond the expected maximal length.
    std::vector<Word> finite_basis() const;
    long long dimension() const;

private:
    UVariant variant_;
    int n_;
    Field field_;
    std::vector<int> iplus_, iminus_;
    int completion_bound_ = 8;
    RewriteSystem sys_, pos_, neg_;
    std::vector<ULetter> info_;
    std::vector<int> eid_, fid_;
    std::vector<int> torus_a_, torus_ainv_, torus_b_, torus_binv_, torus_h_;

    void build();
    RewriteSystem build_half(int sign) const;
    int max_basis_length() const;
};

std::shared_ptr<const USession> u_session(UVariant v, int n, const ParameterSpec& spec,
                                          const std::vector<int>& iplus = {}, const std::vector<int>& iminus = {});

/// Number of exponent vectors on the root vectors E_{k,l} with total
/// degree sum (k-l+1) m_{k,l} = d.
long long pbw_count(int n, int d);

struct UAxiomResult {
    std::string id;
    bool ok = false;
    std::string witness;
};
std::vector<UAxiomResult> hopf_axioms_U(const USession& s);

/// Delta(E_{k,l}) against E (x) 1 + w_{k,l} (x) E + z sum_j E_{k,j+1} w_{j,l} (x) E_{j,l},
/// z = 1 - al^{-1} be.
struct ComultReport {
    bool ok = false;
    std::string direct, closed;
};
ComultReport comult_E_check(const USession& s, int k, int l);

struct WsReport {
    Scalar actual, printed, derived;
    bool commutes = false;  // w_s E_{k,l} is a scalar multiple of E_{k,l} w_s
    bool printed_ok = false, derived_ok = false;
};
WsReport ws_relation_check(const USession& s, int sidx, int k, int l);

struct CentralReport {
    bool central = true;
    std::string witness;
};
CentralReport central_check(const USession& s, const NCPoly& candidate);

/// Generators of the ideal I_n: E_{k,l}^l, F_{k,l}^l, a_i^l, b_i^l (as
/// elements of s) together with labels.
std::vector<std::pair<std::string, NCPoly>> ideal_generators(const USession& s);

/// Delta(x)^m == x^m (x) 1 + w^m (x) x^m for x = e_k (sign +1) or the
/// analogous f_k form (sign -1).
bool coproduct_power_check(const USession& s, int sign, int k, int m);

}  // namespace qgl
