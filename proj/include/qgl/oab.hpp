#pragma once
// Coordinate-algebra side: presentations of O_{al,be}(M_n), O_{al,be}(GL_n),
// the Borel quotients, the root-of-unity quotient Hbar and K_+/K_-,
// together with quantum minors, Hopf structure maps, the quantum
// Frobenius map, the section gamma and the map delta.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgl/ncpoly.hpp"

namespace qgl {

enum class OVariant { Mn, GLn, Bplus, Bminus, Hbar, Kplus, Kminus };

std::string ovariant_name(OVariant v);
OVariant parse_ovariant(const std::string& s);

/// g^{-t} * p.  In sessions other than GLn the inverse determinant is
/// eliminated at construction time, so t is always 0 there.
struct GLElement {
    int t = 0;
    NCPoly p;
};

/// A presented algebra on the coordinate side.  Immutable after
/// construction and safe to share between threads.
class OSession {
public:
    OSession(OVariant v, int n, const ParameterSpec& spec);
    /// Mn/GLn presentation whose relations use the given parameter values
    /// in place of al and be (used for the generator-substitution check).
    OSession(OVariant v, int n, const Field& field, const Scalar& al, const Scalar& be);

    OVariant variant() const { return variant_; }
    int n() const { return n_; }
    const Field& field() const { return field_; }
    const RewriteSystem& system() const { return sys_; }
    const Alphabet& alphabet() const { return sys_.alphabet(); }
    const Scalar& al() const { return al_; }
    const Scalar& be() const { return be_; }
    bool is_gl() const { return variant_ == OVariant::GLn; }

    bool has_x(int i, int j) const;
    Letter x(int i, int j) const;
    bool has_inverse(int i) const;
    Letter xinv(int i) const;
    /// Row/column of an x-letter (0-based), or {-1,-1} for other letters.
    std::pair<int, int> position(Letter l) const { return pos_[l]; }

    NCPoly reduce(const NCPoly& p) const { return sys_.reduce(p); }
    GLElement one() const;
    GLElement scalar(const Scalar& c) const;
    GLElement gen(int i, int j) const;
    /// Image of g^{-1}.
    GLElement ginv() const;
    /// Image of the quantum determinant g.
    GLElement g() const;
    GLElement element(const NCPoly& p, int t = 0) const;
    GLElement word_element(const Word& w) const;

    GLElement mul(const GLElement& x, const GLElement& y) const;
    GLElement add(const GLElement& x, const GLElement& y) const;
    GLElement sub(const GLElement& x, const GLElement& y) const;
    GLElement scaled(const GLElement& x, const Scalar& c) const;
    GLElement pow(const GLElement& x, int k) const;
    bool equal(const GLElement& x, const GLElement& y) const;
    bool is_zero(const GLElement& x) const { return x.p.is_zero(); }
    /// Cancel powers of g against g^{-t} where possible.
    GLElement simplify(const GLElement& x) const;

    /// Quantum minor (0-based row and column indices) by the row expansion
    /// sum_sigma (-be)^{-l(sigma)} x_{r_sigma(1) c_1} ... x_{r_sigma(k) c_k}.
    NCPoly qdet(const std::vector<int>& rows, const std::vector<int>& cols) const;
    /// Column expansion sum_sigma (-al^{-1})^{-l(sigma)} x_{r_1 c_sigma(1)} ...
    NCPoly qdet_column(const std::vector<int>& rows, const std::vector<int>& cols) const;

    Tensor coproduct(const GLElement& x) const;
    Tensor coproduct_word(const Word& w) const;
    Scalar counit(const GLElement& x) const;
    GLElement antipode(const GLElement& x) const;

    /// Legwise product of tensors of the same arity.
    Tensor tensor_mul(const Tensor& x, const Tensor& y) const;
    /// Apply the coproduct (resp. counit) to leg k of a tensor.
    Tensor apply_coproduct(const Tensor& x, std::size_t k) const;
    Tensor apply_counit(const Tensor& x, std::size_t k) const;
    /// Tensor of arity 1 holding x.
    Tensor as_tensor(const GLElement& x) const;
    /// Sum of the legs multiplied in order, with the antipode applied to
    /// leg `s` (use s = -1 for none).  Arity-2 tensors only.
    GLElement multiply_legs(const Tensor& x, int s) const;
    GLElement leg_element(const Leg& l) const { return word_element_t(l); }

    std::string to_string(const GLElement& x) const;
    std::string tensor_to_string(const Tensor& x) const;
    /// Irreducible words of the presentation up to the given length.
    std::vector<Word> basis_words(int max_len) const;
    /// Map an element of the GLn session with the same (n, parameters)
    /// to this quotient.
    GLElement project_from_gl(const GLElement& x) const;
    const OSession& gl_session() const;

private:
    OVariant variant_;
    int n_;
    Field field_;
    Scalar al_, be_;
    RewriteSystem sys_;
    std::vector<std::vector<int>> xid_;  // -1 if absent
    std::vector<int> invid_;
    std::vector<std::pair<int, int>> pos_;
    std::shared_ptr<const OSession> gl_;
    NCPoly g_, ginv_;

    void build();
    void build_matrix_rules(RewriteSystem& sys, const std::vector<std::vector<int>>& id, bool borel) const;
    GLElement word_element_t(const Leg& l) const;
    GLElement antipode_letter(Letter l) const;
    /// Polynomial q with g^k q = p, if it exists.
    std::optional<NCPoly> left_divide_by_g(const NCPoly& p) const;
};

/// Shared session cache keyed by (variant, n, parameter spec).
std::shared_ptr<const OSession> o_session(OVariant v, int n, const ParameterSpec& spec);

// ---------------------------------------------------------------------------
// Checks and constructions

struct DeterminantReport {
    NCPoly row, column;
    bool coherent = false;
    bool grouplike = false;
    bool normal = false;
};

/// Row/column coherence, Delta(g) = g (x) g and x_ij g = (be al)^{i-j} g x_ij.
DeterminantReport determinant_check(const OSession& s);
bool g_normality_check(const OSession& s);

struct AxiomResult {
    std::string id;
    bool ok = false;
    std::string witness;
};

/// Coassociativity, counit and both antipode identities on every generator.
std::vector<AxiomResult> hopf_axioms_O(const OSession& s);

struct S2Entry {
    int i = 0, j = 0;
    Scalar eigenvalue;
    bool matches_qinv = false;  // (al^{-1} be)^{j-i}
    bool matches_ab = false;    // (al be)^{j-i}
};
std::vector<S2Entry> s2_spectrum(const OSession& s);

/// Quantum Frobenius: prod X_ij^{e_ij} -> prod x_ij^{l e_ij} (exponents row-major n x n).
GLElement frobenius_embed(const OSession& s, const std::vector<int>& exponents);
/// Commutators of every x_ij^l with every generator; returns failing pairs.
std::vector<std::string> frobenius_centrality(const OSession& s);

/// pi: O_{al,be}(GL_n) -> Hbar.
NCPoly hbar_project(const OSession& hbar, const GLElement& x);
/// gamma: basis word of Hbar -> same word in O_{al,be}(GL_n).
GLElement gamma_section(const OSession& gl, const OSession& hbar, const Word& w);

struct GammaReport {
    int words = 0;
    int section_ok = 0;    // pi gamma = id
    int coalgebra_ok = 0;  // Delta gamma = (gamma (x) gamma) Delta-bar
    int projected_ok = 0;  // (pi (x) pi) Delta gamma = Delta-bar
    std::string first_failure;
};
/// Checks the `max_words` shortest Hbar basis words (all when 0).
GammaReport gamma_check(const OSession& gl, const OSession& hbar, std::size_t max_words = 0);

/// delta = (t_+ (x) t_-) Delta.
Tensor delta_borel(const OSession& gl, const OSession& bplus, const OSession& bminus, const GLElement& x);
struct DeltaRankReport {
    int monomials = 0;
    int rank = 0;
};
/// Rank of the delta-images of all O(M_n) basis words of length <= d,
/// evaluated at the rational point (al, be).
DeltaRankReport delta_borel_rank(const OSession& gl, int d, const Rat& al = 2, const Rat& be = 3);

struct SubstitutionCandidate {
    std::string label;
    Scalar al, be;
    bool ok = false;
};
/// x_ij -> y_{n+1-i,n+1-j} tested against the four candidate parameter pairs.
std::vector<SubstitutionCandidate> substitution_check(int n, const Field& f);
bool substitution_holds(int n, const Field& f, const Scalar& al2, const Scalar& be2);

struct CharacterReport {
    std::vector<std::pair<int, int>> forced_zero;
    std::vector<std::pair<int, int>> free;
    std::vector<std::vector<std::pair<int, int>>> supports;  // maximal admissible supports
    std::string describe() const;
};
CharacterReport characters_O(const OSession& s);

}  // namespace qgl
