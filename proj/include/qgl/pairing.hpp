#pragma once
// The Hopf pairing <-,->: U_{al,be}(gl_n) x O_{al,be}(GL_n) -> k, its
// restriction to uhat x Hbar, Gram matrices and radical membership.
//
// Evaluation: for a U-word u_1...u_m and an O-word x_{s_1 t_1}...x_{s_r t_r},
// <u, x> = sum <u_1, x_(1)> ... <u_m, x_(m)> with the matrix coproduct on
// the O side.  Each U generator acts on the tuple of current row indices
// (s_1, ..., s_r) through its iterated coproduct, so the value is the
// coefficient of (t_1, ..., t_r) after applying u_1, ..., u_m in turn.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qgl/oab.hpp"
#include "qgl/uab.hpp"

namespace qgl {

class PairingContext {
public:
    /// Both sessions must use the same parameters.  The O side may be any
    /// variant whose letters are matrix coefficients x_ij (Mn, GLn, Hbar,
    /// Kplus, Kminus); words are paired through their lift to O(M_n).
    PairingContext(std::shared_ptr<const USession> u, std::shared_ptr<const OSession> o);

    const USession& u() const { return *u_; }
    const OSession& o() const { return *o_; }
    const Field& field() const { return u_->field(); }

    /// Base table <u-letter, x_st> (1-based s, t).
    Scalar base(Letter ul, int s, int t) const;

    /// <uw, g^{-t} ow> for a U-word and an O-word.
    Scalar pair_word(const Word& uw, const Word& ow, int t = 0) const;
    /// Bilinear extension.
    Scalar pair(const NCPoly& u, const GLElement& x) const;
    Scalar pair(const NCPoly& u, const NCPoly& x) const { return pair(u, GLElement{0, x}); }

private:
    std::shared_ptr<const USession> u_;
    std::shared_ptr<const OSession> o_;
    std::vector<std::vector<int>> uweight_;  // per U letter, column-minus-row weight
};

/// Pairing on generators by the base table plus the two multiplicativity
/// axioms and the unit/counit axioms, on all generator pairs and on random
/// words of length <= degree.
struct PairingAxiomResult {
    std::string id;
    bool ok = false;
    std::string witness;
};
std::vector<PairingAxiomResult> pairing_axioms(const PairingContext& ctx, int degree, int samples,
                                               std::uint64_t seed = 1);

/// <h, S(u)> = <S(h), u> for all U generators h and O generators u.
std::vector<PairingAxiomResult> antipode_compatibility(const PairingContext& ctx);

/// Every rewriting rule on one side pairs to zero with every free word of
/// length <= degree_bound on the other.  Returns the failures.
std::vector<std::string> pairing_welldefined_check(const PairingContext& ctx, int degree_bound);

/// <E_{k,l}, x_ij> = (-1)^{k-l} al^{l-k} d_{l,i} d_{k+1,j} and
/// <F_{k,l}, x_ij> = d_{k+1,i} d_{l,j} for all valid indices.
struct PairEFReport {
    int checked = 0;
    std::vector<std::string> failures;
};
PairEFReport pair_ef_check(const PairingContext& ctx);

/// Right radical: <u, candidate> = 0 for every U-word in `u_words`.
/// Left radical: <candidate, x> = 0 for every element in `o_elements`.
/// The witness (if any) names the first nonzero pairing.
struct RadicalReport {
    bool ok = true;
    int tested = 0;
    std::string witness;
};
RadicalReport radical_right(const PairingContext& ctx, const GLElement& candidate, const std::vector<Word>& u_words);
RadicalReport radical_left(const PairingContext& ctx, const NCPoly& candidate,
                           const std::vector<GLElement>& o_elements);

/// All words of the free monoid on the letters of `a` up to length max_len
/// (optionally restricted to the given letters).
std::vector<Word> free_words(const Alphabet& a, int max_len, const std::vector<Letter>& letters = {});

using Matrix = std::vector<std::vector<Scalar>>;

/// Entry (i, j) = <u_words[i], o_elements[j]>.  Throws ComputationError if
/// the number of entries exceeds `max_entries`.
Matrix gram_matrix(const PairingContext& ctx, const std::vector<Word>& u_words,
                   const std::vector<GLElement>& o_elements, std::size_t max_entries = 10000);

/// The uhat x Hbar Gram matrix with rows the uhat basis and columns the
/// gamma-lifts of the Hbar basis.
struct GramReport {
    int rows = 0, cols = 0, rank = 0;
    std::vector<std::string> row_labels, col_labels;
    Matrix matrix;
};
GramReport uhat_hbar_gram(int n, const ParameterSpec& spec, std::size_t max_entries = 10000);

/// <E^M, xbar^N> over strictly upper exponent matrices M, N with entries in
/// [0, l): E^M = E^{M_n} ... E^{M_1}, E^{M_i} = E_{n-1,i}^{M_{i,n}} ... E_{i,i}^{M_{i,i+1}},
/// xbar^N the row-major ordered monomial.
struct EMxNReport {
    int size = 0;
    bool diagonal = true;
    bool nonzero_diagonal = true;
    std::string witness;
    std::vector<Scalar> diag;
};
EMxNReport em_xn_diagonal_check(int n, const ParameterSpec& spec);

/// <E_{n-1,1}^r, x_{1n}^s> against
/// d_{r,s} be^{r(r-1)/2} <E_{n-1,1}, x_{1n}>^r prod_{j=0}^{r-1} Phi_{r-j}(al^2).
struct ClosedFormEntry {
    int r = 0, s = 0;
    Scalar brute, closed;
    bool ok = false;
};
std::vector<ClosedFormEntry> em_xn_closed_form(int n, const ParameterSpec& spec, int rmax);


/// The radical inclusions behind the descent of the pairing to uhat x Hbar
/// (root mode, U-session variant U): <u, x_st^l> = d_st eps(u) for every U
/// generator u; <h_i^l, x_st> = d_st; <h_i^na a_i^{-1}, x_st> = d_st;
/// <h_i^nb b_i^{-1}, x_st> = d_st; and E_{k,j}^l, F_{k,j}^l pair to zero
/// with every Hbar basis lift and every O(M_n) word up to degree
/// l (k - j + 1) + 1.
std::vector<PairingAxiomResult> restricted_radical_checks(int n, const ParameterSpec& spec);

}  // namespace qgl
