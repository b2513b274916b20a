#pragma once
// Subgroup-datum calculus: the position sets attached to I_+, I_-, finite
// matrix groups with their abelianization and character groups, datum
// validation, dimension formulas, the partial order on data and the
// classification predicates.
//
// Characters of the torus T = <h_1, ..., h_n> of uhat are vectors
// (c_1, ..., c_n) of residues mod l (h_i -> q^{c_i}).  Characters of a
// finite matrix group are stored by their values on the group generators
// as elements of Q/Z (a value r stands for exp(2 pi i r)).

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qgl/scalar.hpp"

namespace qgl {

using CharVec = std::vector<int>;
using QZVec = std::vector<Rat>;
using Mat = std::vector<std::vector<Scalar>>;

/// Representative of r in Q/Z, in [0, 1).
Rat qz(const Rat& r);

struct PositionSets {
    std::vector<std::pair<int, int>> plus, minus;  // 1-based (row, column)
    std::vector<std::vector<bool>> forced_zero;   // 0-based n x n pattern of L
};
PositionSets position_sets(int n, const std::vector<int>& iplus, const std::vector<int>& iminus);

/// Smith normal form of an integer matrix: returns the diagonal entries
/// d_1 | d_2 | ... (length min(rows, cols)) and the unimodular column
/// transform Q with P A Q = diag(d).
struct SmithForm {
    std::vector<Int> diagonal;
    std::vector<std::vector<Int>> Q;
};
SmithForm smith_normal_form(std::vector<std::vector<Int>> a, std::size_t cols);

class FiniteMatrixGroup {
public:
    /// Closure of the generators under multiplication; throws
    /// ComputationError beyond `cap` elements and ValidationError on a
    /// singular or malformed generator.
    FiniteMatrixGroup(int n, const Field& f, std::vector<Mat> generators, std::size_t cap = 10000);

    int n() const { return n_; }
    const Field& field() const { return field_; }
    const std::vector<Mat>& generators() const { return gens_; }
    const std::vector<Mat>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }
    /// Index of a matrix in elements(), or -1.
    long index_of(const Mat& m) const;
    /// Generator counts of a word representing element i.
    const std::vector<long>& exponent_vector(std::size_t i) const { return expvec_[i]; }
    bool all_diagonal() const;

    /// Order of the commutator subgroup [G, G] (by closure of commutators).
    std::size_t commutator_order() const { return commutator_order_; }
    /// Invariant factors (> 1) of the abelianization G/[G, G].
    const std::vector<Int>& invariant_factors() const { return inv_factors_; }
    /// Generators of the character group, as values on the group generators.
    const std::vector<QZVec>& character_generators() const { return char_gens_; }
    /// All characters (bounded by `cap`).
    std::vector<QZVec> characters(std::size_t cap = 10000) const;
    /// Values on the generators define a character iff they kill every relation.
    bool is_character(const QZVec& values) const;
    /// chi(element i).
    Rat character_value(const QZVec& chi, std::size_t i) const;

    static std::string key(const Mat& m);

private:
    int n_;
    Field field_;
    std::vector<Mat> gens_, elems_;
    std::vector<std::vector<long>> expvec_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<Int>> relations_;                  // lattice basis of abelian relations
    std::size_t commutator_order_ = 1;
    std::vector<Int> inv_factors_;
    std::vector<QZVec> char_gens_;
    std::vector<Int> char_orders_;
};

struct SubgroupDatum {
    std::string name;
    int n = 2;
    ParameterSpec spec;
    std::vector<int> iplus, iminus;
    std::vector<CharVec> N;                    // generators
    std::shared_ptr<FiniteMatrixGroup> gamma;  // sigma = inclusion
    std::vector<QZVec> delta;                  // delta(N-generator k) on Gamma generators
};

/// {"n","ell","na","nb","Iplus","Iminus","N","Gamma","delta"}, optional "name".
SubgroupDatum datum_from_json(const nlohmann::json& j);
nlohmann::json datum_to_json(const SubgroupDatum& d);
std::vector<SubgroupDatum> load_corpus(const std::string& path);

struct Predicates {
    bool semisimple = false;
    bool pointed_possible = false;
    bool dual_pointed_possible = false;
    bool pulenta = false;
    bool pulenta_strong = false;
};

struct DatumInvariants {
    PositionSets positions;
    std::vector<CharVec> M_I;       // characters killing w_i (i in I_+), w'_j (j in I_-)
    std::vector<CharVec> N_elems;   // the subgroup generated by N
    std::vector<CharVec> Sigma;     // annihilator of N in T
    std::size_t gamma_order = 1;
    long long dim_uhatl = 0;        // l^{n^2 - |I_+ u I_-|}
    long long dim_H = 0;            // l^{|I_+| + |I_-|} l^n / |N|
    long long dim_H_pbw = 0;        // dim uhat(l) / |N|
    long long dim_Alsigma = 0;      // |Gamma| dim uhat(l)
    long long dim_AD = 0;           // |Gamma| dim H
    Predicates predicates;
};

struct DatumReport {
    bool valid = true;
    std::vector<std::string> errors;  // one per violated invariant, with witness
    DatumInvariants inv;
};

/// Checks every datum invariant and computes the invariants (the
/// invariants are filled in even when the datum is invalid, as far as
/// they are defined).
DatumReport datum_validate(const SubgroupDatum& d);
/// Throws ValidationError listing the errors if the datum is invalid.
DatumInvariants datum_dims(const SubgroupDatum& d);
Predicates datum_predicates(const SubgroupDatum& d);

enum class DatumOrder { incomparable, le, ge, equivalent };
std::string datum_order_name(DatumOrder o);
/// d <= d2 per the order on data (see README); `why` receives the first
/// failing condition.
bool datum_le(const SubgroupDatum& d, const SubgroupDatum& d2, std::string* why = nullptr);
DatumOrder datum_compare(const SubgroupDatum& d, const SubgroupDatum& d2);

/// All elements of (Z/l)^n killing the given linear forms mod l.
std::vector<CharVec> kernel_mod(const std::vector<std::vector<int>>& forms, int n, int ell);
/// Subgroup of (Z/l)^n generated by the given vectors.
std::vector<CharVec> span_mod(const std::vector<CharVec>& gens, int n, int ell);

}  // namespace qgl
