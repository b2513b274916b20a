#pragma once
// Free noncommutative polynomials over Scalar, rewrite systems with
// normal-form reduction, bounded confluence checking and completion,
// and counting of irreducible words.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qgl/scalar.hpp"

namespace qgl {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Generator alphabet of a session.  The letter id is its position in
/// the generator order; `weight` feeds the weighted-degree component of
/// the monomial order.
struct Alphabet {
    std::vector<std::string> names;
    std::vector<int> weight;

    int size() const { return static_cast<int>(names.size()); }
    Letter add(const std::string& name, int w = 1);
    int find(const std::string& name) const;  // -1 if absent
    std::string word_to_string(const Word& w) const;
    int weighted_degree(const Word& w) const;
    /// Monomial order: weighted degree, then length, then lexicographic
    /// on letter ids.  Returns -1, 0, 1.
    int compare(const Word& x, const Word& y) const;
};

/// Canonical storage order for polynomial terms (length, then lex).
struct ShortLex {
    bool operator()(const Word& x, const Word& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = w.size();
        for (Letter l : w) h = h * 1000003u ^ l;
        return h;
    }
};

/// Finite scalar-weighted sum of words, zero coefficients absent.
class NCPoly {
public:
    using Map = std::map<Word, Scalar, ShortLex>;

    NCPoly() = default;
    static NCPoly term(const Word& w, const Scalar& c);
    static NCPoly constant(const Scalar& c) { return term({}, c); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void add_term(const Word& w, const Scalar& c);
    /// Coefficient of w, or nullptr.
    const Scalar* coeff(const Word& w) const;

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& y);
    NCPoly& operator-=(const NCPoly& y);
    friend NCPoly operator+(NCPoly x, const NCPoly& y) { return x += y; }
    friend NCPoly operator-(NCPoly x, const NCPoly& y) { return x -= y; }
    /// Concatenation product (no reduction).
    friend NCPoly operator*(const NCPoly& x, const NCPoly& y);
    NCPoly scaled(const Scalar& c) const;
    friend bool operator==(const NCPoly& x, const NCPoly& y);
    friend bool operator!=(const NCPoly& x, const NCPoly& y) { return !(x == y); }

    std::string to_string(const Alphabet& a) const;

private:
    Map terms_;
};

struct Rule {
    Word lhs;
    NCPoly rhs;
};

/// A report entry of confluence_check: an ambiguity whose two reduction
/// paths end in different normal forms.
struct Mismatch {
    Word word;
    NCPoly difference;
};

/// Rewrite system over an alphabet.  Every rule strictly decreases the
/// alphabet's monomial order, so reduction terminates.
class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(std::shared_ptr<const Alphabet> alphabet, Field field);
    RewriteSystem(const RewriteSystem& other);
    RewriteSystem& operator=(const RewriteSystem& other);

    const Alphabet& alphabet() const { return *alphabet_; }
    const Field& field() const { return field_; }
    std::shared_ptr<const Alphabet> alphabet_ptr() const { return alphabet_; }
    const std::vector<Rule>& rules() const { return rules_; }

    /// Add a rule lhs -> rhs; throws if some rhs word is not smaller.
    void add_rule(Word lhs, NCPoly rhs);
    /// Orient the relation p = 0 (largest word becomes the lhs) and add it.
    /// Returns false if p is zero.
    bool add_relation(const NCPoly& p);

    NCPoly reduce(const NCPoly& p) const;
    NCPoly reduce_word(const Word& w) const;
    bool is_reducible(const Word& w) const;
    /// Leftmost match of a rule lhs in w: returns rule index or -1.
    int find_match(const Word& w, std::size_t& pos) const;

    /// Reduce every ambiguity (overlap or inclusion of two lhs) whose word
    /// has length <= bound and report those whose paths disagree.
    std::vector<Mismatch> confluence_check(int bound) const;
    /// Bounded completion: resolve ambiguities of length <= bound by adding
    /// normalized differences as new rules.
    RewriteSystem completed(int bound, std::size_t max_rules = 20000) const;

    bool is_homogeneous() const;
    /// Number of irreducible words of length d (homogeneous systems only).
    long long graded_dimension(int d) const;
    /// Visit irreducible words of length <= max_len over the given letters
    /// (all letters if empty).  Returns the number of irreducible words of
    /// length exactly max_len + 1 (zero certifies a finite basis).
    long long enumerate_irreducible(int max_len, const std::function<void(const Word&)>& visit,
                                    const std::vector<Letter>& letters = {}) const;

    void set_cache_enabled(bool on) { cache_enabled_ = on; }
    void clear_cache() const;

private:
    std::shared_ptr<const Alphabet> alphabet_;
    Field field_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> by_first_;
    std::vector<std::vector<int>> by_last_;
    bool cache_enabled_ = true;
    mutable std::shared_mutex cache_mu_;
    mutable std::unordered_map<Word, NCPoly, WordHash> cache_;

    NCPoly reduce_uncached(const Word& w) const;
    bool suffix_reducible(const Word& w) const;
    void index_rule(int idx);
    struct Ambiguity {
        Word word;
        NCPoly path1, path2;
    };
    void ambiguities(int i, int j, int bound, std::vector<Ambiguity>& out) const;
};

/// Tensor leg: g^{-t} * w (t = 0 outside GL sessions).
struct Leg {
    int t = 0;
    Word w;
    friend bool operator<(const Leg& x, const Leg& y) {
        if (x.t != y.t) return x.t < y.t;
        if (x.w.size() != y.w.size()) return x.w.size() < y.w.size();
        return x.w < y.w;
    }
    friend bool operator==(const Leg& x, const Leg& y) { return x.t == y.t && x.w == y.w; }
};

using TensorKey = std::vector<Leg>;

/// Finite sum of scalar-weighted pure tensors of a fixed arity.
class Tensor {
public:
    using Map = std::map<TensorKey, Scalar>;
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const TensorKey& k, const Scalar& c);
    Tensor& operator+=(const Tensor& y);
    Tensor& operator-=(const Tensor& y);
    Tensor scaled(const Scalar& c) const;
    friend bool operator==(const Tensor& x, const Tensor& y);

private:
    Map terms_;
};

}  // namespace qgl
