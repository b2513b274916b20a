#include "qgl/ncpoly.hpp"

#include <algorithm>
#include <mutex>
#include <queue>
#include <sstream>

namespace qgl {

// ---------------------------------------------------------------------------
// Alphabet

Letter Alphabet::add(const std::string& name, int w) {
    names.push_back(name);
    weight.push_back(w);
    return static_cast<Letter>(names.size() - 1);
}

int Alphabet::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == name) return i;
    return -1;
}

std::string Alphabet::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (i) os << " ";
        os << names[w[i]];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

int Alphabet::weighted_degree(const Word& w) const {
    int d = 0;
    for (Letter l : w) d += weight[l];
    return d;
}

int Alphabet::compare(const Word& x, const Word& y) const {
    int dx = weighted_degree(x), dy = weighted_degree(y);
    if (dx != dy) return dx < dy ? -1 : 1;
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    if (x == y) return 0;
    return x < y ? -1 : 1;
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly NCPoly::term(const Word& w, const Scalar& c) {
    NCPoly p;
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

const Scalar* NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& y) {
    for (const auto& [w, c] : y.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& y) {
    for (const auto& [w, c] : y.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& x, const NCPoly& y) {
    NCPoly r;
    for (const auto& [u, c] : x.terms_)
        for (const auto& [v, d] : y.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.add_term(w, c * d);
        }
    return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return {};
    NCPoly r = *this;
    for (auto& [w, d] : r.terms_) d *= c;
    return r;
}

bool operator==(const NCPoly& x, const NCPoly& y) { return x.terms_ == y.terms_; }

std::string NCPoly::to_string(const Alphabet& a) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print largest words first under the alphabet order
    std::vector<const Map::value_type*> v;
    for (const auto& t : terms_) v.push_back(&t);
    std::sort(v.begin(), v.end(), [&](auto* p, auto* q) { return a.compare(p->first, q->first) > 0; });
    for (auto* t : v) {
        std::string c = t->second.to_string();
        bool multi = c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos;
        bool neg = !multi && !c.empty() && c[0] == '-';
        std::string body = neg ? c.substr(1) : (multi ? "(" + c + ")" : c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (t->first.empty()) {
            os << body;
        } else {
            if (body != "1") os << body << " ";
            os << a.word_to_string(t->first);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RewriteSystem

RewriteSystem::RewriteSystem(std::shared_ptr<const Alphabet> alphabet, Field field)
    : alphabet_(std::move(alphabet)), field_(std::move(field)) {
    by_first_.assign(alphabet_->size(), {});
    by_last_.assign(alphabet_->size(), {});
}

RewriteSystem::RewriteSystem(const RewriteSystem& o)
    : alphabet_(o.alphabet_), field_(o.field_), rules_(o.rules_), by_first_(o.by_first_), by_last_(o.by_last_),
      cache_enabled_(o.cache_enabled_) {}

RewriteSystem& RewriteSystem::operator=(const RewriteSystem& o) {
    if (this == &o) return *this;
    alphabet_ = o.alphabet_;
    field_ = o.field_;
    rules_ = o.rules_;
    by_first_ = o.by_first_;
    by_last_ = o.by_last_;
    cache_enabled_ = o.cache_enabled_;
    clear_cache();
    return *this;
}

void RewriteSystem::index_rule(int idx) {
    const Word& l = rules_[idx].lhs;
    by_first_[l.front()].push_back(idx);
    by_last_[l.back()].push_back(idx);
}

void RewriteSystem::add_rule(Word lhs, NCPoly rhs) {
    if (lhs.empty()) throw ValidationError("rewrite rule with empty left-hand side");
    for (const auto& [w, c] : rhs.terms())
        if (alphabet_->compare(w, lhs) >= 0)
            throw ValidationError("rewrite rule does not decrease the monomial order: " +
                                  alphabet_->word_to_string(lhs) + " -> " + rhs.to_string(*alphabet_));
    rules_.push_back({std::move(lhs), std::move(rhs)});
    index_rule(static_cast<int>(rules_.size()) - 1);
    clear_cache();
}

bool RewriteSystem::add_relation(const NCPoly& p) {
    if (p.is_zero()) return false;
    const Word* lead = nullptr;
    for (const auto& [w, c] : p.terms())
        if (!lead || alphabet_->compare(w, *lead) > 0) lead = &w;
    Word lhs = *lead;
    Scalar c = *p.coeff(lhs);
    NCPoly rhs;
    Scalar inv = c.inverse();
    for (const auto& [w, d] : p.terms())
        if (w != lhs) rhs.add_term(w, -(d * inv));
    add_rule(std::move(lhs), std::move(rhs));
    return true;
}

void RewriteSystem::clear_cache() const {
    std::unique_lock lock(cache_mu_);
    cache_.clear();
}

int RewriteSystem::find_match(const Word& w, std::size_t& pos) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (int r : by_first_[w[i]]) {
            const Word& l = rules_[r].lhs;
            if (i + l.size() > w.size()) continue;
            if (std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(i))) {
                pos = i;
                return r;
            }
        }
    }
    return -1;
}

bool RewriteSystem::is_reducible(const Word& w) const {
    std::size_t pos;
    return find_match(w, pos) >= 0;
}

bool RewriteSystem::suffix_reducible(const Word& w) const {
    for (int r : by_last_[w.back()]) {
        const Word& l = rules_[r].lhs;
        if (l.size() > w.size()) continue;
        if (std::equal(l.begin(), l.end(), w.end() - static_cast<long>(l.size()))) return true;
    }
    return false;
}

namespace {

struct OrderDesc {
    const Alphabet* a;
    bool operator()(const Word& x, const Word& y) const { return a->compare(x, y) > 0; }
};

}  // namespace

NCPoly RewriteSystem::reduce_uncached(const Word& w0) const {
    std::map<Word, Scalar, OrderDesc> work(OrderDesc{alphabet_.get()});
    NCPoly result;
    work.emplace(w0, field_.one());
    while (!work.empty()) {
        auto it = work.begin();
        Word u = it->first;
        Scalar c = it->second;
        work.erase(it);
        std::size_t pos;
        int r = find_match(u, pos);
        if (r < 0) {
            result.add_term(u, c);
            continue;
        }
        const Rule& rule = rules_[r];
        for (const auto& [v, d] : rule.rhs.terms()) {
            Word x(u.begin(), u.begin() + static_cast<long>(pos));
            x.insert(x.end(), v.begin(), v.end());
            x.insert(x.end(), u.begin() + static_cast<long>(pos + rule.lhs.size()), u.end());
            Scalar cd = c * d;
            auto jt = work.find(x);
            if (jt == work.end()) {
                work.emplace(std::move(x), cd);
            } else {
                jt->second += cd;
                if (jt->second.is_zero()) work.erase(jt);
            }
        }
    }
    return result;
}

NCPoly RewriteSystem::reduce_word(const Word& w) const {
    if (!is_reducible(w)) return NCPoly::term(w, field_.one());
    if (cache_enabled_) {
        std::shared_lock lock(cache_mu_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    NCPoly r = reduce_uncached(w);
    if (cache_enabled_) {
        std::unique_lock lock(cache_mu_);
        if (cache_.size() > 2000000) cache_.clear();
        cache_.emplace(w, r);
    }
    return r;
}

NCPoly RewriteSystem::reduce(const NCPoly& p) const {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        std::size_t pos;
        if (find_match(w, pos) < 0) {
            out.add_term(w, c);
            continue;
        }
        NCPoly r = reduce_word(w);
        for (const auto& [v, d] : r.terms()) out.add_term(v, c * d);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ambiguities, confluence and completion

void RewriteSystem::ambiguities(int i, int j, int bound, std::vector<Ambiguity>& out) const {
    const Rule& r1 = rules_[i];
    const Rule& r2 = rules_[j];
    const Word& l1 = r1.lhs;
    const Word& l2 = r2.lhs;
    auto splice = [](const Word& pre, const NCPoly& mid, const Word& post) {
        NCPoly r;
        for (const auto& [w, c] : mid.terms()) {
            Word x = pre;
            x.insert(x.end(), w.begin(), w.end());
            x.insert(x.end(), post.begin(), post.end());
            r.add_term(x, c);
        }
        return r;
    };
    // overlaps: proper suffix of l1 equals proper prefix of l2
    for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (!std::equal(l1.end() - static_cast<long>(k), l1.end(), l2.begin())) continue;
        Word w = l1;
        w.insert(w.end(), l2.begin() + static_cast<long>(k), l2.end());
        if (static_cast<int>(w.size()) > bound) continue;
        Word tail(l2.begin() + static_cast<long>(k), l2.end());
        Word head(l1.begin(), l1.end() - static_cast<long>(k));
        out.push_back({w, splice({}, r1.rhs, tail), splice(head, r2.rhs, {})});
    }
    // inclusions: l2 is a factor of l1
    if (i != j && l2.size() <= l1.size() && static_cast<int>(l1.size()) <= bound) {
        for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
            if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<long>(p))) continue;
            Word head(l1.begin(), l1.begin() + static_cast<long>(p));
            Word tail(l1.begin() + static_cast<long>(p + l2.size()), l1.end());
            out.push_back({l1, r1.rhs, splice(head, r2.rhs, tail)});
        }
    }
}

std::vector<Mismatch> RewriteSystem::confluence_check(int bound) const {
    std::vector<Mismatch> report;
    const int nr = static_cast<int>(rules_.size());
    std::vector<Ambiguity> amb;
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j) {
            amb.clear();
            ambiguities(i, j, bound, amb);
            for (const auto& a : amb) {
                NCPoly d = reduce(a.path1) - reduce(a.path2);
                if (!d.is_zero()) report.push_back({a.word, d});
            }
        }
    return report;
}

RewriteSystem RewriteSystem::completed(int bound, std::size_t max_rules) const {
    RewriteSystem sys(*this);
    sys.set_cache_enabled(false);
    struct Item {
        std::size_t len;
        std::size_t seq;
        Ambiguity a;
    };
    auto cmp = [](const Item& x, const Item& y) {
        return x.len != y.len ? x.len > y.len : x.seq > y.seq;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
    std::size_t seq = 0;
    std::vector<Ambiguity> tmp;
    auto push_pairs = [&](int i, int j) {
        tmp.clear();
        sys.ambiguities(i, j, bound, tmp);
        for (auto& a : tmp) queue.push({a.word.size(), seq++, std::move(a)});
    };
    const int nr = static_cast<int>(sys.rules_.size());
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j) push_pairs(i, j);
    while (!queue.empty()) {
        Item it = queue.top();
        queue.pop();
        NCPoly d = sys.reduce(it.a.path1) - sys.reduce(it.a.path2);
        if (d.is_zero()) continue;
        sys.add_relation(d);
        if (sys.rules_.size() > max_rules) throw ComputationError("completion exceeded the rule cap");
        int k = static_cast<int>(sys.rules_.size()) - 1;
        for (int i = 0; i <= k; ++i) {
            push_pairs(i, k);
            if (i != k) push_pairs(k, i);
        }
    }
    sys.set_cache_enabled(true);
    return sys;
}

bool RewriteSystem::is_homogeneous() const {
    for (const auto& r : rules_)
        for (const auto& [w, c] : r.rhs.terms())
            if (w.size() != r.lhs.size()) return false;
    return true;
}

long long RewriteSystem::enumerate_irreducible(int max_len, const std::function<void(const Word&)>& visit,
                                               const std::vector<Letter>& letters) const {
    std::vector<Letter> alpha = letters;
    if (alpha.empty())
        for (int i = 0; i < alphabet_->size(); ++i) alpha.push_back(static_cast<Letter>(i));
    long long beyond = 0;
    Word w;
    std::function<void()> rec = [&]() {
        if (visit) visit(w);
        for (Letter l : alpha) {
            w.push_back(l);
            if (!suffix_reducible(w)) {
                if (static_cast<int>(w.size()) <= max_len)
                    rec();
                else
                    ++beyond;
            }
            w.pop_back();
        }
    };
    rec();
    return beyond;
}

long long RewriteSystem::graded_dimension(int d) const {
    if (!is_homogeneous()) throw ValidationError("graded_dimension requires a homogeneous rewrite system");
    if (d < 0) return 0;
    long long count = 0;
    enumerate_irreducible(d, [&](const Word& w) {
        if (static_cast<int>(w.size()) == d) ++count;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Tensor

void Tensor::add_term(const TensorKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Tensor& Tensor::operator+=(const Tensor& y) {
    for (const auto& [k, c] : y.terms_) add_term(k, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& y) {
    for (const auto& [k, c] : y.terms_) add_term(k, -c);
    return *this;
}

Tensor Tensor::scaled(const Scalar& c) const {
    Tensor r;
    for (const auto& [k, d] : terms_) r.add_term(k, d * c);
    return r;
}

bool operator==(const Tensor& x, const Tensor& y) { return x.terms_ == y.terms_; }

}  // namespace qgl
