#pragma once
// Permutations of {1..n} in one-line notation, the symmetric and alternating
// groups as indexed element tables, their conjugacy classes (including the
// split classes of A_n), and small-group subgroup enumeration.
//
// Composition is the left action: (a*b)(i) = a(b(i)).  Groups are always
// enumerated in lexicographic order of one-line notation; that order is the
// canonical coordinate order used everywhere downstream (group algebra
// coefficient vectors, code coordinates).
#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"

namespace symcodes {

struct Permutation {
    std::vector<uint8_t> images;  // images[i-1] = pi(i), values in 1..n

    Permutation() = default;
    explicit Permutation(std::vector<uint8_t> one_line) : images(std::move(one_line)) { validate(); }
    explicit Permutation(const std::vector<int>& one_line) {
        images.reserve(one_line.size());
        for (int v : one_line) images.push_back(static_cast<uint8_t>(v));
        validate();
    }

    static Permutation identity(int n) {
        std::vector<uint8_t> img(n);
        std::iota(img.begin(), img.end(), uint8_t{1});
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(images.size()); }
    int apply(int i) const {
        if (i < 1 || i > degree()) throw std::invalid_argument("Permutation::apply: point out of range");
        return images[i - 1];
    }

    Permutation inverse() const {
        std::vector<uint8_t> inv(images.size());
        for (size_t i = 0; i < images.size(); ++i) inv[images[i] - 1] = static_cast<uint8_t>(i + 1);
        return Permutation(std::move(inv));
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    void validate() const {
        std::vector<bool> seen(images.size(), false);
        for (uint8_t v : images) {
            if (v < 1 || v > images.size() || seen[v - 1])
                throw std::invalid_argument("Permutation: not a valid one-line image list");
            seen[v - 1] = true;
        }
    }
};

// (a*b)(i) = a(b(i)): apply b first, then a.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<uint8_t> img(a.degree());
    for (int i = 0; i < a.degree(); ++i) img[i] = a.images[b.images[i] - 1];
    Permutation r;
    r.images = std::move(img);  // composition of valid permutations needs no re-validation
    return r;
}

inline int sign(const Permutation& p) {
    std::vector<bool> seen(p.degree(), false);
    int s = 1;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = p.images[j] - 1;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

// Cycle decomposition: cycles of length >= 2, each starting at its smallest
// point, ordered by that point.
inline std::vector<std::vector<int>> cycles(const Permutation& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.degree(), false);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            c.push_back(j + 1);
            j = p.images[j] - 1;
        }
        if (c.size() >= 2) out.push_back(std::move(c));
    }
    return out;
}

inline Partition cycle_type(const Permutation& p) {
    std::vector<int> lens;
    std::vector<bool> seen(p.degree(), false);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = p.images[j] - 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return Partition(std::move(lens));
}

inline Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycs) {
    std::vector<uint8_t> img(n);
    std::iota(img.begin(), img.end(), uint8_t{1});
    std::vector<bool> moved(n, false);
    for (const auto& c : cycs) {
        for (size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            if (a < 1 || a > n) throw std::invalid_argument("from_cycles: point out of range");
            if (moved[a - 1]) throw std::invalid_argument("from_cycles: point " + std::to_string(a) + " repeated");
            moved[a - 1] = true;
            img[a - 1] = static_cast<uint8_t>(b);
        }
    }
    return Permutation(std::move(img));
}

// "(1,2,3)(4,5)" for nontrivial cycles, "()" for the identity.
inline std::string cycle_string(const Permutation& p) {
    auto cs = cycles(p);
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
        s += "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        s += ")";
    }
    return s;
}

// Inverse of cycle_string; fixed points may be omitted, "()" is the identity.
inline Permutation parse_cycle_string(int n, const std::string& s) {
    std::vector<std::vector<int>> cycs;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("parse_cycle_string: expected '(' in " + s);
        size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("parse_cycle_string: unbalanced parens in " + s);
        std::string body = s.substr(i + 1, close - i - 1);
        if (!body.empty()) {
            std::vector<int> c;
            size_t pos = 0;
            while (pos < body.size()) {
                size_t comma = body.find(',', pos);
                if (comma == std::string::npos) comma = body.size();
                c.push_back(std::stoi(body.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            cycs.push_back(std::move(c));
        }
        i = close + 1;
    }
    return from_cycles(n, cycs);
}

// Lexicographic rank of a permutation among all of S_n (factorial basis).
inline int lex_rank(const Permutation& p) {
    int n = p.degree(), r = 0;
    uint64_t fact = 1;
    for (int k = 2; k < n; ++k) fact *= static_cast<uint64_t>(k);
    for (int i = 0; i < n - 1; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p.images[j] < p.images[i]) ++smaller;
        r += static_cast<int>(smaller * fact);
        if (n - 1 - i > 1) fact /= static_cast<uint64_t>(n - 1 - i);
    }
    return r;
}

enum class GroupKind { Sn, An };

inline std::string group_name(GroupKind k, int n) {
    return (k == GroupKind::Sn ? "S_" : "A_") + std::to_string(n);
}

// Does the S_n class of cycle type mu split into two A_n classes?
// Exactly when all parts are odd and pairwise distinct.
inline bool splits_in_an(const Partition& mu) {
    if (mu.empty()) return false;
    for (int i = 0; i < mu.rows(); ++i) {
        if (mu[i] % 2 == 0) return false;
        if (i && mu[i] == mu[i - 1]) return false;
    }
    return true;
}

// Canonical representative of the positively labelled split class:
// (1,...,mu_1)(mu_1+1,...,mu_1+mu_2)...
inline Permutation positive_representative(const Partition& mu) {
    if (!splits_in_an(mu))
        throw std::invalid_argument("positive_representative: " + mu.to_string() + " does not split in A_n");
    std::vector<std::vector<int>> cycs;
    int start = 1;
    for (int part : mu.parts) {
        std::vector<int> c(part);
        std::iota(c.begin(), c.end(), start);
        cycs.push_back(std::move(c));
        start += part;
    }
    return from_cycles(mu.sum(), cycs);
}

struct ConjugacyClass {
    Partition type;
    int split = 0;  // 0 unsplit, +1 / -1 for the two halves of a split type
    int rep = 0;    // rank of a representative
    std::vector<int> members;

    std::string label() const {
        return type.to_string() + (split > 0 ? "+" : split < 0 ? "-" : "");
    }
};

// An indexed copy of S_n or A_n: elements in lexicographic one-line order,
// constant-time rank lookup, optional multiplication table (degree <= 5),
// inverse table and conjugacy class data.  Instances are cached; get()
// hands out references that stay valid for the program lifetime.
class GroupTable {
public:
    GroupTable(GroupKind kind, int n) : kind_(kind), n_(n) {
        if (n < 1 || n > 7) throw std::invalid_argument("GroupTable: degree must be in [1,7]");
        uint64_t fact = 1;
        for (int k = 2; k <= n; ++k) fact *= static_cast<uint64_t>(k);
        sn_to_idx_.assign(fact, -1);
        Permutation p = Permutation::identity(n);
        for (uint64_t r = 0; r < fact; ++r) {
            if (kind == GroupKind::Sn || sign(p) == 1) {
                sn_to_idx_[r] = static_cast<int>(elements_.size());
                elements_.push_back(p);
            }
            std::next_permutation(p.images.begin(), p.images.end());
        }
        inv_.resize(elements_.size());
        for (size_t i = 0; i < elements_.size(); ++i) inv_[i] = rank_of(elements_[i].inverse());
        // Small groups get their multiplication table up front; A_7 and S_7
        // (13/51 MB) build theirs on first use.
        if (elements_.size() <= 720) ensure_mul_table();
        build_classes();
    }

    GroupKind kind() const { return kind_; }
    int degree() const { return n_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(int i) const { return elements_[i]; }
    std::string name() const { return group_name(kind_, n_); }

    int rank_of(const Permutation& p) const {
        if (p.degree() != n_) throw std::invalid_argument("GroupTable::rank_of: degree mismatch");
        int idx = sn_to_idx_[lex_rank(p)];
        if (idx < 0) throw std::invalid_argument("GroupTable::rank_of: " + cycle_string(p) + " is not in " + name());
        return idx;
    }
    bool contains(const Permutation& p) const {
        return p.degree() == n_ && sn_to_idx_[lex_rank(p)] >= 0;
    }

    int mul(int i, int j) const {
        ensure_mul_table();
        return mul_table_[static_cast<size_t>(i) * elements_.size() + j];
    }
    int inv(int i) const { return inv_[i]; }
    int identity_rank() const { return 0; }  // identity is lexicographically first

    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int class_of(int rank) const { return class_of_[rank]; }

    static const GroupTable& get(GroupKind kind, int n) {
        static std::mutex mu;
        static std::map<std::pair<int, int>, std::unique_ptr<GroupTable>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(static_cast<int>(kind), n);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, std::make_unique<GroupTable>(kind, n)).first;
        return *it->second;
    }

private:
    // Classes ordered by cycle type, identity type (1^n) first (reverse of
    // the partitions_of order), with a split class's + half before its - half.
    void build_classes() {
        std::map<Partition, std::vector<int>> buckets;
        for (size_t i = 0; i < elements_.size(); ++i)
            buckets[cycle_type(elements_[i])].push_back(static_cast<int>(i));
        auto all = partitions_of(n_);
        class_of_.assign(elements_.size(), -1);
        for (auto it = all.rbegin(); it != all.rend(); ++it) {
            auto b = buckets.find(*it);
            if (b == buckets.end()) continue;
            if (kind_ == GroupKind::An && splits_in_an(*it)) {
                Permutation r = positive_representative(*it);
                std::set<int> plus;
                for (const auto& x : elements_)
                    plus.insert(rank_of(compose(compose(x, r), x.inverse())));
                ConjugacyClass cp{*it, +1, rank_of(r), std::vector<int>(plus.begin(), plus.end())};
                ConjugacyClass cm{*it, -1, -1, {}};
                for (int m : b->second)
                    if (!plus.count(m)) cm.members.push_back(m);
                cm.rep = cm.members.front();
                if (cp.members.size() != cm.members.size())
                    throw std::runtime_error("GroupTable: split class halves differ in size");
                push_class(std::move(cp));
                push_class(std::move(cm));
            } else {
                push_class(ConjugacyClass{*it, 0, b->second.front(), b->second});
            }
        }
    }
    void push_class(ConjugacyClass c) {
        int idx = static_cast<int>(classes_.size());
        for (int m : c.members) class_of_[m] = idx;
        classes_.push_back(std::move(c));
    }

    void ensure_mul_table() const {
        std::call_once(mul_once_, [this] {
            size_t m = elements_.size();
            std::vector<uint16_t> t(m * m);
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j)
                    t[i * m + j] = static_cast<uint16_t>(rank_of(compose(elements_[i], elements_[j])));
            mul_table_ = std::move(t);
        });
    }

    GroupKind kind_;
    int n_;
    std::vector<Permutation> elements_;
    std::vector<int> sn_to_idx_;
    std::vector<int> inv_;
    mutable std::vector<uint16_t> mul_table_;
    mutable std::once_flag mul_once_;
    std::vector<ConjugacyClass> classes_;
    std::vector<int> class_of_;
};

// Subgroups are sorted rank lists over a fixed GroupTable.
using Subgroup = std::vector<int>;

// Subgroup generated by the given ranks (BFS closure under products).
inline Subgroup generated_subgroup(const GroupTable& g, const std::vector<int>& gens) {
    std::set<int> have{g.identity_rank()};
    std::vector<int> frontier(have.begin(), have.end());
    for (int x : gens)
        if (have.insert(x).second) frontier.push_back(x);
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int b : std::vector<int>(have.begin(), have.end())) {
                for (int c : {g.mul(a, b), g.mul(b, a)})
                    if (have.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    return Subgroup(have.begin(), have.end());
}

// All subgroups of prime order (the minimal nontrivial subgroups).
inline std::vector<Subgroup> prime_order_subgroups(const GroupTable& g) {
    std::set<Subgroup> out;
    for (int i = 0; i < g.size(); ++i) {
        Subgroup h = generated_subgroup(g, {i});
        size_t m = h.size();
        if (m < 2) continue;
        bool prime = true;
        for (size_t d = 2; d * d <= m; ++d)
            if (m % d == 0) { prime = false; break; }
        if (prime) out.insert(std::move(h));
    }
    return std::vector<Subgroup>(out.begin(), out.end());
}

// The full subgroup lattice, as the join closure of the cyclic subgroups.
// Every subgroup is a join of cyclic ones, so iterating pairwise joins to a
// fixed point enumerates all of them.  Guarded to |G| <= 120.
inline std::vector<Subgroup> all_subgroups(const GroupTable& g) {
    if (g.size() > 120) throw std::invalid_argument("all_subgroups: group order " + std::to_string(g.size()) + " exceeds the supported bound 120");
    std::set<Subgroup> subs;
    subs.insert(Subgroup{g.identity_rank()});
    for (int i = 0; i < g.size(); ++i) subs.insert(generated_subgroup(g, {i}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subgroup> cur(subs.begin(), subs.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> gens = cur[i];
                gens.insert(gens.end(), cur[j].begin(), cur[j].end());
                Subgroup join = generated_subgroup(g, gens);
                if (subs.insert(std::move(join)).second) grew = true;
            }
    }
    return std::vector<Subgroup>(subs.begin(), subs.end());
}

}  // namespace symcodes
