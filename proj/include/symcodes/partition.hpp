#pragma once
// Integer partitions and their hook combinatorics: reverse-lexicographic
// enumeration, conjugation, hook numbers, the hook length formula, and the
// diagonal-hook data attached to self-conjugate partitions.
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcodes {

// Weakly decreasing positive parts.  The empty partition (of 0) is allowed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int rows() const { return static_cast<int>(parts.size()); }
    int operator[](int i) const { return parts[i]; }  // 0-based row
    bool empty() const { return parts.empty(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int mx) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int k = std::min(rem, mx); k >= 1; --k) {
            cur.push_back(k);
            self(self, rem - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Partition conjugate(const Partition& lam) {
    if (lam.empty()) return {};
    std::vector<int> c(lam[0], 0);
    for (int j = 0; j < lam[0]; ++j)
        for (int part : lam.parts)
            if (part >= j + 1) ++c[j];
    return Partition(std::move(c));
}

inline bool is_self_conjugate(const Partition& lam) { return conjugate(lam) == lam; }

// Hook number of the cell (i, j), 1-based: lam_i + lam'_j - (i + j) + 1.
inline int hook_number(const Partition& lam, int i, int j) {
    if (i < 1 || i > lam.rows() || j < 1 || j > lam[i - 1])
        throw std::invalid_argument("hook_number: cell " + std::to_string(i) + "," + std::to_string(j) +
                                    " outside " + lam.to_string());
    Partition lc = conjugate(lam);
    return lam[i - 1] + lc[j - 1] - (i + j) + 1;
}

// Degree of the irreducible S_n representation attached to lam, by the hook
// length formula d = n! / prod(hooks).  Exact in 64 bits for the degrees in
// scope here.
inline uint64_t dimension(const Partition& lam) {
    int n = lam.sum();
    if (n > 20) throw std::invalid_argument("dimension: partition too large for exact 64-bit evaluation");
    uint64_t fact = 1, hooks = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<uint64_t>(k);
    Partition lc = conjugate(lam);
    for (int i = 1; i <= lam.rows(); ++i)
        for (int j = 1; j <= lam[i - 1]; ++j)
            hooks *= static_cast<uint64_t>(lam[i - 1] + lc[j - 1] - (i + j) + 1);
    if (fact % hooks != 0) throw std::runtime_error("dimension: hook product does not divide n!");
    return fact / hooks;
}

// Diagonal data of a self-conjugate partition: length r of the main
// diagonal, the diagonal hook numbers h_11, ..., h_rr, and
// p_lambda = (-1)^((n-r)/2) * prod h_ii.
struct SelfConjData {
    Partition lambda;
    int r = 0;
    std::vector<int> diagonal_hooks;
    long long p_lambda = 0;
};

inline SelfConjData self_conj_data(const Partition& lam) {
    if (!is_self_conjugate(lam))
        throw std::invalid_argument("self_conj_data: " + lam.to_string() + " is not self-conjugate");
    SelfConjData d;
    d.lambda = lam;
    for (int i = 1; i <= lam.rows() && lam[i - 1] >= i; ++i) {
        d.diagonal_hooks.push_back(hook_number(lam, i, i));
        ++d.r;
    }
    int n = lam.sum();
    if ((n - d.r) % 2 != 0) throw std::runtime_error("self_conj_data: n - r must be even");
    long long prod = 1;
    for (int h : d.diagonal_hooks) prod *= h;
    d.p_lambda = (((n - d.r) / 2) % 2 == 0) ? prod : -prod;
    return d;
}

}  // namespace symcodes
