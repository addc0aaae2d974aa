#pragma once
// Group codes: an ideal (F_p G)e as a linear [n, k, d] code over F_p, in the
// coordinate order of the group enumeration.  Generator matrices are the
// reduced row echelon form of the translation rows g·e.  Minimum distance
// comes from exhaustive enumeration — a reflected mixed-radix Gray walk that
// changes one message digit per step — within an explicit budget, falling
// back to seeded random sampling (an uncertified upper bound) beyond it.
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffield.hpp"
#include "fpmat.hpp"
#include "galg.hpp"

namespace symcodes {

struct LinearCode {
    uint32_t p = 0;
    size_t length = 0;
    FpMatrix gen;  // RREF generator matrix; k = gen.row_count()

    size_t k() const { return gen.row_count(); }
};

// The code spanned by the ideal of e.  Codes are prime-field objects here;
// extension fields would need extension coefficients.
inline LinearCode ideal_to_code(const GAElement& e) {
    if (e.field().f != 1)
        throw std::invalid_argument("ideal_to_code: codes are computed over prime fields only");
    if (e.is_zero()) throw std::invalid_argument("ideal_to_code: zero ideal");
    LinearCode c;
    c.p = e.field().p;
    c.length = static_cast<size_t>(e.size());
    FpMatrix rows = ideal_row_matrix(e);
    rref(rows);
    c.gen = std::move(rows);
    return c;
}

struct ScanBudget {
    uint64_t max_words = 100'000'000;  // exhaustive scan cutoff, in codewords
    uint64_t samples = 200'000;        // sampling effort past the cutoff
};

struct DistanceResult {
    int distance = 0;        // exact, or the best upper bound found
    bool certified = false;  // true iff every nonzero codeword was examined
    uint64_t examined = 0;
};

namespace detail {

// q^k if it is <= cap, otherwise nullopt.
inline std::optional<uint64_t> pow_checked(uint64_t q, size_t k, uint64_t cap) {
    uint64_t r = 1;
    for (size_t i = 0; i < k; ++i) {
        if (r > cap / q) return std::nullopt;
        r *= q;
    }
    return r;
}

// Visit every nonzero codeword once, by Gray-stepping the message word so
// that each step adds or subtracts a single generator row.  Calls
// visit(weight) per codeword and returns the number of visits.
template <class Visit>
inline uint64_t gray_walk(const LinearCode& code, Visit&& visit) {
    size_t k = code.k();
    uint32_t p = code.p;
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> supp(k);  // (position, value)
    for (size_t r = 0; r < k; ++r)
        for (size_t pos = 0; pos < code.length; ++pos)
            if (code.gen.rows[r][pos]) supp[r].push_back({static_cast<uint32_t>(pos), code.gen.rows[r][pos]});
    std::vector<uint32_t> a(k, 0), cur(code.length, 0);
    std::vector<int> o(k, +1);
    std::vector<size_t> f(k + 1);
    for (size_t i = 0; i <= k; ++i) f[i] = i;
    size_t weight = 0;
    uint64_t visits = 0;
    for (;;) {
        size_t j = f[0];
        f[0] = 0;
        if (j == k) break;
        int delta = o[j];
        a[j] += delta;
        if (a[j] == 0 || a[j] == p - 1) {
            o[j] = -o[j];
            f[j] = f[j + 1];
            f[j + 1] = j + 1;
        }
        uint64_t add = delta == 1 ? 1 : p - 1;
        for (auto [pos, val] : supp[j]) {
            uint32_t nv = static_cast<uint32_t>((cur[pos] + add * val) % p);
            weight += (nv != 0);
            weight -= (cur[pos] != 0);
            cur[pos] = nv;
        }
        ++visits;
        visit(weight);
    }
    return visits;
}

}  // namespace detail

// Exact when q^k - 1 fits the budget; otherwise a sampling upper bound.
// The sampler draws digits as rng() % p so results are identical across
// platforms for a fixed seed.
inline DistanceResult min_distance(const LinearCode& code, const ScanBudget& budget = {}, uint64_t seed = 1) {
    if (code.k() == 0) throw std::invalid_argument("min_distance: the zero code has no distance");
    if (detail::pow_checked(code.p, code.k(), budget.max_words)) {
        DistanceResult r;
        int best = INT_MAX;
        r.examined = detail::gray_walk(code, [&](size_t w) {
            if (static_cast<int>(w) < best) best = static_cast<int>(w);
        });
        r.distance = best;
        r.certified = true;
        return r;
    }
    std::mt19937_64 rng(seed);
    size_t k = code.k();
    std::vector<uint32_t> msg(k), cur(code.length);
    int best = INT_MAX;
    uint64_t examined = 0;
    for (uint64_t s = 0; s < budget.samples; ++s) {
        bool nonzero = false;
        for (size_t i = 0; i < k; ++i) {
            msg[i] = static_cast<uint32_t>(rng() % code.p);
            nonzero = nonzero || msg[i];
        }
        if (!nonzero) continue;
        std::fill(cur.begin(), cur.end(), 0u);
        for (size_t i = 0; i < k; ++i) {
            if (!msg[i]) continue;
            for (size_t pos = 0; pos < code.length; ++pos)
                cur[pos] = static_cast<uint32_t>((cur[pos] + static_cast<uint64_t>(msg[i]) * code.gen.rows[i][pos]) % code.p);
        }
        int w = 0;
        for (uint32_t v : cur) w += (v != 0);
        if (w < best) best = w;
        ++examined;
    }
    if (best == INT_MAX) throw std::runtime_error("min_distance: sampling produced no nonzero codeword");
    return {best, false, examined};
}

// Full weight enumerator (index = weight, value = codeword count, including
// the zero word).  Throws std::length_error past the enumeration budget.
inline std::map<int, uint64_t> weight_distribution(const LinearCode& code, const ScanBudget& budget = {}) {
    if (code.k() == 0) return {{0, 1}};
    if (!detail::pow_checked(code.p, code.k(), budget.max_words))
        throw std::length_error("weight_distribution: q^k exceeds the enumeration budget");
    std::map<int, uint64_t> hist;
    hist[0] = 1;
    detail::gray_walk(code, [&](size_t w) { ++hist[static_cast<int>(w)]; });
    return hist;
}

// Best known minimum distance for the [length, k] pairs over F_q that the
// bundled examples touch (public code-table values), plus the trivially
// optimal k = 1 and k = length cases.
inline std::optional<int> best_known_distance(size_t length, size_t k, uint32_t q) {
    if (k == 1) return static_cast<int>(length);  // repetition codes meet the Singleton bound
    if (k == length) return 1;
    struct Entry {
        size_t n, k;
        uint32_t q;
        int d;
    };
    static constexpr Entry table[] = {
        {3, 2, 5, 2},
        {12, 9, 5, 3},
        {12, 2, 5, 10},
        {12, 9, 7, 3},
    };
    for (const auto& e : table)
        if (e.n == length && e.k == k && e.q == q) return e.d;
    return std::nullopt;
}

}  // namespace symcodes
