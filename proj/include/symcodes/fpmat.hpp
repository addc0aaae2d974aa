#pragma once
// Dense matrices over a prime field F_p: reduced row echelon form, rank,
// row-space membership and equality.  Entries are canonical residues in
// [0, p).  Small sizes only (at most a few thousand rows), so plain
// Gauss-Jordan is fine.
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffield.hpp"

namespace symcodes {

struct FpMatrix {
    uint32_t p = 0;
    size_t cols = 0;
    std::vector<std::vector<uint32_t>> rows;

    FpMatrix() = default;
    FpMatrix(uint32_t p_, size_t cols_) : p(p_), cols(cols_) {}

    size_t row_count() const { return rows.size(); }

    void add_row(std::vector<uint32_t> r) {
        if (r.size() != cols) throw std::invalid_argument("FpMatrix::add_row: width mismatch");
        for (auto& v : r) v %= p;
        rows.push_back(std::move(r));
    }
};

// In-place Gauss-Jordan; returns the pivot column of each nonzero row.
// Zero rows are removed, so rows.size() == rank afterwards.
inline std::vector<size_t> rref(FpMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows.size(); ++c) {
        size_t piv = r;
        while (piv < m.rows.size() && m.rows[piv][c] == 0) ++piv;
        if (piv == m.rows.size()) continue;
        std::swap(m.rows[r], m.rows[piv]);
        uint64_t inv = inverse(Fp(m.rows[r][c], m.p)).v;
        for (size_t j = c; j < m.cols; ++j)
            m.rows[r][j] = static_cast<uint32_t>(m.rows[r][j] * inv % m.p);
        for (size_t i = 0; i < m.rows.size(); ++i) {
            if (i == r || m.rows[i][c] == 0) continue;
            uint64_t f = m.p - m.rows[i][c];  // subtract f * row r
            for (size_t j = c; j < m.cols; ++j)
                m.rows[i][j] = static_cast<uint32_t>((m.rows[i][j] + f * m.rows[r][j]) % m.p);
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows.resize(r);
    return pivots;
}

inline size_t rank(FpMatrix m) {
    rref(m);
    return m.rows.size();
}

// Is v in the row space of an already-reduced matrix?
inline bool in_row_space(const FpMatrix& reduced, const std::vector<size_t>& pivots,
                         std::vector<uint32_t> v) {
    if (v.size() != reduced.cols) throw std::invalid_argument("in_row_space: width mismatch");
    for (auto& x : v) x %= reduced.p;
    for (size_t r = 0; r < pivots.size(); ++r) {
        uint32_t coef = v[pivots[r]];
        if (coef == 0) continue;
        uint64_t f = reduced.p - coef;
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = static_cast<uint32_t>((v[j] + f * reduced.rows[r][j]) % reduced.p);
    }
    for (uint32_t x : v)
        if (x) return false;
    return true;
}

inline bool row_space_equal(FpMatrix a, FpMatrix b) {
    if (a.p != b.p || a.cols != b.cols) return false;
    rref(a);
    rref(b);
    return a.rows == b.rows;  // RREF is a canonical form
}

inline std::string matrix_to_text(const FpMatrix& m) {
    std::string s;
    for (const auto& row : m.rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) s += " ";
            s += std::to_string(row[j]);
        }
        s += "\n";
    }
    return s;
}

}  // namespace symcodes
