#pragma once

#include <stdexcept>
#include <vector>

namespace lwc {

// Colours c = (i, j), 0 <= i, j < L, stored row-major as c = i*L + j.
struct ColorSpace {
    int L = 1;

    int count() const { return L * L; }
    int index(int i, int j) const { return i * L + j; }
    int row(int c) const { return c / L; }
    int col(int c) const { return c % L; }
    int conj(int c) const { return index(col(c), row(c)); }
    bool is_lt(int c) const { return row(c) < col(c); }
    bool is_eq(int c) const { return row(c) == col(c); }
    bool is_gt(int c) const { return row(c) > col(c); }
    friend bool operator==(const ColorSpace&, const ColorSpace&) = default;
};

// an L x L nonnegative integer matrix, row-major
using ColorMatrix = std::vector<int>;

inline int matrix_total(const ColorMatrix& m) {
    int s = 0;
    for (int x : m) s += x;
    return s;
}

}  // namespace lwc
