#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgtoric {

using Int = mpz_class;

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    /// Whitespace-separated dump, one row per line.
    std::string dump() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Integer vector indexed by edge id (1..m); entry b_e.
struct KernelVector {
    std::vector<Int> b;  // index 0 unused, size m+1

    int size() const { return static_cast<int>(b.size()) - 1; }

    std::vector<Int> plus() const;   // b+ : max(b_e, 0)
    std::vector<Int> minus() const;  // b- : -min(b_e, 0)
    bool is_zero() const;
};

/// Rank over the rationals, exact (fraction-free Bareiss elimination).
int exact_rank(IntMatrix m);

/// Basis of ker(M) over the integers as a saturated lattice: every integer
/// kernel vector is an integer combination of the returned vectors.
/// Column-style Hermite elimination with a unimodular transform.
std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m);

}  // namespace sgtoric
