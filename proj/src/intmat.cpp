#include "sgtoric/intmat.hpp"

#include <sstream>
#include <utility>

namespace sgtoric {

std::string IntMatrix::dump() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Int> KernelVector::plus() const {
    std::vector<Int> p(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] > 0) p[i] = b[i];
    return p;
}

std::vector<Int> KernelVector::minus() const {
    std::vector<Int> p(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] < 0) p[i] = -b[i];
    return p;
}

bool KernelVector::is_zero() const {
    for (const auto& x : b)
        if (x != 0) return false;
    return true;
}

int exact_rank(IntMatrix m) {
    const int nr = m.rows(), nc = m.cols();
    int rank = 0;
    Int prev = 1;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int i = row; i < nr; ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = col; j < nc; ++j) std::swap(m(piv, j), m(row, j));
        // Bareiss step: entries stay integral, divisions are exact.
        for (int i = row + 1; i < nr; ++i) {
            for (int j = col + 1; j < nc; ++j) {
                Int t = m(row, col) * m(i, j) - m(i, col) * m(row, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, col) = 0;
        }
        prev = m(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    // Work on a copy A; U starts as identity and tracks column operations,
    // so A_orig * U_full == A at all times.
    IntMatrix a = m;
    std::vector<std::vector<Int>> u(nc, std::vector<Int>(nc, 0));
    for (int j = 0; j < nc; ++j) u[j][j] = 1;

    auto swap_cols = [&](int p, int q) {
        if (p == q) return;
        for (int i = 0; i < nr; ++i) std::swap(a(i, p), a(i, q));
        std::swap(u[p], u[q]);
    };
    // col q += f * col p
    auto addmul_col = [&](int q, int p, const Int& f) {
        if (f == 0) return;
        for (int i = 0; i < nr; ++i) a(i, q) += f * a(i, p);
        for (int i = 0; i < nc; ++i) u[q][i] += f * u[p][i];
    };

    int lead = 0;  // next pivot column
    for (int r = 0; r < nr && lead < nc; ++r) {
        // Clear row r to the right of column `lead` by gcd column ops.
        bool any = false;
        for (int j = lead; j < nc; ++j)
            if (a(r, j) != 0) { any = true; break; }
        if (!any) continue;
        for (;;) {
            int best = -1;
            for (int j = lead; j < nc; ++j) {
                if (a(r, j) == 0) continue;
                if (best < 0 || mpz_cmpabs(a(r, j).get_mpz_t(), a(r, best).get_mpz_t()) < 0) best = j;
            }
            swap_cols(lead, best);
            bool done = true;
            for (int j = lead + 1; j < nc; ++j) {
                if (a(r, j) == 0) continue;
                Int q = a(r, j) / a(r, lead);  // truncated; remainder handled next sweep
                addmul_col(j, lead, -q);
                if (a(r, j) != 0) done = false;
            }
            if (done) break;
        }
        ++lead;
    }
    // Columns `lead`..nc-1 of A are zero; the matching columns of U span
    // ker(m) over Z, and the lattice is saturated since U is unimodular.
    std::vector<std::vector<Int>> basis;
    for (int j = lead; j < nc; ++j) basis.push_back(u[j]);
    return basis;
}

}  // namespace sgtoric
