#include "cohomotopy/smith.hpp"

#include <sstream>

namespace cohomotopy {

std::string IntMat::to_string() const {
    std::ostringstream ss;
    ss << *this;
    return ss.str();
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os;
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Smallest nonzero |entry| of D(t:, t:); ties by lowest row then column.
bool find_pivot(const IntMat& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

bool pivot_clears(const IntMat& d, std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d(t, j) != 0) return false;
    return true;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithResult r;
    r.D = m;
    r.U = IntMat::identity(rows);
    r.Uinv = IntMat::identity(rows);
    r.V = IntMat::identity(cols);
    r.Vinv = IntMat::identity(cols);
    IntMat& d = r.D;

    // Row op L on D pairs with the same op on U and the inverse column op
    // on Uinv, keeping U*Uinv = I; columns mirror this on V.
    auto row_swap = [&](std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        r.U.swap_rows(i, j);
        r.Uinv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        r.V.swap_cols(i, j);
        r.Vinv.swap_rows(i, j);
    };
    auto row_add = [&](std::size_t i, std::size_t j, const Int& c) {
        d.add_row(i, j, c);
        r.U.add_row(i, j, c);
        r.Uinv.add_col(j, i, -c);
    };
    auto col_add = [&](std::size_t i, std::size_t j, const Int& c) {
        d.add_col(i, j, c);
        r.V.add_col(i, j, c);
        r.Vinv.add_row(j, i, -c);
    };
    auto row_negate = [&](std::size_t i) {
        d.negate_row(i);
        r.U.negate_row(i);
        for (std::size_t k = 0; k < rows; ++k) r.Uinv(k, i) = -r.Uinv(k, i);
    };

    const std::size_t nmin = rows < cols ? rows : cols;
    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_pivot(d, t, pr, pc)) break;
        row_swap(t, pr);
        col_swap(t, pc);

        while (!pivot_clears(d, t)) {
            for (std::size_t i = t + 1; i < rows; ++i)
                if (d(i, t) != 0) {
                    Int q = d(i, t) / d(t, t);
                    if (q != 0) row_add(i, t, -q);
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (d(t, j) != 0) {
                    Int q = d(t, j) / d(t, t);
                    if (q != 0) col_add(j, t, -q);
                }
            // Remainders may survive when the pivot does not divide them;
            // pull the smallest entry back into the pivot slot and repeat.
            if (!pivot_clears(d, t)) {
                if (!find_pivot(d, t, pr, pc)) break;
                row_swap(t, pr);
                col_swap(t, pc);
            }
        }

        // Enforce the divisibility chain: any entry of the trailing block
        // not divisible by the pivot gets mixed into row t and re-reduced.
        bool redo = true;
        while (redo) {
            redo = false;
            for (std::size_t i = t + 1; i < rows && !redo; ++i)
                for (std::size_t j = t + 1; j < cols && !redo; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_add(t, i, 1);
                        redo = true;
                    }
            if (redo) {
                while (!pivot_clears(d, t)) {
                    std::size_t qr = t, qc = t;
                    find_pivot(d, t, qr, qc);
                    row_swap(t, qr);
                    col_swap(t, qc);
                    for (std::size_t i = t + 1; i < rows; ++i)
                        if (d(i, t) != 0) {
                            Int q = d(i, t) / d(t, t);
                            if (q != 0) row_add(i, t, -q);
                        }
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (d(t, j) != 0) {
                            Int q = d(t, j) / d(t, t);
                            if (q != 0) col_add(j, t, -q);
                        }
                }
            }
        }

        if (d(t, t) < 0) row_negate(t);
    }
    return r;
}

}  // namespace cohomotopy
