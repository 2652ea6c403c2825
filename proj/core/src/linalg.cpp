#include "johnson/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace johnson {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

namespace {

// Elimination runs on integer rows (numerators only; row scaling does not
// change the row space, hence neither the RREF nor the kernel). Content is
// stripped after every update to keep entries near their minimal size.
struct IntRows {
    std::size_t cols = 0;
    std::vector<std::vector<Int>> r;
};

IntRows to_int_rows(const RationalMatrix& m) {
    IntRows out;
    out.cols = m.cols();
    out.r.assign(m.rows(), {});
    Int lcm, g;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        auto& row = out.r[i];
        row.resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m(i, j);
            row[j] = q.get_num() * (lcm / q.get_den());
        }
    }
    return out;
}

void strip_content(std::vector<Int>& row) {
    Int g = 0;
    for (const Int& e : row) {
        if (e == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (Int& e : row)
        if (e != 0) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

// row_i <- row_i * p - pr * e  (p = pr[col], e = row_i[col]), then strip.
void eliminate(std::vector<Int>& ri, const std::vector<Int>& pr, std::size_t col, Int& tmp) {
    const Int p = pr[col];
    const Int e = ri[col];
    for (std::size_t j = 0; j < ri.size(); ++j) {
        ri[j] *= p;
        if (pr[j] != 0) {
            tmp = pr[j] * e;
            ri[j] -= tmp;
        }
    }
    strip_content(ri);
}

// Full Gauss-Jordan on integer rows: forward pass picks the first row with a
// nonzero entry in each column, the backward pass clears above the pivots.
std::vector<std::size_t> gauss_jordan(IntRows& m) {
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    Int tmp;
    for (std::size_t col = 0; col < m.cols && prow < m.r.size(); ++col) {
        std::size_t sel = prow;
        while (sel < m.r.size() && m.r[sel][col] == 0) ++sel;
        if (sel == m.r.size()) continue;
        std::swap(m.r[prow], m.r[sel]);
        for (std::size_t i = prow + 1; i < m.r.size(); ++i)
            if (m.r[i][col] != 0) eliminate(m.r[i], m.r[prow], col, tmp);
        pivots.push_back(col);
        ++prow;
    }
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t col = pivots[k];
        for (std::size_t i = 0; i < k; ++i)
            if (m.r[i][col] != 0) eliminate(m.r[i], m.r[k], col, tmp);
    }
    return pivots;
}

}  // namespace

RrefResult rref(const RationalMatrix& m) {
    IntRows rows = to_int_rows(m);
    std::vector<std::size_t> pivots = gauss_jordan(rows);
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const Int& p = rows.r[k][pivots[k]];
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (rows.r[k][j] != 0) out(k, j) = make_rat(rows.r[k][j], p);
    }
    return RrefResult{std::move(out), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) {
    IntRows rows = to_int_rows(m);
    return gauss_jordan(rows).size();
}

std::vector<std::vector<Rat>> nullspace(const RationalMatrix& m) {
    RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.matrix(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const RationalMatrix& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return SolveInconsistent{};

    std::vector<Rat> x(m.cols());
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.matrix(k, m.cols());
    if (rr.pivots.size() == m.cols()) return SolveUnique{std::move(x)};

    // Kernel comes from the coefficient block of the same RREF (the pivot set
    // of m equals the pivot set of [m | b] here, since the system is consistent).
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> kernel;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.matrix(k, free);
        kernel.push_back(std::move(v));
    }
    return SolveUnderdetermined{std::move(x), std::move(kernel)};
}

std::vector<Rat> matvec(const RationalMatrix& m, const std::vector<Rat>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<Rat> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && v[j] != 0) s += m(i, j) * v[j];
        out[i] = std::move(s);
    }
    return out;
}

}  // namespace johnson
