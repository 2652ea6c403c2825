#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "johnson/exact.hpp"

namespace johnson {

/// Dense exact-rational matrix, row major. Dimensions are fixed at
/// construction; entries stay canonical.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;  // pivot columns, increasing
};

/// Exact reduced row-echelon form. The RREF of a matrix is canonical, so the
/// result is identical no matter how the elimination is organized.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right kernel, one vector per free column (in column order).
/// The vector for free column c has a 1 in position c.
std::vector<std::vector<Rat>> nullspace(const RationalMatrix& m);

struct SolveUnique {
    std::vector<Rat> x;
};
struct SolveUnderdetermined {
    std::vector<Rat> particular;               // free variables set to 0
    std::vector<std::vector<Rat>> kernel;
};
struct SolveInconsistent {};
using SolveResult = std::variant<SolveUnique, SolveUnderdetermined, SolveInconsistent>;

/// Exact classification of m x = b with witnesses. b.size() must equal rows.
SolveResult solve(const RationalMatrix& m, const std::vector<Rat>& b);

/// m * v for a column vector v.
std::vector<Rat> matvec(const RationalMatrix& m, const std::vector<Rat>& v);

}  // namespace johnson
