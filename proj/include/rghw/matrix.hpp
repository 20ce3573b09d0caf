#pragma once

#include <optional>
#include <vector>

#include "rghw/field.hpp"

namespace rghw {

/// Dense matrix over F_q, row major. n stays small (a few hundred at most)
/// in every use case, so no sparse or blocked variants.
struct MatrixFq {
    FieldPtr field;
    int rows = 0, cols = 0;
    std::vector<felt> a;

    MatrixFq() = default;
    MatrixFq(FieldPtr f, int r, int c)
        : field(std::move(f)), rows(r), cols(c), a(std::size_t(r) * std::size_t(c), 0) {}

    felt& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    felt at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    static MatrixFq identity(FieldPtr f, int n);

    bool operator==(const MatrixFq& o) const {
        return rows == o.rows && cols == o.cols && a == o.a && *field == *o.field;
    }
};

struct RrefResult {
    MatrixFq r;
    std::vector<int> pivots; // strictly increasing column indices
};

/// Unique reduced row echelon form; row space is preserved.
RrefResult rref(const MatrixFq& m);

int rank(const MatrixFq& m);

/// Rows form a basis of { x : M x^T = 0 }, built from the RREF with free
/// columns taken in increasing order (so the result is reproducible).
MatrixFq kernel_basis(const MatrixFq& m);

struct AffineSolution {
    std::vector<felt> solution; // canonical: free variables set to 0
    int freedom = 0;            // cols - rank
};

/// Solves M x^T = y^T. Empty optional means no solution.
std::optional<AffineSolution> solve_affine(const MatrixFq& m, const std::vector<felt>& y);

MatrixFq transpose(const MatrixFq& m);
MatrixFq mat_mul(const MatrixFq& a, const MatrixFq& b);
MatrixFq vstack(const MatrixFq& top, const MatrixFq& bottom);

/// Keeps the listed columns, in the order given.
MatrixFq select_cols(const MatrixFq& m, const std::vector<int>& cols);

std::vector<felt> vec_mat_mul(const std::vector<felt>& v, const MatrixFq& m);

} // namespace rghw
