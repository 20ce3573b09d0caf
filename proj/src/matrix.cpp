#include "rghw/matrix.hpp"

#include <algorithm>

namespace rghw {

MatrixFq MatrixFq::identity(FieldPtr f, int n) {
    MatrixFq m(std::move(f), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RrefResult rref(const MatrixFq& m) {
    RrefResult out{m, {}};
    MatrixFq& r = out.r;
    const Field& f = *m.field;
    int lead = 0;
    for (int col = 0; col < r.cols && lead < r.rows; ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows; ++i) {
            if (r.at(i, col) != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = 0; c < r.cols; ++c) std::swap(r.at(piv, c), r.at(lead, c));
        felt s = f.inv(r.at(lead, col));
        if (s != 1)
            for (int c = 0; c < r.cols; ++c) r.at(lead, c) = f.mul(r.at(lead, c), s);
        for (int i = 0; i < r.rows; ++i) {
            if (i == lead) continue;
            felt v = r.at(i, col);
            if (v == 0) continue;
            for (int c = 0; c < r.cols; ++c)
                r.at(i, c) = f.sub(r.at(i, c), f.mul(v, r.at(lead, c)));
        }
        out.pivots.push_back(col);
        ++lead;
    }
    return out;
}

int rank(const MatrixFq& m) { return int(rref(m).pivots.size()); }

MatrixFq kernel_basis(const MatrixFq& m) {
    RrefResult rr = rref(m);
    const Field& f = *m.field;
    std::vector<int> free_cols;
    {
        std::size_t pi = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (pi < rr.pivots.size() && rr.pivots[pi] == c) { ++pi; continue; }
            free_cols.push_back(c);
        }
    }
    MatrixFq basis(m.field, int(free_cols.size()), m.cols);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        int fc = free_cols[i];
        basis.at(int(i), fc) = 1;
        for (std::size_t j = 0; j < rr.pivots.size(); ++j)
            basis.at(int(i), rr.pivots[j]) = f.neg(rr.r.at(int(j), fc));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const MatrixFq& m, const std::vector<felt>& y) {
    if (int(y.size()) != m.rows) throw LengthMismatch("right-hand side length differs from row count");
    MatrixFq aug(m.field, m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = y[std::size_t(r)];
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols) return std::nullopt;
    AffineSolution sol;
    sol.solution.assign(std::size_t(m.cols), 0);
    for (std::size_t j = 0; j < rr.pivots.size(); ++j)
        sol.solution[std::size_t(rr.pivots[j])] = rr.r.at(int(j), m.cols);
    sol.freedom = m.cols - int(rr.pivots.size());
    return sol;
}

MatrixFq transpose(const MatrixFq& m) {
    MatrixFq t(m.field, m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

MatrixFq mat_mul(const MatrixFq& a, const MatrixFq& b) {
    require_same_field(*a.field, *b.field);
    if (a.cols != b.rows) throw WidthMismatch("inner dimensions differ");
    const Field& f = *a.field;
    MatrixFq x(a.field, a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int i = 0; i < a.cols; ++i) {
            felt v = a.at(r, i);
            if (v == 0) continue;
            for (int c = 0; c < b.cols; ++c)
                x.at(r, c) = f.add(x.at(r, c), f.mul(v, b.at(i, c)));
        }
    return x;
}

MatrixFq vstack(const MatrixFq& top, const MatrixFq& bottom) {
    require_same_field(*top.field, *bottom.field);
    if (top.cols != bottom.cols) throw WidthMismatch("column counts differ");
    MatrixFq s(top.field, top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), s.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), s.a.begin() + top.a.size());
    return s;
}

MatrixFq select_cols(const MatrixFq& m, const std::vector<int>& cols) {
    MatrixFq s(m.field, m.rows, int(cols.size()));
    for (int r = 0; r < m.rows; ++r)
        for (std::size_t i = 0; i < cols.size(); ++i) s.at(r, int(i)) = m.at(r, cols[i]);
    return s;
}

std::vector<felt> vec_mat_mul(const std::vector<felt>& v, const MatrixFq& m) {
    if (int(v.size()) != m.rows) throw LengthMismatch("vector length differs from row count");
    const Field& f = *m.field;
    std::vector<felt> out(std::size_t(m.cols), 0);
    for (int r = 0; r < m.rows; ++r) {
        felt s = v[std::size_t(r)];
        if (s == 0) continue;
        for (int c = 0; c < m.cols; ++c)
            out[std::size_t(c)] = f.add(out[std::size_t(c)], f.mul(s, m.at(r, c)));
    }
    return out;
}

} // namespace rghw
