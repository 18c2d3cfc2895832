#include "dualmin/linalg.hpp"

#include <algorithm>
#include <utility>

namespace dualmin {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// row_r -= q * row_p, on both the working matrix and the transform.
void sub_row(IntMatrix& m, std::size_t r, std::size_t p, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= q * m(p, c);
}

void swap_rows(IntMatrix& m, std::size_t r, std::size_t p) {
    if (r == p) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(p, c));
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

std::size_t leading_column(const IntVector& v) {
    for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] != 0) return c;
    return v.size();
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    const std::size_t m = a.rows();
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < m; ++col) {
        // Euclid on the column: keep the smallest nonzero entry as pivot and
        // reduce the rest until only the pivot row is nonzero.
        for (;;) {
            std::size_t best = m;
            for (std::size_t r = row; r < m; ++r) {
                if (h(r, col) == 0) continue;
                if (best == m || abs(h(r, col)) < abs(h(best, col))) best = r;
            }
            if (best == m) break;
            swap_rows(h, row, best);
            swap_rows(u, row, best);
            bool done = true;
            for (std::size_t r = row + 1; r < m; ++r) {
                if (h(r, col) == 0) continue;
                const Integer q = h(r, col) / h(row, col);
                sub_row(h, r, row, q);
                sub_row(u, r, row, q);
                if (h(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(row, col) == 0) continue;
        if (h(row, col) < 0) {
            negate_row(h, row);
            negate_row(u, row);
        }
        for (std::size_t r = 0; r < row; ++r) {
            const Integer q = floor_div(h(r, col), h(row, col));
            sub_row(h, r, row, q);
            sub_row(u, r, row, q);
        }
        ++row;
    }
    return {std::move(h), std::move(u)};
}

bool is_hnf(const IntMatrix& h) {
    std::size_t prev_pivot = 0;
    bool seen_zero_row = false;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        const IntVector row = h.row(r);
        const std::size_t p = leading_column(row);
        if (p == row.size()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (r > 0 && p <= prev_pivot) return false;
        if (h(r, p) <= 0) return false;
        for (std::size_t above = 0; above < r; ++above)
            if (h(above, p) < 0 || h(above, p) >= h(r, p)) return false;
        prev_pivot = p;
    }
    return true;
}

struct BasisAccess {
    static void set_rows(IntegerBasis& b, std::vector<IntVector> rows) {
        b.pivots_.clear();
        for (const auto& r : rows) b.pivots_.push_back(leading_column(r));
        b.rows_ = std::move(rows);
    }
    static void set_rows(FieldBasis& b, std::vector<RatVector> rows, std::vector<std::size_t> pivots) {
        b.rows_ = std::move(rows);
        b.pivots_ = std::move(pivots);
    }
};

IntegerBasis IntegerBasis::from_generators(std::size_t dim, const std::vector<IntVector>& rows) {
    IntMatrix a(rows.size(), dim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != dim) throw DimensionError("IntegerBasis: generator length differs from dimension");
        for (std::size_t c = 0; c < dim; ++c) a(r, c) = rows[r][c];
    }
    const IntMatrix h = hnf(a).h;
    std::vector<IntVector> kept;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        IntVector row = h.row(r);
        if (!is_zero<IntegerSemiring>(row)) kept.push_back(std::move(row));
    }
    IntegerBasis b(dim);
    BasisAccess::set_rows(b, std::move(kept));
    return b;
}

std::optional<IntVector> IntegerBasis::coordinates(const IntVector& v) const {
    if (v.size() != dim_) throw DimensionError("coordinates: vector length differs from basis dimension");
    IntVector residual = v;
    IntVector coeffs(rows_.size(), Integer(0));
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        const std::size_t p = pivots_[j];
        // Columns left of this pivot are already cleared.
        if (residual[p] == 0) continue;
        if (!mpz_divisible_p(residual[p].get_mpz_t(), rows_[j][p].get_mpz_t())) return std::nullopt;
        coeffs[j] = residual[p] / rows_[j][p];
        for (std::size_t c = p; c < dim_; ++c) residual[c] -= coeffs[j] * rows_[j][c];
    }
    if (!is_zero<IntegerSemiring>(residual)) return std::nullopt;
    return coeffs;
}

IntMatrix IntegerBasis::as_matrix() const {
    IntMatrix m(rows_.size(), dim_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(r, c) = rows_[r][c];
    return m;
}

InsertResult<IntegerBasis> basis_insert(const IntegerBasis& b, const IntVector& v) {
    if (v.size() != b.dim()) throw DimensionError("basis_insert: vector length differs from basis dimension");
    if (b.contains(v)) return {b, false};
    std::vector<IntVector> gens = b.rows();
    gens.push_back(v);
    return {IntegerBasis::from_generators(b.dim(), gens), true};
}

FieldBasis FieldBasis::from_generators(std::size_t dim, const std::vector<RatVector>& rows) {
    FieldBasis b(dim);
    for (const auto& r : rows) b = basis_insert(b, r).basis;
    return b;
}

std::optional<RatVector> FieldBasis::coordinates(const RatVector& v) const {
    if (v.size() != dim_) throw DimensionError("coordinates: vector length differs from basis dimension");
    RatVector residual = v;
    RatVector coeffs(rows_.size(), Rational(0));
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        const std::size_t p = pivots_[j];
        coeffs[j] = residual[p];
        if (coeffs[j] == 0) continue;
        for (std::size_t c = p; c < dim_; ++c) residual[c] -= coeffs[j] * rows_[j][c];
    }
    if (!is_zero<RationalSemiring>(residual)) return std::nullopt;
    return coeffs;
}

RatMatrix FieldBasis::as_matrix() const {
    RatMatrix m(rows_.size(), dim_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(r, c) = rows_[r][c];
    return m;
}

InsertResult<FieldBasis> basis_insert(const FieldBasis& b, const RatVector& v) {
    if (v.size() != b.dim()) throw DimensionError("basis_insert: vector length differs from basis dimension");
    RatVector w = v;
    for (std::size_t j = 0; j < b.rank(); ++j) {
        const Rational f = w[b.pivot(j)];
        if (f == 0) continue;
        for (std::size_t c = 0; c < b.dim(); ++c) w[c] -= f * b.rows()[j][c];
    }
    std::size_t p = 0;
    while (p < w.size() && w[p] == 0) ++p;
    if (p == w.size()) return {b, false};

    const Rational lead = w[p];
    for (auto& x : w) x /= lead;

    std::vector<RatVector> rows;
    std::vector<std::size_t> pivots;
    bool placed = false;
    for (std::size_t j = 0; j < b.rank(); ++j) {
        if (!placed && b.pivot(j) > p) {
            rows.push_back(w);
            pivots.push_back(p);
            placed = true;
        }
        RatVector r = b.rows()[j];
        const Rational f = r[p];
        if (f != 0)
            for (std::size_t c = 0; c < b.dim(); ++c) r[c] -= f * w[c];
        rows.push_back(std::move(r));
        pivots.push_back(b.pivot(j));
    }
    if (!placed) {
        rows.push_back(w);
        pivots.push_back(p);
    }
    FieldBasis out(b.dim());
    BasisAccess::set_rows(out, std::move(rows), std::move(pivots));
    return {std::move(out), true};
}

}  // namespace dualmin
