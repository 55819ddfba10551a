#include "srforge/linalg.hpp"

namespace srforge {

void check_index_set(const IndexSet& s, std::size_t bound) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= bound) fail(errc::IndexOutOfRange, "index set exceeds matrix bounds");
        if (i > 0 && s[i] <= s[i - 1])
            fail(errc::IndexOutOfRange, "index set must be strictly increasing");
    }
}

Mat::Mat(std::size_t rows, std::size_t cols, FieldCtxPtr ctx) : m_(rows), t_(cols), ctx_(std::move(ctx)) {
    if (m_ == 0 || t_ == 0) fail(errc::DimensionMismatch, "matrix dimensions must be positive");
    e_.assign(m_ * t_, fe_zero(ctx_));
}

const FieldElem& Mat::at(std::size_t i, std::size_t j) const {
    if (i >= m_ || j >= t_) fail(errc::IndexOutOfRange, "matrix index out of range");
    return e_[i * t_ + j];
}

void Mat::set(std::size_t i, std::size_t j, FieldElem v) {
    if (i >= m_ || j >= t_) fail(errc::IndexOutOfRange, "matrix index out of range");
    if (!ctx_same(v.ctx, ctx_)) fail(errc::ContextMismatch, "entry belongs to a different field");
    e_[i * t_ + j] = std::move(v);
}

bool Mat::operator==(const Mat& o) const {
    if (m_ != o.m_ || t_ != o.t_ || !ctx_same(ctx_, o.ctx_)) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i].c != o.e_[i].c) return false;
    return true;
}

Mat mat_identity(std::size_t n, const FieldCtxPtr& ctx) {
    Mat r(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i, fe_one(ctx));
    return r;
}

Mat mat_from_elems(std::size_t rows, std::size_t cols, const FieldCtxPtr& ctx,
                   const std::vector<FieldElem>& entries) {
    if (entries.size() != rows * cols)
        fail(errc::DimensionMismatch, "entry count does not match dimensions");
    Mat r(rows, cols, ctx);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.set(i, j, entries[i * cols + j]);
    return r;
}

Mat mat_from_ints(const FieldCtxPtr& ctx, std::size_t rows, std::size_t cols,
                  const std::vector<long long>& entries) {
    if (entries.size() != rows * cols)
        fail(errc::DimensionMismatch, "entry count does not match dimensions");
    Mat r(rows, cols, ctx);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long long v = entries[i * cols + j] % static_cast<long long>(ctx->p);
            if (v < 0) v += static_cast<long long>(ctx->p);
            r.set(i, j, fe_scalar(ctx, static_cast<uint64_t>(v)));
        }
    return r;
}

namespace {

void require_same_shape(const Mat& a, const Mat& b) {
    if (!ctx_same(a.ctx(), b.ctx())) fail(errc::ContextMismatch, "matrices belong to different fields");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(errc::DimensionMismatch, "matrix shapes differ");
}

} // namespace

Mat mat_add(const Mat& a, const Mat& b) {
    require_same_shape(a, b);
    Mat r(a.rows(), a.cols(), a.ctx());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, add(a.at(i, j), b.at(i, j)));
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    require_same_shape(a, b);
    Mat r(a.rows(), a.cols(), a.ctx());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, sub(a.at(i, j), b.at(i, j)));
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (!ctx_same(a.ctx(), b.ctx())) fail(errc::ContextMismatch, "matrices belong to different fields");
    if (a.cols() != b.rows()) fail(errc::DimensionMismatch, "inner dimensions differ");
    Mat r(a.rows(), b.cols(), a.ctx());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            FieldElem acc = fe_zero(a.ctx());
            for (std::size_t k = 0; k < a.cols(); ++k) acc = add(acc, mul(a.at(i, k), b.at(k, j)));
            r.set(i, j, std::move(acc));
        }
    return r;
}

Mat mat_pow(const Mat& a, uint64_t e) {
    if (a.rows() != a.cols()) fail(errc::NonSquare, "matrix power requires a square matrix");
    Mat acc = mat_identity(a.rows(), a.ctx());
    Mat base = a;
    while (e) {
        if (e & 1) acc = mat_mul(acc, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return acc;
}

Mat mat_scale(const FieldElem& s, const Mat& a) {
    if (!ctx_same(s.ctx, a.ctx())) fail(errc::ContextMismatch, "scalar belongs to a different field");
    Mat r(a.rows(), a.cols(), a.ctx());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, mul(s, a.at(i, j)));
    return r;
}

FieldElem det(const Mat& m) {
    if (m.rows() != m.cols()) fail(errc::NonSquare, "determinant requires a square matrix");
    std::size_t n = m.rows();
    const FieldCtxPtr& ctx = m.ctx();
    std::vector<FieldElem> w;
    w.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w.push_back(m.at(i, j));
    auto cell = [&](std::size_t i, std::size_t j) -> FieldElem& { return w[i * n + j]; };

    FieldElem result = fe_one(ctx);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && cell(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return fe_zero(ctx);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(cell(pivot, j), cell(col, j));
            result = neg(result);
        }
        result = mul(result, cell(col, col));
        FieldElem pinv = inv(cell(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (cell(i, col).is_zero()) continue;
            FieldElem f = mul(cell(i, col), pinv);
            for (std::size_t j = col; j < n; ++j)
                cell(i, j) = sub(cell(i, j), mul(f, cell(col, j)));
        }
    }
    return result;
}

Mat mat_inverse(const Mat& a) {
    if (a.rows() != a.cols()) fail(errc::NonSquare, "inverse requires a square matrix");
    std::size_t n = a.rows();
    const FieldCtxPtr& ctx = a.ctx();
    std::vector<FieldElem> w;
    w.reserve(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.push_back(a.at(i, j));
        for (std::size_t j = 0; j < n; ++j)
            w.push_back(i == j ? fe_one(ctx) : fe_zero(ctx));
    }
    auto cell = [&](std::size_t i, std::size_t j) -> FieldElem& { return w[i * 2 * n + j]; };

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && cell(pivot, col).is_zero()) ++pivot;
        if (pivot == n) fail(errc::SingularA, "matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(cell(pivot, j), cell(col, j));
        FieldElem pinv = inv(cell(col, col));
        for (std::size_t j = 0; j < 2 * n; ++j) cell(col, j) = mul(pinv, cell(col, j));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || cell(i, col).is_zero()) continue;
            FieldElem f = cell(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j)
                cell(i, j) = sub(cell(i, j), mul(f, cell(col, j)));
        }
    }
    Mat r(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.set(i, j, cell(i, n + j));
    return r;
}

Mat kron(const Mat& a, const Mat& b) {
    if (!ctx_same(a.ctx(), b.ctx())) fail(errc::ContextMismatch, "matrices belong to different fields");
    Mat r(a.rows() * b.rows(), a.cols() * b.cols(), a.ctx());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const FieldElem& s = a.at(i1, j1);
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    r.set(i1 * b.rows() + i2, j1 * b.cols() + j2, mul(s, b.at(i2, j2)));
        }
    return r;
}

Mat submatrix(const Mat& m, const IndexSet& rows, const IndexSet& cols) {
    check_index_set(rows, m.rows());
    check_index_set(cols, m.cols());
    if (rows.empty() || cols.empty()) fail(errc::IndexOutOfRange, "index sets must be nonempty");
    Mat r(rows.size(), cols.size(), m.ctx());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.set(i, j, m.at(rows[i], cols[j]));
    return r;
}

Mat block_assemble(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
    if (!ctx_same(a.ctx(), b.ctx()) || !ctx_same(a.ctx(), c.ctx()) || !ctx_same(a.ctx(), d.ctx()))
        fail(errc::ContextMismatch, "blocks belong to different fields");
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        fail(errc::DimensionMismatch, "block shapes do not conform");
    Mat r(a.rows() + c.rows(), a.cols() + b.cols(), a.ctx());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
    }
    for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) r.set(a.rows() + i, j, c.at(i, j));
        for (std::size_t j = 0; j < d.cols(); ++j) r.set(a.rows() + i, a.cols() + j, d.at(i, j));
    }
    return r;
}

FieldElem schur_det(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
    if (!ctx_same(a.ctx(), b.ctx()) || !ctx_same(a.ctx(), c.ctx()) || !ctx_same(a.ctx(), d.ctx()))
        fail(errc::ContextMismatch, "blocks belong to different fields");
    if (a.rows() != a.cols() || d.rows() != d.cols())
        fail(errc::NonSquare, "A and D must be square");
    if (b.rows() != a.rows() || b.cols() != d.cols() || c.rows() != d.rows() || c.cols() != a.cols())
        fail(errc::DimensionMismatch, "block shapes do not conform");
    FieldElem da = det(a);
    if (da.is_zero()) fail(errc::SingularA, "Schur complement requires nonsingular A");
    Mat schur = mat_sub(d, mat_mul(mat_mul(c, mat_inverse(a)), b));
    return mul(da, det(schur));
}

bool row_multilinearity_check(const Mat& m, std::size_t k,
                              const std::vector<FieldElem>& x,
                              const std::vector<FieldElem>& y,
                              const FieldElem& a, const FieldElem& b) {
    if (m.rows() != m.cols()) fail(errc::NonSquare, "multilinearity check requires a square matrix");
    if (k >= m.rows()) fail(errc::IndexOutOfRange, "row index out of range");
    if (x.size() != m.cols() || y.size() != m.cols())
        fail(errc::DimensionMismatch, "replacement rows must match the matrix width");
    for (std::size_t j = 0; j < m.cols(); ++j) {
        FieldElem combo = add(mul(a, x[j]), mul(b, y[j]));
        if (!(combo == m.at(k, j)))
            fail(errc::RowMismatch, "row k does not equal a*X + b*Y");
    }
    auto with_row = [&](const std::vector<FieldElem>& row) {
        Mat r = m;
        for (std::size_t j = 0; j < m.cols(); ++j) r.set(k, j, row[j]);
        return r;
    };
    FieldElem lhs = det(m);
    FieldElem rhs = add(mul(a, det(with_row(x))), mul(b, det(with_row(y))));
    return lhs == rhs;
}

} // namespace srforge
