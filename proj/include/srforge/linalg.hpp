#pragma once

#include <cstddef>
#include <vector>

#include "srforge/field.hpp"

namespace srforge {

/// Sorted, strictly increasing 0-based indices.
using IndexSet = std::vector<std::size_t>;

/// Throws IndexOutOfRange unless s is strictly increasing and below bound.
void check_index_set(const IndexSet& s, std::size_t bound);

/// Dense matrix over one field context. Operations never mutate their
/// inputs; set() exists for the construction phase only.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, FieldCtxPtr ctx);

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return t_; }
    const FieldCtxPtr& ctx() const { return ctx_; }

    const FieldElem& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, FieldElem v);

    bool operator==(const Mat& o) const;

private:
    std::size_t m_ = 0, t_ = 0;
    FieldCtxPtr ctx_;
    std::vector<FieldElem> e_;
};

Mat mat_identity(std::size_t n, const FieldCtxPtr& ctx);
/// Row-major entries; all must share ctx.
Mat mat_from_elems(std::size_t rows, std::size_t cols, const FieldCtxPtr& ctx,
                   const std::vector<FieldElem>& entries);
/// Row-major integers embedded via the prime subfield.
Mat mat_from_ints(const FieldCtxPtr& ctx, std::size_t rows, std::size_t cols,
                  const std::vector<long long>& entries);

Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_pow(const Mat& a, uint64_t e);
Mat mat_scale(const FieldElem& s, const Mat& a);

/// Exact determinant by Gaussian elimination.
FieldElem det(const Mat& m);

/// Gauss-Jordan inverse; SingularA when no inverse exists.
Mat mat_inverse(const Mat& a);

/// Kronecker product [a_ij * B].
Mat kron(const Mat& a, const Mat& b);

Mat submatrix(const Mat& m, const IndexSet& rows, const IndexSet& cols);

/// det of [[A,B],[C,D]] computed as det(A) * det(D - C A^-1 B).
FieldElem schur_det(const Mat& a, const Mat& b, const Mat& c, const Mat& d);

/// Stacks [[A,B],[C,D]] into one matrix (shapes must conform).
Mat block_assemble(const Mat& a, const Mat& b, const Mat& c, const Mat& d);

/// Checks det multilinearity in row k: given row k of M equal to
/// a*X + b*Y entrywise, tests det(M) = a*det(M|row k=X) + b*det(M|row k=Y).
bool row_multilinearity_check(const Mat& m, std::size_t k,
                              const std::vector<FieldElem>& x,
                              const std::vector<FieldElem>& y,
                              const FieldElem& a, const FieldElem& b);

} // namespace srforge
