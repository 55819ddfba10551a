#pragma once

#include <memory>
#include <optional>

#include "srforge/linalg.hpp"

namespace srforge {

/// Companion matrix C of a primitive monic polynomial over GF(p),
/// together with the base field GF(p) and the extension GF(p^n) it
/// defines. gen = C^gen_exp is the generator used by lift-style
/// constructions; gen_exp must be coprime to p^n - 1.
struct CompanionCtx {
    Poly poly;
    uint64_t p = 0;
    unsigned n = 0;
    FieldCtxPtr base; // GF(p)
    FieldCtxPtr ext;  // GF(p^n) = GF(p)[x]/(poly)
    Mat C;
    uint64_t gen_exp = 1;
    Mat gen;
};
using CompanionCtxPtr = std::shared_ptr<const CompanionCtx>;

CompanionCtxPtr companion(const Poly& poly, uint64_t p, uint64_t gen_exp = 1,
                          uint64_t dlog_cap = kDefaultDlogCap);

/// Matrix over GF(p) partitioned into block_size x block_size blocks.
/// comp is attached when the blocks are asserted to be psi images.
struct BlockMat {
    Mat inner;
    std::size_t block_size = 1;
    CompanionCtxPtr comp;

    std::size_t block_rows() const { return inner.rows() / block_size; }
    std::size_t block_cols() const { return inner.cols() / block_size; }
    Mat block(std::size_t bi, std::size_t bj) const;
};

/// Validates divisibility of the inner dimensions (NotBlockAligned).
BlockMat block_mat(Mat inner, std::size_t block_size, CompanionCtxPtr comp = nullptr);

/// Coefficients (f_0..f_{n-1}) with X = sum f_i C^i, or nullopt when X
/// is outside F_p[C]. Candidates are read off the first column of X
/// (C^i e_1 = e_{i+1}) and then verified exactly.
std::optional<std::vector<uint32_t>> in_span(const CompanionCtx& ctx, const Mat& x);

/// psi(sum f_i alpha^i) = sum f_i C^i; psi(0) = O.
Mat psi(const CompanionCtx& ctx, const FieldElem& a);
/// Inverse of psi; NotInSpan when x is not an F_p[C] matrix.
FieldElem psi_inv(const CompanionCtx& ctx, const Mat& x);

/// Entrywise psi: matrix over GF(p^n) to block matrix over GF(p).
BlockMat Psi(const CompanionCtxPtr& ctx, const Mat& m);
/// Entrywise psi_inv; NotInSpan names the offending block.
Mat Psi_inv(const CompanionCtxPtr& ctx, const BlockMat& b);

/// Entrywise Frobenius a -> a^(p^j) on a matrix over an extension field.
Mat mat_frobenius(const Mat& m, unsigned j);

} // namespace srforge
