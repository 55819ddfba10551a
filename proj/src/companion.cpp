#include "srforge/companion.hpp"

#include <numeric>
#include <string>

namespace srforge {

CompanionCtxPtr companion(const Poly& poly, uint64_t p, uint64_t gen_exp, uint64_t dlog_cap) {
    if (!is_primitive(poly, p))
        fail(errc::NotPrimitive, "polynomial is not primitive over GF(p)");
    auto ctx = std::make_shared<CompanionCtx>();
    ctx->p = p;
    ctx->base = field_new_prime(p, dlog_cap);
    ctx->ext = field_new(p, poly, dlog_cap);
    ctx->poly = ctx->ext->modulus;
    ctx->n = ctx->ext->n;
    unsigned n = ctx->n;

    Mat c(n, n, ctx->base);
    for (unsigned i = 0; i + 1 < n; ++i) c.set(i + 1, i, fe_one(ctx->base));
    for (unsigned i = 0; i < n; ++i) {
        uint64_t coeff = (p - ctx->poly[i] % p) % p;
        c.set(i, n - 1, fe_scalar(ctx->base, coeff));
    }
    ctx->C = std::move(c);

    if (std::gcd(gen_exp, ctx->ext->q - 1) != 1)
        fail(errc::BadGeneratorExponent, "generator exponent is not coprime to p^n - 1");
    ctx->gen_exp = gen_exp;
    ctx->gen = mat_pow(ctx->C, gen_exp);
    return ctx;
}

Mat BlockMat::block(std::size_t bi, std::size_t bj) const {
    if (bi >= block_rows() || bj >= block_cols())
        fail(errc::IndexOutOfRange, "block index out of range");
    IndexSet rows(block_size), cols(block_size);
    for (std::size_t k = 0; k < block_size; ++k) {
        rows[k] = bi * block_size + k;
        cols[k] = bj * block_size + k;
    }
    return submatrix(inner, rows, cols);
}

BlockMat block_mat(Mat inner, std::size_t block_size, CompanionCtxPtr comp) {
    if (block_size == 0 || inner.rows() % block_size != 0 || inner.cols() % block_size != 0)
        fail(errc::NotBlockAligned, "inner dimensions are not multiples of the block size");
    if (comp && comp->n != block_size)
        fail(errc::NotBlockAligned, "block size differs from the companion degree");
    return BlockMat{std::move(inner), block_size, std::move(comp)};
}

std::optional<std::vector<uint32_t>> in_span(const CompanionCtx& ctx, const Mat& x) {
    if (x.rows() != ctx.n || x.cols() != ctx.n)
        fail(errc::DimensionMismatch, "matrix size differs from the companion degree");
    if (!ctx_same(x.ctx(), ctx.base))
        fail(errc::ContextMismatch, "matrix is not over the companion's base field");
    // C^i e_1 = e_{i+1}, so the candidate coefficients are X's first column
    std::vector<uint32_t> f(ctx.n);
    for (unsigned i = 0; i < ctx.n; ++i) f[i] = x.at(i, 0).c[0];
    Mat sum(ctx.n, ctx.n, ctx.base);
    Mat power = mat_identity(ctx.n, ctx.base);
    for (unsigned i = 0; i < ctx.n; ++i) {
        if (f[i]) sum = mat_add(sum, mat_scale(fe_scalar(ctx.base, f[i]), power));
        if (i + 1 < ctx.n) power = mat_mul(power, ctx.C);
    }
    if (!(sum == x)) return std::nullopt;
    return f;
}

Mat psi(const CompanionCtx& ctx, const FieldElem& a) {
    if (!ctx_same(a.ctx, ctx.ext))
        fail(errc::ContextMismatch, "element is not in the companion's extension field");
    Mat sum(ctx.n, ctx.n, ctx.base);
    Mat power = mat_identity(ctx.n, ctx.base);
    for (unsigned i = 0; i < ctx.n; ++i) {
        if (a.c[i]) sum = mat_add(sum, mat_scale(fe_scalar(ctx.base, a.c[i]), power));
        if (i + 1 < ctx.n) power = mat_mul(power, ctx.C);
    }
    return sum;
}

FieldElem psi_inv(const CompanionCtx& ctx, const Mat& x) {
    auto f = in_span(ctx, x);
    if (!f) fail(errc::NotInSpan, "matrix is not a polynomial in C");
    return fe_from_coeffs(ctx.ext, *f);
}

BlockMat Psi(const CompanionCtxPtr& ctx, const Mat& m) {
    if (!ctx_same(m.ctx(), ctx->ext))
        fail(errc::ContextMismatch, "matrix is not over the companion's extension field");
    unsigned n = ctx->n;
    Mat inner(m.rows() * n, m.cols() * n, ctx->base);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Mat blk = psi(*ctx, m.at(i, j));
            for (unsigned r = 0; r < n; ++r)
                for (unsigned c = 0; c < n; ++c) inner.set(i * n + r, j * n + c, blk.at(r, c));
        }
    return block_mat(std::move(inner), n, ctx);
}

Mat Psi_inv(const CompanionCtxPtr& ctx, const BlockMat& b) {
    if (b.block_size != ctx->n)
        fail(errc::NotBlockAligned, "block size differs from the companion degree");
    if (!ctx_same(b.inner.ctx(), ctx->base))
        fail(errc::ContextMismatch, "block matrix is not over the companion's base field");
    Mat r(b.block_rows(), b.block_cols(), ctx->ext);
    for (std::size_t i = 0; i < b.block_rows(); ++i)
        for (std::size_t j = 0; j < b.block_cols(); ++j) {
            auto f = in_span(*ctx, b.block(i, j));
            if (!f)
                fail(errc::NotInSpan, "block (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ") is not a polynomial in C");
            r.set(i, j, fe_from_coeffs(ctx->ext, *f));
        }
    return r;
}

Mat mat_frobenius(const Mat& m, unsigned j) {
    if (j >= m.ctx()->n) fail(errc::IndexOutOfRange, "Frobenius power index must be below n");
    Mat r(m.rows(), m.cols(), m.ctx());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) r.set(i, c, frobenius(m.at(i, c), j));
    return r;
}

} // namespace srforge
