#include "srforge/construct.hpp"

#include <numeric>
#include <string>

#include "srforge/rng.hpp"

namespace srforge {

namespace {

void require_superregular(const Mat& a, const VerifyOptions& opts, bool unchecked,
                          const std::string& who) {
    if (unchecked) return;
    if (!is_superregular(a, opts).verdict)
        fail(errc::NotSuperregular, who + " is not superregular");
}

Mat kron_fold(const std::vector<Mat>& as) {
    Mat k = as.front();
    for (std::size_t i = 1; i < as.size(); ++i) k = kron(k, as[i]);
    return k;
}

// pulls the ground matrix out of M = alpha * ground, rejecting any entry
// that is not a base-field multiple of alpha
Mat recover_ground(const Mat& m, const CompanionCtxPtr& comp) {
    if (!ctx_same(m.ctx(), comp->ext))
        fail(errc::ContextMismatch, "matrix is not over the companion's extension field");
    Mat ground(m.rows(), m.cols(), comp->base);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const FieldElem& e = m.at(i, j);
            for (unsigned d = 0; d < comp->n; ++d)
                if (d != 1 && e.c[d] != 0)
                    fail(errc::MalformedBase,
                         "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") is not a base-field multiple of alpha");
            ground.set(i, j, fe_scalar(comp->base, comp->n >= 2 ? e.c[1] : 0));
        }
    return ground;
}

} // namespace

BlockMat kron_block(const Mat& a, const Mat& b, const VerifyOptions& opts, bool unchecked) {
    if (!ctx_same(a.ctx(), b.ctx()))
        fail(errc::ContextMismatch, "factors belong to different fields");
    if (b.rows() != b.cols()) fail(errc::NonSquare, "B must be square");
    if (det(b).is_zero()) fail(errc::SingularB, "B is singular");
    require_superregular(a, opts, unchecked, "A");
    return block_mat(kron(a, b), b.rows());
}

BlockMat chain(const std::vector<Mat>& as, const Mat& b, const VerifyOptions& opts,
               bool unchecked) {
    if (as.empty()) fail(errc::DimensionMismatch, "at least one left factor is required");
    std::size_t product = 1;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i].rows() != as[i].cols())
            fail(errc::NonSquare, "factor " + std::to_string(i + 1) + " must be square");
        if (!ctx_same(as[i].ctx(), b.ctx()))
            fail(errc::ContextMismatch, "factors belong to different fields");
        require_superregular(as[i], opts, unchecked, "factor " + std::to_string(i + 1));
        product *= as[i].rows();
    }
    if (b.rows() != b.cols()) fail(errc::NonSquare, "B must be square");
    if (det(b).is_zero()) fail(errc::SingularB, "B is singular");
    std::size_t block = product / as.front().rows() * b.rows();
    return block_mat(kron(kron_fold(as), b), block);
}

BlockMat scaled_columns(const Mat& a, const Mat& b, const std::vector<Mat>& bs,
                        const VerifyOptions& opts, bool unchecked) {
    std::size_t n = b.rows();
    if (b.cols() != n) fail(errc::NonSquare, "B must be square");
    if (!ctx_same(a.ctx(), b.ctx()))
        fail(errc::ContextMismatch, "factors belong to different fields");
    if (bs.size() != a.cols())
        fail(errc::DimensionMismatch, "one column scaling per column of A is required");
    if (det(b).is_zero()) fail(errc::SingularFactor, "B is singular");
    for (std::size_t j = 0; j < bs.size(); ++j) {
        if (bs[j].rows() != n || bs[j].cols() != n)
            fail(errc::DimensionMismatch, "B_" + std::to_string(j + 1) + " must be " +
                                              std::to_string(n) + "x" + std::to_string(n));
        if (!ctx_same(bs[j].ctx(), b.ctx()))
            fail(errc::ContextMismatch, "factors belong to different fields");
        if (det(bs[j]).is_zero())
            fail(errc::SingularFactor, "B_" + std::to_string(j + 1) + " is singular");
    }
    require_superregular(a, opts, unchecked, "A");

    Mat inner(a.rows() * n, a.cols() * n, a.ctx());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Mat scaled = mat_mul(b, bs[j]);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Mat blk = mat_scale(a.at(i, j), scaled);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) inner.set(i * n + r, j * n + c, blk.at(r, c));
        }
    }
    return block_mat(std::move(inner), n);
}

Mat lift(const std::vector<Mat>& as, const CompanionCtxPtr& comp,
         std::optional<uint64_t> t_exp, const VerifyOptions& opts, bool unchecked) {
    if (as.empty()) fail(errc::DimensionMismatch, "at least one factor is required");
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (!ctx_same(as[i].ctx(), comp->base))
            fail(errc::ContextMismatch, "factor " + std::to_string(i + 1) +
                                            " is not over the companion's base field");
        if (as[i].rows() != as[i].cols())
            fail(errc::NonSquare, "factor " + std::to_string(i + 1) + " must be square");
        require_superregular(as[i], opts, unchecked, "factor " + std::to_string(i + 1));
    }
    uint64_t t = t_exp.value_or(comp->gen_exp);
    if (std::gcd(t, comp->ext->q - 1) != 1)
        fail(errc::BadGeneratorExponent, "exponent is not coprime to p^n - 1");
    Mat inner = kron(kron_fold(as), mat_pow(comp->C, t));
    return Psi_inv(comp, block_mat(std::move(inner), comp->n, comp));
}

Mat perturb_base(const Mat& ground, const CompanionCtxPtr& comp) {
    if (!ctx_same(ground.ctx(), comp->base))
        fail(errc::ContextMismatch, "ground matrix is not over the companion's base field");
    Mat m(ground.rows(), ground.cols(), comp->ext);
    FieldElem alpha = fe_alpha(comp->ext);
    for (std::size_t i = 0; i < ground.rows(); ++i)
        for (std::size_t j = 0; j < ground.cols(); ++j)
            m.set(i, j, mul(alpha, fe_scalar(comp->ext, ground.at(i, j).c[0])));
    return m;
}

Mat perturb_row(const Mat& m, const CompanionCtxPtr& comp, const PerturbSpecRow& spec,
                const VerifyOptions& opts, bool unchecked) {
    Mat ground = recover_ground(m, comp);
    require_superregular(ground, opts, unchecked, "the underlying ground matrix");
    if (spec.row < 1 || spec.row > m.rows())
        fail(errc::IndexOutOfRange, "target row must be in [1, " + std::to_string(m.rows()) + "]");
    Mat n = m;
    FieldElem alpha = fe_alpha(comp->ext);
    for (const auto& [l, powers] : spec.coeffs) {
        if (l < 1 || l > m.cols())
            fail(errc::IndexOutOfRange, "column index " + std::to_string(l) + " out of range");
        FieldElem term = fe_zero(comp->ext);
        for (const auto& [i, v] : powers) {
            if (i < 2 || i > comp->n)
                fail(errc::IndexOutOfRange,
                     "alpha power " + std::to_string(i) + " must be in [2, n]");
            if (v >= comp->p) fail(errc::BadCoefficientRange, "coefficient not in [0, p)");
            term = add(term, mul(fe_scalar(comp->ext, v), fe_pow(alpha, i)));
        }
        n.set(spec.row - 1, l - 1, add(n.at(spec.row - 1, l - 1), term));
    }
    return n;
}

Mat perturb_block(const Mat& m, const CompanionCtxPtr& comp, const PerturbSpecBlock& spec,
                  const VerifyOptions& opts, bool unchecked, bool allow_j1) {
    Mat ground = recover_ground(m, comp);
    require_superregular(ground, opts, unchecked, "the underlying ground matrix");
    if (spec.t <= 1)
        fail(errc::ConstraintViolated, "requires t > 1 (got t=" + std::to_string(spec.t) + ")");
    if (spec.rows <= 1 && !allow_j1)
        fail(errc::ConstraintViolated,
             "requires j > 1 (got j=" + std::to_string(spec.rows) + ")");
    if (spec.rows < 1 || spec.rows > m.rows())
        fail(errc::IndexOutOfRange, "perturbed row count out of range");
    if (spec.rows * (spec.t - 1) >= comp->n)
        fail(errc::ConstraintViolated,
             "requires j(t-1) < n: j=" + std::to_string(spec.rows) +
                 ", t=" + std::to_string(spec.t) + ", n=" + std::to_string(comp->n));
    if (spec.table.size() != spec.rows)
        fail(errc::DimensionMismatch, "coefficient table must have j rows");
    for (const auto& line : spec.table) {
        if (line.size() != m.cols())
            fail(errc::DimensionMismatch, "coefficient table rows must match the matrix width");
        for (uint32_t v : line)
            if (v >= comp->p) fail(errc::BadCoefficientRange, "coefficient not in [0, p)");
    }
    if (!spec.omega.empty()) {
        if (spec.omega.size() != m.rows())
            fail(errc::DimensionMismatch, "omega must list every row exactly once");
        std::vector<bool> seen(m.rows(), false);
        for (std::size_t v : spec.omega) {
            if (v < 1 || v > m.rows() || seen[v - 1])
                fail(errc::IndexOutOfRange, "omega must be a permutation of 1.." +
                                                std::to_string(m.rows()));
            seen[v - 1] = true;
        }
    }

    FieldElem alpha_t = fe_pow(fe_alpha(comp->ext), spec.t);
    Mat n = m;
    for (std::size_t i = 0; i < spec.rows; ++i)
        for (std::size_t l = 0; l < m.cols(); ++l) {
            if (spec.table[i][l] == 0) continue;
            FieldElem term = mul(fe_scalar(comp->ext, spec.table[i][l]), alpha_t);
            n.set(i, l, add(n.at(i, l), term));
        }
    if (spec.omega.empty()) return n;
    Mat out(m.rows(), m.cols(), comp->ext);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t l = 0; l < m.cols(); ++l) out.set(i, l, n.at(spec.omega[i] - 1, l));
    return out;
}

SearchResult random_search(const FieldCtxPtr& ctx, std::size_t m, std::size_t t,
                           uint64_t tries, uint64_t seed, const VerifyOptions& opts) {
    SearchResult res;
    res.seed = seed;
    Rng rng(seed);
    VerifyOptions vo = opts;
    vo.exhaustive = false; // the search needs verdicts only
    for (uint64_t attempt = 1; attempt <= tries; ++attempt) {
        Mat cand(m, t, ctx);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                std::vector<uint32_t> coeffs(ctx->n);
                for (unsigned d = 0; d < ctx->n; ++d)
                    coeffs[d] = static_cast<uint32_t>(rng.below(ctx->p));
                cand.set(i, j, fe_from_coeffs(ctx, coeffs));
            }
        if (is_superregular(cand, vo).verdict) {
            res.found = std::move(cand);
            res.tries_used = attempt;
            return res;
        }
    }
    res.tries_used = tries;
    return res;
}

} // namespace srforge
