#pragma once

#include <map>
#include <optional>

#include "srforge/verify.hpp"

namespace srforge {

/// Additive perturbation of one row: entry (row, l) of the target
/// matrix receives sum_i coeffs[l][i] * alpha^i. Keys are 1-based
/// (row in [1, m], column l in [1, t], power i in [2, n]) to match the
/// paper's subscripts and the JSON spec format.
struct PerturbSpecRow {
    std::size_t row = 1;
    std::map<std::size_t, std::map<std::size_t, uint32_t>> coeffs;
};

/// Additive alpha^t perturbation of the first `rows` rows followed by a
/// row permutation: row i gains table[i-1][l-1] * alpha^t in column l,
/// then output row i is input row omega[i-1] (omega 1-based; empty
/// means identity). Requires t > 1, rows > 1 and rows*(t-1) < n.
struct PerturbSpecBlock {
    uint64_t t = 2;
    std::size_t rows = 2;
    std::vector<std::vector<uint32_t>> table;
    std::vector<std::size_t> omega;
};

/// Superregular A tensor nonsingular square B: an n-block superregular
/// matrix with block size n = B.rows().
BlockMat kron_block(const Mat& a, const Mat& b, const VerifyOptions& opts = {},
                    bool unchecked = false);

/// A_1 x ... x A_l x B for square superregular A_i and nonsingular B;
/// block size N*n/n_1 where N is the product of the A_i sizes.
BlockMat chain(const std::vector<Mat>& as, const Mat& b, const VerifyOptions& opts = {},
               bool unchecked = false);

/// Block (i,j) = a_ij * B * Bs[j] for superregular A (r x s),
/// nonsingular B and s nonsingular column scalings.
BlockMat scaled_columns(const Mat& a, const Mat& b, const std::vector<Mat>& bs,
                        const VerifyOptions& opts = {}, bool unchecked = false);

/// Psi_inv(A_1 x ... x A_l x C^t), a superregular matrix over GF(p^n).
/// t defaults to the context's generator exponent and must be coprime
/// to p^n - 1.
Mat lift(const std::vector<Mat>& as, const CompanionCtxPtr& comp,
         std::optional<uint64_t> t_exp = std::nullopt, const VerifyOptions& opts = {},
         bool unchecked = false);

/// alpha * ground over the extension field, the canonical base matrix
/// Psi_inv(ground x C) that the perturbation constructions start from.
Mat perturb_base(const Mat& ground, const CompanionCtxPtr& comp);

/// M + F where F's single nonzero row is spec.row with entries
/// sum_{i>=2} coeffs[l][i] alpha^i. M must have every entry of the form
/// a * alpha (i.e. be alpha * ground for a superregular ground matrix).
Mat perturb_row(const Mat& m, const CompanionCtxPtr& comp, const PerturbSpecRow& spec,
                const VerifyOptions& opts = {}, bool unchecked = false);

/// Adds table[i][l] * alpha^t to the first spec.rows rows of M, then
/// permutes rows by omega. allow_j1 lifts the rows > 1 requirement
/// (callers then verify the result themselves).
Mat perturb_block(const Mat& m, const CompanionCtxPtr& comp, const PerturbSpecBlock& spec,
                  const VerifyOptions& opts = {}, bool unchecked = false,
                  bool allow_j1 = false);

struct SearchResult {
    std::optional<Mat> found;
    uint64_t tries_used = 0; // 1-based index of the successful try, or the try count
    uint64_t seed = 0;
};

/// Samples uniform m x t matrices until one passes is_superregular;
/// deterministic for a given seed.
SearchResult random_search(const FieldCtxPtr& ctx, std::size_t m, std::size_t t,
                           uint64_t tries, uint64_t seed, const VerifyOptions& opts = {});

} // namespace srforge
