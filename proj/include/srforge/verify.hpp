#pragma once

#include <cstdint>
#include <optional>

#include "srforge/companion.hpp"

namespace srforge {

struct VerifyOptions {
    bool exhaustive = false; // enumerate every selection even after a failure
    unsigned jobs = 1;       // worker threads; results are identical for any value
};

/// Outcome of a (block-)superregularity check. The witness, when
/// present, is the first singular selection in the canonical order:
/// size ascending, then row sets lexicographic, then column sets
/// lexicographic. minors_checked counts enumerated selections in that
/// same order (the full count on success or exhaustive runs, the
/// witness's position on an early exit).
struct VerifyReport {
    bool verdict = false;
    std::optional<IndexSet> witness_rows;
    std::optional<IndexSet> witness_cols;
    uint64_t minors_checked = 0;
    double elapsed_seconds = 0.0;
    std::optional<std::size_t> block_size; // set by block verification
};

/// Every square submatrix nonsingular (witness in entry coordinates).
VerifyReport is_superregular(const Mat& m, const VerifyOptions& opts = {});

/// Every square full-block submatrix nonsingular (witness in block
/// coordinates).
VerifyReport is_block_superregular(const BlockMat& b, const VerifyOptions& opts = {});

/// All k x k minors keyed by index sets in lexicographic order;
/// dets[ri][ci] pairs row_sets[ri] with col_sets[ci].
struct MinorTable {
    std::size_t k = 0;
    std::vector<IndexSet> row_sets;
    std::vector<IndexSet> col_sets;
    std::vector<std::vector<FieldElem>> dets;
};

MinorTable minor_table(const Mat& m, std::size_t k);

/// Exact binomial coefficient (desk-scale arguments).
uint64_t binomial(uint64_t n, uint64_t k);

} // namespace srforge
