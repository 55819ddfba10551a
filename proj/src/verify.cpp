#include "srforge/verify.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace srforge {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    __uint128_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) fail(errc::SizeTooLarge, "binomial coefficient exceeds 64 bits");
    }
    return static_cast<uint64_t>(r);
}

namespace {

IndexSet first_combination(std::size_t k) {
    IndexSet c(k);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

bool next_combination(IndexSet& c, std::size_t n) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct Hit {
    uint64_t row_rank = UINT64_MAX;
    uint64_t col_rank = UINT64_MAX;
    IndexSet rows, cols;
    bool found() const { return row_rank != UINT64_MAX; }
    bool before(const Hit& o) const {
        if (row_rank != o.row_rank) return row_rank < o.row_rank;
        return col_rank < o.col_rank;
    }
};

// Scans all k x k selections of an m x t grid for the first singular
// one in (row set, col set) lexicographic order. Row sets are dealt
// round-robin to workers; each worker's stream is ascending, so its
// first hit is its best, and a shared row-rank bound lets the others
// stop early. The merged result is identical for any worker count.
template <typename Eval>
Hit scan_size(std::size_t m, std::size_t t, std::size_t k, unsigned jobs, bool exhaustive,
              const Eval& nonsingular) {
    uint64_t nrow = binomial(m, k);
    unsigned nworkers = jobs < 2 ? 1 : jobs;
    if (nworkers > nrow) nworkers = static_cast<unsigned>(nrow);
    std::vector<Hit> hits(nworkers);
    std::atomic<uint64_t> best_row{UINT64_MAX};

    auto work = [&](unsigned w) {
        Hit& hit = hits[w];
        IndexSet rows = first_combination(k);
        uint64_t rank = 0;
        bool more = true;
        while (more) {
            if (rank % nworkers == w) {
                if (!exhaustive && rank > best_row.load(std::memory_order_relaxed)) break;
                IndexSet cols = first_combination(k);
                uint64_t crank = 0;
                bool cmore = true;
                while (cmore) {
                    if (!nonsingular(rows, cols) && !hit.found()) {
                        hit = Hit{rank, crank, rows, cols};
                        uint64_t seen = best_row.load(std::memory_order_relaxed);
                        while (seen > rank &&
                               !best_row.compare_exchange_weak(seen, rank, std::memory_order_relaxed)) {
                        }
                        if (!exhaustive) break;
                    }
                    cmore = next_combination(cols, t);
                    ++crank;
                }
                if (!exhaustive && hit.found()) break;
            }
            more = next_combination(rows, m);
            ++rank;
        }
    };

    if (nworkers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers - 1);
        for (unsigned w = 1; w < nworkers; ++w) pool.emplace_back(work, w);
        work(0);
        for (auto& th : pool) th.join();
    }

    Hit best;
    for (const Hit& h : hits)
        if (h.found() && (!best.found() || h.before(best))) best = h;
    return best;
}

template <typename Eval>
VerifyReport verify_core(std::size_t m, std::size_t t, const VerifyOptions& opts,
                         const Eval& nonsingular) {
    auto start = std::chrono::steady_clock::now();
    std::size_t kmax = std::min(m, t);
    uint64_t total = 0;
    std::vector<uint64_t> prefix(kmax + 1, 0); // selections of size < k
    for (std::size_t k = 1; k <= kmax; ++k) {
        prefix[k] = total;
        total += binomial(m, k) * binomial(t, k);
    }

    VerifyReport rep;
    rep.verdict = true;
    rep.minors_checked = total;
    for (std::size_t k = 1; k <= kmax; ++k) {
        Hit hit = scan_size(m, t, k, opts.jobs, opts.exhaustive, nonsingular);
        if (hit.found()) {
            if (rep.verdict) {
                rep.verdict = false;
                rep.witness_rows = hit.rows;
                rep.witness_cols = hit.cols;
                if (!opts.exhaustive)
                    rep.minors_checked = prefix[k] + hit.row_rank * binomial(t, k) + hit.col_rank + 1;
            }
            if (!opts.exhaustive) break;
        }
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace

VerifyReport is_superregular(const Mat& m, const VerifyOptions& opts) {
    auto nonsingular = [&m](const IndexSet& rows, const IndexSet& cols) {
        return !det(submatrix(m, rows, cols)).is_zero();
    };
    return verify_core(m.rows(), m.cols(), opts, nonsingular);
}

VerifyReport is_block_superregular(const BlockMat& b, const VerifyOptions& opts) {
    if (b.block_size == 0 || b.inner.rows() % b.block_size != 0 ||
        b.inner.cols() % b.block_size != 0)
        fail(errc::NotBlockAligned, "inner dimensions are not multiples of the block size");
    std::size_t bs = b.block_size;
    auto nonsingular = [&b, bs](const IndexSet& brows, const IndexSet& bcols) {
        IndexSet rows, cols;
        rows.reserve(brows.size() * bs);
        cols.reserve(bcols.size() * bs);
        for (std::size_t r : brows)
            for (std::size_t k = 0; k < bs; ++k) rows.push_back(r * bs + k);
        for (std::size_t c : bcols)
            for (std::size_t k = 0; k < bs; ++k) cols.push_back(c * bs + k);
        return !det(submatrix(b.inner, rows, cols)).is_zero();
    };
    VerifyReport rep = verify_core(b.block_rows(), b.block_cols(), opts, nonsingular);
    rep.block_size = bs;
    return rep;
}

MinorTable minor_table(const Mat& m, std::size_t k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        fail(errc::SizeTooLarge, "minor size must be between 1 and min(rows, cols)");
    MinorTable t;
    t.k = k;
    IndexSet rows = first_combination(k);
    do {
        t.row_sets.push_back(rows);
    } while (next_combination(rows, m.rows()));
    IndexSet cols = first_combination(k);
    do {
        t.col_sets.push_back(cols);
    } while (next_combination(cols, m.cols()));
    t.dets.reserve(t.row_sets.size());
    for (const IndexSet& r : t.row_sets) {
        std::vector<FieldElem> line;
        line.reserve(t.col_sets.size());
        for (const IndexSet& c : t.col_sets) line.push_back(det(submatrix(m, r, c)));
        t.dets.push_back(std::move(line));
    }
    return t;
}

} // namespace srforge
