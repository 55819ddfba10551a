#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive: cofactor expansion, trial
// division, full enumeration, repeated multiplication. Slow but easy to
// audit, and sharing no code with the implementations under test.

#include <cstdint>
#include <optional>
#include <vector>

#include "srforge/field.hpp"
#include "srforge/linalg.hpp"
#include "srforge/rng.hpp"
#include "srforge/verify.hpp"

namespace oracle {

using srforge::FieldCtxPtr;
using srforge::FieldElem;
using srforge::IndexSet;
using srforge::Mat;
using srforge::Poly;

// determinant by cofactor expansion along the first row
inline FieldElem det_cofactor(const Mat& m) {
    std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    FieldElem acc = srforge::fe_zero(m.ctx());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Mat rest(n - 1, n - 1, m.ctx());
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) rest.set(r - 1, cc++, m.at(r, c));
        }
        FieldElem term = srforge::mul(m.at(0, j), det_cofactor(rest));
        acc = (j % 2 == 0) ? srforge::add(acc, term) : srforge::sub(acc, term);
    }
    return acc;
}

inline Mat pick(const Mat& m, const IndexSet& rows, const IndexSet& cols) {
    Mat out(rows.size(), cols.size(), m.ctx());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, m.at(rows[i], cols[j]));
    return out;
}

// all k-subsets of {0..n-1} in lexicographic order
inline std::vector<IndexSet> subsets(std::size_t n, std::size_t k) {
    std::vector<IndexSet> out;
    IndexSet cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

struct BruteVerdict {
    bool superregular = true;
    std::optional<IndexSet> rows, cols; // first singular selection, scan order as below
};

// sizes ascending, row sets lex, column sets lex; stops at the first hit
inline BruteVerdict brute_superregular(const Mat& m) {
    std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= kmax; ++k)
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k))
                if (det_cofactor(pick(m, rs, cs)).is_zero()) return {false, rs, cs};
    return {};
}

inline BruteVerdict brute_block_superregular(const Mat& m, std::size_t b) {
    std::size_t bm = m.rows() / b, bt = m.cols() / b;
    std::size_t kmax = std::min(bm, bt);
    for (std::size_t k = 1; k <= kmax; ++k)
        for (const auto& rs : subsets(bm, k))
            for (const auto& cs : subsets(bt, k)) {
                IndexSet er, ec;
                for (auto r : rs)
                    for (std::size_t i = 0; i < b; ++i) er.push_back(r * b + i);
                for (auto c : cs)
                    for (std::size_t i = 0; i < b; ++i) ec.push_back(c * b + i);
                if (det_cofactor(pick(m, er, ec)).is_zero()) return {false, rs, cs};
            }
    return {};
}

// order of a nonzero element by repeated multiplication
inline uint64_t brute_order(const FieldElem& a) {
    FieldElem x = a;
    uint64_t k = 1;
    while (!(x == srforge::fe_one(a.ctx))) {
        x = srforge::mul(x, a);
        ++k;
    }
    return k;
}

inline std::optional<uint64_t> brute_dlog(const FieldElem& a) {
    FieldElem x = srforge::fe_one(a.ctx);
    FieldElem alpha = srforge::fe_alpha(a.ctx);
    uint64_t q = a.ctx->q;
    for (uint64_t k = 0; k + 1 < q; ++k) {
        if (x == a) return k;
        x = srforge::mul(x, alpha);
    }
    return std::nullopt;
}

// ---- naive polynomial arithmetic over GF(p), no field contexts ----

inline Poly pmod(Poly a, const Poly& f, uint64_t p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    std::size_t n = f.size() - 1;
    while (a.size() > n) {
        uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - n;
        for (std::size_t i = 0; i <= n; ++i) {
            uint64_t t = (static_cast<uint64_t>(lead) * f[i]) % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - t) % p);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

inline Poly pmul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<uint32_t>((out[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    return out;
}

// does monic g divide f over GF(p)?
inline bool divides(const Poly& g, const Poly& f, uint64_t p) { return pmod(f, g, p).empty(); }

// irreducibility by trial division over every monic divisor candidate
inline bool brute_irreducible(const Poly& f, uint64_t p) {
    std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        for (uint64_t key = 0; key < total; ++key) {
            Poly g(d + 1, 0);
            g[d] = 1;
            uint64_t k = key;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<uint32_t>(k % p);
                k /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// primitivity: irreducible and the class of x has full multiplicative order
inline bool brute_primitive(const Poly& f, uint64_t p) {
    if (!brute_irreducible(f, p)) return false;
    std::size_t n = f.size() - 1;
    uint64_t q = 1;
    for (std::size_t i = 0; i < n; ++i) q *= p;
    Poly x = pmod(Poly{0, 1}, f, p);
    if (x.empty()) return false; // f = x: the class of x is zero
    Poly acc = x;
    uint64_t ord = 1;
    while (!(acc.size() == 1 && acc[0] == 1)) {
        acc = pmod(pmul(acc, x, p), f, p);
        ++ord;
        if (acc.empty()) return false; // x not a unit (f has zero constant term)
        if (ord > q) return false;     // safety, unreachable for irreducible f
    }
    return ord == q - 1;
}

// ---- random generators ----

inline FieldElem random_elem(srforge::Rng& rng, const FieldCtxPtr& ctx) {
    std::vector<uint32_t> c(ctx->n);
    for (auto& x : c) x = static_cast<uint32_t>(rng.below(ctx->p));
    return srforge::fe_from_coeffs(ctx, c);
}

inline FieldElem random_nonzero(srforge::Rng& rng, const FieldCtxPtr& ctx) {
    for (;;) {
        FieldElem e = random_elem(rng, ctx);
        if (!e.is_zero()) return e;
    }
}

inline Mat random_mat(srforge::Rng& rng, const FieldCtxPtr& ctx, std::size_t r, std::size_t c) {
    Mat m(r, c, ctx);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, random_elem(rng, ctx));
    return m;
}

inline Mat random_invertible(srforge::Rng& rng, const FieldCtxPtr& ctx, std::size_t n) {
    for (;;) {
        Mat m = random_mat(rng, ctx, n, n);
        if (!srforge::det(m).is_zero()) return m;
    }
}

// rejection-sample a superregular matrix (cheap only for small sizes/fields)
inline Mat random_superregular(srforge::Rng& rng, const FieldCtxPtr& ctx, std::size_t n) {
    for (;;) {
        Mat m = random_mat(rng, ctx, n, n);
        if (srforge::is_superregular(m).verdict) return m;
    }
}

} // namespace oracle
