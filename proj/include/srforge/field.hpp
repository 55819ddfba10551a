#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "srforge/error.hpp"

namespace srforge {

/// Dense polynomial over GF(p); index i holds the coefficient of x^i.
using Poly = std::vector<uint32_t>;

struct FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// GF(p^n) presented as GF(p)[x]/(modulus), elements as coefficient
/// vectors in the basis {1, x, ..., x^(n-1)}. Immutable once built; the
/// discrete-log table is filled in lazily under a one-time guard, so
/// concurrent readers are safe.
struct FieldCtx {
    uint64_t p = 0;        // prime characteristic
    unsigned n = 0;        // extension degree
    Poly modulus;          // monic, degree n, constant term first
    uint64_t q = 0;        // p^n
    uint64_t dlog_cap = 0; // dlog/find_roots allowed while q <= dlog_cap

    bool prime_field() const { return n == 1; }

    // internal, managed by dlog()
    mutable std::once_flag dlog_once;
    mutable std::vector<int64_t> dlog_tbl;
    mutable bool dlog_primitive = false;

    FieldCtx() = default;
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
};

/// Structural context identity: same p, n and modulus.
bool ctx_same(const FieldCtx& a, const FieldCtx& b);
bool ctx_same(const FieldCtxPtr& a, const FieldCtxPtr& b);

struct FieldElem {
    std::vector<uint32_t> c; // length n, each in [0, p)
    FieldCtxPtr ctx;

    bool is_zero() const {
        for (auto v : c)
            if (v) return false;
        return true;
    }
    bool operator==(const FieldElem& o) const { return ctx_same(ctx, o.ctx) && c == o.c; }
};

constexpr uint64_t kDefaultDlogCap = uint64_t{1} << 20;

/// Builds GF(p^n); rejects composite p, non-monic and reducible moduli.
FieldCtxPtr field_new(uint64_t p, const Poly& modulus, uint64_t dlog_cap = kDefaultDlogCap);
/// Builds GF(p) with the conventional modulus x.
FieldCtxPtr field_new_prime(uint64_t p, uint64_t dlog_cap = kDefaultDlogCap);

FieldElem fe_zero(const FieldCtxPtr& ctx);
FieldElem fe_one(const FieldCtxPtr& ctx);
/// The class of x (written alpha); requires n >= 2 to be interesting but defined for all n.
FieldElem fe_alpha(const FieldCtxPtr& ctx);
/// Embeds an integer into the prime subfield (value reduced mod p).
FieldElem fe_scalar(const FieldCtxPtr& ctx, uint64_t v);
/// Builds an element from explicit coefficients; must be in [0, p) and at most n of them.
FieldElem fe_from_coeffs(const FieldCtxPtr& ctx, const std::vector<uint32_t>& coeffs);
/// Same, but reduces arbitrary signed coefficients mod p.
FieldElem fe_from_coeffs_reduced(const FieldCtxPtr& ctx, const std::vector<int64_t>& coeffs);

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem neg(const FieldElem& a);
FieldElem inv(const FieldElem& a);
FieldElem fe_pow(const FieldElem& a, uint64_t e);

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) { return add(a, b); }
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return sub(a, b); }
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) { return mul(a, b); }
inline FieldElem operator-(const FieldElem& a) { return neg(a); }

/// Monic irreducibility over GF(p) (Rabin's test).
bool poly_irreducible(const Poly& poly, uint64_t p);

/// True iff poly is irreducible and the class of x has order p^n - 1:
/// p^n - 1 is factored by trial division and x^((p^n-1)/r) != 1 is
/// checked for every prime factor r.
bool is_primitive(const Poly& poly, uint64_t p);

/// Exponent k in [0, p^n-2] with alpha^k = a. Needs a primitive modulus
/// and q within the table cap.
uint64_t dlog(const FieldElem& a);

/// a^(p^j), the j-th Frobenius power; 0 <= j <= n-1.
FieldElem frobenius(const FieldElem& a, unsigned j);

/// All elements e with poly(e) = 0, poly over GF(p); exhaustive scan in
/// packed-key order, allowed while q <= dlog_cap.
std::vector<FieldElem> find_roots(const Poly& poly, const FieldCtxPtr& ctx);

/// Distinct prime factors by trial division.
std::vector<uint64_t> prime_factors(uint64_t v);

/// Reduces coefficients mod p and drops leading zeros ({} is the zero polynomial).
Poly poly_normalize(Poly poly, uint64_t p);

} // namespace srforge
