#include "srforge/field.hpp"

#include <algorithm>

namespace srforge {

const char* errc_name(errc c) {
    switch (c) {
    case errc::NonPrimeP: return "NonPrimeP";
    case errc::ReducibleModulus: return "ReducibleModulus";
    case errc::NonMonicModulus: return "NonMonicModulus";
    case errc::ContextMismatch: return "ContextMismatch";
    case errc::DivisionByZero: return "DivisionByZero";
    case errc::ZeroElement: return "ZeroElement";
    case errc::FieldTooLarge: return "FieldTooLarge";
    case errc::IndexOutOfRange: return "IndexOutOfRange";
    case errc::NonSquare: return "NonSquare";
    case errc::SingularA: return "SingularA";
    case errc::DimensionMismatch: return "DimensionMismatch";
    case errc::RowMismatch: return "RowMismatch";
    case errc::NotPrimitive: return "NotPrimitive";
    case errc::NotInSpan: return "NotInSpan";
    case errc::NotBlockAligned: return "NotBlockAligned";
    case errc::SizeTooLarge: return "SizeTooLarge";
    case errc::NotSuperregular: return "NotSuperregular";
    case errc::SingularB: return "SingularB";
    case errc::SingularFactor: return "SingularFactor";
    case errc::BadGeneratorExponent: return "BadGeneratorExponent";
    case errc::MalformedBase: return "MalformedBase";
    case errc::BadCoefficientRange: return "BadCoefficientRange";
    case errc::ConstraintViolated: return "ConstraintViolated";
    case errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

bool is_prime_u64(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull}) {
        if (v == d) return true;
        if (v % d == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    uint64_t d = v - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto powm = [&](uint64_t base, uint64_t e) {
        uint64_t acc = 1;
        base %= v;
        while (e) {
            if (e & 1) acc = mulmod(acc, base, v);
            base = mulmod(base, base, v);
            e >>= 1;
        }
        return acc;
    };
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % v == 0) continue;
        uint64_t x = powm(a, d);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// p^n, or 0 on 64-bit overflow
uint64_t pow_checked(uint64_t p, unsigned n) {
    uint64_t acc = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (acc > UINT64_MAX / p) return 0;
        acc *= p;
    }
    return acc;
}

// ---- dense polynomials over GF(p), constant term first ----

void pm_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pm_mod(Poly a, const Poly& f, uint64_t p) {
    // f monic of degree df
    size_t df = f.size() - 1;
    while (a.size() > df) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - df;
        if (lead) {
            for (size_t i = 0; i <= df; ++i) {
                uint64_t t = mulmod(lead, f[i], p);
                a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - t) % p);
            }
        }
        a.pop_back();
    }
    pm_trim(a);
    return a;
}

Poly pm_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> conv(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            conv[i + j] = (conv[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    Poly r(conv.size());
    for (size_t i = 0; i < conv.size(); ++i) r[i] = static_cast<uint32_t>(conv[i]);
    return pm_mod(std::move(r), f, p);
}

// x^e mod f
Poly pm_powx(uint64_t e, const Poly& f, uint64_t p) {
    Poly acc{1};
    Poly base = pm_mod(Poly{0, 1}, f, p);
    while (e) {
        if (e & 1) acc = pm_mulmod(acc, base, f, p);
        base = pm_mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

uint64_t inv_mod_p(uint64_t a, uint64_t p) {
    // p prime, a != 0: Fermat
    uint64_t acc = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return acc;
}

Poly pm_gcd(Poly a, Poly b, uint64_t p) {
    pm_trim(a);
    pm_trim(b);
    while (!b.empty()) {
        // reduce a mod b (b need not be monic)
        uint64_t lead_inv = inv_mod_p(b.back(), p);
        while (a.size() >= b.size()) {
            uint64_t factor = mulmod(a.back(), lead_inv, p);
            size_t shift = a.size() - b.size();
            if (factor) {
                for (size_t i = 0; i < b.size(); ++i) {
                    uint64_t t = mulmod(factor, b[i], p);
                    a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - t) % p);
                }
            }
            a.pop_back();
            pm_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

Poly validated_modulus(const Poly& modulus, uint64_t p, bool& monic) {
    Poly f(modulus.size());
    for (size_t i = 0; i < modulus.size(); ++i) f[i] = static_cast<uint32_t>(modulus[i] % p);
    while (!f.empty() && f.back() == 0) f.pop_back();
    monic = !f.empty() && f.size() >= 2 && f.back() == 1;
    return f;
}

uint64_t pack_key(const std::vector<uint32_t>& c, uint64_t p) {
    uint64_t key = 0;
    for (size_t i = c.size(); i-- > 0;) key = key * p + c[i];
    return key;
}

std::vector<uint32_t> unpack_key(uint64_t key, uint64_t p, unsigned n) {
    std::vector<uint32_t> c(n);
    for (unsigned i = 0; i < n; ++i) {
        c[i] = static_cast<uint32_t>(key % p);
        key /= p;
    }
    return c;
}

void require_same_ctx(const FieldElem& a, const FieldElem& b) {
    if (!ctx_same(a.ctx, b.ctx)) fail(errc::ContextMismatch, "operands belong to different fields");
}

// builds the full alpha-power table; returns false when the modulus is not primitive
bool build_dlog_table(const FieldCtx& ctx) {
    if (!is_primitive(ctx.modulus, ctx.p)) return false;
    ctx.dlog_tbl.assign(ctx.q, -1);
    std::vector<uint32_t> e(ctx.n, 0);
    e[0] = 1;
    Poly f = ctx.modulus;
    for (uint64_t k = 0; k + 1 < ctx.q; ++k) {
        ctx.dlog_tbl[pack_key(e, ctx.p)] = static_cast<int64_t>(k);
        // multiply by x and reduce
        Poly as_poly(e.begin(), e.end());
        as_poly.insert(as_poly.begin(), 0);
        as_poly = pm_mod(std::move(as_poly), f, ctx.p);
        as_poly.resize(ctx.n, 0);
        std::copy(as_poly.begin(), as_poly.end(), e.begin());
    }
    return true;
}

} // namespace

bool ctx_same(const FieldCtx& a, const FieldCtx& b) {
    if (&a == &b) return true;
    return a.p == b.p && a.n == b.n && a.modulus == b.modulus;
}

bool ctx_same(const FieldCtxPtr& a, const FieldCtxPtr& b) {
    if (!a || !b) return a == b;
    return ctx_same(*a, *b);
}

Poly poly_normalize(Poly poly, uint64_t p) {
    for (auto& v : poly) v = static_cast<uint32_t>(v % p);
    pm_trim(poly);
    return poly;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

bool poly_irreducible(const Poly& poly, uint64_t p) {
    if (!is_prime_u64(p)) fail(errc::NonPrimeP, "characteristic must be prime");
    bool monic = false;
    Poly f = validated_modulus(poly, p, monic);
    if (!monic) fail(errc::NonMonicModulus, "polynomial must be monic of degree >= 1");
    unsigned n = static_cast<unsigned>(f.size() - 1);
    if (n == 1) return true;
    if (pow_checked(p, n) == 0)
        fail(errc::FieldTooLarge, "p^n exceeds 64 bits");
    // Rabin: x^(p^(n/r)) - x coprime to f for every prime r | n, and x^(p^n) = x mod f
    for (uint64_t r : prime_factors(n)) {
        uint64_t e = pow_checked(p, static_cast<unsigned>(n / r));
        Poly h = pm_powx(e, f, p);
        // h - x
        if (h.size() < 2) h.resize(2, 0);
        h[1] = static_cast<uint32_t>((h[1] + p - 1) % p);
        pm_trim(h);
        Poly g = pm_gcd(h, f, p);
        if (g.size() != 1) return false;
    }
    Poly h = pm_powx(pow_checked(p, n), f, p);
    Poly x = pm_mod(Poly{0, 1}, f, p);
    return h == x;
}

bool is_primitive(const Poly& poly, uint64_t p) {
    if (!poly_irreducible(poly, p)) return false;
    bool monic = false;
    Poly f = validated_modulus(poly, p, monic);
    unsigned n = static_cast<unsigned>(f.size() - 1);
    if (f[0] == 0) return false; // x itself is a factor, so the class of x is 0 or a zero divisor
    uint64_t q = pow_checked(p, n);
    if (q == 0) fail(errc::FieldTooLarge, "p^n exceeds 64 bits");
    // irreducible, so the quotient is a field and ord(x) divides q-1;
    // maximality holds iff no proper division by a prime factor fixes 1
    for (uint64_t r : prime_factors(q - 1)) {
        Poly h = pm_powx((q - 1) / r, f, p);
        if (h == Poly{1}) return false;
    }
    return true;
}

FieldCtxPtr field_new(uint64_t p, const Poly& modulus, uint64_t dlog_cap) {
    if (!is_prime_u64(p)) fail(errc::NonPrimeP, "characteristic must be prime");
    bool monic = false;
    Poly f = validated_modulus(modulus, p, monic);
    if (!monic) fail(errc::NonMonicModulus, "modulus must be monic of degree >= 1");
    unsigned n = static_cast<unsigned>(f.size() - 1);
    uint64_t q = pow_checked(p, n);
    if (q == 0) fail(errc::FieldTooLarge, "p^n exceeds 64 bits");
    if (n >= 2 && !poly_irreducible(f, p))
        fail(errc::ReducibleModulus, "modulus is reducible over GF(p)");
    auto ctx = std::make_shared<FieldCtx>();
    ctx->p = p;
    ctx->n = n;
    ctx->modulus = std::move(f);
    ctx->q = q;
    ctx->dlog_cap = dlog_cap;
    return ctx;
}

FieldCtxPtr field_new_prime(uint64_t p, uint64_t dlog_cap) {
    return field_new(p, Poly{0, 1}, dlog_cap);
}

FieldElem fe_zero(const FieldCtxPtr& ctx) {
    return FieldElem{std::vector<uint32_t>(ctx->n, 0), ctx};
}

FieldElem fe_one(const FieldCtxPtr& ctx) {
    FieldElem e = fe_zero(ctx);
    e.c[0] = ctx->p > 1 ? 1 : 0;
    return e;
}

FieldElem fe_alpha(const FieldCtxPtr& ctx) {
    FieldElem e = fe_zero(ctx);
    if (ctx->n >= 2) {
        e.c[1] = 1;
    } else {
        // in GF(p) with modulus x + c the class of x is -c
        e.c[0] = static_cast<uint32_t>((ctx->p - ctx->modulus[0] % ctx->p) % ctx->p);
    }
    return e;
}

FieldElem fe_scalar(const FieldCtxPtr& ctx, uint64_t v) {
    FieldElem e = fe_zero(ctx);
    e.c[0] = static_cast<uint32_t>(v % ctx->p);
    return e;
}

FieldElem fe_from_coeffs(const FieldCtxPtr& ctx, const std::vector<uint32_t>& coeffs) {
    if (coeffs.size() > ctx->n)
        fail(errc::IndexOutOfRange, "coefficient vector longer than extension degree");
    for (auto v : coeffs)
        if (v >= ctx->p) fail(errc::BadCoefficientRange, "coefficient not in [0, p)");
    FieldElem e = fe_zero(ctx);
    std::copy(coeffs.begin(), coeffs.end(), e.c.begin());
    return e;
}

FieldElem fe_from_coeffs_reduced(const FieldCtxPtr& ctx, const std::vector<int64_t>& coeffs) {
    if (coeffs.size() > ctx->n)
        fail(errc::IndexOutOfRange, "coefficient vector longer than extension degree");
    FieldElem e = fe_zero(ctx);
    int64_t p = static_cast<int64_t>(ctx->p);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        int64_t v = coeffs[i] % p;
        if (v < 0) v += p;
        e.c[i] = static_cast<uint32_t>(v);
    }
    return e;
}

FieldElem add(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    FieldElem r = a;
    uint64_t p = a.ctx->p;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = static_cast<uint32_t>((static_cast<uint64_t>(a.c[i]) + b.c[i]) % p);
    return r;
}

FieldElem sub(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    FieldElem r = a;
    uint64_t p = a.ctx->p;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = static_cast<uint32_t>((static_cast<uint64_t>(a.c[i]) + p - b.c[i]) % p);
    return r;
}

FieldElem neg(const FieldElem& a) {
    FieldElem r = a;
    uint64_t p = a.ctx->p;
    for (auto& v : r.c) v = static_cast<uint32_t>((p - v) % p);
    return r;
}

FieldElem mul(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    uint64_t p = a.ctx->p;
    Poly pa(a.c.begin(), a.c.end());
    Poly pb(b.c.begin(), b.c.end());
    pm_trim(pa);
    pm_trim(pb);
    Poly prod = pm_mulmod(pa, pb, a.ctx->modulus, p);
    FieldElem r = fe_zero(a.ctx);
    std::copy(prod.begin(), prod.end(), r.c.begin());
    return r;
}

FieldElem fe_pow(const FieldElem& a, uint64_t e) {
    FieldElem acc = fe_one(a.ctx);
    FieldElem base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FieldElem inv(const FieldElem& a) {
    if (a.is_zero()) fail(errc::DivisionByZero, "zero has no inverse");
    return fe_pow(a, a.ctx->q - 2);
}

uint64_t dlog(const FieldElem& a) {
    if (a.is_zero()) fail(errc::ZeroElement, "zero has no discrete logarithm");
    const FieldCtx& ctx = *a.ctx;
    if (ctx.q > ctx.dlog_cap)
        fail(errc::FieldTooLarge, "field size exceeds the discrete-log table cap");
    std::call_once(ctx.dlog_once, [&] { ctx.dlog_primitive = build_dlog_table(ctx); });
    if (!ctx.dlog_primitive)
        fail(errc::NotPrimitive, "modulus is not primitive, alpha does not generate the multiplicative group");
    int64_t k = ctx.dlog_tbl[pack_key(a.c, ctx.p)];
    return static_cast<uint64_t>(k);
}

FieldElem frobenius(const FieldElem& a, unsigned j) {
    if (j >= a.ctx->n) fail(errc::IndexOutOfRange, "Frobenius power index must be below n");
    uint64_t e = pow_checked(a.ctx->p, j);
    return fe_pow(a, e);
}

std::vector<FieldElem> find_roots(const Poly& poly, const FieldCtxPtr& ctx) {
    if (ctx->q > ctx->dlog_cap)
        fail(errc::FieldTooLarge, "field size exceeds the exhaustive-scan cap");
    Poly f = poly_normalize(poly, ctx->p);
    std::vector<FieldElem> roots;
    for (uint64_t key = 0; key < ctx->q; ++key) {
        FieldElem x{unpack_key(key, ctx->p, ctx->n), ctx};
        FieldElem acc = fe_zero(ctx);
        for (size_t i = f.size(); i-- > 0;)
            acc = add(mul(acc, x), fe_scalar(ctx, f[i]));
        if (acc.is_zero()) roots.push_back(std::move(x));
    }
    return roots;
}

} // namespace srforge
