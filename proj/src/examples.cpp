#include "srforge/examples.hpp"

#include <array>
#include <functional>
#include <ostream>
#include <sstream>

#include "srforge/construct.hpp"
#include "srforge/io.hpp"
#include "srforge/rng.hpp"

namespace srforge {

namespace {

struct Checker {
    bool pass = true;
    std::string log;
    std::ostream* display = nullptr;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            log += "  mismatch: " + what + "\n";
        }
    }
    void note(const std::string& s) { log += "  note: " + s + "\n"; }
    void show(const std::string& title, const std::string& body) {
        if (display) *display << title << "\n" << body << "\n";
    }
    void show_mat(const std::string& title, const Mat& m) {
        if (!display) return;
        std::ostringstream os;
        write_matrix_text(os, m);
        show(title, os.str());
    }
};

// ---- shared fixtures ----

Mat ex22_matrix() {
    return mat_from_ints(field_new_prime(7), 3, 3, {6, 2, 2, 4, 3, 1, 3, 3, 4});
}

Mat ex24_matrix() {
    return mat_from_ints(field_new_prime(2), 4, 4, {1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1});
}

std::pair<Mat, Mat> ex31_factors() {
    auto f7 = field_new_prime(7);
    return {mat_from_ints(f7, 2, 2, {1, 2, 3, 4}), mat_from_ints(f7, 2, 2, {1, 1, 0, 3})};
}

CompanionCtxPtr comp310() { return companion(Poly{3, 3, 0, 1}, 5); }
CompanionCtxPtr comp311() { return companion(Poly{2, 3, 0, 1}, 5); }
CompanionCtxPtr comp43() { return companion(Poly{6, 11, 0, 1}, 13); }

Mat ex310_ground(const CompanionCtxPtr& c) {
    return mat_from_ints(c->base, 3, 3, {1, 2, 2, 2, 1, 3, 3, 2, 4});
}

Mat ex43_ground(const CompanionCtxPtr& c) {
    return mat_from_ints(c->base, 4, 4, {6, 9, 2, 6, 4, 3, 8, 1, 3, 3, 4, 9, 3, 9, 9, 5});
}

FieldElem alpha_power_times(const FieldCtxPtr& ext, uint64_t k, uint64_t scalar) {
    return mul(fe_pow(fe_alpha(ext), k), fe_scalar(ext, scalar));
}

std::string set1(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

// dlog exponents of every block of a lifted matrix, row-major
std::vector<uint64_t> block_exponents(const Mat& lifted) {
    std::vector<uint64_t> out;
    for (std::size_t i = 0; i < lifted.rows(); ++i)
        for (std::size_t j = 0; j < lifted.cols(); ++j) out.push_back(dlog(lifted.at(i, j)));
    return out;
}

// ---- cases ----

void case_ex22(const VerifyOptions& opts, Checker& ck) {
    Mat m = ex22_matrix();
    ck.show_mat("M (Example 2.2)", m);
    MinorTable t = minor_table(m, 2);
    ck.show("all 2x2 minors (Table 1)", minor_table_text(t));
    const long long expected[3][3] = {{3, 5, 3}, {5, 4, 2}, {3, 6, 2}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            ck.check(t.dets[r][c] == fe_scalar(m.ctx(), expected[r][c]),
                     "Table 1 entry rows " + set1(t.row_sets[r]) + " cols " + set1(t.col_sets[c]));
    ck.check(det(m) == fe_scalar(m.ctx(), 6), "det(M) = 6");
    VerifyReport rep = is_superregular(m, opts);
    ck.check(rep.verdict, "M is superregular over F_7");
    ck.check(rep.minors_checked == 19, "19 minors checked (9 + 9 + 1)");
}

void case_ex24(const VerifyOptions& opts, Checker& ck) {
    Mat a = ex24_matrix();
    ck.show_mat("A (Example 2.4)", a);
    VerifyReport blk = is_block_superregular(block_mat(a, 2), opts);
    ck.check(blk.verdict, "A is 2-block superregular over F_2");
    ck.check(blk.minors_checked == 5, "5 full-block minors checked");
    ck.check(det(a) == fe_one(a.ctx()), "det(A) = 1");
    VerifyReport sr = is_superregular(a, opts);
    ck.check(!sr.verdict, "A is not superregular over F_2");
    ck.check(sr.witness_rows == IndexSet{0} && sr.witness_cols == IndexSet{1},
             "witness is the zero entry at row 1, column 2");
}

void case_ex31(const VerifyOptions& opts, Checker& ck) {
    auto [a, b] = ex31_factors();
    Mat m = kron(a, b);
    ck.show_mat("M = A tensor B (Example 3.1)", m);
    Mat expected = mat_from_ints(a.ctx(), 4, 4, {1, 1, 2, 2, 0, 3, 0, 6, 3, 3, 4, 4, 0, 2, 0, 5});
    ck.check(m == expected, "A tensor B matches the displayed 4x4");
    FieldElem da = det(a), db = det(b), dm = det(m);
    ck.check(da == fe_scalar(a.ctx(), 5), "det(A) = 5");
    ck.check(db == fe_scalar(a.ctx(), 3), "det(B) = 3");
    ck.check(dm == fe_one(a.ctx()), "det(M) = 1 in F_7");
    ck.check(dm == mul(fe_pow(da, 2), fe_pow(db, 2)), "det(M) = det(A)^2 det(B)^2");
    FieldElem printed = mul(fe_pow(da, 2), fe_pow(db, 3));
    ck.check(!(printed == dm), "the printed derivation 5^2*3^3 (= 3 mod 7) differs from det(M)");
    ck.note("the source prints det(M) = 5^2*3^3; the determinant identity gives 5^2*3^2 = 225 = 1 mod 7, "
            "matching the stated result 1");
    VerifyReport blk = is_block_superregular(kron_block(a, b, opts), opts);
    ck.check(blk.verdict, "M is 2-block superregular over F_7");
    ck.check(!is_superregular(m, opts).verdict, "M is not superregular");
}

void case_ex34(const VerifyOptions& opts, Checker& ck) {
    auto [a, b] = ex31_factors();
    Mat aa = kron(a, a);
    ck.check(aa == mat_from_ints(a.ctx(), 4, 4, {1, 2, 2, 4, 3, 4, 6, 1, 3, 6, 4, 1, 2, 5, 5, 2}),
             "A tensor A matches");
    BlockMat m2 = chain({a, a}, b, opts);
    ck.show("M2 = A tensor A tensor B (Example 3.4)", [&] {
        std::ostringstream os;
        write_blockmat_text(os, m2);
        return os.str();
    }());
    ck.check(m2.block_size == 4, "declared block size 4");
    Mat expected = mat_from_ints(a.ctx(), 8, 8,
                                 {1, 1, 2, 2, 2, 2, 4, 4, 0, 3, 0, 6, 0, 6, 0, 5,
                                  3, 3, 4, 4, 6, 6, 1, 1, 0, 2, 0, 5, 0, 4, 0, 3,
                                  3, 3, 6, 6, 4, 4, 1, 1, 0, 2, 0, 4, 0, 5, 0, 3,
                                  2, 2, 5, 5, 5, 5, 2, 2, 0, 6, 0, 1, 0, 1, 0, 6});
    ck.check(m2.inner == expected, "M2 matches the displayed 8x8");
    ck.check(is_block_superregular(m2, opts).verdict, "M2 is 4-block superregular over F_7");

    VerifyReport b2 = is_block_superregular(block_mat(m2.inner, 2), opts);
    ck.check(!b2.verdict, "M2 is not 2-block superregular");
    ck.check(b2.witness_rows == IndexSet{0, 1} && b2.witness_cols == IndexSet{0, 2},
             "first singular full-block selection is block rows {1,2} cols {1,3}");
    if (!opts.exhaustive)
        ck.check(b2.minors_checked == 18, "witness found after 18 block minors");
    Mat paper_sel = submatrix(m2.inner, {0, 1, 4, 5}, {0, 1, 2, 3});
    ck.check(det(paper_sel).is_zero(), "the displayed selection (block rows {1,3} cols {1,2}) is singular");
    Mat leading = submatrix(m2.inner, {0, 1, 2, 3}, {0, 1, 2, 3});
    ck.check(!det(leading).is_zero(), "block rows {1,2} cols {1,2} form A tensor B and are nonsingular");
    ck.note("two singular 4x4 full-block selections certify the failure: the canonical witness "
            "block rows {1,2} cols {1,3} and the source's highlighted block rows {1,3} cols {1,2}");
}

void case_ex310(const VerifyOptions& opts, Checker& ck) {
    auto comp = comp310();
    ck.show_mat("C, companion of x^3+3x+3 over F_5 (Example 3.10)", comp->C);
    ck.check(comp->C == mat_from_ints(comp->base, 3, 3, {0, 0, 2, 1, 0, 2, 0, 1, 0}),
             "C matches the displayed companion matrix");
    Mat a = ex310_ground(comp);
    Mat inner = kron(a, comp->C);
    Mat expected_inner = mat_from_ints(
        comp->base, 9, 9,
        {0, 0, 2, 0, 0, 4, 0, 0, 4, 1, 0, 2, 2, 0, 4, 2, 0, 4, 0, 1, 0, 0, 2, 0, 0, 2, 0,
         0, 0, 4, 0, 0, 2, 0, 0, 1, 2, 0, 4, 1, 0, 2, 3, 0, 1, 0, 2, 0, 0, 1, 0, 0, 3, 0,
         0, 0, 1, 0, 0, 4, 0, 0, 3, 3, 0, 1, 2, 0, 4, 4, 0, 3, 0, 3, 0, 0, 2, 0, 0, 4, 0});
    ck.check(inner == expected_inner, "A tensor C matches the displayed 9x9");
    BlockMat bm = block_mat(inner, 3, comp);
    ck.show("block pattern of A tensor C", [&] {
        std::ostringstream os;
        write_blockmat_text(os, bm, true);
        return os.str();
    }());

    Mat lifted = Psi_inv(comp, bm);
    const uint64_t pattern[9] = {1, 32, 32, 32, 1, 94, 94, 32, 63};
    auto exps = block_exponents(lifted);
    for (int i = 0; i < 9; ++i)
        ck.check(exps[i] == pattern[i], "block (" + std::to_string(i / 3 + 1) + "," +
                                            std::to_string(i % 3 + 1) + ") is C^" +
                                            std::to_string(pattern[i]));
    ck.check(lifted == perturb_base(a, comp), "Psi_inv(A tensor C) = alpha * A");
    ck.check(lifted == lift({a}, comp, std::nullopt, opts), "lift reproduces Psi_inv(A tensor C)");
    ck.show_mat("Psi_inv(M) over F_125", lifted);

    MinorTable t = minor_table(lifted, 2);
    ck.show("all 2x2 minors of Psi_inv(M)", minor_table_text(t));
    const uint64_t minors[3][3] = {{2, 4, 4}, {1, 3, 4}, {1, 4, 3}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            ck.check(t.dets[r][c] == alpha_power_times(comp->ext, 2, minors[r][c]),
                     "minor rows " + set1(t.row_sets[r]) + " cols " + set1(t.col_sets[c]) +
                         " = " + std::to_string(minors[r][c]) + "a^2");
    ck.check(det(a) == fe_scalar(comp->base, 2), "det(A) = 2 in F_5");
    ck.check(det(lifted) == alpha_power_times(comp->ext, 3, 2), "det(Psi_inv(M)) = 2a^3");
    ck.check(is_superregular(lifted, opts).verdict, "Psi_inv(M) is superregular over F_125");

    Mat frob = mat_frobenius(lifted, 2);
    const uint64_t frob_pattern[9] = {25, 56, 56, 56, 25, 118, 118, 56, 87};
    auto fexps = block_exponents(frob);
    for (int i = 0; i < 9; ++i)
        ck.check(fexps[i] == frob_pattern[i], "Frobenius image exponent " + std::to_string(i));
    ck.check(is_superregular(frob, opts).verdict, "the Frobenius image stays superregular");
}

void case_ex311(const VerifyOptions& opts, Checker& ck) {
    auto compd = comp311();
    ck.show_mat("D, companion of x^3+3x+2 over F_5 (Example 3.11)", compd->C);
    ck.check(compd->C == mat_from_ints(compd->base, 3, 3, {0, 0, 3, 1, 0, 2, 0, 1, 0}),
             "D matches the displayed companion matrix");
    Mat a = mat_from_ints(compd->base, 3, 3, {1, 2, 2, 2, 1, 3, 3, 2, 4});
    Mat n = lift({a}, compd, std::nullopt, opts);
    ck.show("block pattern of A tensor D", [&] {
        std::ostringstream os;
        write_blockmat_text(os, Psi(compd, n), true);
        return os.str();
    }());
    const uint64_t pattern[9] = {1, 94, 94, 94, 1, 32, 32, 94, 63};
    auto exps = block_exponents(n);
    for (int i = 0; i < 9; ++i)
        ck.check(exps[i] == pattern[i], "block (" + std::to_string(i / 3 + 1) + "," +
                                            std::to_string(i % 3 + 1) + ") is D^" +
                                            std::to_string(pattern[i]));
    ck.check(is_superregular(n, opts).verdict, "Psi_inv(N) is superregular over F_125");

    // stated relation Psi_inv(N) = (1/sigma_1(alpha)) * sigma_2(Psi_inv(M)),
    // checked for every realization of gamma as a root of x^3+3x+2
    auto compc = comp310();
    Mat lifted_m = lift({ex310_ground(compc)}, compc, std::nullopt, opts);
    Mat rhs = mat_scale(inv(frobenius(fe_alpha(compc->ext), 1)), mat_frobenius(lifted_m, 2));
    auto roots = find_roots(Poly{2, 3, 0, 1}, compc->ext);
    ck.check(roots.size() == 3, "x^3+3x+2 has three roots in F_125");
    std::string holds;
    for (const FieldElem& g : roots) {
        Mat lhs(3, 3, compc->ext);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) lhs.set(i, j, fe_pow(g, pattern[i * 3 + j]));
        bool eq = lhs == rhs;
        holds += std::string(holds.empty() ? "" : ", ") + "gamma=alpha^" + std::to_string(dlog(g)) +
                 ": " + (eq ? "holds" : "fails");
        ck.check(!eq, "the relation fails for gamma = alpha^" + std::to_string(dlog(g)));
    }
    ck.note("relation Psi_inv(N) = (1/sigma_1(alpha)) * sigma_2(Psi_inv(M)) checked per root: " + holds);
    ck.note("no root realizes it: entry (1,1) forces gamma = alpha^20, and x^3+3x+2 does not "
            "vanish at alpha^20");
}

// perturbation spec for the 4x4 base: columns carry (f, g, h, i), each
// var contributing var_2 alpha^2 + var_3 alpha^3 to row 1
PerturbSpecRow row_spec43(const std::array<uint32_t, 8>& v) {
    PerturbSpecRow spec;
    spec.row = 1;
    for (std::size_t col = 0; col < 4; ++col) {
        if (v[2 * col]) spec.coeffs[col + 1][2] = v[2 * col];
        if (v[2 * col + 1]) spec.coeffs[col + 1][3] = v[2 * col + 1];
    }
    return spec;
}

std::array<uint32_t, 8> sample_vars43(Rng& rng) {
    std::array<uint32_t, 8> v;
    for (auto& x : v) x = static_cast<uint32_t>(rng.below(13));
    return v;
}

void case_ex43(const VerifyOptions& opts, Checker& ck) {
    auto comp = comp43();
    Mat a = ex43_ground(comp);
    ck.show_mat("A (Example 4.3) over F_13", a);
    ck.check(is_superregular(a, opts).verdict, "A is superregular over F_13");
    ck.check(det(a) == fe_scalar(comp->base, 10), "det(A) = 10");
    ck.check(is_primitive(comp->poly, 13), "x^3+11x+6 is primitive over F_13");

    Mat m = perturb_base(a, comp);
    ck.show_mat("M = alpha * A over F_13^3", m);
    PerturbSpecRow zero;
    zero.row = 1;
    ck.check(perturb_row(m, comp, zero, opts) == m, "zero perturbation leaves M unchanged");
    ck.check(det(m) == alpha_power_times(comp->ext, 4, 10),
             "det(M)/alpha^4 has constant term 10 (and nothing else)");

    Rng rng(0x43a);
    VerifyOptions ex = opts;
    ex.exhaustive = true;
    int formula_ok = 0, sr_ok = 0;
    const int samples = 200;
    for (int s = 0; s < samples; ++s) {
        auto v = sample_vars43(rng);
        Mat n = perturb_row(m, comp, row_spec43(v), opts);
        uint64_t lin2 = (11ull * v[0] + 3 * v[2] + 11 * v[4] + 2 * v[6]) % 13;
        uint64_t lin3 = (11ull * v[1] + 3 * v[3] + 11 * v[5] + 2 * v[7]) % 13;
        FieldElem expect = mul(fe_pow(fe_alpha(comp->ext), 4),
                               fe_from_coeffs(comp->ext, {10, static_cast<uint32_t>(lin2),
                                                          static_cast<uint32_t>(lin3)}));
        if (det(n) == expect) ++formula_ok;
        if (is_superregular(n, ex).verdict) ++sr_ok;
    }
    ck.check(formula_ok == samples,
             "det(N) = alpha^4 [10 + (11f2+3g2+11h2+2i2) alpha + (11f3+3g3+11h3+2i3) alpha^2] "
             "on all sampled coefficients (" + std::to_string(formula_ok) + "/200)");
    ck.check(sr_ok == samples,
             "every sampled perturbation stays superregular (" + std::to_string(sr_ok) + "/200)");
}

// 3x3 and 2x2 minor formulas for Example 4.3's perturbed matrix: after
// factoring alpha^k the value is c + L(v_2) alpha + L(v_3) alpha^2 with
// one linear form L applied to the alpha^2 and alpha^3 coefficient rows
struct LinEntry {
    IndexSet rows, cols; // 0-based
    uint32_t c;
    std::array<uint32_t, 4> w; // weights for (f, g, h, i)
};

FieldElem lin_value(const CompanionCtxPtr& comp, const LinEntry& e,
                    const std::array<uint32_t, 8>& v) {
    uint64_t l2 = 0, l3 = 0;
    for (int k = 0; k < 4; ++k) {
        l2 += static_cast<uint64_t>(e.w[k]) * v[2 * k];
        l3 += static_cast<uint64_t>(e.w[k]) * v[2 * k + 1];
    }
    return mul(fe_pow(fe_alpha(comp->ext), e.rows.size()),
               fe_from_coeffs(comp->ext, {e.c, static_cast<uint32_t>(l2 % 13),
                                          static_cast<uint32_t>(l3 % 13)}));
}

void case_tableA2(const VerifyOptions& opts, Checker& ck) {
    auto comp = comp43();
    Mat m = perturb_base(ex43_ground(comp), comp);
    // the ten uncorrupted entries, column sets {1,2,3},{1,2,4},{1,3,4},{2,3,4}
    const std::vector<LinEntry> clean = {
        {{0, 1, 2}, {0, 1, 2}, 6, {1, 8, 3, 0}},  {{0, 1, 3}, {0, 1, 2}, 1, {7, 1, 1, 0}},
        {{0, 2, 3}, {0, 1, 2}, 3, {4, 11, 5, 0}}, {{0, 1, 2}, {0, 1, 3}, 8, {11, 6, 0, 3}},
        {{0, 1, 3}, {0, 1, 3}, 6, {6, 9, 0, 1}},  {{0, 2, 3}, {0, 1, 3}, 2, {12, 12, 0, 5}},
        {{0, 1, 2}, {0, 2, 3}, 8, {3, 0, 6, 5}},  {{0, 2, 3}, {0, 2, 3}, 8, {4, 0, 12, 2}},
        {{0, 1, 2}, {1, 2, 3}, 11, {0, 3, 2, 1}}, {{0, 2, 3}, {1, 2, 3}, 10, {0, 4, 1, 4}},
    };
    Rng rng(0xa2);
    std::array<uint32_t, 8> zero{};
    for (const auto& e : clean) {
        Mat n0 = perturb_row(m, comp, row_spec43(zero), opts);
        ck.check(det(submatrix(n0, e.rows, e.cols)) == lin_value(comp, e, zero),
                 "constant of minor rows " + set1(e.rows) + " cols " + set1(e.cols));
    }
    int ok = 0;
    const int samples = 200;
    for (int s = 0; s < samples; ++s) {
        auto v = sample_vars43(rng);
        Mat n = perturb_row(m, comp, row_spec43(v), opts);
        bool all = true;
        for (const auto& e : clean)
            if (!(det(submatrix(n, e.rows, e.cols)) == lin_value(comp, e, v))) all = false;
        if (all) ++ok;
    }
    ck.check(ok == samples, "the ten printed 3x3 formulas hold on all sampled coefficients (" +
                                std::to_string(ok) + "/200)");

    // two table cells are verbatim copies of the rows {1,2,4} cols {1,2,3}
    // entry; they reference variables of the excluded column, so they
    // cannot be the actual minors. The true constants are 3 and 10.
    struct Corrupt {
        IndexSet rows, cols;
        uint32_t true_c;
        std::size_t excluded_var; // index into (f,g,h,i) of the excluded column
    };
    const LinEntry printed_dup = {{0, 1, 3}, {0, 1, 2}, 1, {7, 1, 1, 0}};
    const std::vector<Corrupt> corrupt = {
        {{0, 1, 3}, {0, 2, 3}, 3, 1},  // cols {1,3,4}: column 2 (g) excluded
        {{0, 1, 3}, {1, 2, 3}, 10, 0}, // cols {2,3,4}: column 1 (f) excluded
    };
    for (const auto& e : corrupt) {
        Mat n0 = perturb_row(m, comp, row_spec43(zero), opts);
        FieldElem base_val = alpha_power_times(comp->ext, 3, e.true_c);
        ck.check(det(submatrix(n0, e.rows, e.cols)) == base_val,
                 "true constant of minor rows " + set1(e.rows) + " cols " + set1(e.cols) + " is " +
                     std::to_string(e.true_c));
        // probing the excluded column's variable must not move the minor,
        // while the printed duplicate formula says it would
        std::array<uint32_t, 8> probe{};
        probe[2 * e.excluded_var] = 1;
        Mat np = perturb_row(m, comp, row_spec43(probe), opts);
        FieldElem actual = det(submatrix(np, e.rows, e.cols));
        ck.check(actual == base_val, "minor rows " + set1(e.rows) + " cols " + set1(e.cols) +
                                         " does not depend on the excluded column");
        LinEntry dup = printed_dup;
        dup.rows = e.rows;
        dup.cols = e.cols;
        ck.check(!(actual == lin_value(comp, dup, probe)),
                 "the printed duplicate formula disagrees with the actual minor at the probe");
    }
    ck.note("two printed entries (rows {1,2,4} cols {1,3,4} and rows {1,2,4} cols {2,3,4}) "
            "duplicate the rows {1,2,4} cols {1,2,3} entry verbatim and reference variables of "
            "their excluded columns; the actual constants are 3 and 10");
}

void case_tableA3(const VerifyOptions& opts, Checker& ck) {
    auto comp = comp43();
    Mat m = perturb_base(ex43_ground(comp), comp);
    // fifteen 2x2 entries: column sets {1,2},{1,3},{1,4},{2,3},{3,4},
    // row sets {1,2},{1,3},{1,4} each
    const std::vector<LinEntry> entries = {
        {{0, 1}, {0, 1}, 8, {3, 9, 0, 0}},   {{0, 2}, {0, 1}, 4, {3, 10, 0, 0}},
        {{0, 3}, {0, 1}, 1, {9, 10, 0, 0}},  {{0, 1}, {0, 2}, 1, {8, 0, 9, 0}},
        {{0, 2}, {0, 2}, 5, {4, 0, 10, 0}},  {{0, 3}, {0, 2}, 9, {9, 0, 10, 0}},
        {{0, 1}, {0, 3}, 8, {1, 0, 0, 9}},   {{0, 2}, {0, 3}, 10, {9, 0, 0, 10}},
        {{0, 3}, {0, 3}, 12, {5, 0, 0, 10}}, {{0, 1}, {1, 2}, 1, {0, 8, 10, 0}},
        {{0, 2}, {1, 2}, 4, {0, 4, 10, 0}},  {{0, 3}, {1, 2}, 11, {0, 9, 4, 0}},
        {{0, 1}, {2, 3}, 6, {0, 0, 1, 5}},   {{0, 2}, {2, 3}, 7, {0, 0, 9, 9}},
        {{0, 3}, {2, 3}, 8, {0, 0, 5, 4}},
    };
    std::array<uint32_t, 8> zero{};
    Mat n0 = perturb_row(m, comp, row_spec43(zero), opts);
    for (const auto& e : entries)
        ck.check(det(submatrix(n0, e.rows, e.cols)) == lin_value(comp, e, zero),
                 "constant of minor rows " + set1(e.rows) + " cols " + set1(e.cols));
    Rng rng(0xa3);
    int ok = 0;
    const int samples = 200;
    for (int s = 0; s < samples; ++s) {
        auto v = sample_vars43(rng);
        Mat n = perturb_row(m, comp, row_spec43(v), opts);
        bool all = true;
        for (const auto& e : entries)
            if (!(det(submatrix(n, e.rows, e.cols)) == lin_value(comp, e, v))) all = false;
        if (all) ++ok;
    }
    ck.check(ok == samples, "all fifteen printed 2x2 formulas hold on sampled coefficients (" +
                                std::to_string(ok) + "/200)");
    ck.note("the rows {1,2} cols {1,2} entry is read with its duplicated alpha term dropped "
            "(the source prints the (3f2+9g2) alpha term twice), and one entry carries a "
            "doubled plus sign; values are otherwise as printed");
}

// Example 4.5 perturbation: vars (n11,n12,n13,n21,n22,n23) over F_5
PerturbSpecBlock block_spec45(const std::array<uint32_t, 6>& v) {
    PerturbSpecBlock spec;
    spec.t = 2;
    spec.rows = 2;
    spec.table = {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
    return spec;
}

struct QuadEntry {
    IndexSet rows, cols;
    uint32_t c;
    std::array<uint32_t, 6> lin;
    std::vector<std::array<uint32_t, 3>> quad; // (var index, var index, weight)
};

FieldElem quad_value(const CompanionCtxPtr& comp, const QuadEntry& e,
                     const std::array<uint32_t, 6>& v) {
    uint64_t l = 0, q = 0;
    for (int k = 0; k < 6; ++k) l += static_cast<uint64_t>(e.lin[k]) * v[k];
    for (const auto& t : e.quad) q += static_cast<uint64_t>(t[2]) * v[t[0]] * v[t[1]];
    return mul(fe_pow(fe_alpha(comp->ext), e.rows.size()),
               fe_from_coeffs(comp->ext, {e.c, static_cast<uint32_t>(l % 5),
                                          static_cast<uint32_t>(q % 5)}));
}

const std::vector<QuadEntry>& table51_entries() {
    static const std::vector<QuadEntry> entries = {
        {{0, 1}, {0, 1}, 2, {1, 3, 0, 3, 1, 0}, {{0, 4, 1}, {1, 3, 4}}},
        {{0, 2}, {0, 1}, 1, {2, 2, 0, 0, 0, 0}, {}},
        {{1, 2}, {0, 1}, 1, {0, 0, 0, 2, 2, 0}, {}},
        {{0, 1}, {0, 2}, 4, {3, 0, 3, 3, 0, 1}, {{0, 5, 1}, {2, 3, 4}}},
        {{0, 2}, {0, 2}, 3, {4, 0, 2, 0, 0, 0}, {}},
        {{1, 2}, {0, 2}, 4, {0, 0, 0, 4, 0, 2}, {}},
        {{0, 1}, {1, 2}, 4, {0, 3, 4, 0, 3, 2}, {{1, 5, 1}, {2, 4, 4}}},
        {{0, 2}, {1, 2}, 4, {0, 4, 3, 0, 0, 0}, {}},
        {{1, 2}, {1, 2}, 3, {0, 0, 0, 0, 4, 3}, {}},
    };
    return entries;
}

void case_ex45(const VerifyOptions& opts, Checker& ck) {
    auto comp = comp310();
    Mat a = ex310_ground(comp);
    Mat m = perturb_base(a, comp);
    ck.show_mat("base matrix alpha * A over F_125 (Example 4.5)", m);
    std::array<uint32_t, 6> zero{};
    ck.check(perturb_block(m, comp, block_spec45(zero), opts) == m,
             "zero perturbation with identity permutation leaves M unchanged");
    ck.check(det(m) == alpha_power_times(comp->ext, 3, 2), "det(M) = 2a^3");

    Rng rng(0x45b);
    VerifyOptions ex = opts;
    ex.exhaustive = true;
    int formula_ok = 0, sr_ok = 0;
    const int samples = 200;
    for (int s = 0; s < samples; ++s) {
        std::array<uint32_t, 6> v;
        for (auto& x : v) x = static_cast<uint32_t>(rng.below(5));
        Mat n = perturb_block(m, comp, block_spec45(v), opts);
        uint64_t lin = (3ull * v[0] + v[1] + v[2] + v[3] + 3 * v[4] + 4 * v[5]) % 5;
        uint64_t quad = (4ull * v[0] * v[4] + 3 * v[0] * v[5] + v[1] * v[3] + 3 * v[1] * v[5] +
                         2 * v[2] * v[3] + 2 * v[2] * v[4]) %
                        5;
        FieldElem expect = mul(fe_pow(fe_alpha(comp->ext), 3),
                               fe_from_coeffs(comp->ext, {2, static_cast<uint32_t>(lin),
                                                          static_cast<uint32_t>(quad)}));
        if (det(n) == expect) ++formula_ok;
        if (is_superregular(n, ex).verdict) ++sr_ok;
    }
    ck.check(formula_ok == samples, "det(N) matches the displayed alpha^3 expansion on all "
                                    "sampled coefficients (" + std::to_string(formula_ok) + "/200)");
    ck.check(sr_ok == samples,
             "every sampled perturbation stays superregular (" + std::to_string(sr_ok) + "/200)");
}

void case_tableA4(const VerifyOptions& opts, Checker& ck) {
    auto comp = comp310();
    Mat m = perturb_base(ex310_ground(comp), comp);
    Rng rng(0xa4);
    int ok = 0;
    const int samples = 200;
    for (int s = 0; s < samples; ++s) {
        std::array<uint32_t, 6> v;
        for (auto& x : v) x = static_cast<uint32_t>(rng.below(5));
        Mat n = perturb_block(m, comp, block_spec45(v), opts);
        bool all = true;
        for (const auto& e : table51_entries())
            if (!(det(submatrix(n, e.rows, e.cols)) == quad_value(comp, e, v))) all = false;
        if (all) ++ok;
    }
    ck.check(ok == samples, "all nine printed 2x2 formulas hold on sampled coefficients (" +
                                std::to_string(ok) + "/200)");
}

void case_tableA5(const VerifyOptions& opts, Checker& ck) {
    auto comp = comp310();
    Mat m = perturb_base(ex310_ground(comp), comp);
    std::array<uint32_t, 6> zero{};
    Mat n0 = perturb_block(m, comp, block_spec45(zero), opts);
    MinorTable t = minor_table(n0, 2);
    ck.show("2x2 minors at the zero instantiation", minor_table_text(t));
    for (const auto& e : table51_entries()) {
        FieldElem expect = alpha_power_times(comp->ext, 2, e.c);
        ck.check(det(submatrix(n0, e.rows, e.cols)) == expect,
                 "constant of minor rows " + set1(e.rows) + " cols " + set1(e.cols) + " is " +
                     std::to_string(e.c));
    }
}

using CaseFn = std::function<void(const VerifyOptions&, Checker&)>;

const std::vector<std::pair<std::string, CaseFn>>& case_table() {
    static const std::vector<std::pair<std::string, CaseFn>> cases = {
        {"ex2.2", case_ex22},   {"ex2.4", case_ex24},     {"ex3.1", case_ex31},
        {"ex3.4", case_ex34},   {"ex3.10", case_ex310},   {"ex3.11", case_ex311},
        {"ex4.3", case_ex43},   {"ex4.5", case_ex45},     {"tableA2", case_tableA2},
        {"tableA3", case_tableA3}, {"tableA4", case_tableA4}, {"tableA5", case_tableA5},
    };
    return cases;
}

} // namespace

const std::vector<std::string>& example_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : case_table()) v.push_back(id);
        return v;
    }();
    return ids;
}

ExampleOutcome run_example(const std::string& id, const VerifyOptions& opts,
                           std::ostream* display) {
    for (const auto& [cid, fn] : case_table()) {
        if (cid != id) continue;
        Checker ck;
        ck.display = display;
        fn(opts, ck);
        return {id, ck.pass, ck.log};
    }
    fail(errc::IndexOutOfRange, "unknown example id '" + id + "'");
}

std::vector<ExampleOutcome> run_all_examples(const VerifyOptions& opts) {
    std::vector<ExampleOutcome> out;
    for (const auto& id : example_ids()) out.push_back(run_example(id, opts));
    return out;
}

} // namespace srforge
