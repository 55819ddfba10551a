#include "doctest.h"
#include "oracles.hpp"
#include "srforge/companion.hpp"
#include "srforge/io.hpp"
#include "srforge/verify.hpp"

using namespace srforge;

namespace {

uint64_t full_minor_count(std::size_t m, std::size_t t) {
    uint64_t total = 0;
    for (std::size_t k = 1; k <= std::min(m, t); ++k) total += binomial(m, k) * binomial(t, k);
    return total;
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(52, 5) == 2598960);
    CHECK_THROWS_AS(binomial(80, 40), error); // past 64-bit range
}

TEST_CASE("minor counts for a passing matrix") {
    auto f7 = field_new_prime(7);
    Mat m = mat_from_ints(f7, 3, 3, {6, 2, 2, 4, 3, 1, 3, 3, 4});
    VerifyReport rep = is_superregular(m);
    CHECK(rep.verdict);
    CHECK(!rep.witness_rows.has_value());
    CHECK(!rep.witness_cols.has_value());
    CHECK(rep.minors_checked == 19);
    CHECK(rep.minors_checked == full_minor_count(3, 3));
    // exhaustive mode checks the same count when the verdict is true
    VerifyReport ex = is_superregular(m, {true, 1});
    CHECK(ex.verdict);
    CHECK(ex.minors_checked == 19);
    CHECK(rep.elapsed_seconds >= 0.0);
}

TEST_CASE("witness is deterministic and lexicographically first") {
    auto f2 = field_new_prime(2);
    Mat a = mat_from_ints(f2, 4, 4, {1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1});
    VerifyReport rep = is_superregular(a);
    CHECK(!rep.verdict);
    CHECK(rep.witness_rows == IndexSet{0});
    CHECK(rep.witness_cols == IndexSet{1});
    // entry (1,1) passes, entry (1,2) is the second minor checked
    CHECK(rep.minors_checked == 2);

    // non-exhaustive and exhaustive agree on the witness
    VerifyReport ex = is_superregular(a, {true, 1});
    CHECK(ex.witness_rows == rep.witness_rows);
    CHECK(ex.witness_cols == rep.witness_cols);
    CHECK(ex.minors_checked == full_minor_count(4, 4));
}

TEST_CASE("block witness and count on the 8x8 iterated product") {
    auto f7 = field_new_prime(7);
    Mat a = mat_from_ints(f7, 2, 2, {1, 2, 3, 4});
    Mat b = mat_from_ints(f7, 2, 2, {1, 1, 0, 3});
    Mat m2 = kron(kron(a, a), b);
    VerifyReport r4 = is_block_superregular(block_mat(m2, 4));
    CHECK(r4.verdict);
    CHECK(r4.block_size == 4);
    CHECK(r4.minors_checked == 5);
    VerifyReport r2 = is_block_superregular(block_mat(m2, 2));
    CHECK(!r2.verdict);
    CHECK(r2.witness_rows == IndexSet{0, 1});
    CHECK(r2.witness_cols == IndexSet{0, 2});
    CHECK(r2.minors_checked == 18);
    CHECK(r2.block_size == 2);
}

TEST_CASE("verdicts and witnesses match the brute-force oracle") {
    auto f5 = field_new_prime(5);
    Rng rng(0x09a);
    for (int i = 0; i < 300; ++i) {
        std::size_t m = 1 + rng.below(4), t = 1 + rng.below(4);
        Mat x = oracle::random_mat(rng, f5, m, t);
        auto brute = oracle::brute_superregular(x);
        VerifyReport rep = is_superregular(x);
        REQUIRE(rep.verdict == brute.superregular);
        if (!rep.verdict) {
            CHECK(rep.witness_rows == brute.rows);
            CHECK(rep.witness_cols == brute.cols);
        }
    }
    // block variant against its own oracle
    for (int i = 0; i < 100; ++i) {
        std::size_t bm = 2 + rng.below(2), bt = 2 + rng.below(2), b = 2;
        Mat x = oracle::random_mat(rng, f5, bm * b, bt * b);
        auto brute = oracle::brute_block_superregular(x, b);
        VerifyReport rep = is_block_superregular(block_mat(x, b));
        REQUIRE(rep.verdict == brute.superregular);
        if (!rep.verdict) {
            CHECK(rep.witness_rows == brute.rows);
            CHECK(rep.witness_cols == brute.cols);
        }
    }
}

TEST_CASE("serial and parallel runs produce identical reports") {
    auto f5 = field_new_prime(5);
    auto f7 = field_new_prime(7);
    Rng rng(0x9a2);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
        auto ctx = i % 2 ? f5 : f7;
        std::size_t m = 2 + rng.below(4), t = 2 + rng.below(4);
        Mat x = oracle::random_mat(rng, ctx, m, t);
        for (bool exhaustive : {false, true}) {
            VerifyReport r1 = is_superregular(x, {exhaustive, 1});
            VerifyReport r4 = is_superregular(x, {exhaustive, 4});
            VerifyReport r8 = is_superregular(x, {exhaustive, 8});
            CHECK(report_json(r1) == report_json(r4));
            CHECK(report_json(r1) == report_json(r8));
            ++checked;
        }
    }
    CHECK(checked == 60);
    // block flavor as well
    for (int i = 0; i < 10; ++i) {
        Mat x = oracle::random_mat(rng, f5, 6, 6);
        VerifyReport r1 = is_block_superregular(block_mat(x, 2), {false, 1});
        VerifyReport r8 = is_block_superregular(block_mat(x, 2), {false, 8});
        CHECK(report_json(r1) == report_json(r8));
    }
}

TEST_CASE("superregular implies block superregular for every aligned size") {
    auto f13 = field_new_prime(13);
    Rng rng(0x5b1);
    int found = 0;
    while (found < 50) {
        Mat x = oracle::random_mat(rng, f13, 4, 4);
        if (!is_superregular(x).verdict) continue;
        ++found;
        CHECK(is_block_superregular(block_mat(x, 2)).verdict);
        CHECK(is_block_superregular(block_mat(x, 4)).verdict);
        CHECK(is_block_superregular(block_mat(x, 1)).verdict);
    }
}

TEST_CASE("exhaustive mode counts every minor") {
    auto f5 = field_new_prime(5);
    Rng rng(0xeee);
    for (int i = 0; i < 20; ++i) {
        Mat x = oracle::random_mat(rng, f5, 4, 5);
        VerifyReport ex = is_superregular(x, {true, 3});
        CHECK(ex.minors_checked == full_minor_count(4, 5));
        VerifyReport fast = is_superregular(x);
        CHECK(fast.verdict == ex.verdict);
        if (!fast.verdict) CHECK(fast.minors_checked <= ex.minors_checked);
    }
}

TEST_CASE("minor tables") {
    auto f7 = field_new_prime(7);
    Mat m = mat_from_ints(f7, 3, 3, {6, 2, 2, 4, 3, 1, 3, 3, 4});
    MinorTable t = minor_table(m, 2);
    CHECK(t.k == 2);
    REQUIRE(t.row_sets.size() == 3);
    REQUIRE(t.col_sets.size() == 3);
    CHECK(t.row_sets[0] == IndexSet{0, 1});
    CHECK(t.row_sets[2] == IndexSet{1, 2});
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(t.dets[r][c] == det(submatrix(m, t.row_sets[r], t.col_sets[c])));
    // rectangular source
    MinorTable tr = minor_table(mat_from_ints(f7, 2, 3, {1, 2, 3, 4, 5, 6}), 2);
    CHECK(tr.row_sets.size() == 1);
    CHECK(tr.col_sets.size() == 3);
    for (auto k : {std::size_t{0}, std::size_t{4}}) {
        try {
            minor_table(m, k);
            FAIL("expected SizeTooLarge");
        } catch (const error& e) {
            CHECK(e.code() == errc::SizeTooLarge);
        }
    }
}

TEST_CASE("elapsed time is excluded from serialized reports") {
    auto f7 = field_new_prime(7);
    VerifyReport rep = is_superregular(mat_from_ints(f7, 2, 2, {1, 2, 3, 4}));
    std::string j = report_json(rep);
    CHECK(j.find("elapsed") == std::string::npos);
    CHECK(report_text(rep).find("elapsed") == std::string::npos);
}

} // TEST_SUITE("verify")
