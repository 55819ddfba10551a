#include "doctest.h"
#include "oracles.hpp"
#include "srforge/linalg.hpp"

using namespace srforge;

namespace {
const Poly kP125{3, 3, 0, 1};
}

TEST_SUITE("linalg") {

TEST_CASE("construction and access") {
    auto f7 = field_new_prime(7);
    Mat m = mat_from_ints(f7, 2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(1, 2) == fe_scalar(f7, 6));
    CHECK_THROWS_AS(m.at(2, 0), error);
    CHECK_THROWS_AS(m.at(0, 3), error);
    CHECK_THROWS_AS(Mat(0, 3, f7), error);
    CHECK_THROWS_AS(mat_from_ints(f7, 2, 2, {1, 2, 3}), error);
    Mat w(2, 2, f7);
    CHECK_THROWS_AS(w.set(0, 0, fe_one(field_new_prime(5))), error);
    // negative integers reduce mod p
    CHECK(mat_from_ints(f7, 1, 1, {-3}).at(0, 0) == fe_scalar(f7, 4));
    CHECK(mat_identity(3, f7).at(1, 1) == fe_one(f7));
    CHECK(mat_identity(3, f7).at(0, 1).is_zero());
}

TEST_CASE("determinant matches cofactor expansion") {
    auto f5 = field_new_prime(5);
    Rng rng(0xde7);
    for (int i = 0; i < 1000; ++i) {
        std::size_t n = 1 + rng.below(5);
        Mat m = oracle::random_mat(rng, f5, n, n);
        CHECK(det(m) == oracle::det_cofactor(m));
    }
    // extension-field entries too
    auto f125 = field_new(5, kP125);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + rng.below(4);
        Mat m = oracle::random_mat(rng, f125, n, n);
        CHECK(det(m) == oracle::det_cofactor(m));
    }
}

TEST_CASE("determinant known values") {
    auto f7 = field_new_prime(7);
    CHECK(det(mat_from_ints(f7, 3, 3, {6, 2, 2, 4, 3, 1, 3, 3, 4})) == fe_scalar(f7, 6));
    CHECK(det(mat_from_ints(f7, 1, 1, {4})) == fe_scalar(f7, 4));
    CHECK(det(mat_from_ints(f7, 2, 2, {1, 2, 2, 4})).is_zero());
    CHECK(det(mat_identity(4, f7)) == fe_one(f7));
    CHECK_THROWS_AS(det(mat_from_ints(f7, 2, 3, {1, 2, 3, 4, 5, 6})), error);
}

TEST_CASE("kron structure and determinant identity") {
    auto f7 = field_new_prime(7);
    Mat a = mat_from_ints(f7, 2, 2, {1, 2, 3, 4});
    Mat b = mat_from_ints(f7, 2, 2, {1, 1, 0, 3});
    Mat m = kron(a, b);
    REQUIRE(m.rows() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(m.at(i, j) == a.at(i / 2, j / 2) * b.at(i % 2, j % 2));

    // rectangular factors are allowed
    Mat r = kron(mat_from_ints(f7, 2, 3, {1, 2, 3, 4, 5, 6}), b);
    CHECK(r.rows() == 4);
    CHECK(r.cols() == 6);

    // associativity
    Rng rng2(0x40);
    for (auto ctx : {field_new_prime(5), field_new_prime(13)}) {
        for (int i = 0; i < 25; ++i) {
            Mat x = oracle::random_mat(rng2, ctx, 2, 2);
            Mat y = oracle::random_mat(rng2, ctx, 2, 3);
            Mat z = oracle::random_mat(rng2, ctx, 3, 2);
            CHECK(kron(kron(x, y), z) == kron(x, kron(y, z)));
        }
    }

    // det(A (x) B) = det(A)^t det(B)^m for A m x m, B t x t
    for (auto ctx : {field_new_prime(5), field_new_prime(7), field_new_prime(13)}) {
        Rng r2(0xe01);
        for (int i = 0; i < 200; ++i) {
            std::size_t ma = 1 + r2.below(3), tb = 1 + r2.below(3);
            Mat x = oracle::random_mat(r2, ctx, ma, ma);
            Mat y = oracle::random_mat(r2, ctx, tb, tb);
            CHECK(det(kron(x, y)) == fe_pow(det(x), tb) * fe_pow(det(y), ma));
        }
    }
    CHECK_THROWS_AS(kron(a, mat_from_ints(field_new_prime(5), 1, 1, {1})), error);
}

TEST_CASE("matrix algebra") {
    auto f7 = field_new_prime(7);
    Rng rng(0xa19);
    for (int i = 0; i < 50; ++i) {
        Mat x = oracle::random_mat(rng, f7, 3, 3);
        Mat y = oracle::random_mat(rng, f7, 3, 3);
        Mat z = oracle::random_mat(rng, f7, 3, 3);
        CHECK(mat_add(x, y) == mat_add(y, x));
        CHECK(mat_sub(mat_add(x, y), y) == x);
        CHECK(mat_mul(mat_mul(x, y), z) == mat_mul(x, mat_mul(y, z)));
        CHECK(mat_mul(x, mat_identity(3, f7)) == x);
        CHECK(det(mat_mul(x, y)) == det(x) * det(y));
        CHECK(mat_pow(x, 3) == mat_mul(x, mat_mul(x, x)));
        CHECK(mat_scale(fe_scalar(f7, 2), x) == mat_add(x, x));
    }
    CHECK(mat_pow(oracle::random_mat(rng, f7, 2, 2), 0) == mat_identity(2, f7));
    CHECK_THROWS_AS(mat_pow(mat_from_ints(f7, 1, 2, {1, 2}), 2), error);
    CHECK_THROWS_AS(mat_mul(mat_from_ints(f7, 2, 2, {1, 2, 3, 4}),
                            mat_from_ints(f7, 3, 2, {1, 2, 3, 4, 5, 6})),
                    error);
    CHECK_THROWS_AS(mat_add(mat_from_ints(f7, 2, 2, {1, 2, 3, 4}),
                            mat_from_ints(f7, 2, 3, {1, 2, 3, 4, 5, 6})),
                    error);
}

TEST_CASE("matrix inverse") {
    auto f7 = field_new_prime(7);
    Rng rng(0x111);
    for (int i = 0; i < 100; ++i) {
        Mat m = oracle::random_invertible(rng, f7, 1 + rng.below(4));
        CHECK(mat_mul(m, mat_inverse(m)) == mat_identity(m.rows(), f7));
        CHECK(mat_mul(mat_inverse(m), m) == mat_identity(m.rows(), f7));
    }
    try {
        mat_inverse(mat_from_ints(f7, 2, 2, {1, 2, 2, 4}));
        FAIL("expected SingularA");
    } catch (const error& e) {
        CHECK(e.code() == errc::SingularA);
    }
    CHECK_THROWS_AS(mat_inverse(mat_from_ints(f7, 1, 2, {1, 2})), error);
}

TEST_CASE("submatrix selection") {
    auto f7 = field_new_prime(7);
    Mat m = mat_from_ints(f7, 3, 4, {1, 2, 3, 4, 5, 6, 0, 1, 2, 3, 4, 5});
    Mat s = submatrix(m, {0, 2}, {1, 3});
    CHECK(s.rows() == 2);
    CHECK(s.at(0, 0) == fe_scalar(f7, 2));
    CHECK(s.at(1, 1) == fe_scalar(f7, 5));
    CHECK_THROWS_AS(submatrix(m, {0, 3}, {0}), error);   // row out of range
    CHECK_THROWS_AS(submatrix(m, {2, 0}, {0}), error);   // not increasing
    CHECK_THROWS_AS(submatrix(m, {1, 1}, {0}), error);   // duplicate
    CHECK_THROWS_AS(submatrix(m, {}, {0}), error);       // empty
    CHECK_THROWS_AS(check_index_set({0, 0}, 3), error);
    CHECK_NOTHROW(check_index_set({0, 2}, 3));
}

TEST_CASE("schur complement determinant") {
    auto f7 = field_new_prime(7);
    Rng rng(0x5c1);
    int used = 0;
    while (used < 100) {
        Mat full = oracle::random_mat(rng, f7, 4, 4);
        Mat a = submatrix(full, {0, 1}, {0, 1});
        if (det(a).is_zero()) continue;
        ++used;
        Mat b = submatrix(full, {0, 1}, {2, 3});
        Mat c = submatrix(full, {2, 3}, {0, 1});
        Mat d = submatrix(full, {2, 3}, {2, 3});
        CHECK(schur_det(a, b, c, d) == det(full));
        CHECK(block_assemble(a, b, c, d) == full);
    }
    Mat sing = mat_from_ints(f7, 2, 2, {1, 2, 2, 4});
    Mat any = mat_from_ints(f7, 2, 2, {1, 0, 0, 1});
    try {
        schur_det(sing, any, any, any);
        FAIL("expected SingularA");
    } catch (const error& e) {
        CHECK(e.code() == errc::SingularA);
    }
    CHECK_THROWS_AS(schur_det(any, mat_from_ints(f7, 2, 3, {1, 2, 3, 4, 5, 6}), any, any), error);
}

TEST_CASE("row multilinearity of the determinant") {
    auto f13 = field_new_prime(13);
    Rng rng(0x4a1);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 2 + rng.below(3);
        std::size_t k = rng.below(n);
        FieldElem a = oracle::random_elem(rng, f13);
        FieldElem b = oracle::random_elem(rng, f13);
        std::vector<FieldElem> x, y;
        for (std::size_t j = 0; j < n; ++j) {
            x.push_back(oracle::random_elem(rng, f13));
            y.push_back(oracle::random_elem(rng, f13));
        }
        Mat m = oracle::random_mat(rng, f13, n, n);
        for (std::size_t j = 0; j < n; ++j) m.set(k, j, a * x[j] + b * y[j]);
        CHECK(row_multilinearity_check(m, k, x, y, a, b));
    }
    // a row that is not the stated combination is rejected
    Mat m = mat_from_ints(f13, 2, 2, {1, 2, 3, 4});
    std::vector<FieldElem> x{fe_one(f13), fe_one(f13)};
    std::vector<FieldElem> y{fe_one(f13), fe_zero(f13)};
    try {
        row_multilinearity_check(m, 0, x, y, fe_one(f13), fe_one(f13));
        FAIL("expected RowMismatch");
    } catch (const error& e) {
        CHECK(e.code() == errc::RowMismatch);
    }
    CHECK_THROWS_AS(row_multilinearity_check(m, 2, x, y, fe_one(f13), fe_one(f13)), error);
}

} // TEST_SUITE("linalg")
