#include "doctest.h"

#include "phtype/core.hpp"

using namespace phtype;

namespace {

ExactMatrix random_matrix(Rng& rng, int rows, int cols, long lo, long hi) {
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform(lo, hi);
    return m;
}

ExactVector random_vector(Rng& rng, int n) {
    ExactVector v(n);
    for (auto& x : v) {
        x = Rational(rng.uniform(-9, 9), rng.uniform(1, 7));
        x.canonicalize();
    }
    return v;
}

}  // namespace

TEST_CASE("epsilon follows the signature blocks") {
    CHECK(epsilon(1, {1, 1}) == 1);
    CHECK(epsilon(2, {1, 1}) == -1);
    CHECK(epsilon(5, {4, 4}) == -1);
    CHECK_THROWS_AS(epsilon(0, {1, 1}), std::out_of_range);
    CHECK_THROWS_AS(epsilon(3, {1, 1}), std::out_of_range);
    for (int r = 0; r < 5; ++r)
        for (int s = 0; s < 5; ++s)
            for (int i = 1; i <= r + s; ++i) CHECK(epsilon(i, {r, s}) * epsilon(i, {r, s}) == 1);
}

TEST_CASE("scalar product on (3,2)") {
    Signature sig{3, 2};
    CHECK(scalar_product(unit_vector(5, 0), unit_vector(5, 0), sig) == 1);
    CHECK(scalar_product(unit_vector(5, 3), unit_vector(5, 3), sig) == -1);
    ExactVector x = unit_vector(5, 0) + unit_vector(5, 3);
    CHECK(scalar_product(x, x, sig) == 0);
}

TEST_CASE("scalar product is symmetric and bilinear") {
    Rng rng(7);
    Signature sig{3, 4};
    for (int t = 0; t < 100; ++t) {
        ExactVector x = random_vector(rng, 7), y = random_vector(rng, 7), z = random_vector(rng, 7);
        Rational a(rng.uniform(-5, 5), rng.uniform(1, 4));
        a.canonicalize();
        CHECK(scalar_product(x, y, sig) == scalar_product(y, x, sig));
        CHECK(scalar_product(a * x + z, y, sig) == a * scalar_product(x, y, sig) + scalar_product(z, y, sig));
    }
}

TEST_CASE("classify_map") {
    CHECK(classify_map(ExactMatrix::identity(4), Signature{2, 2}, Signature{2, 2}) == MapClass::ISOMETRY);
    ExactMatrix swap{{0, 1}, {1, 0}};
    CHECK(classify_map(swap, Signature{1, 1}, Signature{1, 1}) == MapClass::ANTI_ISOMETRY);
    ExactMatrix d{{2, 0}, {0, 1}};
    CHECK(classify_map(d, Signature{1, 1}, Signature{1, 1}) == MapClass::NEITHER);
    CHECK(std::string(to_string(MapClass::ANTI_ISOMETRY)) == "ANTI_ISOMETRY");
}

TEST_CASE("isometries have isometric inverses") {
    Metric mm{1, 1, -1, -1};
    ExactMatrix hyp = ExactMatrix::identity(4);
    hyp(0, 0) = hyp(3, 3) = Rational(5, 4);
    hyp(0, 3) = hyp(3, 0) = Rational(3, 4);
    CHECK(classify_map(hyp, mm, mm) == MapClass::ISOMETRY);
    CHECK(classify_map(inverse(hyp), mm, mm) == MapClass::ISOMETRY);
    ExactMatrix skew{{2, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {3, 0, 0, 2}};
    CHECK(classify_map(skew, mm, mm) == MapClass::NEITHER);

    Rng rng(3);
    Metric m = metric_of({2, 2});
    for (int t = 0; t < 200; ++t) {
        ExactMatrix a = random_matrix(rng, 4, 4, -1, 1);
        if (exact_rank(a) < 4 || classify_map(a, m, m) != MapClass::ISOMETRY) continue;
        CHECK(classify_map(inverse(a), m, m) == MapClass::ISOMETRY);
    }
}

TEST_CASE("exact rank and determinant") {
    CHECK(exact_rank(ExactMatrix::identity(5)) == 5);
    CHECK(exact_det(ExactMatrix::identity(5)) == 1);
    CHECK(exact_rank(ExactMatrix(3, 4)) == 0);
    ExactMatrix m{{1, 2}, {3, 4}};
    CHECK(exact_det(m) == -2);
    ExactMatrix s{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(exact_rank(s) == 2);
    CHECK(exact_det(s) == 0);
    ExactMatrix h(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h(i, j) = Rational(1, i + j + 1);
    CHECK(exact_det(h) == Rational(1, 2160));
    CHECK(inverse(h) * h == ExactMatrix::identity(3));
}

TEST_CASE("rank(M) = rank(M M^T) on random integer matrices") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        int r = static_cast<int>(rng.uniform(1, 6)), c = static_cast<int>(rng.uniform(1, 6));
        ExactMatrix m = random_matrix(rng, r, c, -3, 3);
        CHECK(exact_rank(m) == exact_rank(m * m.transpose()));
        CHECK(exact_rank(m) == exact_rank(m.transpose()));
    }
}

TEST_CASE("large rank needing the exact fallback") {
    // rank deficiency invisible to small primes is still found exactly
    ExactMatrix m(3, 3);
    Integer big("2305843009213693951");  // 2^61 - 1
    m(0, 0) = big;
    m(1, 1) = 1;
    m(2, 0) = 2 * big;
    CHECK(exact_rank(m) == 2);
    m(2, 2) = 1;
    CHECK(exact_rank(m) == 3);
}

TEST_CASE("nullspace vectors are annihilated") {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        ExactMatrix m = random_matrix(rng, 3, 6, -2, 2);
        auto ns = nullspace(m);
        CHECK(static_cast<int>(ns.size()) == 6 - exact_rank(m));
        for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("metric adjoint of an isometry is its inverse") {
    Metric m{1, -1};
    ExactMatrix a(2, 2);  // preserves x^2 - y^2
    a(0, 0) = a(1, 1) = Rational(13, 5);
    a(0, 1) = a(1, 0) = Rational(12, 5);
    CHECK(classify_map(a, m, m) == MapClass::ISOMETRY);
    CHECK(metric_adjoint(a, m, m) * a == ExactMatrix::identity(2));
}

TEST_CASE("Rng is deterministic") {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    CHECK(Rng(42).next() != c.next());
    Rng d(1);
    for (int i = 0; i < 1000; ++i) {
        long x = d.uniform(-3, 3);
        CHECK(x >= -3);
        CHECK(x <= 3);
    }
}
