#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "horn/linalg.hpp"
#include "horn/rng.hpp"

using horn::Matrix;
using horn::Rng;
using horn::Rotation;
using horn::SkewMatrix;
using horn::SymMatrix;

namespace {

Matrix make(int rows, int cols, std::initializer_list<double> entries) {
    Matrix m(rows, cols);
    auto it = entries.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = *it++;
    return m;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
    const Matrix a = make(2, 2, {1, 2, 3, 4});
    const Matrix b = make(2, 2, {5, 6, 7, 8});

    CHECK(a + b == make(2, 2, {6, 8, 10, 12}));
    CHECK(b - a == make(2, 2, {4, 4, 4, 4}));
    CHECK(2.0 * a == make(2, 2, {2, 4, 6, 8}));
    CHECK(-a == make(2, 2, {-1, -2, -3, -4}));
    CHECK(a * b == make(2, 2, {19, 22, 43, 50}));
    CHECK(a.transposed() == make(2, 2, {1, 3, 2, 4}));
    CHECK(a.trace() == 5.0);
    CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(30.0)));
    CHECK(Matrix::identity(2) * a == a);
}

TEST_CASE("rectangular product shapes") {
    const Matrix a = make(2, 3, {1, 0, 2, 0, 1, 1});
    const Matrix b = make(3, 2, {1, 2, 3, 4, 5, 6});
    const Matrix ab = a * b;
    CHECK(ab.rows() == 2);
    CHECK(ab.cols() == 2);
    CHECK(ab == make(2, 2, {11, 14, 8, 10}));
}

TEST_CASE("max_abs_diff") {
    const Matrix a = make(2, 2, {1, 2, 3, 4});
    const Matrix b = make(2, 2, {1, 2.5, 3, 3.25});
    CHECK(horn::max_abs_diff(a, b) == 0.75);
    CHECK(horn::max_abs_diff(a, a) == 0.0);
}

TEST_CASE("determinant") {
    CHECK(horn::determinant(Matrix::identity(4)) == 1.0);
    CHECK(horn::determinant(make(2, 2, {1, 2, 3, 4})) == doctest::Approx(-2.0));
    CHECK(horn::determinant(make(2, 2, {1, 2, 2, 4})) == 0.0);
    const double c = std::cos(0.7), s = std::sin(0.7);
    CHECK(horn::determinant(make(2, 2, {c, -s, s, c})) == doctest::Approx(1.0));
    CHECK(horn::determinant(make(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == doctest::Approx(-1.0));
}

TEST_CASE("symmetric matrix construction") {
    const SymMatrix d = SymMatrix::diagonal({3, 1, 2});
    CHECK(d(0, 0) == 3.0);
    CHECK(d(1, 1) == 1.0);
    CHECK(d(0, 1) == 0.0);
    CHECK(d.trace() == 6.0);

    const SymMatrix s = SymMatrix::from_matrix(make(2, 2, {1, 3, 5, 2}));
    CHECK(s(0, 1) == 4.0);
    CHECK(s(0, 1) == s(1, 0));

    SymMatrix t(2);
    t.set(0, 1, 7.0);
    CHECK(t(1, 0) == 7.0);
    CHECK(t(0, 0) == 0.0);
}

TEST_CASE("skew matrix construction") {
    const SkewMatrix c = SkewMatrix::from_matrix(make(2, 2, {9, 3, -1, 4}));
    CHECK(c(0, 0) == 0.0);
    CHECK(c(1, 1) == 0.0);
    CHECK(c(0, 1) == 2.0);
    CHECK(c(1, 0) == -2.0);

    SkewMatrix z(3);
    z.set(0, 2, 5.0);
    CHECK(z(2, 0) == -5.0);
    CHECK_THROWS_AS(z.set(1, 1, 1.0), std::invalid_argument);
}

TEST_CASE("rotation validation") {
    const double c = std::cos(1.1), s = std::sin(1.1);
    const Rotation r = Rotation::from_matrix(make(2, 2, {c, -s, s, c}));
    CHECK(r.size() == 2);
    CHECK(horn::max_abs_diff(r.inverse().matrix(), r.matrix().transposed()) == 0.0);
    CHECK(horn::max_abs_diff(r.matrix() * r.inverse().matrix(), Matrix::identity(2)) < 1e-15);

    CHECK_THROWS_AS(Rotation::from_matrix(make(2, 2, {1, 1, 0, 1})), std::invalid_argument);
    // Orthogonal but orientation-reversing.
    CHECK_THROWS_AS(Rotation::from_matrix(make(2, 2, {1, 0, 0, -1})), std::invalid_argument);
    CHECK(Rotation::identity(5).matrix() == Matrix::identity(5));
}

TEST_CASE("rng shuffle and bounds") {
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        CHECK(rng.below(7) < 7);
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }

    // Same seed gives the same stream.
    Rng a(123), b(123);
    for (int k = 0; k < 16; ++k) CHECK(a.next_u64() == b.next_u64());

    std::vector<int> v{1, 2, 3, 4, 5};
    Rng c(7);
    c.shuffle(v);
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5});
}
