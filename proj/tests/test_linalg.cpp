#include <doctest.h>

#include <algorithm>

#include "bezsub/matrix.hpp"
#include "bezsub/parse.hpp"
#include "test_support.hpp"

using namespace bezsub;
using namespace bezsub::testing;

namespace {

// Independent oracle: cofactor expansion along the first column, usable for
// any entry type with ring operations. Exponential, so sizes stay <= 5.
template <typename T>
T cofactor_det(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m.at(0, 0);
    T sum{};
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 1; c < n; ++c) minor.at(mr, c - 1) = m.at(r, c);
            ++mr;
        }
        const T term = m.at(i, 0) * cofactor_det(minor);
        sum = (i % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

template <>
Poly cofactor_det<Poly>(const Matrix<Poly>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(Rat(1));
    if (n == 1) return m.at(0, 0);
    Poly sum{};
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<Poly> minor(n - 1, n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 1; c < n; ++c) minor.at(mr, c - 1) = m.at(r, c);
            ++mr;
        }
        const Poly term = m.at(i, 0) * cofactor_det(minor);
        sum = (i % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

RMatrix rand_rmatrix(std::mt19937_64& rng, std::size_t n, bool rational) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = rational ? rand_rat(rng, 6) : Rat(rand_int(rng, -9, 9));
    return m;
}

}  // namespace

TEST_CASE("det_rat fixtures") {
    CHECK(det_rat(RMatrix{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == Rat(1));
    CHECK(det_rat(RMatrix{{Rat(0), Rat(1)}, {Rat(0), Rat(2)}}) == Rat(0));
    CHECK(det_rat(RMatrix(0, 0)) == Rat(1));
    CHECK(det_rat(RMatrix{{Rat(7, 3)}}) == Rat(7, 3));
    CHECK_THROWS_AS(det_rat(RMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det_rat matches cofactor expansion") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 60; ++it) {
        const std::size_t n = 1 + static_cast<std::size_t>(rand_int(rng, 0, 4));
        const RMatrix m = rand_rmatrix(rng, n, it % 2 == 0);
        CHECK(det_rat(m) == cofactor_det(m));
    }
}

TEST_CASE("det_rat handles zero pivots") {
    // leading principal minors vanish; Bareiss must row-swap
    const RMatrix m{{Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(0), Rat(3)}, {Rat(4), Rat(5), Rat(0)}};
    CHECK(det_rat(m) == cofactor_det(m));
    const RMatrix rank1{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(3), Rat(6), Rat(9)}};
    CHECK(det_rat(rank1) == Rat(0));
}

TEST_CASE("det_rat is alternating and row-linear") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 30; ++it) {
        const std::size_t n = 2 + static_cast<std::size_t>(rand_int(rng, 0, 2));
        const RMatrix m = rand_rmatrix(rng, n, true);
        const Rat d = det_rat(m);

        RMatrix swapped = m;
        for (std::size_t j = 0; j < n; ++j) std::swap(swapped.at(0, j), swapped.at(1, j));
        CHECK(det_rat(swapped) == -d);

        const Rat lambda = rand_nonzero_rat(rng);
        RMatrix scaled = m;
        for (std::size_t j = 0; j < n; ++j) scaled.at(0, j) *= lambda;
        CHECK(det_rat(scaled) == lambda * d);
    }
}

TEST_CASE("det_poly fixtures") {
    const Poly x = Poly::x();
    CHECK(det_poly(PMatrix{{x, Poly{}}, {Poly{}, x}}) == parse_poly("x^2"));
    CHECK(det_poly(PMatrix{{Poly::constant(Rat(-1)), Poly::constant(Rat(1))},
                           {x, Poly::constant(Rat(-1))}}) == parse_poly("1 - x"));
    // constant matrix degenerates to det_rat embedded as a constant
    const PMatrix c{{Poly::constant(Rat(2)), Poly::constant(Rat(1))},
                    {Poly::constant(Rat(1)), Poly::constant(Rat(3))}};
    CHECK(det_poly(c) == Poly::constant(Rat(5)));
    CHECK_THROWS_AS(det_poly(PMatrix(1, 2)), std::invalid_argument);
}

TEST_CASE("det_poly matches cofactor expansion in Poly arithmetic") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 40; ++it) {
        const std::size_t n = 1 + static_cast<std::size_t>(rand_int(rng, 0, 4));
        PMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = rand_poly(rng, rand_int(rng, 0, 1) ? 1 : 0, 5);
        CHECK(det_poly(m) == cofactor_det(m));
    }
}

TEST_CASE("det_poly honors a tight degree hint") {
    // X-block style matrix whose determinant degree is far below rows * xdeg
    const Poly x = Poly::x();
    PMatrix m(3, 3);
    m.at(0, 0) = x;
    m.at(1, 0) = Poly::constant(Rat(-1));
    m.at(0, 1) = Poly::constant(Rat(2));
    m.at(1, 1) = Poly::constant(Rat(5));
    m.at(2, 2) = Poly::constant(Rat(1));
    const Poly expect = cofactor_det(m);
    CHECK(expect.degree() == 1);
    CHECK(det_poly(m, 1) == expect);
    CHECK(det_poly(m) == expect);
}

TEST_CASE("vandermonde") {
    CHECK(vandermonde({Rat(1), Rat(2)}) == RMatrix{{Rat(1), Rat(1)}, {Rat(1), Rat(2)}});
    CHECK(vandermonde({Rat(5)}) == RMatrix{{Rat(1)}});
    CHECK(det_rat(vandermonde({Rat(1), Rat(2), Rat(3)})) == Rat(2));
}

TEST_CASE("det_vandermonde closed form") {
    CHECK(det_vandermonde({Rat(1), Rat(2)}) == Rat(1));
    CHECK(det_vandermonde({Rat(1), Rat(2), Rat(3)}) == Rat(2));
    CHECK(det_vandermonde({Rat(1), Rat(1)}) == Rat(0));
    CHECK(det_vandermonde({}) == Rat(1));

    std::mt19937_64 rng(37);
    for (int it = 0; it < 25; ++it) {
        std::vector<Rat> pts;
        for (int k = 0; k < 5; ++k) {
            Rat p = rand_rat(rng, 8);
            while (std::find(pts.begin(), pts.end(), p) != pts.end()) p = rand_rat(rng, 8);
            pts.push_back(p);
        }
        CHECK(det_vandermonde(pts) == det_rat(vandermonde(pts)));
    }
}

TEST_CASE("interpolation recovers polynomials") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 25; ++it) {
        const Poly p = rand_poly(rng, 5, 7);
        std::vector<Rat> xs, ys;
        for (long k = -3; k <= 3; ++k) {
            xs.emplace_back(k);
            ys.push_back(p(Rat(k)));
        }
        CHECK(interpolate(xs, ys) == p);
    }
    CHECK_THROWS_AS(interpolate({Rat(1), Rat(1)}, {Rat(0), Rat(1)}), std::invalid_argument);
}
