#include <doctest.h>

#include <algorithm>

#include "bezsub/parse.hpp"
#include "bezsub/roots_oracle.hpp"
#include "test_support.hpp"

using namespace bezsub;
using namespace bezsub::testing;

namespace {

RootSystem worked_rs() { return RootSystem(Rat(1), {Rat(1), Rat(2)}, {parse_poly("x - 1")}); }

std::vector<Rat> distinct_int_roots(std::mt19937_64& rng, int count, long bound = 6) {
    std::vector<Rat> roots;
    while (static_cast<int>(roots.size()) < count) {
        Rat r(rand_int(rng, -bound, bound));
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    return roots;
}

RootSystem random_root_system(std::mt19937_64& rng, int max_d0 = 5, int max_t = 3) {
    const int d0 = static_cast<int>(rand_int(rng, 1, max_d0));
    const int t = static_cast<int>(rand_int(rng, 1, max_t));
    std::vector<Poly> tail;
    for (int i = 0; i < t; ++i)
        tail.push_back(rand_poly_exact(rng, static_cast<int>(rand_int(rng, 0, d0))));
    return RootSystem(Rat(rand_int(rng, 1, 9)) * (rand_int(rng, 0, 1) ? Rat(1) : Rat(-1)),
                      distinct_int_roots(rng, d0), std::move(tail));
}

std::vector<int> random_delta(std::mt19937_64& rng, std::size_t t, int d0, bool nonzero) {
    for (;;) {
        std::vector<int> delta(t, 0);
        int budget = d0;
        for (std::size_t i = 0; i < t; ++i) {
            delta[i] = static_cast<int>(rand_int(rng, 0, budget));
            budget -= delta[i];
        }
        if (!nonzero) return delta;
        for (int v : delta)
            if (v != 0) return delta;
    }
}

}  // namespace

TEST_CASE("root system validation") {
    CHECK_THROWS_WITH_AS(RootSystem(Rat(0), {Rat(1)}, {parse_poly("1")}),
                         "leading coefficient must be nonzero", std::invalid_argument);
    CHECK_THROWS_WITH_AS(RootSystem(Rat(1), {Rat(2), Rat(2)}, {parse_poly("x")}),
                         "roots must be distinct", std::invalid_argument);
    CHECK_THROWS_AS(RootSystem(Rat(1), {Rat(1)}, {parse_poly("x^2")}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem(Rat(1), {Rat(1)}, {}), std::invalid_argument);
    CHECK(worked_rs().f0() == parse_poly("x^2 - 3*x + 2"));
}

TEST_CASE("m_delta fixtures") {
    const RootSystem rs = worked_rs();
    SUBCASE("delta = (1): F-row then x-row") {
        const PMatrix m = m_delta(rs, DeltaIndex({1}, rs.degrees()));
        CHECK(m == PMatrix{{Poly{}, Poly::constant(Rat(1))},
                           {parse_poly("x - 1"), parse_poly("x - 2")}});
    }
    SUBCASE("delta = 0: every row is x-type, columns factor as (x - a_j) * V column") {
        const PMatrix m = m_delta(rs, DeltaIndex({0}, rs.degrees()));
        CHECK(m == PMatrix{{parse_poly("x - 1"), parse_poly("x - 2")},
                           {parse_poly("x - 1"), parse_poly("2*x - 4")}});
    }
    SUBCASE("t = 2 with |delta| = d0: no x rows") {
        const RootSystem rs2(Rat(1), {Rat(1), Rat(2)}, {parse_poly("x - 1"), parse_poly("x + 3")});
        const PMatrix m = m_delta(rs2, DeltaIndex({1, 1}, rs2.degrees()));
        CHECK(m.rows() == 2);
        CHECK(max_xdeg(m) == 0);
        CHECK(m.at(1, 0) == Poly::constant(Rat(4)));  // F_2(1)
        CHECK(m.at(1, 1) == Poly::constant(Rat(5)));  // F_2(2)
    }
}

TEST_CASE("oracle fixtures") {
    const RootSystem rs = worked_rs();
    CHECK(oracle_subresultant(rs, DeltaIndex({1}, rs.degrees())) == parse_poly("1 - x"));
    CHECK(oracle_subresultant(rs, DeltaIndex({0}, rs.degrees())) == parse_poly("x^2 - 3*x + 2"));
    CHECK(oracle_subresultant(rs, DeltaIndex({2}, rs.degrees())) == Poly{});
}

TEST_CASE("oracle equals every determinant formula") {
    std::mt19937_64 rng(103);
    for (int it = 0; it < 40; ++it) {
        const RootSystem rs = random_root_system(rng);
        const PolySystem sys = rs.to_system();
        const DeltaIndex delta(random_delta(rng, rs.tail().size(), rs.d0(), true), rs.degrees());
        const Poly expect = oracle_subresultant(rs, delta);
        CAPTURE(it);
        CHECK(expect == subresultant(sys, delta, Formula::Bezout));
        CHECK(expect == subresultant(sys, delta, Formula::HybridBezout));
        CHECK(expect == subresultant(sys, delta, Formula::NonhomBezout));
    }
}

TEST_CASE("oracle at delta = 0 returns F0") {
    std::mt19937_64 rng(107);
    for (int it = 0; it < 20; ++it) {
        const RootSystem rs = random_root_system(rng);
        const std::vector<int> zero(rs.tail().size(), 0);
        CHECK(oracle_subresultant(rs, DeltaIndex(zero, rs.degrees())) == rs.f0());
    }
}

TEST_CASE("oracle is invariant under root permutation") {
    std::mt19937_64 rng(109);
    for (int it = 0; it < 20; ++it) {
        const RootSystem rs = random_root_system(rng, 4, 2);
        const DeltaIndex delta(random_delta(rng, rs.tail().size(), rs.d0(), false), rs.degrees());
        const Poly base = oracle_subresultant(rs, delta);

        std::vector<Rat> shuffled = rs.roots();
        for (std::size_t k = shuffled.size(); k > 1; --k)
            std::swap(shuffled[k - 1],
                      shuffled[static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(k) - 1))]);
        const RootSystem permuted(rs.lc0(), shuffled, rs.tail());
        CHECK(oracle_subresultant(permuted, delta) == base);
    }
}

TEST_CASE("oracle spot check at degree 10") {
    std::mt19937_64 rng(139);
    const RootSystem rs(Rat(3), distinct_int_roots(rng, 10, 9),
                        {rand_poly_exact(rng, 8), rand_poly_exact(rng, 10)});
    for (const std::vector<int> dv : {std::vector<int>{4, 3}, {0, 10}, {1, 0}}) {
        const DeltaIndex delta(dv, rs.degrees());
        const Poly expect = oracle_subresultant(rs, delta);
        for (Formula f : {Formula::Bezout, Formula::HybridBezout, Formula::NonhomBezout})
            CHECK(expect == subresultant(rs.to_system(), delta, f));
    }
}

TEST_CASE("empty root list: S_0 is the constant F0") {
    const RootSystem rs(Rat(7), {}, {Poly::constant(Rat(2))});
    CHECK(oracle_subresultant(rs, DeltaIndex({0}, rs.degrees())) == Poly::constant(Rat(7)));
}

TEST_CASE("oracle vanishes at a root shared with the whole tail") {
    std::mt19937_64 rng(113);
    for (int it = 0; it < 20; ++it) {
        const std::vector<Rat> roots = distinct_int_roots(rng, 3);
        const Rat& shared = roots[0];
        const Poly factor({-shared, Rat(1)});
        std::vector<Poly> tail;
        for (int i = 0; i < 2; ++i) tail.push_back(rand_poly_exact(rng, 1) * factor);
        const RootSystem rs(Rat(rand_int(rng, 1, 5)), roots, std::move(tail));
        const DeltaIndex delta(random_delta(rng, 2, 3, false), rs.degrees());
        CHECK(oracle_subresultant(rs, delta)(shared) == Rat(0));
    }
}
