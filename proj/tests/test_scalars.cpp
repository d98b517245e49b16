#include "doctest.h"

#include "aobc/scalars.hpp"

#include <random>

using namespace aobc;

TEST_CASE("gaussian rationals") {
    GR one_plus_i(1, 1), one_minus_i(1, -1);
    CHECK(one_plus_i * one_minus_i == GR(2));
    CHECK(GR::i() * GR::i() == GR(-1));
    CHECK(GR(mpq_class(1, 3)) + GR(mpq_class(1, 6)) == GR(mpq_class(1, 2)));
    CHECK_THROWS(GR(1) / GR(0));
    CHECK(GR::parse("(1/2+3*i)") == GR(mpq_class(1, 2), 3));
    CHECK(GR::parse("-i") == -GR::i());
    CHECK(GR(mpq_class(-1, 2), 1).str() == "(-1/2+i)");
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9), p(1, 9);
    auto rnd = [&] { return GR(mpq_class(d(rng), p(rng)), mpq_class(d(rng), p(rng))); };
    for (int k = 0; k < 200; ++k) {
        GR a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == GR(1));
    }
}

TEST_CASE("bubble polynomials") {
    auto D1 = Scalar::bubble(1), D3 = Scalar::bubble(3);
    CHECK((D1 * D3).str() == "D1*D3");
    CHECK(((D1 + Scalar(1)) - D1) == Scalar(1));
    CHECK((D1 * D1).str() == "D1^2");
    CHECK(Scalar::bubble(2).is_zero());
    Scalar p = Scalar(GR(mpq_class(1, 2)) * GR::i()) * D1 * D1 * D3 + Scalar(3);
    CHECK(p.str() == "(1/2)*i*D1^2*D3 + 3");
    CHECK(Scalar::parse(p.str()) == p);
}

TEST_CASE("specialization") {
    DeltaSpec d;
    d.set(1, GR(3));
    CHECK(specialize(Scalar::bubble(1) * Scalar::bubble(1) + Scalar(2), d) == GR(11));
    CHECK(specialize(Scalar::bubble(3), d) == GR(0));
    CHECK(specialize(Scalar(5), DeltaSpec{}) == GR(5));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int k = 0; k < 30; ++k) {
        Scalar p, q;
        for (int j = 0; j < 3; ++j) {
            p.add_term({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k % 2)}, GR(c(rng)));
            q.add_term({static_cast<std::uint32_t>(k % 3), static_cast<std::uint32_t>(j)}, GR(c(rng)));
        }
        DeltaSpec e;
        e.set(1, GR(c(rng)));
        e.set(3, GR(mpq_class(c(rng), 7)));
        CHECK(specialize(p * q, e) == specialize(p, e) * specialize(q, e));
        CHECK(p * q == q * p);
    }
}

TEST_CASE("delta prime recursion") {
    // oracle: direct unfolding of the recursion by hand
    auto D1 = Scalar::bubble(1), D3 = Scalar::bubble(3), D5 = Scalar::bubble(5);
    CHECK(delta_prime_formal(1) == D1);
    CHECK(delta_prime_formal(3) == D3 - D1 * D1);
    CHECK(delta_prime_formal(5) == D5 - Scalar(2) * D1 * D3 + D1 * D1 * D1);
    DeltaSpec d;
    d.set(1, GR(2));
    d.set(3, GR(mpq_class(1, 3)));
    d.set(5, GR(-1));
    for (unsigned k = 1; k <= 8; ++k) {
        CHECK(delta_prime(d, k) == specialize(delta_prime_formal(k), d));
        if (k % 2 == 0) CHECK(delta_prime(d, k).is_zero());
    }
}
