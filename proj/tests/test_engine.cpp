#include <doctest.h>

#include <random>

#include "aobc/engine.hpp"

using namespace aobc;

namespace {

Morphism N(const std::string& s) { return normalize(parse_expr(s)); }

void check_same(const std::string& a, const std::string& b) {
    INFO(a << "  vs  " << b);
    Morphism ma = N(a), mb = N(b);
    INFO(ma.str() << "  vs  " << mb.str());
    CHECK(ma == mb);
}

}  // namespace

TEST_CASE("canonical layers normalize back to their diagram") {
    for (const char* b : {"", "^", "v", "^^", "^v", "v^", "^^^", "^vv", "v^^"}) {
        for (const char* t : {"", "^", "v", "^^", "^v", "v^", "^^^", "vv^", "^v^"}) {
            Word wb = parse_word(b), wt = parse_word(t);
            for (const auto& d : enumerate_normal(wb, wt, 3)) {
                if (d.total_black() > 2) continue;
                Morphism m = normalize(Expr::atom(wb, canonical_layers(d)));
                INFO(canonical_key(d) << " -> " << m.str());
                CHECK(m == Morphism::basis(d));
            }
        }
    }
}

TEST_CASE("symmetric group and zigzag relations") {
    check_same("(compose cross cross)", "id:^^");
    check_same("(compose (tensor cross id1) (tensor id1 cross) (tensor cross id1))",
               "(compose (tensor id1 cross) (tensor cross id1) (tensor id1 cross))");
    check_same("(compose (tensor id1 lcap) (tensor lcup id1))", "id1");
    check_same("(compose (tensor lcap idd) (tensor idd lcup))", "idd");
    check_same("(compose (tensor rcap id1) (tensor id1 rcup))", "id1");
    check_same("(compose (tensor idd rcap) (tensor rcup idd))", "idd");
    check_same("(compose crossinv tcross)", "id:v^");
    check_same("(compose tcross crossinv)", "id:^v");
}

TEST_CASE("Clifford and affine relations") {
    check_same("(compose c c)", "id1");
    check_same("(compose cross (tensor c id1))", "(compose (tensor id1 c) cross)");
    check_same("(compose x c)", "(neg (compose c x))");
    check_same("(sub (compose (tensor x id1) cross) (compose cross (tensor id1 x)))",
               "(sub id:^^ (tensor c c))");
    check_same("(compose cross (tensor c c) cross)", "(neg (tensor c c))");
    check_same("(compose (sub (compose (tensor id1 x) cross) (compose cross (tensor x id1))))",
               "(neg (add id:^^ (tensor c c)))");
}

TEST_CASE("down dots agree with their definitions") {
    check_same("xd", "xd-def");
    check_same("cd", "cd-def");
    check_same("(compose cd cd)", "(neg idd)");
}

TEST_CASE("bubbles") {
    for (unsigned k = 0; k <= 6; k += 2) CHECK(loop_value(k, 0).is_zero());
    CHECK(loop_value(0, 1).is_zero());
    CHECK(loop_value(1, 1).is_zero());
    CHECK(loop_value(3, 0) == Scalar::bubble(3));
    CHECK(loop_value(1, 2) == Scalar::bubble(1));
    CHECK(N("(bubble 5)").coeff(NormalDiagram{}) == Scalar::bubble(5));
    for (unsigned k = 1; k <= 5; ++k) CHECK(N("(cwbubble " + std::to_string(k) + ")").coeff(NormalDiagram{}) == cw_loop_value(k));
}

TEST_CASE("sigma of x^k matches the closed formula") {
    for (unsigned k = 0; k <= 4; ++k) {
        Morphism xk = N("(x " + std::to_string(k) + ")");
        Morphism y = sigma(xk, Direction::Up);
        // x_down^k + sum_{i<k} D_{k-i-1} x_down^i
        Morphism expect = N("(xd " + std::to_string(k) + ")");
        for (unsigned i = 0; i < k; ++i) expect += Scalar::bubble(k - i - 1) * N("(xd " + std::to_string(i) + ")");
        INFO(k << ": " << y.str());
        CHECK(y == expect);
    }
}

TEST_CASE("compute_g") {
    CHECK(tpoly_str(compute_g(parse_tpoly("t^2-4/9"))) == "t^2 + d1 - 4/9");
    CHECK(tpoly_str(compute_g(parse_tpoly("t^3"))) == "t^3 + d1*t");
    CHECK(tpoly_str(compute_g(parse_tpoly("t"))) == "t");
}

TEST_CASE("cyclotomic reduction on a single strand") {
    auto c1 = Cyclotomic::make(parse_tpoly("t"), std::nullopt);
    CHECK(cyclotomic_reduce(N("x"), c1).is_zero());
    CHECK(cyclotomic_reduce(N("xd"), c1).is_zero());

    DeltaSpec dl;
    dl.set(1, GR(2));
    auto c2 = Cyclotomic::make(parse_tpoly("t^2-5"), dl);
    CHECK(cyclotomic_reduce(N("(x 2)"), c2) == Scalar(5) * N("id1"));
    CHECK(cyclotomic_reduce(N("(xd 2)"), c2) == Scalar(3) * N("idd"));
    CHECK(cyclotomic_reduce(N("(x 3)"), c2) == Scalar(5) * N("x"));
}

TEST_CASE("cyclotomic closure of End(^^) with two dots allowed") {
    auto cyc = Cyclotomic::make(parse_tpoly("t^2-4/9"), std::nullopt);
    Word w = parse_word("^^");
    auto basis = hom_basis(w, w, 2);
    REQUIRE(basis.size() == 32);
    std::vector<Morphism> prods;
    for (const auto& a : basis)
        for (const auto& b : basis) {
            Morphism p = cyclotomic_reduce(compose(Morphism::basis(a), Morphism::basis(b)), cyc);
            for (const auto& [d, c] : p.terms()) CHECK(validate(d, {2}).empty());
            CHECK(cyclotomic_reduce(p, cyc) == p);
        }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto pick = [&] { return Morphism::basis(basis[rng() % basis.size()]); };
        Morphism a = pick(), b = pick(), c = pick();
        Morphism left = cyclotomic_reduce(compose(cyclotomic_reduce(compose(a, b), cyc), c), cyc);
        Morphism right = cyclotomic_reduce(compose(a, cyclotomic_reduce(compose(b, c), cyc)), cyc);
        CHECK(left == right);
    }
}
