#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ufano/chow.hpp"

#include <random>

using namespace ufano;

namespace {

const FanoBlowupClass& cls(const std::string& id) {
    static Registry reg;
    return reg.by_id(id);
}

ChowClass random_class(const ChowContext& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-6, 6);
    auto p = [&] { return Poly(Rat(coef(rng))); };
    ChowClass c(ctx);
    c.c0 = p();
    c.c1h = p();
    c.c1e = p();
    c.c2hh = p();
    c.c2he = p();
    c.c2ee = p();
    c.c3 = p();
    return c;
}

}  // namespace

TEST_CASE("registry holds the 21 admissible classes") {
    Registry reg;
    CHECK(reg.classes().size() == 21);
    for (const auto& c : reg.classes()) {
        CHECK(c.r * c.gamma == 24);
        CHECK(c.H3() > 0);
    }
    CHECK(reg.by_id("P3-d6-g3").H3() == 20);
    CHECK(reg.by_id("P3-d9-g10").H3() == 10);
    CHECK_THROWS_AS(reg.by_id("P3-d5-g5"), RegistryError);
}

TEST_CASE("intersection numbers") {
    auto q = cls("P3-d6-g3").intersection_numbers();
    CHECK(q == std::array<long, 4>{1, 0, -6, -28});
    auto q2 = cls("Q-d6-g2").intersection_numbers();
    CHECK(q2 == std::array<long, 4>{2, 0, -6, -20});
    // formula at d=0, g=0 (not an admissible class; unit check only)
    FanoBlowupClass degenerate = FanoBlowupClass::make(Base::P3, 0, 0);
    CHECK(degenerate.intersection_numbers() == std::array<long, 4>{1, 0, 0, 2});
}

TEST_CASE("H^3 via mul matches Thm leading data") {
    const auto& y = cls("P3-d6-g3");
    ChowContext ctx(y);
    ChowClass H = ChowClass::H(ctx);
    CHECK(integrate(H * H * H) == Poly(20));

    const auto& q = cls("Q-d8-g5");
    ChowClass Hq = ChowClass::H(ChowContext(q));
    CHECK(integrate(Hq * Hq * Hq) == Poly(14));
}

TEST_CASE("mul identity and degree-3 collapse") {
    ChowContext ctx(cls("P3-d6-g3"));
    std::mt19937_64 rng(7);
    ChowClass one = ChowClass::scalar(ctx, Poly(1));
    for (int i = 0; i < 20; ++i) {
        ChowClass x = random_class(ctx, rng);
        CHECK(mul(one, x) == x);
    }
    // (4h - e).(12h^2 - 4he) = 24 pt, the H.c2(T) pairing on P3-d6-g3
    ChowClass H = ChowClass::H(ctx);
    ChowClass c2T = ChowClass::deg2(ctx, Poly(12), Poly(-4), Poly(0));
    CHECK(integrate(H * c2T) == Poly(24));
}

TEST_CASE("mul is commutative and associative") {
    std::mt19937_64 rng(11);
    Registry reg;
    for (const auto& c : reg.classes()) {
        ChowContext ctx(c);
        for (int i = 0; i < 8; ++i) {
            ChowClass x = random_class(ctx, rng);
            ChowClass y = random_class(ctx, rng);
            ChowClass z = random_class(ctx, rng);
            CHECK(mul(x, y) == mul(y, x));
            CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        }
    }
}

TEST_CASE("mixed-class products are rejected") {
    ChowContext a(cls("P3-d6-g3"));
    ChowContext b(cls("Q-d6-g2"));
    CHECK_THROWS_AS(mul(ChowClass::H(a), ChowClass::H(b)), IncompatibleClassError);
}

TEST_CASE("integrate(c1(T).c2(T)) = 24 on every class") {
    Registry reg;
    for (const auto& c : reg.classes()) {
        ChowContext ctx(c);
        TangentData T(ctx);
        // pair c2(T) against c1(T) = r h - e
        Poly v = T.c2_dot(Poly(ctx.r), Poly(-1));
        CHECK(v == Poly(24));
        CHECK(T.c1_dot_c2() == Rat(24));
    }
}

TEST_CASE("c2(T) pairing reproduces the P3 coordinates") {
    ChowContext ctx(cls("P3-d6-g3"));
    TangentData T(ctx);
    CHECK(T.c2_on_h() == Rat(12));  // 6 + d
    CHECK(T.c2_on_e() == Rat(24));  // 4d
    // same values from the full A^2 class (6+d) h^2 - 4 he
    ChowClass c2T = ChowClass::deg2(ctx, Poly(12), Poly(-4), Poly(0));
    ChowClass h = ChowClass::deg1(ctx, Poly(1), Poly(0));
    ChowClass e = ChowClass::deg1(ctx, Poly(0), Poly(1));
    CHECK(integrate(c2T * h) == Poly(12));
    CHECK(integrate(c2T * e) == Poly(24));
}

TEST_CASE("h^2 e = 0 kills (a h)(b h) e") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-20, 20);
    Registry reg;
    for (const auto& c : reg.classes()) {
        ChowContext ctx(c);
        ChowClass e = ChowClass::deg1(ctx, Poly(0), Poly(1));
        for (int i = 0; i < 5; ++i) {
            Rat a(coef(rng), 1 + std::abs(coef(rng)));
            Rat b(coef(rng), 1 + std::abs(coef(rng)));
            ChowClass ah = ChowClass::deg1(ctx, Poly(a), Poly(0));
            ChowClass bh = ChowClass::deg1(ctx, Poly(b), Poly(0));
            CHECK(integrate(ah * bh * e) == Poly());
        }
    }
}

TEST_CASE("(4h-e)^3 = 20 pt on P3-d6-g3") {
    ChowContext ctx(cls("P3-d6-g3"));
    ChowClass H = ChowClass::deg1(ctx, Poly(4), Poly(-1));
    CHECK(integrate(H * H * H) == Poly(20));
}

TEST_CASE("registry file override") {
    std::istringstream in(
        "# demo registry\n"
        "P3-d6-g3 P3 6 3 genus three sextic  # trailing comment\n"
        "X-custom Q 4 0 twisted quartic\n");
    auto classes = parse_registry(in);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].id == "P3-d6-g3");
    CHECK(classes[0].d == 6);
    CHECK(classes[0].description == "genus three sextic");
    CHECK(classes[1].id == "X-custom");
    CHECK(classes[1].base == Base::Q);

    std::istringstream bad("foo P5 1 0 nope\n");
    CHECK_THROWS_AS(parse_registry(bad), RegistryError);
}
