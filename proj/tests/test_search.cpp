#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ufano/ulrich_search.hpp"

using namespace ufano;

namespace {

const FanoBlowupClass& cls(const std::string& id) {
    static Registry reg;
    return reg.by_id(id);
}

}  // namespace

TEST_CASE("P3-d6-g3 carries exactly the two Ulrich line divisors") {
    auto rep = solve_line_candidates(cls("P3-d6-g3"));
    REQUIRE(rep.solutions.size() == 2);
    CHECK(rep.solutions[0] == DivisorClass{3, 0});
    CHECK(rep.solutions[1] == DivisorClass{9, 3});
    CHECK(rep.verified_all_coefficients);
    CHECK(rep.relation.exists);
    CHECK(rep.relation.slope == Rat(2));
    CHECK(rep.relation.intercept == Rat(3));
    REQUIRE(rep.quadratic_roots.size() == 2);
    CHECK(rep.quadratic_roots[0].str() == "0");
    CHECK(rep.quadratic_roots[1].str() == "3");
}

TEST_CASE("P3-d9-g10 has the printed surd roots and no solutions") {
    auto rep = solve_line_candidates(cls("P3-d9-g10"));
    CHECK(rep.solutions.empty());
    CHECK(rep.relation.slope == Rat(18, 7));
    CHECK(rep.relation.intercept == Rat(15, 7));
    REQUIRE(rep.quadratic_roots.size() == 2);
    CHECK(rep.quadratic_roots[0].str() == "3/2 - (7/30)*sqrt(65)");
    CHECK(rep.quadratic_roots[1].str() == "3/2 + (7/30)*sqrt(65)");
}

TEST_CASE("the other twenty classes are empty") {
    Registry reg;
    int nonempty = 0;
    for (const auto& c : reg.classes()) {
        auto rep = solve_line_candidates(c);
        if (!rep.solutions.empty()) {
            ++nonempty;
            CHECK(c.id == "P3-d6-g3");
        }
    }
    CHECK(nonempty == 1);
}

TEST_CASE("solution sets are closed under the Ulrich dual") {
    Registry reg;
    for (const auto& c : reg.classes()) {
        auto rep = solve_line_candidates(c);
        for (const auto& s : rep.solutions) {
            DivisorClass dual = dual_divisor(c, s);
            bool found = false;
            for (const auto& s2 : rep.solutions) found |= s2 == dual;
            CHECK(found);
        }
    }
}

TEST_CASE("dual_divisor examples") {
    CHECK(dual_divisor(cls("P3-d6-g3"), {9, 3}) == DivisorClass{3, 0});
    CHECK(dual_divisor(cls("P3-d6-g3"), {3, 0}) == DivisorClass{9, 3});
    CHECK(dual_divisor(cls("Q-d6-g2"), {0, 0}) == DivisorClass{9, 3});
    // involution on random input
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b)
            CHECK(dual_divisor(cls("V4-d2-g0"), dual_divisor(cls("V4-d2-g0"), {a, b})) == DivisorClass{a, b});
}

TEST_CASE("degenerate elimination branch (d = 16 on P3)") {
    FanoBlowupClass c = FanoBlowupClass::make(Base::P3, 16, 0);
    auto rep = solve_line_candidates(c);
    CHECK_FALSE(rep.relation.exists);
    // whatever it returns must verify exactly
    CHECK(rep.verified_all_coefficients);
    for (const auto& s : rep.solutions)
        CHECK(hilbert_poly_line(c, s) == ulrich_target(c, 1));
}

TEST_CASE("rank 2 c1 enumeration on P3-d6-g3") {
    auto rep = enumerate_rank2_c1(cls("P3-d6-g3"));
    REQUIRE(rep.candidates.size() == 7);
    for (int i = 0; i < 7; ++i) {
        CHECK(rep.candidates[i].x == 6 + 2 * i);
        CHECK(rep.candidates[i].y == i);
    }
    CHECK(rep.x_slope == Rat(2));
    CHECK(rep.x_intercept == Rat(6));
    REQUIRE(rep.y_interval.size() == 2);
    CHECK(rep.y_interval[0].str() == "0");
    CHECK(rep.y_interval[1].str() == "6");
    // candidate 12h - 3e has x = 2y + 6 at y = 3 and forced H.c2 = 54
    CHECK(rep.candidates[3].x == 12);
    CHECK(rep.candidates[3].Hc2 == Rat(54));
    // 6h: H.(6h)^2 = 144, so H.c2 = 72 - 40 + 4 = 36
    CHECK(rep.candidates[0].Hc2 == Rat(36));
}

TEST_CASE("every enumerated candidate satisfies the relation and Bogomolov exactly") {
    Registry reg;
    for (const auto& c : reg.classes()) {
        ChowContext ctx(c);
        Rat H3(c.H3());
        Rat Ph(static_cast<long>(ctx.r) * ctx.r * ctx.c_X - ctx.d);
        Rat Pe(2L * ctx.r * ctx.d + ctx.e3());
        auto rep = enumerate_rank2_c1(c);
        bool has_3H = false;
        for (const auto& cand : rep.candidates) {
            CHECK(Ph * cand.x - Pe * cand.y == 3 * H3);
            Rat Hc1sq = H_dot_c1_squared(c, Rat(cand.x), Rat(cand.y));
            CHECK(cand.Hc2 == Hc1sq / 2 - 2 * H3 + 4);
            CHECK(4 * cand.Hc2 - Hc1sq >= 0);
            has_3H |= (cand.x == 3 * c.r && cand.y == 3);
        }
        CHECK(has_3H);  // 3H survives on every class
    }
}

TEST_CASE("rank 2 relation checks") {
    const auto& y = cls("P3-d6-g3");

    SUBCASE("extension Chern data passes all three") {
        ChernData E = extension_chern(y, {9, 3}, {3, 0});
        CHECK(E.c1h == Rat(12));
        CHECK(E.c1e == Rat(-3));
        auto f = E.c2.full_coords();
        CHECK(f.hh == Rat(27));
        CHECK(f.he == Rat(-9));
        CHECK(f.ee == Rat(0));
        auto chk = check_rank2_relations(y, E);
        CHECK(chk.relation1);
        CHECK(chk.relation2);
        REQUIRE(chk.relation3.has_value());
        CHECK(*chk.relation3);
        CHECK(chk.relation3_lhs == Rat(180));
    }

    SUBCASE("extension is symmetric in the two divisors") {
        ChernData a = extension_chern(y, {9, 3}, {3, 0});
        ChernData b = extension_chern(y, {3, 0}, {9, 3});
        CHECK(a.c1h == b.c1h);
        CHECK(a.c1e == b.c1e);
        CHECK(a.c2.full_coords().he == b.c2.full_coords().he);
        ChernData z = extension_chern(y, {0, 0}, {0, 0});
        CHECK(z.c1h == Rat(0));
        CHECK(z.c2.full_coords().hh == Rat(0));
    }

    SUBCASE("perturbing relation 2 is caught") {
        ChernData E;
        E.rank = 2;
        E.c1h = 3 * y.r;  // c1 = 3H + 0e with c1e = -3
        E.c1e = -3;
        Rat Hc1sq = H_dot_c1_squared(y, E.c1h, E.c1e);
        Rat good = Hc1sq / 2 - 2 * Rat(y.H3()) + 4;
        ChowContext ctx(y);
        E.c2 = A2Form::pairing(Rat(0), Rat(0));
        // choose pairing values so H.c2 = good + 1
        E.c2 = A2Form::pairing((good + 1) / y.r, Rat(0));
        auto chk = check_rank2_relations(y, E);
        CHECK(chk.relation1);
        CHECK_FALSE(chk.relation2);
        CHECK_FALSE(chk.relation3.has_value());  // pairing form: indeterminate
    }

    SUBCASE("c1 = 6h with matching H.c2 passes relation 2") {
        ChernData E;
        E.rank = 2;
        E.c1h = 6;
        E.c1e = 0;
        E.c2 = A2Form::pairing(Rat(36, 4), Rat(0));  // H.c2 = 4*(36/4) - 0 = 36
        auto chk = check_rank2_relations(y, E);
        CHECK(chk.relation2);
    }

    SUBCASE("rank must be 2") {
        ChernData E;
        E.rank = 3;
        CHECK_THROWS_AS(check_rank2_relations(y, E), DomainError);
    }
}

TEST_CASE("surd rendering") {
    // 45 b^2 - 135 b - 58: the P3-d9-g10 quadratic
    auto roots = quadratic_surd_roots(45, -135, -58);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].str() == "3/2 - (7/30)*sqrt(65)");
    CHECK(roots[1].str() == "3/2 + (7/30)*sqrt(65)");
    // perfect square discriminant
    auto r2 = quadratic_surd_roots(1, -5, 6);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].str() == "2");
    CHECK(r2[1].str() == "3");
    // complex pair
    auto r3 = quadratic_surd_roots(1, 0, 1);
    REQUIRE(r3.size() == 2);
    CHECK(r3[0].radicand == Int(-1));
}
