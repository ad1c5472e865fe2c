#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ufano/ledger.hpp"

#include <random>

using namespace ufano;

namespace {

const FanoBlowupClass& cls(const std::string& id) {
    static Registry reg;
    return reg.by_id(id);
}

}  // namespace

TEST_CASE("ext chi report on the two Ulrich line bundles") {
    const auto& y = cls("P3-d6-g3");
    auto [chi, chiK] = ext_chi_report(y, {9, 3}, {3, 0});
    CHECK(chi == Rat(-8));
    CHECK(chiK == Rat(8));
    auto [same, sameK] = ext_chi_report(y, {5, 2}, {5, 2});
    CHECK(same == Rat(1));  // chi(O) = 1
    (void)sameK;
}

TEST_CASE("tensor with dual") {
    const auto& y = cls("P3-d6-g3");
    Deg1Class a1{9, -3}, a2{3, 0};
    ChernData E = tensor_rank2_with_dual(y, a1, a2);
    CHECK(E.rank == 4);
    CHECK(E.c1h == Rat(0));
    auto f = E.c2.full_coords();
    CHECK(f.hh == Rat(-36));
    CHECK(f.he == Rat(36));
    CHECK(f.ee == Rat(-9));
    CHECK(euler_poly(y, E).eval(0) == Rat(-14));

    ChernData zero = tensor_rank2_with_dual(y, a1, a1);
    CHECK(zero.c2.full_coords().hh == Rat(0));
    CHECK(zero.c2.full_coords().he == Rat(0));
    CHECK(zero.c2.full_coords().ee == Rat(0));
}

TEST_CASE("tensor with dual depends only on the difference of the roots") {
    const auto& y = cls("P3-d6-g3");
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-10, 10);
    for (int i = 0; i < 25; ++i) {
        Deg1Class a1{c(rng), c(rng)}, a2{c(rng), c(rng)}, v{c(rng), c(rng)};
        ChernData lhs = tensor_rank2_with_dual(y, a1, a2);
        ChernData rhs = tensor_rank2_with_dual(y, {a1.h + v.h, a1.e + v.e}, {a2.h + v.h, a2.e + v.e});
        CHECK(lhs.c2.full_coords().hh == rhs.c2.full_coords().hh);
        CHECK(lhs.c2.full_coords().he == rhs.c2.full_coords().he);
        CHECK(lhs.c2.full_coords().ee == rhs.c2.full_coords().ee);
        // swapping the roots changes nothing either
        ChernData sw = tensor_rank2_with_dual(y, a2, a1);
        CHECK(euler_poly(y, sw) == euler_poly(y, lhs));
    }
}

TEST_CASE("the full dimension ledger on P3-d6-g3") {
    auto rep = quot_dimension_report(cls("P3-d6-g3"));
    CHECK(rep.L1 == DivisorClass{9, 3});
    CHECK(rep.L2 == DivisorClass{3, 0});
    CHECK(rep.chi_L2dual_L1 == -8);
    CHECK(rep.ext1_L2_L1 == 8);
    CHECK(rep.chi_K_twist == 8);
    CHECK(rep.ext1_L1_L2_upper == 8);
    CHECK(rep.chi_EEdual == -14);
    CHECK(rep.h1_minus_h2 == 15);
    CHECK(rep.N == 40);
    CHECK(rep.dim_R_lower == 1614);
    CHECK(rep.dim_Rprime == 1606);
    CHECK(rep.dim_Rdoubleprime_upper == 1606);
    CHECK(rep.stable_exists);
    // ledger identity: lower bound gap = (h1-h2) - ext1 + 1
    CHECK(rep.dim_R_lower - rep.dim_Rprime == rep.h1_minus_h2 - rep.ext1_L2_L1 + 1);
    CHECK(rep.dim_R_lower - rep.dim_Rprime == 8);
    CHECK(rep.assumptions.size() == 6);
    for (const auto& a : rep.assumptions) CHECK((a.status == "cited" || a.status == "computed"));
}

TEST_CASE("ledger with measured cohomology values") {
    LedgerOptions opt;
    opt.h2_I3_6 = 0;
    opt.h2_I2_2 = 8;
    auto rep = quot_dimension_report(cls("P3-d6-g3"), opt);
    CHECK(rep.ext1_L2_L1 == 8);
    CHECK(rep.dim_Rdoubleprime_upper == 1606);
    CHECK(rep.stable_exists);
    int computed = 0;
    for (const auto& a : rep.assumptions) computed += a.status == "computed";
    CHECK(computed == 2);

    // a hypothetical larger instance value flips the verdict arithmetic honestly
    opt.h2_I2_2 = 20;
    auto rep2 = quot_dimension_report(cls("P3-d6-g3"), opt);
    CHECK(rep2.dim_Rdoubleprime_upper == 1618);
    CHECK_FALSE(rep2.stable_exists);
}

TEST_CASE("ledger refuses classes without two line bundles") {
    CHECK_THROWS_AS(quot_dimension_report(cls("P3-d9-g10")), LedgerNotApplicable);
    CHECK_THROWS_AS(quot_dimension_report(cls("Q-d6-g2")), LedgerNotApplicable);
}
