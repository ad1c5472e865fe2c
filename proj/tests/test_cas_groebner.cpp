#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ufano/cas/groebner.hpp"

using namespace ufano::cas;

namespace {

GradedIdeal fixture() { return parse_ideal_file(std::string(UFANO_DATA_DIR) + "/paper_J.txt"); }

}  // namespace

TEST_CASE("trivial bases") {
    auto I = parse_ideal_string("p 101\nvars x y z w\nx\ny\n");
    auto gb = groebner_basis(I);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0].size() == 1);
    CHECK(gb[1].size() == 1);
}

TEST_CASE("a reduced basis with one S-pair") {
    // (x^2 - y^2, x*y): the S-pair brings in y^3
    auto I = parse_ideal_string("p 101\nvars x y z w\nx^2-y^2\nx*y\n");
    auto gb = groebner_basis(I);
    REQUIRE(gb.size() == 3);
    CHECK(spolys_reduce_to_zero(gb, I.field()));
    GPoly y3 = parse_ideal_string("p 101\nvars x y z w\ny^3\n").gens()[0];
    CHECK(reduce_modulo(y3, gb, I.field()).empty());
}

TEST_CASE("lex vs grevlex") {
    auto I = parse_ideal_string("p 101\nvars x y z w\nx^2+y*z\nx*y-z^2\n");
    auto g1 = groebner_basis(I, MonomialOrder::Grevlex);
    auto g2 = groebner_basis(I, MonomialOrder::Lex);
    CHECK(spolys_reduce_to_zero(g1, I.field(), MonomialOrder::Grevlex));
    CHECK(spolys_reduce_to_zero(g2, I.field(), MonomialOrder::Lex));
    for (const auto& g : I.gens()) {
        CHECK(reduce_modulo(g, g1, I.field(), MonomialOrder::Grevlex).empty());
        CHECK(gpoly_normal_form(g, g2, I.field(), MonomialOrder::Lex).empty());
    }
}

TEST_CASE("groebner cache with order tag") {
    auto I = parse_ideal_string("p 101\nvars x y z w\nx^2+y*z\nx*y-z^2\n");
    const auto& gb1 = I.groebner(MonomialOrder::Grevlex);
    const auto& gb2 = I.groebner(MonomialOrder::Grevlex);
    CHECK(gb1 == gb2);
    auto lex = I.groebner(MonomialOrder::Lex);
    CHECK(spolys_reduce_to_zero(lex, I.field(), MonomialOrder::Lex));
}

TEST_CASE("determinism") {
    auto I = fixture();
    auto a = groebner_basis(I);
    auto b = groebner_basis(I);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    std::string s1, s2;
    for (const auto& g : a) s1 += gpoly_str(g) + "\n";
    for (const auto& g : b) s2 += gpoly_str(g) + "\n";
    CHECK(s1 == s2);
}

TEST_CASE("fixture ideal: membership and Buchberger criterion") {
    auto I = fixture();
    auto gb = groebner_basis(I);
    for (const auto& g : I.gens()) CHECK(reduce_modulo(g, gb, I.field()).empty());
    CHECK(spolys_reduce_to_zero(gb, I.field()));
}

TEST_CASE("fixture ideal: Hilbert function of the sextic curve") {
    auto I = fixture();
    auto gb = groebner_basis(I);
    // dim (S/J)_n = 6n - 2 from degree 1 on
    for (int n = 1; n <= 8; ++n) CHECK(quotient_piece_dim(gb, n) == 6 * n - 2);
    CHECK(quotient_piece_dim(gb, 0) == 1);
    for (int n = 0; n <= 8; ++n) CHECK(polynomial_piece_dim(n) == (n + 1) * (n + 2) * (n + 3) / 6);
}

TEST_CASE("normal form is zero exactly on ideal members") {
    auto I = parse_ideal_string("p 101\nvars x y z w\nx^2-y^2\nx*y\n");
    auto gb = groebner_basis(I);
    GPoly outside = parse_ideal_string("p 101\nvars x y z w\nz^3\n").gens()[0];
    CHECK_FALSE(reduce_modulo(outside, gb, I.field()).empty());
}
