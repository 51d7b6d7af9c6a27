#include "tangency/dpoly.hpp"

#include <doctest.h>

using tangency::BigInt;
using tangency::DPoly;
using tangency::TermOrder;

TEST_CASE("trailing zeros are normalized away") {
    DPoly p{1, 2, 0, 0};
    CHECK(p.coeffs().size() == 2);
    CHECK(DPoly{0, 0}.is_zero());
    CHECK(DPoly().coeffs().empty());
    CHECK((DPoly{1, 1} - DPoly{1, 1}).coeffs().empty());
    CHECK(DPoly(0).is_zero());
}

TEST_CASE("descending text") {
    CHECK(DPoly{0, 0, 120, -150, 35}.to_string() == "35*d^4 - 150*d^3 + 120*d^2");
    CHECK(DPoly{0, -6, 3}.to_string() == "3*d^2 - 6*d");
    CHECK(DPoly{0, -24, 11}.to_string() == "11*d^2 - 24*d");
    CHECK(DPoly{-1}.to_string() == "-1");
    CHECK(DPoly{0, 1}.to_string() == "d");
    CHECK(DPoly{0, -1}.to_string() == "-d");
    CHECK(DPoly{7, 0, 1}.to_string() == "d^2 + 7");
    CHECK(DPoly().to_string() == "0");
}

TEST_CASE("ascending text uses a space between coefficient and d") {
    CHECK(DPoly{0, 0, 120, -150, 35}.to_string(TermOrder::Ascending) == "120 d^2 - 150 d^3 + 35 d^4");
    CHECK(DPoly{0, 1800, -1370, 225}.to_string(TermOrder::Ascending) == "1800 d - 1370 d^2 + 225 d^3");
    CHECK(DPoly{0, -24, 11}.to_string(TermOrder::Ascending) == "-24 d + 11 d^2");
}

TEST_CASE("arithmetic and evaluation") {
    const DPoly d = DPoly::d();
    const DPoly p = d * (d - DPoly(2)) * DPoly(3);
    CHECK(p == DPoly{0, -6, 3});
    CHECK(p.evaluate(3) == 9);
    CHECK(p.evaluate(2) == 0);
    CHECK(-p == DPoly{0, 6, -3});
    CHECK(p.degree() == 2);
    CHECK(p.term_count() == 2);
    CHECK(DPoly::monomial(5, 3).coeff(3) == 5);
    CHECK(DPoly::monomial(5, 3).coeff(7) == 0);
}

TEST_CASE("big coefficients stay exact") {
    BigInt big = 1;
    for (int i = 0; i < 40; ++i) big *= 10;
    const DPoly p(big);
    const DPoly sq = p * p;
    CHECK(sq.coeff(0) == big * big);
    CHECK((sq - p * p).is_zero());
}
