#include <doctest.h>

#include <random>

#include "bsato/mpoly.hpp"
#include "bsato/rat.hpp"
#include "bsato/unipoly.hpp"

using namespace bsato;

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(rat_to_string(make_rat(4, 6)) == "2/3");
    CHECK(rat_to_string(make_rat(-4, 6)) == "-2/3");
    CHECK(rat_to_string(make_rat(7, 1)) == "7");
    CHECK(*parse_rat("3/2") == make_rat(3, 2));
    CHECK(*parse_rat("-5/6") == make_rat(-5, 6));
    CHECK(*parse_rat("0") == Rat(0));
    CHECK(!parse_rat("1/0"));
    CHECK(!parse_rat("a/b"));
    CHECK(!parse_rat(""));
    CHECK(rat_floor(make_rat(5, 6)) == 0);
    CHECK(rat_floor(make_rat(-5, 6)) == -1);
    CHECK(rat_floor(make_rat(11, 6)) == 1);
}

TEST_CASE("mpoly parser handles the documented grammar") {
    auto ring = make_ring({"x", "y"});
    MPoly p = mpoly_parse("x^2+y^3", ring);
    CHECK(p.terms().size() == 2);
    CHECK(p.degree() == 3);

    CHECK(mpoly_parse("(x+y)^2", ring) ==
          mpoly_parse("x^2+2*x*y+y^2", ring));
    CHECK(mpoly_parse("3/2*x - x", make_ring({"x"})).to_string() == "1/2*x");
    CHECK(mpoly_parse("-x", ring) == -MPoly::variable(ring, 0));
    CHECK(mpoly_parse("x - - y", ring) == mpoly_parse("x + y", ring));

    CHECK_THROWS_AS(mpoly_parse("x*z", ring), ParseError);       // unknown variable
    CHECK_THROWS_AS(mpoly_parse("x y", ring), ParseError);       // implicit multiplication
    CHECK_THROWS_AS(mpoly_parse("2x", ring), ParseError);        // implicit multiplication
    CHECK_THROWS_AS(mpoly_parse("x/2", ring), ParseError);       // division
    CHECK_THROWS_AS(mpoly_parse("x^(2)", ring), ParseError);     // exponent must be a literal
    CHECK_THROWS_AS(mpoly_parse("x +", ring), ParseError);
    CHECK_THROWS_AS(mpoly_parse("", ring), ParseError);

    SUBCASE("parse-print-parse is the identity") {
        for (const char* text : {"x^2+y^3", "(x+y)^2", "3/2*x^2*y - 7*y + 1", "-x^2 + 2/3"}) {
            MPoly q = mpoly_parse(text, ring);
            CHECK(mpoly_parse(q.to_string(), ring) == q);
        }
    }
}

TEST_CASE("mpoly differentiation") {
    auto ring = make_ring({"x", "y"});
    CHECK(mpoly_parse("x^2*y", ring).diff(0) == mpoly_parse("2*x*y", ring));
    CHECK(mpoly_parse("y^3", ring).diff(0).is_zero());
    CHECK(mpoly_parse("x^2+y^3", ring).diff(1) == mpoly_parse("3*y^2", ring));
}

namespace {

MPoly random_poly(const PolyRingPtr& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 5), expo(0, 3), num(-6, 6), den(1, 4);
    MPoly p(ring);
    for (int t = nterms(rng); t > 0; --t) {
        Mono m(ring->size());
        for (auto& e : m) e = static_cast<std::uint16_t>(expo(rng));
        p.add_term(m, make_rat(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("ring axioms on randomized triples") {
    auto ring = make_ring({"x", "y", "z"});
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        MPoly a = random_poly(ring, rng), b = random_poly(ring, rng), c = random_poly(ring, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        // Leibniz rule
        CHECK((a * b).diff(1) == a.diff(1) * b + a * b.diff(1));
    }
}

TEST_CASE("unipoly arithmetic and division") {
    UniPoly p({Rat(5), Rat(11), Rat(6)});  // 6s^2+11s+5
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rat(-1)) == 0);
    auto [q, r] = p.div_rem(UniPoly::linear_shift(Rat(1)));
    CHECK(r.is_zero());
    CHECK(q == UniPoly({Rat(5), Rat(6)}));
    CHECK_THROWS_AS(p.div_exact(UniPoly({Rat(1), Rat(1), Rat(1)})), std::domain_error);
    CHECK(p.shift(Rat(1)).eval(Rat(0)) == p.eval(Rat(1)));
}

TEST_CASE("rational root extraction") {
    SUBCASE("linear") {
        auto ext = rational_roots(UniPoly::linear_shift(Rat(1)));  // s+1
        REQUIRE(ext.roots.size() == 1);
        CHECK(ext.roots[0].first == Rat(-1));
        CHECK(ext.roots[0].second == 1);
        CHECK(ext.residual.is_one());
    }
    SUBCASE("6s^2+11s+5 = (s+1)(6s+5)") {
        auto ext = rational_roots(UniPoly({Rat(5), Rat(11), Rat(6)}));
        REQUIRE(ext.roots.size() == 2);
        CHECK(ext.roots[0].first == make_rat(-5, 6));
        CHECK(ext.roots[1].first == Rat(-1));
        CHECK(ext.residual == UniPoly::constant(Rat(6)));
    }
    SUBCASE("no rational roots") {
        UniPoly p({Rat(1), Rat(0), Rat(1)});  // s^2+1
        auto ext = rational_roots(p);
        CHECK(ext.roots.empty());
        CHECK(ext.residual == p);
    }
    SUBCASE("zero polynomial rejected") {
        CHECK_THROWS_AS(rational_roots(UniPoly()), std::domain_error);
    }
    SUBCASE("re-multiplication reproduces the input") {
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> num(-4, 4), den(1, 3), extra(0, 2);
        for (int iter = 0; iter < 30; ++iter) {
            // random product of linear factors times an irreducible tail
            UniPoly p = UniPoly::constant(make_rat(den(rng), 1));
            for (int k = extra(rng) + 1; k > 0; --k)
                p = p * UniPoly::linear_shift(make_rat(num(rng), den(rng)));
            if (extra(rng) == 0) p = p * UniPoly({Rat(1), Rat(0), Rat(1)});
            auto ext = rational_roots(p);
            UniPoly rebuilt = ext.residual;
            for (const auto& [root, mult] : ext.roots)
                for (int k = 0; k < mult; ++k)
                    rebuilt = rebuilt * UniPoly::linear_shift(-root);
            CHECK(rebuilt == p);
        }
    }
}
