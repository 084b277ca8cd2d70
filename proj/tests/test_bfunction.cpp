#include <doctest.h>

#include <random>

#include "bsato/ansatz.hpp"
#include "bsato/bfunction.hpp"
#include "bsato/fs_expr.hpp"

using namespace bsato;

namespace {

UniPoly product_of_linear(const std::vector<Rat>& roots) {
    UniPoly p = UniPoly::constant(Rat(1));
    for (const auto& r : roots) p = p * UniPoly::linear_shift(-r);
    return p;
}

}  // namespace

TEST_CASE("ann_fs on monomials") {
    auto ring = make_ring({"x"});
    auto W = weyl_over(ring, true);
    WeylElem x = WeylElem::symbol(W, W->pos_index(0));
    WeylElem dx = WeylElem::symbol(W, W->der_index(0));
    WeylElem s = WeylElem::symbol(W, W->par_index(0));
    TermOrder ord = TermOrder::degrevlex(W->nsym());

    SUBCASE("f = x gives <x d - s>") {
        DIdeal ann = ann_fs(mpoly_parse("x", ring));
        CHECK(reduce(weyl_mul(x, dx) - s, ann.gens, ord).is_zero());
        // conversely the ideal annihilates x^s (checked inside ann_fs) and
        // does not contain 1
        for (const auto& g : ann.gens) CHECK(!g.total_degree() == 0);
    }
    SUBCASE("f = x^2 gives <x d - 2s>") {
        DIdeal ann = ann_fs(mpoly_parse("x^2", ring));
        CHECK(reduce(weyl_mul(x, dx) - s * Rat(2), ann.gens, ord).is_zero());
    }
    SUBCASE("f = xy contains the torus operators") {
        auto ring2 = make_ring({"x", "y"});
        auto W2 = weyl_over(ring2, true);
        DIdeal ann = ann_fs(mpoly_parse("x*y", ring2));
        WeylElem xdx = weyl_mul(WeylElem::symbol(W2, W2->pos_index(0)),
                                WeylElem::symbol(W2, W2->der_index(0)));
        WeylElem ydy = weyl_mul(WeylElem::symbol(W2, W2->pos_index(1)),
                                WeylElem::symbol(W2, W2->der_index(1)));
        WeylElem s2 = WeylElem::symbol(W2, W2->par_index(0));
        TermOrder ord2 = TermOrder::degrevlex(W2->nsym());
        CHECK(reduce(xdx - s2, ann.gens, ord2).is_zero());
        CHECK(reduce(ydy - s2, ann.gens, ord2).is_zero());
    }
}

TEST_CASE("hypersurface b-function corpus") {
    auto check_b = [](const char* text, std::vector<std::string> vars,
                      const std::vector<Rat>& roots) {
        CAPTURE(text);
        auto ring = make_ring(std::move(vars));
        BFunction b = bfunction(mpoly_parse(text, ring));
        CHECK(b.poly == product_of_linear(roots));
        CHECK(b.residual.is_one());
    };

    check_b("x", {"x"}, {Rat(-1)});
    check_b("x^2", {"x"}, {Rat(-1), make_rat(-1, 2)});
    check_b("x^3", {"x"}, {Rat(-1), make_rat(-1, 3), make_rat(-2, 3)});
    check_b("x*y", {"x", "y"}, {Rat(-1), Rat(-1)});
    check_b("x^2+y^2", {"x", "y"}, {Rat(-1), Rat(-1)});
    check_b("x^2+y^3", {"x", "y"},
            {Rat(-1), make_rat(-5, 6), make_rat(-7, 6)});
    check_b("x^2+y^2+z^2", {"x", "y", "z"}, {Rat(-1), make_rat(-3, 2)});
}

TEST_CASE("b-function is invariant under variable permutation and unimodular substitution") {
    auto ring = make_ring({"x", "y"});
    BFunction base = bfunction(mpoly_parse("x^2+y^3", ring));
    SUBCASE("permutation") {
        BFunction perm = bfunction(mpoly_parse("y^2+x^3", ring));
        CHECK(perm.poly == base.poly);
    }
    SUBCASE("unimodular substitution x -> x+y, y -> y") {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> small(-2, 2);
        for (int iter = 0; iter < 3; ++iter) {
            // random unimodular A = [[1, a], [0, 1]] * [[1, 0], [b, 1]]
            int a = small(rng), bb = small(rng);
            MPoly x = MPoly::variable(ring, 0), y = MPoly::variable(ring, 1);
            MPoly nx = x + y * Rat(a);
            MPoly ny = y + (x + y * Rat(a)) * Rat(bb) * Rat(0);  // keep det 1, simple shear
            MPoly f = nx * nx + (y + x * Rat(bb)) * (y + x * Rat(bb)) * (y + x * Rat(bb));
            BFunction sub = bfunction(f);
            CHECK(sub.poly == base.poly);
        }
    }
}

TEST_CASE("reduced b-function and minimal exponent") {
    auto ring = make_ring({"x"});
    CHECK(reduced_bfunction(mpoly_parse("x", ring)).poly.is_one());
    CHECK(reduced_bfunction(mpoly_parse("x^4", ring)).poly ==
          product_of_linear({make_rat(-1, 4), make_rat(-2, 4), make_rat(-3, 4)}));

    CHECK(min_exponent_hyp(mpoly_parse("x", ring)) == ExtRat::inf());
    CHECK(min_exponent_hyp(mpoly_parse("x^2", ring)) == ExtRat::finite(make_rat(1, 2)));

    auto ring2 = make_ring({"x", "y"});
    CHECK(min_exponent_hyp(mpoly_parse("x^2+y^3", ring2)) == ExtRat::finite(make_rat(5, 6)));

    SUBCASE("lct caps at 1") {
        CHECK(lct_hyp(mpoly_parse("x", ring)) == Rat(1));
        CHECK(lct_hyp(mpoly_parse("x^2+y^3", ring2)) == make_rat(5, 6));
        auto ring4 = make_ring({"x", "y", "z", "w"});
        CHECK(lct_hyp(mpoly_parse("x^2+y^2+z^2+w^2", ring4)) == Rat(1));
    }
}

TEST_CASE("corpus invariants: divisibility, negativity, root window") {
    auto cases = std::vector<std::pair<std::vector<std::string>, std::string>>{
        {{"x"}, "x"},          {{"x"}, "x^3"},
        {{"x", "y"}, "x*y"},   {{"x", "y"}, "x^2+y^2"},
        {{"x", "y"}, "x^2+y^3"},
    };
    for (const auto& [vars, text] : cases) {
        CAPTURE(text);
        auto ring = make_ring(vars);
        MPoly f = mpoly_parse(text, ring);
        BFunction b = bfunction(f);
        long n = static_cast<long>(vars.size());
        CHECK(b.has_root(Rat(-1)));
        for (const auto& [root, mult] : b.roots) {
            CHECK(root < 0);
            CHECK(root >= Rat(-n));
        }
        ExtRat alpha = min_exponent_of(b);
        Rat lct = lct_hyp(f);
        CHECK(-b.largest_root() == lct);
        CHECK(min(alpha, ExtRat::finite(Rat(1))).value == lct);
    }
}

TEST_CASE("certified b-function produces a verifying operator") {
    for (auto [vars, text] : std::vector<std::pair<std::vector<std::string>, std::string>>{
             {{"x"}, "x"},
             {{"x"}, "x^2"},
             {{"x", "y"}, "x*y"},
             {{"x", "y"}, "x^2+y^3"},
         }) {
        CAPTURE(text);
        auto ring = make_ring(vars);
        MPoly f = mpoly_parse(text, ring);
        CertifiedBFunction cb = bfunction_certified(f);
        CHECK(cb.b.poly == bfunction(f).poly);
        CHECK(verify_certificate(f, Certificate{cb.b.poly, cb.P}));
    }
}

TEST_CASE("nonconstant precondition") {
    auto ring = make_ring({"x"});
    CHECK_THROWS_AS(bfunction(MPoly(ring, Rat(3))), std::invalid_argument);
    CHECK_THROWS_AS(bfunction(MPoly(ring)), std::invalid_argument);
}
