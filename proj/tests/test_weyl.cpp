#include <doctest.h>

#include <random>

#include "bsato/fs_expr.hpp"
#include "bsato/weyl.hpp"

using namespace bsato;

TEST_CASE("normally ordered products follow the commutation rule") {
    auto R = make_weyl_ring({"t"}, {"dt"});
    WeylElem t = WeylElem::symbol(R, R->pos_index(0));
    WeylElem dt = WeylElem::symbol(R, R->der_index(0));

    // d t = t d + 1
    CHECK(weyl_mul(dt, t) == weyl_mul(t, dt) + WeylElem(R, Rat(1)));
    // d^2 t^2 = t^2 d^2 + 4 t d + 2
    WeylElem lhs = weyl_mul(weyl_pow(dt, 2), weyl_pow(t, 2));
    WeylElem rhs = weyl_mul(weyl_pow(t, 2), weyl_pow(dt, 2)) +
                   weyl_mul(t, dt) * Rat(4) + WeylElem(R, Rat(2));
    CHECK(lhs == rhs);
}

TEST_CASE("distinct variables commute") {
    auto R = make_weyl_ring({"x", "y"}, {"dx", "dy"});
    WeylElem dx = WeylElem::symbol(R, R->der_index(0));
    WeylElem y = WeylElem::symbol(R, R->pos_index(1));
    CHECK(weyl_mul(dx, y) == weyl_mul(y, dx));
}

TEST_CASE("ring mismatch is rejected") {
    auto R1 = make_weyl_ring({"x"}, {"dx"});
    auto R2 = make_weyl_ring({"y"}, {"dy"});
    CHECK_THROWS_AS(
        weyl_mul(WeylElem::symbol(R1, 0), WeylElem::symbol(R2, 0)),
        std::invalid_argument);
}

namespace {

WeylElem random_elem(const WeylRingPtr& R, std::mt19937_64& rng, int max_exp = 2) {
    std::uniform_int_distribution<int> nterms(1, 4), expo(0, max_exp), num(-5, 5), den(1, 3);
    WeylElem e(R);
    for (int t = nterms(rng); t > 0; --t) {
        Mono m(R->nsym());
        for (auto& x : m) x = static_cast<std::uint16_t>(expo(rng));
        e.add_term(m, make_rat(num(rng), den(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("weyl_mul is associative on randomized triples") {
    auto R = make_weyl_ring({"x", "y"}, {"dx", "dy"}, {}, {"s"});
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 25; ++iter) {
        WeylElem a = random_elem(R, rng), b = random_elem(R, rng), c = random_elem(R, rng);
        CHECK(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c)));
    }
}

TEST_CASE("derivation order is additive on products") {
    auto R = make_weyl_ring({"x"}, {"dx"});
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 25; ++iter) {
        WeylElem a = random_elem(R, rng), b = random_elem(R, rng);
        if (a.is_zero() || b.is_zero()) continue;
        WeylElem ab = weyl_mul(a, b);
        REQUIRE(!ab.is_zero());  // domain: the Weyl algebra has no zero divisors
        CHECK(ab.derivation_order() == a.derivation_order() + b.derivation_order());
    }
}

TEST_CASE("appendix identities hold for m <= 5") {
    IdentityReport rep = verify_appendix_identities(5);
    for (const auto& item : rep.items) {
        INFO(item.name);
        CHECK(item.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("apply_to_power computes the chain rule") {
    SUBCASE("d x^s = s x^{s-1}") {
        auto ring = make_ring({"x"});
        MPoly f = mpoly_parse("x", ring);
        auto W = weyl_over(ring);
        WeylElem d = WeylElem::symbol(W, W->der_index(0));
        FsExpr got = apply_to_power(d, f, 0);
        FsExpr want(f, xs_ring_of(ring));
        want.add_term(-1, MPoly::variable(xs_ring_of(ring), 1));  // s * f^{s-1}
        CHECK(got.equals(want));
    }
    SUBCASE("d^2 (x^2)^{s+1} = (2s+2)(2s+1) x^{2s}") {
        auto ring = make_ring({"x"});
        MPoly f = mpoly_parse("x^2", ring);
        auto W = weyl_over(ring);
        WeylElem d2 = weyl_pow(WeylElem::symbol(W, W->der_index(0)), 2);
        FsExpr got = apply_to_power(d2, f, 1);
        auto xs = xs_ring_of(ring);
        // (2s+2)(2s+1) = 4s^2+6s+2, times f^{s+0}
        FsExpr want(f, xs);
        want.add_term(0, mpoly_parse("4*s^2 + 6*s + 2", xs));
        CHECK(got.equals(want));
    }
    SUBCASE("sum_i dx_i dy_i on f = sum x_i y_i gives (s+1)(s+n) f^s") {
        const int n = 3;
        std::vector<std::string> vars;
        for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
        for (int i = 0; i < n; ++i) vars.push_back("y" + std::to_string(i));
        auto ring = make_ring(vars);
        MPoly f(ring);
        for (int i = 0; i < n; ++i)
            f = f + MPoly::variable(ring, i) * MPoly::variable(ring, n + i);
        auto W = weyl_over(ring);
        WeylElem P(W);
        for (int i = 0; i < n; ++i)
            P = P + weyl_mul(WeylElem::symbol(W, W->der_index(i)),
                             WeylElem::symbol(W, W->der_index(n + i)));
        FsExpr got = apply_to_power(P, f, 1);
        auto xs = xs_ring_of(ring);
        FsExpr want(f, xs);
        want.add_term(0, mpoly_parse("(s+1)*(s+3)", xs));
        CHECK(got.equals(want));
    }
}

TEST_CASE("apply_to_power composes") {
    auto ring = make_ring({"x", "y"});
    MPoly f = mpoly_parse("x^2+y^3", ring);
    auto W = weyl_over(ring);
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 10; ++iter) {
        WeylElem P = random_elem(W, rng, 1);
        WeylElem Q = random_elem(W, rng, 1);
        FsExpr via_product = apply_to_power(weyl_mul(P, Q), f, 1);
        FsExpr stepwise = apply_operator(P, apply_to_power(Q, f, 1));
        CHECK(via_product.equals(stepwise));
    }
}
