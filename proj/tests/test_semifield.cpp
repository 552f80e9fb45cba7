#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "teich/laurent.hpp"
#include "teich/semifield.hpp"

using namespace teich;

namespace {

SfExpr random_expr(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 4);
    switch (kind(rng)) {
        case 0:
            return SfExpr::constant(make_rat(1 + (long long)(rng() % 5)));
        case 1:
            return SfExpr::variable(vars[rng() % vars.size()]);
        case 2: {
            std::vector<SfExpr> kids;
            for (int i = 0, n = 2 + (int)(rng() % 2); i < n; ++i)
                kids.push_back(random_expr(rng, vars, depth - 1));
            return SfExpr::add(std::move(kids));
        }
        case 3: {
            std::vector<SfExpr> kids;
            for (int i = 0, n = 2 + (int)(rng() % 2); i < n; ++i)
                kids.push_back(random_expr(rng, vars, depth - 1));
            return SfExpr::mul(std::move(kids));
        }
        default:
            return SfExpr::pow(random_expr(rng, vars, depth - 1), (long long)(rng() % 5) - 2);
    }
}

}  // namespace

TEST_CASE("tropical evaluation of the running polynomial") {
    // a^3 + 3 a b^2 + 2 tropicalizes to max(3a, a+2b, 0); at a=5, b=1: 15
    auto e = SfExpr::add({SfExpr::pow(SfExpr::variable("a"), 3),
                          SfExpr::mul({SfExpr::constant(make_rat(3)), SfExpr::variable("a"),
                                       SfExpr::pow(SfExpr::variable("b"), 2)}),
                          SfExpr::constant(make_rat(2))});
    std::map<std::string, Rat> env{{"a", make_rat(5)}, {"b", make_rat(1)}};
    CHECK(sf_eval<TropQSf>(e, env) == make_rat(15));
    std::map<std::string, Rat> env2{{"a", make_rat(1)}, {"b", make_rat(4)}};
    CHECK(sf_eval<TropQSf>(e, env2) == make_rat(9));

    CHECK(sf_eval<TropQSf>(SfExpr::variable("x"), {{"x", make_rat(7, 3)}}) == make_rat(7, 3));
    CHECK(sf_eval<PosRatSf>(SfExpr::variable("x"), {{"x", make_rat(7, 3)}}) == make_rat(7, 3));

    // (1+x)^2: PosRat at 1 -> 4; TropQ at 1 -> 2*max(0,1) = 2
    auto sq = SfExpr::pow(SfExpr::add({SfExpr::constant(make_rat(1)), SfExpr::variable("x")}), 2);
    CHECK(sf_eval<PosRatSf>(sq, {{"x", make_rat(1)}}) == make_rat(4));
    CHECK(sf_eval<TropQSf>(sq, {{"x", make_rat(1)}}) == make_rat(2));
}

TEST_CASE("evaluation errors") {
    auto e = SfExpr::variable("missing");
    CHECK_THROWS_AS(sf_eval<PosRatSf>(e, {}), MissingVariable);

    auto h = SfExpr::pow_half(SfExpr::variable("x"), 1);
    CHECK(sf_eval<PosRatSf>(h, {{"x", make_rat(9, 4)}}) == make_rat(3, 2));
    CHECK_THROWS_AS(sf_eval<PosRatSf>(h, {{"x", make_rat(2)}}), NonSquareHalfPower);

    CHECK_THROWS_AS(sf_eval<PosRatSf>(SfExpr::variable("x"), {{"x", make_rat(-1)}}),
                    DomainViolation);
}

TEST_CASE("semifield axioms on randomized triples") {
    std::mt19937_64 rng(123);
    auto randrat = [&](bool positive) {
        long long num = 1 + (long long)(rng() % 40);
        long long den = 1 + (long long)(rng() % 40);
        Rat r(num, den);
        if (!positive && rng() % 2) r = -r;
        return r;
    };
    for (int i = 0; i < 300; ++i) {
        {
            Rat a = randrat(true), b = randrat(true), c = randrat(true);
            using S = PosRatSf;
            CHECK(S::add(a, S::add(b, c)) == S::add(S::add(a, b), c));
            CHECK(S::add(a, b) == S::add(b, a));
            CHECK(S::mul(a, S::mul(b, c)) == S::mul(S::mul(a, b), c));
            CHECK(S::mul(a, b) == S::mul(b, a));
            CHECK(S::mul(a, S::add(b, c)) == S::add(S::mul(a, b), S::mul(a, c)));
            CHECK(S::mul(a, S::inv(a)) == S::one());
        }
        {
            Rat a = randrat(false), b = randrat(false), c = randrat(false);
            using S = TropQSf;
            CHECK(S::add(a, S::add(b, c)) == S::add(S::add(a, b), c));
            CHECK(S::add(a, b) == S::add(b, a));
            CHECK(S::mul(a, S::mul(b, c)) == S::mul(S::mul(a, b), c));
            CHECK(S::mul(a, b) == S::mul(b, a));
            CHECK(S::mul(a, S::add(b, c)) == S::add(S::mul(a, b), S::mul(a, c)));
            CHECK(S::mul(a, S::inv(a)) == S::one());
        }
    }
}

TEST_CASE("tropical limit probe") {
    auto f = SfExpr::add({SfExpr::variable("a"), SfExpr::variable("b")});
    auto vals = tropical_limit_probe(f, {{"a", make_rat(1)}, {"b", make_rat(2)}}, {make_rat(1, 100)});
    REQUIRE(vals.size() == 1);
    CHECK(std::abs(vals[0] - 2.0) < 0.01);

    // multiplication is exact at every eps
    auto g = SfExpr::mul({SfExpr::variable("a"), SfExpr::variable("b")});
    for (auto eps : {make_rat(1), make_rat(1, 10), make_rat(1, 1000)}) {
        auto v = tropical_limit_probe(g, {{"a", make_rat(5, 2)}, {"b", make_rat(-3)}}, {eps});
        CHECK(std::abs(v[0] - (-0.5)) < 1e-12);
    }

    // (1+x)^2 at x=3: approach to 6, within 10*eps, improving
    auto h = SfExpr::pow(SfExpr::add({SfExpr::constant(make_rat(1)), SfExpr::variable("x")}), 2);
    std::vector<Rat> epss = {make_rat(1), make_rat(1, 10), make_rat(1, 100)};
    auto vs = tropical_limit_probe(h, {{"x", make_rat(3)}}, epss);
    for (size_t i = 0; i < vs.size(); ++i)
        CHECK(std::abs(vs[i] - 6.0) <= 10.0 * to_double(epss[i]));
    CHECK(std::abs(vs[2] - 6.0) <= std::abs(vs[0] - 6.0));
}

TEST_CASE("probe converges to the tropical value on random expressions") {
    std::mt19937_64 rng(2024);
    std::vector<std::string> vars = {"a", "b", "c"};
    int done = 0;
    while (done < 100) {
        SfExpr e = random_expr(rng, vars, 3);
        std::map<std::string, Rat> env;
        for (auto& v : vars) env[v] = Rat((long long)(rng() % 9) - 4);
        Rat expect = sf_eval<TropQSf>(e, env);
        auto got = tropical_limit_probe(e, env, {make_rat(1, 1000)});
        CHECK(std::abs(got[0] - to_double(expect)) <= 0.01 * (1.0 + (double)e.size()));
        ++done;
    }
}

TEST_CASE("TropZ evaluation stays integral") {
    std::mt19937_64 rng(31337);
    std::vector<std::string> vars = {"a", "b"};
    for (int i = 0; i < 200; ++i) {
        SfExpr e = random_expr(rng, vars, 3);
        std::map<std::string, Int> env{{"a", Int((long long)(rng() % 11) - 5)},
                                       {"b", Int((long long)(rng() % 11) - 5)}};
        try {
            Int v = sf_eval<TropZSf>(e, env);
            Rat q = sf_eval<TropQSf>(e, {{"a", Rat(env["a"])}, {"b", Rat(env["b"])}});
            CHECK(Rat(v) == q);
        } catch (const DomainViolation&) {
            // an odd half-power left the integral semifield
        }
    }
}

TEST_CASE("s-expression round trip") {
    std::string s = "(+ (^ a 3) (* 3 a (^ b 2)) 2)";
    SfExpr e = parse_sexpr(s);
    CHECK(to_sexpr(e) == s);
    CHECK(sf_eval<PosRatSf>(e, {{"a", make_rat(1)}, {"b", make_rat(1)}}) == make_rat(6));

    SfExpr half = parse_sexpr("(^ x 3/2)");
    CHECK(sf_eval<PosRatSf>(half, {{"x", make_rat(4)}}) == make_rat(8));
    CHECK(to_sexpr(half) == "(^ x 3/2)");

    CHECK_THROWS_AS(parse_sexpr("(+ a"), Error);
    CHECK_THROWS_AS(parse_sexpr("(- a b)"), Error);
}

TEST_CASE("tropical analogue of Laurent polynomials") {
    // x^{1/2}y^{1/2} + x^{1/2}y^{-1/2} + x^{-1/2}y^{-1/2}
    LaurentPoly p(2);
    p += LaurentPoly::monomial(2, 0, 1) * LaurentPoly::monomial(2, 1, 1);
    p += LaurentPoly::monomial(2, 0, 1) * LaurentPoly::monomial(2, 1, -1);
    p += LaurentPoly::monomial(2, 0, -1) * LaurentPoly::monomial(2, 1, -1);
    auto pl = tropical_analogue_poly(p);
    // max(x/2+y/2, x/2-y/2, -x/2-y/2)
    CHECK(pl.eval({make_rat(2), make_rat(4)}) == make_rat(3));
    CHECK(pl.eval({make_rat(2), make_rat(-4)}) == make_rat(3));
    CHECK(pl.eval({make_rat(-2), make_rat(-1)}) == make_rat(3, 2));

    // constants tropicalize to 0, coefficients are dropped
    auto c7 = LaurentPoly::constant(1, Int(7));
    CHECK(tropical_analogue_poly(c7).eval({make_rat(55)}) == Rat(0));
    auto twox = LaurentPoly::monomial(1, 0, 2, Int(2));
    CHECK(tropical_analogue_poly(twox).eval({make_rat(55)}) == make_rat(55));

    LaurentPoly neg(1);
    neg += LaurentPoly::monomial(1, 0, 2, Int(-1));
    CHECK_THROWS_AS(tropical_analogue_poly(neg), NonPositiveCoefficient);
}
