// Copyright 2026 The greenberg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <map>
#include <random>

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/poly/evaluate.hpp"
#include "greenberg/poly/polynomial.hpp"

namespace greenberg::poly {
namespace {

IntPoly zp(const std::string& s) { return parse_polynomial(IntegerDomain::instance(), s); }

RingDomainPtr fp(std::int64_t p) { return RingDomain::of_field(arith::FiniteField::prime(p)); }

RingPoly rp(std::int64_t p, const std::string& s) { return parse_polynomial(fp(p), s); }

TEST(Polynomial, Arithmetic) {
    EXPECT_EQ((zp("x") + zp("y")).to_string(), "x + y");
    EXPECT_EQ(zp("x + y") * zp("x - y"), zp("x^2 - y^2"));
    EXPECT_EQ(rp(2, "x_0 + y_0").pow(2), rp(2, "x_0^2 + y_0^2"));
    EXPECT_TRUE((zp("x") - zp("x")).is_zero());
}

TEST(Polynomial, CanonicalForm) {
    EXPECT_EQ(zp("y + x").to_string(), "x + y");
    EXPECT_EQ(zp("1 + x + x^2*y + y^3").to_string(), "x^2*y + y^3 + x + 1");
    EXPECT_EQ(zp("x10 + x2").to_string(), "x2 + x10");
    EXPECT_TRUE(natural_less("x2", "x10"));
    EXPECT_TRUE(natural_less("x9", "y0"));
    EXPECT_EQ(zp("-3*x0^2*y1").to_string(), "-3*x0^2*y1");
}

TEST(Polynomial, ParseErrors) {
    for (const char* bad : {"", "x + * y", "x^", "2 x", "x +"}) {
        try {
            zp(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
        }
    }
}

TEST(Polynomial, DivExact) {
    EXPECT_EQ(div_exact_int(zp("2*x + 4"), 2), zp("x + 2"));
    EXPECT_EQ(div_exact_int(zp("x^2 + y^2") - zp("x + y").pow(2), 2), zp("-x*y"));
    try {
        div_exact_int(zp("x + 1"), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
    }
}

TEST(Polynomial, Evaluate) {
    const auto f2 = arith::FiniteField::prime(2);
    const FiniteCarrier c2{field_ring(f2)};
    auto id = [](std::uint32_t c) { return c; };
    EXPECT_EQ(evaluate(rp(2, "x^2 + 1"), std::map<std::string, std::uint32_t>{{"x", 1}}, c2, id), 0u);
    EXPECT_EQ(evaluate(rp(2, "x_1 + y_1 - x_0*y_0"),
                       std::map<std::string, std::uint32_t>{{"x_0", 1}, {"x_1", 0}, {"y_0", 1}, {"y_1", 0}}, c2, id),
              1u);

    const auto d = arith::FiniteAlgebra::dual_numbers(f2, 2);
    const auto lift = d->structure_map(f2);
    const FiniteCarrier cd{d->ring()};
    const auto eps = d->from_coords({0, 1});
    EXPECT_EQ(evaluate(rp(2, "x^2"), std::map<std::string, std::uint32_t>{{"x", eps}}, cd,
                       [&](std::uint32_t c) { return lift[c]; }),
              d->zero());
    try {
        evaluate(rp(2, "x*y"), std::map<std::string, std::uint32_t>{{"x", 1}}, c2, id);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MissingVariable);
    }
}

TEST(Polynomial, Substitute) {
    EXPECT_EQ(substitute(zp("x^2"), {{"x", zp("y + 1")}}), zp("y^2 + 2*y + 1"));
    EXPECT_EQ(substitute(rp(2, "x^2"), {{"x", rp(2, "y + 1")}}), rp(2, "y^2 + 1"));
    EXPECT_EQ(substitute(zp("x*y"), {{"x", zp("a + b")}, {"y", zp("a - b")}}), zp("a^2 - b^2"));
}

TEST(Polynomial, MapCoefficients) {
    EXPECT_EQ(map_coeffs(zp("2*x + 3"), fp(2)), rp(2, "1"));
    EXPECT_EQ(map_coeffs(zp("-x_0*y_0"), fp(2)), rp(2, "x_0*y_0"));
    EXPECT_TRUE(map_coeffs(zp("6*x*y"), fp(3)).is_zero());
}

TEST(Polynomial, TermGuard) {
    const auto saved = term_guard();
    set_term_guard(20);
    try {
        (zp("x + y + z + w + 1")).pow(4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeGuard);
    }
    set_term_guard(saved);
}

// Evaluation at a point is a ring map: checked on seeded random polynomials.
TEST(Polynomial, SeededEvaluationHomomorphism) {
    std::mt19937_64 rng(4242);
    const auto d = fp(5);
    const std::vector<std::string> vars{"a", "b", "c"};
    auto random_poly = [&] {
        std::vector<std::pair<Exponents, std::uint32_t>> terms;
        for (int t = 0; t < 6; ++t)
            terms.emplace_back(Exponents{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                                         static_cast<std::uint32_t>(rng() % 3)},
                               static_cast<std::uint32_t>(rng() % 5));
        return RingPoly::from_terms(d, vars, std::move(terms));
    };
    const FiniteCarrier c{d->ring()};
    auto id = [](std::uint32_t x) { return x; };
    for (int s = 0; s < 100; ++s) {
        const auto f = random_poly(), g = random_poly(), h = random_poly();
        EXPECT_EQ((f + g) * h, f * h + g * h);
        const std::map<std::string, std::uint32_t> pt{{"a", static_cast<std::uint32_t>(rng() % 5)},
                                                      {"b", static_cast<std::uint32_t>(rng() % 5)},
                                                      {"c", static_cast<std::uint32_t>(rng() % 5)}};
        auto ev = [&](const RingPoly& p) {
            std::map<std::string, std::uint32_t> sub;
            for (const auto& v : p.vars()) sub.emplace(v, pt.at(v));
            return evaluate(p, sub, c, id);
        };
        EXPECT_EQ(ev(f * g), d->mul(ev(f), ev(g)));
        EXPECT_EQ(ev(f + g), d->add(ev(f), ev(g)));
        EXPECT_EQ(parse_polynomial(d, f.to_string()), f);
    }
}

}  // namespace
}  // namespace greenberg::poly
