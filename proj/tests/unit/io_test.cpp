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

#include "greenberg/error.hpp"
#include "greenberg/io/json_io.hpp"
#include "greenberg/schemes/solve.hpp"

namespace greenberg::io {
namespace {

std::string data(const std::string& name) { return std::string(GREENBERG_TEST_DATA) + "/" + name; }

ErrorCode code_of(const std::function<void()>& f, std::string* message = nullptr) {
    try {
        f();
    } catch (const Error& e) {
        if (message) *message = e.what();
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::Io;
}

TEST(JsonIo, BaseRings) {
    const auto doc = Document::load(data("base_t2m2.json"));
    const auto base = parse_base_ring(Node(doc));
    EXPECT_EQ(base.label(), "W(F2)[t]/(t^2 - 2)");
    const auto back = Document::parse(dump(base_ring_json(base)), "round trip");
    EXPECT_EQ(parse_base_ring(Node(back)), base);
    EXPECT_EQ(parse_base_ring(Node(Document::load(data("base_equal_p3.json")))).label(), "F3[[t]]");
}

TEST(JsonIo, UnknownKeyIsLocated) {
    std::string msg;
    EXPECT_EQ(code_of([&] { parse_base_ring(Node(Document::load(data("bad_key.json")))); }, &msg),
              ErrorCode::ParseError);
    EXPECT_NE(msg.find("bad_key.json:4:"), std::string::npos) << msg;
    EXPECT_NE(msg.find("eisenstien"), std::string::npos) << msg;
}

TEST(JsonIo, SyntaxErrorIsLocated) {
    std::string msg;
    EXPECT_EQ(code_of([&] { Document::load(data("bad_syntax.json")); }, &msg), ErrorCode::ParseError);
    EXPECT_NE(msg.find("bad_syntax.json:"), std::string::npos) << msg;
    EXPECT_EQ(code_of([] { Document::parse("{\n  \"p\": 2,\n  \"p\" 3\n}", "inline"); }, &msg),
              ErrorCode::ParseError);
    EXPECT_NE(msg.find("inline:3:"), std::string::npos) << msg;
    EXPECT_EQ(code_of([] { Document::load("/nonexistent/file.json"); }), ErrorCode::Io);
}

TEST(JsonIo, Algebras) {
    const Guards g{};
    EXPECT_EQ(parse_algebra(Node(Document::load(data("alg_f4.json"))), g)->size(), 4u);
    EXPECT_EQ(parse_algebra(Node(Document::load(data("alg_f2e.json"))), g)->size(), 4u);
    const auto prod = Document::parse(
        R"({"kind": "product", "left": {"kind": "field", "base": {"p": 3}}, "right": {"kind": "dual_numbers", "base": {"p": 3}, "m": 2}})",
        "prod");
    EXPECT_EQ(parse_algebra(Node(prod), g)->size(), 27u);
    const auto wrong = Document::parse(R"({"kind": "matrix", "base": {"p": 2}})", "wrong");
    EXPECT_EQ(code_of([&] { parse_algebra(Node(wrong), g); }), ErrorCode::ParseError);
}

TEST(JsonIo, TermAndTextSchemesAgree) {
    const auto ring = parse_coeff_ring(Node(Document::parse(R"({"field": {"p": 2, "modulus": [1, 1, 1]}})", "r")));
    const auto terms = parse_scheme(Node(Document::parse(
        R"({"vars": ["x"], "gens": [[{"c": 1, "e": [2]}, {"c": 1, "e": [1]}, {"c": 1, "e": [0]}]]})", "t")));
    const auto text = parse_scheme(Node(Document::parse(R"({"vars": ["x"], "gens": ["x^2 + x + 1"]})", "s")));
    EXPECT_EQ(terms.over(ring).gens, text.over(ring).gens);
    const auto quadric = parse_scheme(Node(Document::load(data("quadric_f4.json"))));
    ASSERT_TRUE(quadric.ring);
    EXPECT_EQ(schemes::solve_over_k(quadric.presentation(), *arith::FiniteAlgebra::field(quadric.ring->k()), Guards{})
                  .count,
              0u);
}

TEST(JsonIo, SchemeErrors) {
    const auto undeclared = parse_scheme(Node(Document::parse(R"({"vars": ["x"], "gens": ["x*y"]})", "u")));
    const auto ring = schemes::CoeffRing::field(arith::FiniteField::prime(2));
    EXPECT_THROW(undeclared.over(ring), Error);
    const auto no_ring = parse_scheme(Node(Document::parse(R"({"vars": ["x"], "gens": []})", "n")));
    EXPECT_THROW(no_ring.presentation(), Error);
}

TEST(JsonIo, PresentationRoundTrip) {
    const auto doc = Document::load(data("square_zero.json"));
    const auto file = parse_scheme(Node(doc));
    const auto ring = schemes::CoeffRing::algebra(
        ga::GreenbergAlgebra::build(parse_base_ring(Node(Document::load(data("base_equal_p3.json")))), 1));
    const auto z = file.over(ring);
    const auto j = presentation_json(z);
    const auto back = parse_scheme(Node(Document::parse(dump(j), "back")));
    ASSERT_TRUE(back.ring);
    EXPECT_EQ(*back.ring, ring);
    EXPECT_EQ(back.presentation().gens, z.gens);
    EXPECT_EQ(back.vars, z.vars);
}

TEST(JsonIo, Extensions) {
    EXPECT_EQ(parse_extension(Node(Document::load(data("ext_mixed_f4_t2m2.json")))).rank, 4u);
    EXPECT_EQ(parse_extension(Node(Document::load(data("ext_f4_f2.json")))).rank, 2u);
    EXPECT_EQ(parse_extension(Node(Document::load(data("ext_equal_r1.json")))).rank, 2u);
}

TEST(JsonIo, Config) {
    const auto cfg = parse_config(Node(Document::load(data("config.json"))));
    EXPECT_EQ(cfg.seed, 7u);
    EXPECT_EQ(cfg.guards.candidate_guard, 16777216u);
    EXPECT_EQ(code_of([] { parse_config(Node(Document::parse(R"({"guards": {"size": 1}})", "c"))); }),
              ErrorCode::ParseError);
    EXPECT_NE(code_of([] { parse_config(Node(Document::parse(R"({"seed": -1})", "c"))); }), ErrorCode::Io);
}

TEST(JsonIo, Groups) {
    const auto ring = schemes::CoeffRing::field(arith::FiniteField::prime(2));
    const auto g = parse_group(Node(Document::load(data("group_gm.json"))), ring);
    EXPECT_EQ(g.identity.size(), 2u);
    ASSERT_TRUE(g.law);
    EXPECT_EQ(g.law->source.vars.size(), 4u);
}

}  // namespace
}  // namespace greenberg::io
