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


#include "greenberg/verify/corpus.hpp"

#include "greenberg/error.hpp"

namespace greenberg::verify {

using schemes::SchemeSpec;
using schemes::TermSpec;

std::vector<ga::BaseRingSpec> base_corpus() {
    const auto f2 = arith::FiniteField::prime(2), f3 = arith::FiniteField::prime(3);
    using ga::CharCase;
    return {
        {CharCase::Equal, f2, {}},      {CharCase::Equal, f3, {}},     {CharCase::Mixed, f2, {}},
        {CharCase::Mixed, f3, {}},      {CharCase::Mixed, f2, {0, -2}}, {CharCase::Mixed, f3, {0, -3}},
        {CharCase::Mixed, f2, {0, 0, -2}},
    };
}

arith::FieldPtr f4() { return arith::FiniteField::build(2, {1, 1, 1}); }

std::vector<arith::AlgebraPtr> test_algebras() {
    const auto f2 = arith::FiniteField::prime(2);
    return {arith::FiniteAlgebra::field(f2), arith::FiniteAlgebra::field(arith::FiniteField::prime(3)),
            arith::FiniteAlgebra::field(f4()), arith::FiniteAlgebra::dual_numbers(f2, 2)};
}

std::vector<arith::AlgebraPtr> weil_algebras() {
    const auto f2 = arith::FiniteField::prime(2);
    return {arith::FiniteAlgebra::field(f2), arith::FiniteAlgebra::dual_numbers(f2, 2)};
}

TermSpec term(std::int64_t c, std::vector<std::uint32_t> exps) {
    return {{{c < 0 ? -c : c}, {}, c < 0}, std::move(exps)};
}

TermSpec pi_term(std::int64_t c, std::vector<std::uint32_t> exps) {
    return {{{0, c < 0 ? -c : c}, {}, c < 0}, std::move(exps)};
}

std::vector<SchemeEntry> scheme_corpus() {
    auto always = [](std::uint32_t) { return true; };
    auto never = [](std::uint32_t) { return false; };
    return {
        {{"A1", {"x"}, {}}, always},
        {{"A2", {"x", "y"}, {}}, always},
        {{"Gm", {"x", "u"}, {{term(1, {1, 1}), term(-1, {0, 0})}}}, always},
        {{"x^2-1", {"x"}, {{term(1, {2}), term(-1, {0})}}}, [](std::uint32_t p) { return p != 2; }},
        {{"y^2-pi*x", {"x", "y"}, {{term(1, {0, 2}), pi_term(-1, {1, 0})}}}, never},
        {{"x*y-pi", {"x", "y"}, {{term(1, {1, 1}), pi_term(-1, {0, 0})}}}, never},
        {{"x^2+x+1", {"x"}, {{term(1, {2}), term(1, {1}), term(1, {0})}}}, [](std::uint32_t p) { return p != 3; }},
    };
}

const SchemeEntry& corpus_scheme(const std::string& name) {
    static const auto corpus = scheme_corpus();
    for (const auto& e : corpus)
        if (e.spec.name == name) return e;
    throw Error(ErrorCode::InvalidArgument, "no corpus scheme " + name);
}

SchemeSpec square_zero_scheme() { return {"y^2-pi*x", {"x", "y"}, {{term(1, {0, 2}), pi_term(-1, {1, 0})}}}; }

SchemeSpec weil_quadric() { return {"x^2-pi*x", {"x"}, {{term(1, {2}), pi_term(-1, {1})}}}; }

schemes::GroupSchemeSpec GroupEntry::over(const schemes::CoeffRing& ring) const {
    schemes::GroupSchemeSpec g;
    g.presentation = schemes::instantiate(spec, ring);
    for (const auto& c : identity) g.identity.push_back(schemes::instantiate(c, ring));
    schemes::MorphismPresentation m;
    m.source = schemes::scheme_product(g.presentation, g.presentation);
    m.target = g.presentation;
    m.images = law(m.source);
    m.validate();
    g.law = std::move(m);
    return g;
}

namespace {

poly::RingPoly var(const schemes::AffinePresentation& z, const std::string& name) {
    return poly::RingPoly::variable(z.ring.domain(), name);
}

}  // namespace

std::vector<GroupEntry> group_corpus() {
    const schemes::CoefficientSpec zero{{0}, {}, false}, one{{1}, {}, false};
    auto mul_law = [](std::vector<std::string> vars) {
        return [vars](const schemes::AffinePresentation& z) {
            std::map<std::string, poly::RingPoly> m;
            for (const auto& v : vars) m.emplace(v, var(z, "l_" + v) * var(z, "r_" + v));
            return m;
        };
    };
    return {
        {"Ga",
         {"Ga", {"x"}, {}},
         {zero},
         [](const schemes::AffinePresentation& z) {
             return std::map<std::string, poly::RingPoly>{{"x", var(z, "l_x") + var(z, "r_x")}};
         },
         1},
        {"Gm", {"Gm", {"x", "u"}, {{term(1, {1, 1}), term(-1, {0, 0})}}}, {one, one}, mul_law({"x", "u"}), 1},
        {"Gm^2",
         {"Gm^2",
          {"x", "u", "y", "w"},
          {{term(1, {1, 1, 0, 0}), term(-1, {0, 0, 0, 0})}, {term(1, {0, 0, 1, 1}), term(-1, {0, 0, 0, 0})}}},
         {one, one, one, one},
         mul_law({"x", "u", "y", "w"}),
         2},
    };
}

schemes::MorphismPresentation EtaleEntry::over(const schemes::CoeffRing& ring) const {
    schemes::MorphismPresentation f;
    f.source = schemes::instantiate(source, ring);
    f.target = schemes::instantiate(target, ring);
    f.images = images(f.source);
    f.validate();
    return f;
}

std::vector<EtaleEntry> etale_corpus() {
    const SchemeSpec line{"A1", {"s"}, {}};
    auto to_x = [](const schemes::AffinePresentation& z) {
        return std::map<std::string, poly::RingPoly>{{"s", var(z, "x")}};
    };
    return {
        {"sqrt", {"sqrt", {"x", "y", "t"}, {{term(1, {0, 2, 0}), term(-1, {1, 0, 0})}, {term(2, {0, 1, 1}), term(-1, {0, 0, 0})}}},
         line, to_x, [](std::uint32_t p) { return p != 2; }},
        {"open", {"open", {"x", "t"}, {{term(1, {1, 1}), term(-1, {0, 0})}}}, line, to_x,
         [](std::uint32_t) { return true; }},
        {"identity", {"id", {"x"}, {}}, line, to_x, [](std::uint32_t) { return true; }},
    };
}

}  // namespace greenberg::verify
