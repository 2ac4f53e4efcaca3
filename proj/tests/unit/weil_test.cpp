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

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/error.hpp"
#include "greenberg/schemes/solve.hpp"
#include "greenberg/transform/transform.hpp"
#include "greenberg/verify/corpus.hpp"
#include "greenberg/weil/extension.hpp"
#include "test_util.hpp"

namespace greenberg::weil {
namespace {

using schemes::CoeffRing;
using testing_util::pres;

const Guards kGuards{};

arith::FieldPtr fp(std::int64_t p) { return arith::FiniteField::prime(p); }
arith::FieldPtr f4() { return arith::FiniteField::build(2, {1, 1, 1}); }

// b_a * b_b computed in the top ring agrees with the structure table.
void expect_table_consistent(const ExtensionData& ext) {
    const auto& top = ext.top.domain()->ring();
    for (unsigned a = 0; a < ext.rank; ++a)
        for (unsigned b = 0; b < ext.rank; ++b) {
            EXPECT_EQ(ext.table[a][b], ext.table[b][a]);
            std::uint32_t sum = top->zero();
            for (unsigned c = 0; c < ext.rank; ++c)
                sum = top->add(sum, top->mul(ext.embed[ext.table[a][b][c]], ext.basis[c]));
            EXPECT_EQ(sum, top->mul(ext.basis[a], ext.basis[b])) << a << " " << b;
        }
}

TEST(Extension, FieldExtension) {
    const auto ext = ext_build_field(fp(2), f4());
    EXPECT_EQ(ext.rank, 2u);
    EXPECT_EQ(ext.gamma, 2u);
    EXPECT_EQ(ext.decompose.size(), 4u);
    expect_table_consistent(ext);
    try {
        ext_build_field(f4(), arith::FiniteField::build(2, {1, 1, 0, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAnExtension);
    }
}

TEST(Extension, MixedExtension) {
    const auto ext = ext_build_mixed(fp(2), f4(), {0, -2}, 1);
    EXPECT_EQ(ext.rank, 4u);
    EXPECT_EQ(ext.gamma, 2u);
    EXPECT_EQ(ext.e, 2u);
    EXPECT_EQ(ext.top.level(), 1u);
    EXPECT_EQ(ext.base.level(), 0u);
    expect_table_consistent(ext);

    const auto unr = ext_build_mixed(fp(2), f4(), {}, 2);
    EXPECT_EQ(unr.rank, 2u);
    EXPECT_EQ(unr.base.level(), 1u);
    EXPECT_EQ(unr.top.level(), 1u);
    expect_table_consistent(unr);

    const auto tot = ext_build_mixed(fp(2), fp(2), {0, -2}, 2);
    EXPECT_EQ(tot.rank, 2u);
    EXPECT_EQ(tot.gamma, 1u);
    EXPECT_EQ(tot.top.level(), 3u);
    expect_table_consistent(tot);

    try {
        ext_build_mixed(f4(), arith::FiniteField::build(2, {1, 1, 0, 0, 1}), {}, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPrimeFieldBase);
    }
    EXPECT_THROW(ext_build_mixed(fp(2), f4(), {0, -4}, 1), Error);
}

TEST(Extension, EqualExtension) {
    const auto ext = ext_build_equal(fp(2), 3, 1, false);
    EXPECT_EQ(ext.rank, 2u);
    EXPECT_EQ(ext.e, 2u);
    expect_table_consistent(ext);
    const auto over_k = ext_build_equal(fp(3), 2, 0, true);
    EXPECT_EQ(over_k.rank, 3u);
    EXPECT_FALSE(over_k.base.over_ga());
    try {
        ext_build_equal(fp(2), 3, 2, false);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PatternMismatch);
    }
}

TEST(Restriction, AffineLine) {
    const auto ext = ext_build_field(fp(2), f4());
    const auto res = res_affine(pres(CoeffRing::field(f4()), {"x"}, {}), ext);
    EXPECT_EQ(res.vars, (std::vector<std::string>{"x_0", "x_1"}));
    EXPECT_TRUE(res.gens.empty());
    EXPECT_EQ(res_var("y", 3), "y_3");
}

TEST(Restriction, FieldCounts) {
    const auto ext = ext_build_field(fp(2), f4());
    const auto k4 = CoeffRing::field(f4());
    const auto a2 = arith::FiniteAlgebra::field(fp(2));
    // x^2 + x + u has no F4-points: x^2 + x lies in F2 and u has trace 1.
    const auto q = pres(k4, {"x"}, {"x^2 + x + [0,1]"});
    EXPECT_EQ(schemes::solve_over_k(res_affine(q, ext), *a2, kGuards).count, 0u);
    const auto q1 = pres(k4, {"x"}, {"x^2 + x + 1"});
    EXPECT_EQ(schemes::solve_over_k(res_affine(q1, ext), *a2, kGuards).count, 2u);
    for (const auto& rep : check_res_bijection(q1, ext, verify::weil_algebras(), kGuards))
        EXPECT_TRUE(rep.bijection) << rep.carrier << ": " << rep.failure;
    try {
        res_affine(pres(CoeffRing::field(fp(2)), {"x"}, {}), ext);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
    }
}

// Along R_1 over k the restriction and the transform agree term for term.
TEST(Restriction, SquareZeroMatchesTransform) {
    const auto ext = ext_build_equal(fp(3), 1, 0, true);
    const auto z = pres(ext.top, {"x", "y"}, {"y^2 - [0;1]*x"});
    const auto res = res_affine(z, ext);
    const auto gr = transform::gr_transform(z).result;
    EXPECT_EQ(res.vars, gr.vars);
    ASSERT_EQ(res.gens.size(), gr.gens.size());
    for (std::size_t i = 0; i < gr.gens.size(); ++i) EXPECT_EQ(res.gens[i].to_string(), gr.gens[i].to_string());
}

TEST(Restriction, BijectionForMixed) {
    const auto ext = ext_build_mixed(fp(2), f4(), {0, -2}, 1);
    const auto gm = pres(ext.top, {"x", "u"}, {"x*u - 1"});
    for (const auto& rep : check_res_bijection(gm, ext, {}, kGuards)) {
        EXPECT_TRUE(rep.bijection) << rep.failure;
        EXPECT_EQ(rep.top_count, 12u);
    }
}

TEST(WeilGreenberg, UnramifiedAndMixedCounts) {
    const auto ext = ext_build_mixed(fp(2), f4(), {0, -2}, 1);
    const auto algebras = verify::weil_algebras();
    const auto gm = verify::corpus_scheme("Gm").spec;
    const auto cells = wr_gr_check(gm, ext, algebras, kGuards);
    ASSERT_EQ(cells.size(), 2u);
    EXPECT_EQ(cells[0].lhs, 12u);
    EXPECT_EQ(cells[1].lhs, 192u);
    for (const auto& c : cells) EXPECT_TRUE(c.equal()) << c.algebra;

    const auto a1 = wr_gr_check(verify::corpus_scheme("A1").spec, ext, algebras, kGuards);
    EXPECT_EQ(a1[0].lhs, 16u);
    EXPECT_EQ(a1[1].lhs, 256u);
    for (const auto& c : a1) EXPECT_TRUE(c.equal()) << c.algebra;
}

TEST(WeilGreenberg, TotallyRamified) {
    const auto ext = ext_build_mixed(fp(2), fp(2), {0, -2}, 1);
    const auto cells = tot_gr_check(verify::weil_quadric(), ext, verify::weil_algebras(), kGuards);
    ASSERT_FALSE(cells.empty());
    // x^2 = pi*x in F2[pi]/(pi^2): x in {0, pi}.
    EXPECT_EQ(cells[0].lhs, 2u);
    for (const auto& c : cells) EXPECT_TRUE(c.equal()) << c.algebra;
}

TEST(WeilGreenberg, UnramifiedBaseChange) {
    const auto ext = ext_build_mixed(fp(2), f4(), {}, 2);
    for (const auto& c : bc_check(verify::corpus_scheme("Gm").spec, ext, verify::weil_algebras(), kGuards))
        EXPECT_TRUE(c.equal()) << c.algebra << " " << c.lhs << " " << c.rhs;
}

}  // namespace
}  // namespace greenberg::weil
