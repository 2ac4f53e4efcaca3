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


#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/error.hpp"
#include "greenberg/schemes/presentation.hpp"

namespace greenberg::weil {

enum class ExtensionType { Field, Mixed, Equal };

/// A finite free extension top/base with basis b_0..b_{t-1}:
/// b_a * b_b = sum_c table[a][b][c] b_c with base coefficients.
struct ExtensionData {
    ExtensionType type = ExtensionType::Field;
    schemes::CoeffRing base;
    schemes::CoeffRing top;
    unsigned rank = 0;
    std::vector<std::string> basis_labels;
    /// Basis elements as constants of the top ring.
    std::vector<std::uint32_t> basis;
    std::vector<std::vector<std::vector<std::uint32_t>>> table;
    /// Base constant -> top constant.
    std::vector<std::uint32_t> embed;
    /// Top constant -> its base coordinates.
    std::vector<std::vector<std::uint32_t>> decompose;
    /// Cardinality of the geometric fiber: the residue degree.
    unsigned gamma = 1;
    /// Base level n-1 and ramification index e (mixed and equal types).
    unsigned n = 1;
    unsigned e = 1;
};

/// k'/k with the power basis of k' over k. Throws NotAnExtension.
ExtensionData ext_build_field(const arith::FieldPtr& k, const arith::FieldPtr& k_top);

/// R'_{ne-1} over R_{n-1} = W_n(F_p), R' = W(k')[t]/(f) with f Eisenstein of
/// degree e (empty: R' = W(k'), e = 1); basis [u]^a pi^b. Throws
/// NotPrimeFieldBase, NotEisenstein, DecompositionFailure.
ExtensionData ext_build_mixed(const arith::FieldPtr& k, const arith::FieldPtr& k_top,
                              const std::vector<std::int64_t>& eisenstein, unsigned n);

/// Equal characteristic: R_{N'} over R_M with t -> pi^e, (M+1) e = N'+1, basis
/// pi^b. With `over_k` the base is k itself (M = 0, e = N'+1). Throws
/// PatternMismatch.
ExtensionData ext_build_equal(const arith::FieldPtr& k, unsigned top_level, unsigned base_level, bool over_k);

/// Name of basis coordinate a of variable v: "v_a".
std::string res_var(const std::string& v, unsigned a);

/// Weil restriction along the extension: x = sum_a x_a b_a and every
/// generator splits into its t base coordinates. Throws RingMismatch,
/// CoefficientNotInBasisSpan.
schemes::AffinePresentation res_affine(const schemes::AffinePresentation& z, const ExtensionData& ext);

struct BijectionReport {
    std::string carrier;
    std::uint64_t restricted_count = 0;
    std::uint64_t top_count = 0;
    bool bijection = false;
    std::string failure;
};

/// Points of res_affine(Z) over the base ring against Z over the top ring,
/// through x -> sum_a x_a b_a. For field extensions the pair (A, A (x)_k k')
/// is also checked for every given k-algebra A.
std::vector<BijectionReport> check_res_bijection(const schemes::AffinePresentation& z, const ExtensionData& ext,
                                                 const std::vector<arith::AlgebraPtr>& algebras,
                                                 const Guards& guards);

struct CountCell {
    std::string algebra;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool equal() const { return lhs == rhs; }
};

/// Res_{k'/k}(Gr^{R'}_{ne-1}(Z)) against Gr^R_{n-1}(Res(Z)) on every algebra.
std::vector<CountCell> wr_gr_check(const schemes::SchemeSpec& z, const ExtensionData& ext,
                                   const std::vector<arith::AlgebraPtr>& algebras, const Guards& guards);

/// Totally ramified case (k' = k): Gr^{R'}_{ne-1}(Z) against Gr^R_{n-1}(Res(Z)).
std::vector<CountCell> tot_gr_check(const schemes::SchemeSpec& z, const ExtensionData& ext,
                                    const std::vector<arith::AlgebraPtr>& algebras, const Guards& guards);

/// Unramified base change: |Gr^R_{n-1}(Z)(A (x)_k k')| against
/// |Gr^{R'}_{n-1}(Z x S')(A (x)_k k')| with the latter as a k'-algebra.
std::vector<CountCell> bc_check(const schemes::SchemeSpec& z, const ExtensionData& ext,
                                const std::vector<arith::AlgebraPtr>& algebras, const Guards& guards);

}  // namespace greenberg::weil
