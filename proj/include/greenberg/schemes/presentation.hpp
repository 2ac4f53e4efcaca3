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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greenberg/arith/finite_field.hpp"
#include "greenberg/ga/greenberg_algebra.hpp"
#include "greenberg/poly/domain.hpp"
#include "greenberg/poly/polynomial.hpp"

namespace greenberg::schemes {

/// The ring a presentation lives over: the residue field k, or R_N given by
/// a Greenberg algebra. Constants are codes of `domain()`; over R_N a code is
/// the tuple code of the constant's k-coordinates.
class CoeffRing {
   public:
    static CoeffRing field(const arith::FieldPtr& k);
    /// Throws SizeGuard if R_N(k) is too large to tabulate.
    static CoeffRing algebra(const ga::GreenbergAlgebraPtr& algebra);

    bool over_ga() const noexcept { return ga_ != nullptr; }
    const arith::FieldPtr& k() const noexcept { return k_; }
    const ga::GreenbergAlgebraPtr& ga() const noexcept { return ga_; }
    /// N over R_N, 0 over k.
    unsigned level() const noexcept;
    /// Number of k-coordinates of a constant.
    unsigned width() const noexcept { return level() + 1; }
    const poly::RingDomainPtr& domain() const noexcept { return domain_; }

    std::vector<std::uint32_t> coords(std::uint32_t c) const;
    std::uint32_t from_coords(const std::vector<std::uint32_t>& coords) const;
    /// c_0 + c_1 pi + ...; powers pi^j with j > N vanish.
    std::uint32_t pi_polynomial(const std::vector<std::int64_t>& coeffs) const;

    std::string label() const;
    bool operator==(const CoeffRing& other) const;
    bool operator!=(const CoeffRing& other) const { return !(*this == other); }

   private:
    arith::FieldPtr k_;
    ga::GreenbergAlgebraPtr ga_;
    poly::RingDomainPtr domain_;
};

/// Spec(ring[vars]/(gens)).
struct AffinePresentation {
    CoeffRing ring;
    std::vector<std::string> vars;
    std::vector<poly::RingPoly> gens;

    /// Throws InvalidArgument for undeclared or repeated variables and
    /// RingMismatch for generators over another coefficient ring.
    void validate() const;
};

/// source -> target given by the images of the target variables.
struct MorphismPresentation {
    AffinePresentation source;
    AffinePresentation target;
    std::map<std::string, poly::RingPoly> images;

    void validate() const;
};

struct GroupSchemeSpec {
    AffinePresentation presentation;
    /// Identity point: one constant per variable.
    std::vector<std::uint32_t> identity;
    std::optional<MorphismPresentation> law;
};

/// Ring-independent description of a coefficient: sum_j pi_poly[j] pi^j, or
/// explicit k-coordinates (valid only over a ring of matching width).
struct CoefficientSpec {
    std::vector<std::int64_t> pi_poly;
    std::optional<std::vector<std::uint32_t>> coords;
    bool negate = false;
};

struct TermSpec {
    CoefficientSpec coeff;
    std::vector<std::uint32_t> exps;
};

/// A scheme given by integer/pi coefficients, instantiable over any ring.
struct SchemeSpec {
    std::string name;
    std::vector<std::string> vars;
    std::vector<std::vector<TermSpec>> gens;
};

std::uint32_t instantiate(const CoefficientSpec& c, const CoeffRing& ring);
poly::RingPoly instantiate(const std::vector<TermSpec>& terms, const std::vector<std::string>& vars,
                           const CoeffRing& ring);
AffinePresentation instantiate(const SchemeSpec& spec, const CoeffRing& ring);

/// Variables are kept when the two lists are disjoint and prefixed with
/// "l_" / "r_" otherwise. Throws RingMismatch.
AffinePresentation scheme_product(const AffinePresentation& x, const AffinePresentation& y);

/// Coefficients truncated to level M. Throws LevelMismatch if M > N.
AffinePresentation scheme_reduce_level(const AffinePresentation& z, unsigned target_level);
MorphismPresentation morphism_reduce_level(const MorphismPresentation& f, unsigned target_level);

/// Constant truncated from level N to level M.
std::uint32_t truncate_constant(const CoeffRing& from, const CoeffRing& to, std::uint32_t c);

/// dim Lie of the special fiber: #vars - rank of the Jacobian at the
/// identity. Throws IdentityNotOnScheme.
unsigned group_lie_dim(const GroupSchemeSpec& group);

}  // namespace greenberg::schemes
