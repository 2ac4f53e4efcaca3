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


#include "greenberg/schemes/presentation.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "greenberg/error.hpp"
#include "greenberg/poly/evaluate.hpp"

namespace greenberg::schemes {

namespace {

std::string field_key(const arith::FiniteField& k) {
    std::string key = std::to_string(k.characteristic()) + ":";
    for (const auto c : k.modulus()) key += std::to_string(c) + ",";
    return key;
}

}  // namespace

CoeffRing CoeffRing::field(const arith::FieldPtr& k) {
    static std::mutex mutex;
    static std::map<std::string, poly::RingDomainPtr> domains;
    CoeffRing r;
    r.k_ = k;
    std::lock_guard<std::mutex> lock(mutex);
    auto& d = domains[field_key(*k)];
    if (!d) d = poly::RingDomain::of_field(k);
    r.domain_ = d;
    return r;
}

CoeffRing CoeffRing::algebra(const ga::GreenbergAlgebraPtr& algebra) {
    CoeffRing r;
    r.k_ = algebra->k();
    r.ga_ = algebra;
    r.domain_ = algebra->constants();
    return r;
}

unsigned CoeffRing::level() const noexcept { return ga_ ? ga_->level() : 0; }

std::vector<std::uint32_t> CoeffRing::coords(std::uint32_t c) const {
    if (!ga_) return {c};
    return arith::TupleCodec(k_->order(), width()).decode(c);
}

std::uint32_t CoeffRing::from_coords(const std::vector<std::uint32_t>& coords) const {
    if (coords.size() != width())
        throw Error(ErrorCode::LengthMismatch, "constant over " + label() + " needs " + std::to_string(width()) +
                                                   " coordinates");
    for (const auto c : coords)
        if (c >= k_->order()) throw Error(ErrorCode::InvalidArgument, "coordinate outside " + k_->name());
    if (!ga_) return coords[0];
    return static_cast<std::uint32_t>(arith::TupleCodec(k_->order(), width()).encode(coords));
}

std::uint32_t CoeffRing::pi_polynomial(const std::vector<std::int64_t>& coeffs) const {
    if (!ga_) return coeffs.empty() ? domain_->zero() : domain_->from_integer(coeffs[0]);
    std::vector<std::int64_t> kept(coeffs.begin(), coeffs.begin() + std::min<std::size_t>(coeffs.size(), width()));
    return from_coords(ga_->constant(kept));
}

std::string CoeffRing::label() const {
    if (!ga_) return k_->name();
    return "R" + std::to_string(level()) + " of " + ga_->base().label();
}

bool CoeffRing::operator==(const CoeffRing& other) const {
    if (over_ga() != other.over_ga()) return false;
    if (!ga_) return arith::same_field(k_, other.k_);
    return ga_->base() == other.ga_->base() && ga_->level() == other.ga_->level();
}

void AffinePresentation::validate() const {
    const std::set<std::string> declared(vars.begin(), vars.end());
    if (declared.size() != vars.size()) throw Error(ErrorCode::InvalidArgument, "repeated variable name");
    for (const auto& g : gens) {
        if (g.domain() != ring.domain() && !(*g.domain() == *ring.domain()))
            throw Error(ErrorCode::RingMismatch, "generator over " + g.domain()->name() + ", expected " + ring.label());
        for (const auto& v : g.vars())
            if (!declared.count(v)) throw Error(ErrorCode::InvalidArgument, "undeclared variable " + v);
    }
}

void MorphismPresentation::validate() const {
    source.validate();
    target.validate();
    if (source.ring != target.ring) throw Error(ErrorCode::RingMismatch, "source and target over different rings");
    const std::set<std::string> declared(source.vars.begin(), source.vars.end());
    for (const auto& v : target.vars) {
        const auto it = images.find(v);
        if (it == images.end()) throw Error(ErrorCode::InvalidArgument, "no image for target variable " + v);
        for (const auto& s : it->second.vars())
            if (!declared.count(s)) throw Error(ErrorCode::InvalidArgument, "image mentions undeclared " + s);
    }
}

std::uint32_t instantiate(const CoefficientSpec& c, const CoeffRing& ring) {
    const std::uint32_t v = c.coords ? ring.from_coords(*c.coords) : ring.pi_polynomial(c.pi_poly);
    return c.negate ? ring.domain()->neg(v) : v;
}

poly::RingPoly instantiate(const std::vector<TermSpec>& terms, const std::vector<std::string>& vars,
                           const CoeffRing& ring) {
    std::vector<std::pair<poly::Exponents, std::uint32_t>> out;
    for (const auto& t : terms) {
        if (t.exps.size() != vars.size())
            throw Error(ErrorCode::InvalidArgument, "term has " + std::to_string(t.exps.size()) + " exponents for " +
                                                        std::to_string(vars.size()) + " variables");
        out.emplace_back(t.exps, instantiate(t.coeff, ring));
    }
    return poly::RingPoly::from_terms(ring.domain(), vars, std::move(out));
}

AffinePresentation instantiate(const SchemeSpec& spec, const CoeffRing& ring) {
    AffinePresentation z{ring, spec.vars, {}};
    for (const auto& g : spec.gens) z.gens.push_back(instantiate(g, spec.vars, ring));
    z.validate();
    return z;
}

AffinePresentation scheme_product(const AffinePresentation& x, const AffinePresentation& y) {
    if (x.ring != y.ring) throw Error(ErrorCode::RingMismatch, x.ring.label() + " vs " + y.ring.label());
    const std::set<std::string> left(x.vars.begin(), x.vars.end());
    const bool clash = std::any_of(y.vars.begin(), y.vars.end(), [&](const auto& v) { return left.count(v) > 0; });
    AffinePresentation r{x.ring, {}, {}};
    std::map<std::string, std::string> lnames, rnames;
    for (const auto& v : x.vars) r.vars.push_back(lnames[v] = clash ? "l_" + v : v);
    for (const auto& v : y.vars) r.vars.push_back(rnames[v] = clash ? "r_" + v : v);
    for (const auto& g : x.gens) r.gens.push_back(poly::rename(g, lnames));
    for (const auto& g : y.gens) r.gens.push_back(poly::rename(g, rnames));
    return r;
}

std::uint32_t truncate_constant(const CoeffRing& from, const CoeffRing& to, std::uint32_t c) {
    auto coords = from.coords(c);
    if (to.width() > coords.size()) throw Error(ErrorCode::LevelMismatch, "cannot raise the level of a constant");
    coords.resize(to.width());
    return to.from_coords(coords);
}

namespace {

CoeffRing reduced_ring(const CoeffRing& ring, unsigned target_level) {
    if (target_level > ring.level())
        throw Error(ErrorCode::LevelMismatch, "cannot reduce " + ring.label() + " to level " +
                                                  std::to_string(target_level));
    if (!ring.over_ga() || target_level == ring.level()) return ring;
    return CoeffRing::algebra(ga::GreenbergAlgebra::build(ring.ga()->base(), target_level));
}

poly::RingPoly reduce_poly(const poly::RingPoly& g, const CoeffRing& from, const CoeffRing& to) {
    std::vector<std::pair<poly::Exponents, std::uint32_t>> terms;
    for (const auto& t : g.terms()) terms.emplace_back(t.exps, truncate_constant(from, to, t.coeff));
    return poly::RingPoly::from_terms(to.domain(), g.vars(), std::move(terms));
}

}  // namespace

AffinePresentation scheme_reduce_level(const AffinePresentation& z, unsigned target_level) {
    const CoeffRing to = reduced_ring(z.ring, target_level);
    AffinePresentation r{to, z.vars, {}};
    for (const auto& g : z.gens) r.gens.push_back(reduce_poly(g, z.ring, to));
    return r;
}

MorphismPresentation morphism_reduce_level(const MorphismPresentation& f, unsigned target_level) {
    MorphismPresentation r{scheme_reduce_level(f.source, target_level), scheme_reduce_level(f.target, target_level), {}};
    for (const auto& [v, img] : f.images) r.images.emplace(v, reduce_poly(img, f.source.ring, r.source.ring));
    return r;
}

unsigned group_lie_dim(const GroupSchemeSpec& group) {
    const AffinePresentation& z = group.presentation;
    if (group.identity.size() != z.vars.size())
        throw Error(ErrorCode::IdentityNotOnScheme, "identity has the wrong number of coordinates");
    const auto identity_lift = [](std::uint32_t c) { return c; };
    const poly::CompiledSystem on_scheme(z.gens, z.vars, z.ring.domain()->ring(), identity_lift);
    for (std::size_t i = 0; i < z.gens.size(); ++i)
        if (on_scheme.evaluate_one(i, group.identity.data()) != z.ring.domain()->zero())
            throw Error(ErrorCode::IdentityNotOnScheme, "generator " + z.gens[i].to_string() + " is nonzero at the identity");

    // Jacobian of the special fiber: coefficients and the identity reduced to k.
    const arith::FiniteField& k = *z.ring.k();
    const auto kring = poly::field_ring(z.ring.k());
    const auto residue = [&z](std::uint32_t c) { return z.ring.coords(c)[0]; };
    std::vector<std::uint32_t> point;
    for (const auto c : group.identity) point.push_back(residue(c));
    std::vector<std::vector<std::uint32_t>> jac;
    for (const auto& g : z.gens) {
        std::vector<poly::RingPoly> row;
        for (const auto& v : z.vars) row.push_back(g.derivative(v));
        const poly::CompiledSystem sys(row, z.vars, kring, residue);
        std::vector<std::uint32_t> values(z.vars.size());
        sys.evaluate(point.data(), values.data());
        jac.push_back(values);
    }
    // Rank by Gaussian elimination over k.
    unsigned rank = 0;
    const std::size_t cols = z.vars.size();
    for (std::size_t col = 0; col < cols && rank < jac.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < jac.size() && jac[pivot][col] == 0) ++pivot;
        if (pivot == jac.size()) continue;
        std::swap(jac[pivot], jac[rank]);
        const auto inv = k.inv(jac[rank][col]);
        for (auto& x : jac[rank]) x = k.mul(x, inv);
        for (std::size_t r = 0; r < jac.size(); ++r) {
            if (r == rank || jac[r][col] == 0) continue;
            const auto f = jac[r][col];
            for (std::size_t c = 0; c < cols; ++c) jac[r][c] = k.sub(jac[r][c], k.mul(f, jac[rank][c]));
        }
        ++rank;
    }
    return static_cast<unsigned>(cols - rank);
}

}  // namespace greenberg::schemes
