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


#include "greenberg/transform/transform.hpp"

#include "greenberg/error.hpp"

namespace greenberg::transform {

namespace {

witt::CoordinateLawsPtr level_zero_laws(const poly::RingDomainPtr& fp) {
    auto laws = std::make_shared<witt::CoordinateLaws>();
    laws->width = 1;
    laws->fp = fp;
    const auto x = poly::RingPoly::variable(fp, "x0"), y = poly::RingPoly::variable(fp, "y0");
    laws->add = {x + y};
    laws->mul = {x * y};
    laws->neg = {-x};
    laws->zero = {0};
    laws->one = {1};
    return laws;
}

witt::CoordinateLawsPtr laws_of(const schemes::CoeffRing& ring) {
    if (ring.over_ga()) return ring.ga()->laws();
    const auto fp = schemes::CoeffRing::field(arith::FiniteField::prime(ring.k()->characteristic())).domain();
    return level_zero_laws(fp);
}

}  // namespace

SymbolicPoints::SymbolicPoints(witt::CoordinateLawsPtr laws, poly::RingDomainPtr k_domain)
    : laws_(std::move(laws)), k_(std::move(k_domain)), base_{k_} {
    for (unsigned j = 0; j < laws_->width; ++j) {
        zero_.push_back(poly::RingPoly::integer(k_, laws_->zero[j]));
        one_.push_back(poly::RingPoly::integer(k_, laws_->one[j]));
    }
}

bool SymbolicPoints::is_zero(const Value& a) const {
    return a == zero_;
}

SymbolicPoints::Value SymbolicPoints::add(const Value& a, const Value& b) const {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    const auto& k = k_;
    return witt::apply_law(laws_->add, a, b, base_, [&k](std::uint32_t c) { return poly::RingPoly::integer(k, c); });
}

SymbolicPoints::Value SymbolicPoints::mul(const Value& a, const Value& b) const {
    if (is_zero(a) || is_zero(b)) return zero_;
    if (a == one_) return b;
    if (b == one_) return a;
    const auto& k = k_;
    return witt::apply_law(laws_->mul, a, b, base_, [&k](std::uint32_t c) { return poly::RingPoly::integer(k, c); });
}

SymbolicPoints::Value SymbolicPoints::neg(const Value& a) const {
    if (is_zero(a)) return a;
    const auto& k = k_;
    return witt::apply_law(laws_->neg, a, Value{}, base_, [&k](std::uint32_t c) { return poly::RingPoly::integer(k, c); });
}

SymbolicPoints::Value SymbolicPoints::constant(const std::vector<std::uint32_t>& coords) const {
    Value v;
    for (const auto c : coords) v.push_back(poly::RingPoly::constant(k_, c));
    return v;
}

SymbolicPoints::Value SymbolicPoints::variables(const std::vector<std::string>& names) const {
    Value v;
    for (const auto& n : names) v.push_back(poly::RingPoly::variable(k_, n));
    return v;
}

std::string coordinate_var(const std::string& v, unsigned j) { return v + "_" + std::to_string(j); }

namespace {

struct Expansion {
    SymbolicPoints points;
    std::vector<SymbolicPoints::Value> values;  // per source variable
    const schemes::CoeffRing& ring;

    std::map<std::string, std::size_t> slot;

    /// Coordinates of g evaluated at the symbolic point.
    SymbolicPoints::Value eval(const poly::RingPoly& g) const {
        return poly::evaluate_aligned(g, select(g), points,
                                      [this](std::uint32_t c) { return points.constant(ring.coords(c)); });
    }
    std::vector<SymbolicPoints::Value> select(const poly::RingPoly& g) const;
};

std::vector<SymbolicPoints::Value> Expansion::select(const poly::RingPoly& g) const {
    std::vector<SymbolicPoints::Value> out;
    for (const auto& v : g.vars()) {
        const auto it = slot.find(v);
        if (it == slot.end()) throw Error(ErrorCode::MissingVariable, "undeclared variable " + v);
        out.push_back(values[it->second]);
    }
    return out;
}

Expansion expansion(const schemes::AffinePresentation& z, const schemes::CoeffRing& kring,
                    std::map<std::string, std::vector<std::string>>* var_map) {
    Expansion e{SymbolicPoints(laws_of(z.ring), kring.domain()), {}, z.ring, {}};
    const unsigned width = z.ring.width();
    for (std::size_t i = 0; i < z.vars.size(); ++i) {
        std::vector<std::string> names;
        for (unsigned j = 0; j < width; ++j) names.push_back(coordinate_var(z.vars[i], j));
        e.values.push_back(e.points.variables(names));
        e.slot[z.vars[i]] = i;
        if (var_map) (*var_map)[z.vars[i]] = names;
    }
    return e;
}

}  // namespace

TransformResult gr_transform(const schemes::AffinePresentation& z) {
    z.validate();
    TransformResult r;
    r.source = z;
    r.level = z.ring.level();
    const auto kring = schemes::CoeffRing::field(z.ring.k());
    r.result.ring = kring;
    const Expansion e = expansion(z, kring, &r.var_map);
    for (const auto& v : z.vars)
        for (const auto& name : r.var_map[v]) r.result.vars.push_back(name);
    for (const auto& g : z.gens) {
        const auto coords = e.eval(g);
        r.result.gens.insert(r.result.gens.end(), coords.begin(), coords.end());
    }
    return r;
}

schemes::MorphismPresentation gr_transform_morphism(const schemes::MorphismPresentation& f) {
    f.validate();
    schemes::MorphismPresentation r;
    r.source = gr_transform(f.source).result;
    r.target = gr_transform(f.target).result;
    const Expansion e = expansion(f.source, r.source.ring, nullptr);
    for (const auto& v : f.target.vars) {
        const auto coords = e.eval(f.images.at(v));
        for (unsigned j = 0; j < coords.size(); ++j) r.images.emplace(coordinate_var(v, j), coords[j]);
    }
    return r;
}

schemes::MorphismPresentation change_level(const schemes::AffinePresentation& z, unsigned target_level) {
    if (target_level > z.ring.level())
        throw Error(ErrorCode::LevelMismatch, "change of level from " + std::to_string(z.ring.level()) + " to " +
                                                  std::to_string(target_level));
    schemes::MorphismPresentation r;
    r.source = gr_transform(z).result;
    r.target = gr_transform(schemes::scheme_reduce_level(z, target_level)).result;
    const auto& k = r.source.ring.domain();
    for (const auto& v : r.target.vars) r.images.emplace(v, poly::RingPoly::variable(k, v));
    return r;
}

}  // namespace greenberg::transform
