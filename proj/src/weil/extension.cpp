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


#include "greenberg/weil/extension.hpp"

#include <algorithm>
#include <map>

#include "greenberg/poly/evaluate.hpp"
#include "greenberg/schemes/solve.hpp"
#include "greenberg/transform/transform.hpp"

namespace greenberg::weil {

namespace {

using Point = std::vector<std::uint32_t>;

// Fills `decompose` by enumerating sum_a embed(x_a) b_a over all base tuples,
// then the multiplication table.
void finish(ExtensionData& e) {
    const arith::FiniteRing& top = *e.top.domain()->ring();
    const arith::FiniteRing& base = *e.base.domain()->ring();
    e.rank = static_cast<unsigned>(e.basis.size());
    const arith::TupleCodec codec(base.size(), e.rank);
    if (codec.count() != top.size())
        throw Error(ErrorCode::DecompositionFailure, e.top.label() + " is not free of rank " + std::to_string(e.rank) +
                                                         " over " + e.base.label());
    e.decompose.assign(top.size(), {});
    for (std::uint64_t code = 0; code < codec.count(); ++code) {
        const auto x = codec.decode(code);
        std::uint32_t v = top.zero();
        for (unsigned a = 0; a < e.rank; ++a) v = top.add(v, top.mul(e.embed.at(x[a]), e.basis[a]));
        if (!e.decompose[v].empty())
            throw Error(ErrorCode::DecompositionFailure, "basis of " + e.top.label() + " is not independent over " +
                                                             e.base.label());
        e.decompose[v] = x;
    }
    for (std::uint32_t a = 0; a < base.size(); ++a)
        for (std::uint32_t b = 0; b < base.size(); ++b)
            if (e.embed[base.add(a, b)] != top.add(e.embed[a], e.embed[b]) ||
                e.embed[base.mul(a, b)] != top.mul(e.embed[a], e.embed[b]))
                throw Error(ErrorCode::NotAnExtension, "base map is not a ring homomorphism");
    e.table.assign(e.rank, std::vector<std::vector<std::uint32_t>>(e.rank));
    for (unsigned a = 0; a < e.rank; ++a)
        for (unsigned b = 0; b < e.rank; ++b) e.table[a][b] = e.decompose[top.mul(e.basis[a], e.basis[b])];
}

std::string power_label(const std::string& x, unsigned a) {
    if (a == 0) return "1";
    return a == 1 ? x : x + "^" + std::to_string(a);
}

}  // namespace

ExtensionData ext_build_field(const arith::FieldPtr& k, const arith::FieldPtr& k_top) {
    const auto emb = arith::find_embedding(k, k_top);
    if (!emb || k_top->degree() % k->degree() != 0)
        throw Error(ErrorCode::NotAnExtension, k_top->name() + " does not contain " + k->name());
    ExtensionData e;
    e.type = ExtensionType::Field;
    e.base = schemes::CoeffRing::field(k);
    e.top = schemes::CoeffRing::field(k_top);
    e.embed = emb->image;
    const unsigned t = k_top->degree() / k->degree();
    for (unsigned a = 0; a < t; ++a) {
        e.basis.push_back(k_top->pow(k_top->generator(), a));
        e.basis_labels.push_back(power_label("u", a));
    }
    e.gamma = t;
    finish(e);
    return e;
}

ExtensionData ext_build_mixed(const arith::FieldPtr& k, const arith::FieldPtr& k_top,
                              const std::vector<std::int64_t>& eisenstein, unsigned n) {
    if (!k->is_prime_field())
        throw Error(ErrorCode::NotPrimeFieldBase, "mixed restriction needs a prime residue field at the base, got " +
                                                      k->name());
    if (k_top->characteristic() != k->characteristic())
        throw Error(ErrorCode::NotAnExtension, k_top->name() + " has another characteristic");
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    const ga::BaseRingSpec base{ga::CharCase::Mixed, k, {}};
    const ga::BaseRingSpec top{ga::CharCase::Mixed, k_top, eisenstein};
    ga::validate(top);
    ExtensionData e;
    e.type = ExtensionType::Mixed;
    e.n = n;
    e.e = top.rho();
    e.gamma = k_top->degree();
    const auto base_ga = ga::GreenbergAlgebra::build(base, n - 1);
    const auto top_ga = ga::GreenbergAlgebra::build(top, n * e.e - 1);
    e.base = schemes::CoeffRing::algebra(base_ga);
    e.top = schemes::CoeffRing::algebra(top_ga);

    // Z/p^n -> both rings through the integers.
    std::uint64_t pn = 1;
    for (unsigned i = 0; i < n; ++i) pn *= k->characteristic();
    e.embed.assign(pn, 0);
    for (std::uint64_t j = 0; j < pn; ++j) {
        const auto m = static_cast<std::int64_t>(j);
        e.embed[e.base.from_coords(base_ga->k_points().from_integer(m))] =
            e.top.from_coords(top_ga->k_points().from_integer(m));
    }
    const arith::FiniteRing& ring = *e.top.domain()->ring();
    std::vector<std::uint32_t> teich(top_ga->width(), 0), pi = top_ga->pi_coords();
    teich[0] = k_top->generator();
    const std::uint32_t u = e.top.from_coords(teich), p = e.top.from_coords(pi);
    for (unsigned a = 0; a < k_top->degree(); ++a)
        for (unsigned b = 0; b < e.e; ++b) {
            e.basis.push_back(ring.mul(ring.pow(u, a), ring.pow(p, b)));
            const std::string ua = power_label("[u]", a), pb = power_label("pi", b);
            e.basis_labels.push_back(a == 0 ? pb : b == 0 ? ua : ua + "*" + pb);
        }
    finish(e);
    return e;
}

ExtensionData ext_build_equal(const arith::FieldPtr& k, unsigned top_level, unsigned base_level, bool over_k) {
    const unsigned base_width = over_k ? 1 : base_level + 1;
    if ((top_level + 1) % base_width != 0)
        throw Error(ErrorCode::PatternMismatch, "level " + std::to_string(top_level) + " is not (M+1)e-1 for M = " +
                                                    std::to_string(base_width - 1));
    const ga::BaseRingSpec spec{ga::CharCase::Equal, k, {}};
    ExtensionData e;
    e.type = ExtensionType::Equal;
    e.e = (top_level + 1) / base_width;
    e.n = base_width;
    e.base = over_k ? schemes::CoeffRing::field(k)
                    : schemes::CoeffRing::algebra(ga::GreenbergAlgebra::build(spec, base_level));
    e.top = schemes::CoeffRing::algebra(ga::GreenbergAlgebra::build(spec, top_level));
    const std::uint32_t base_size = e.base.domain()->ring()->size();
    e.embed.resize(base_size);
    for (std::uint32_t c = 0; c < base_size; ++c) {
        const auto coords = e.base.coords(c);
        std::vector<std::uint32_t> image(top_level + 1, 0);
        for (unsigned j = 0; j < coords.size(); ++j) image[j * e.e] = coords[j];
        e.embed[c] = e.top.from_coords(image);
    }
    for (unsigned b = 0; b < e.e; ++b) {
        std::vector<std::uint32_t> coords(top_level + 1, 0);
        coords[b] = 1;
        e.basis.push_back(e.top.from_coords(coords));
        e.basis_labels.push_back(power_label("pi", b));
    }
    finish(e);
    return e;
}

std::string res_var(const std::string& v, unsigned a) { return v + "_" + std::to_string(a); }

namespace {

// base[vars]^t with multiplication through the table.
struct BasisCarrier {
    using Value = std::vector<poly::RingPoly>;
    const ExtensionData* ext;
    poly::RingDomainPtr d;

    Value zero() const { return Value(ext->rank, poly::RingPoly(d)); }
    Value one() const { return constant(ext->top.domain()->one()); }
    Value constant(std::uint32_t c) const {
        if (c >= ext->decompose.size() || ext->decompose[c].size() != ext->rank)
            throw Error(ErrorCode::CoefficientNotInBasisSpan, "coefficient " + std::to_string(c));
        Value v;
        for (const auto x : ext->decompose[c]) v.push_back(poly::RingPoly::constant(d, x));
        return v;
    }
    Value add(const Value& a, const Value& b) const {
        Value r(a.size(), poly::RingPoly(d));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    Value neg(const Value& a) const {
        Value r;
        for (const auto& x : a) r.push_back(-x);
        return r;
    }
    Value mul(const Value& a, const Value& b) const {
        Value r = zero();
        for (unsigned i = 0; i < ext->rank; ++i) {
            if (a[i].is_zero()) continue;
            for (unsigned j = 0; j < ext->rank; ++j) {
                if (b[j].is_zero()) continue;
                const poly::RingPoly prod = a[i] * b[j];
                const auto& entry = ext->table[i][j];
                for (unsigned c = 0; c < ext->rank; ++c)
                    if (!d->is_zero(entry[c])) r[c] += prod.scale(entry[c]);
            }
        }
        return r;
    }
};

}  // namespace

schemes::AffinePresentation res_affine(const schemes::AffinePresentation& z, const ExtensionData& ext) {
    z.validate();
    if (z.ring != ext.top)
        throw Error(ErrorCode::RingMismatch, "scheme is over " + z.ring.label() + ", extension top is " +
                                                 ext.top.label());
    const BasisCarrier carrier{&ext, ext.base.domain()};
    schemes::AffinePresentation r{ext.base, {}, {}};
    std::map<std::string, BasisCarrier::Value> values;
    for (const auto& v : z.vars) {
        BasisCarrier::Value x;
        for (unsigned a = 0; a < ext.rank; ++a) {
            r.vars.push_back(res_var(v, a));
            x.push_back(poly::RingPoly::variable(carrier.d, res_var(v, a)));
        }
        values.emplace(v, std::move(x));
    }
    for (const auto& g : z.gens) {
        std::vector<BasisCarrier::Value> aligned;
        for (const auto& v : g.vars()) aligned.push_back(values.at(v));
        const auto coords =
            poly::evaluate_aligned(g, aligned, carrier, [&carrier](std::uint32_t c) { return carrier.constant(c); });
        r.gens.insert(r.gens.end(), coords.begin(), coords.end());
    }
    return r;
}

namespace {

// Compares restricted points over `base` with Z-points over `top`, where
// embed maps base elements to top elements and basis lists the b_a in top.
BijectionReport compare_points(const schemes::AffinePresentation& res, const schemes::AffinePresentation& z,
                               const schemes::PointCarrier& base, const schemes::PointCarrier& top,
                               const std::vector<std::uint32_t>& embed, const std::vector<std::uint32_t>& basis,
                               const Guards& guards) {
    BijectionReport report;
    report.carrier = base.name + " / " + top.name;
    const unsigned t = static_cast<unsigned>(basis.size());
    const arith::FiniteRing& tr = *top.ring;
    const arith::TupleCodec codec(base.ring->size(), t);
    std::vector<Point> split(tr.size());
    for (std::uint64_t code = 0; code < codec.count(); ++code) {
        const auto x = codec.decode(code);
        std::uint32_t v = tr.zero();
        for (unsigned a = 0; a < t; ++a) v = tr.add(v, tr.mul(embed.at(x[a]), basis[a]));
        split[v] = x;
    }
    const auto sr = schemes::solve(res, base, guards, {true, {}});
    const auto sz = schemes::solve(z, top, guards, {true, {}});
    report.restricted_count = sr.count;
    report.top_count = sz.count;
    std::vector<Point> images;
    for (const auto& s : sr.solutions) {
        Point y;
        for (std::size_t v = 0; v < z.vars.size(); ++v) {
            std::uint32_t acc = tr.zero();
            for (unsigned a = 0; a < t; ++a) acc = tr.add(acc, tr.mul(embed.at(s[v * t + a]), basis[a]));
            y.push_back(acc);
        }
        if (!std::binary_search(sz.solutions.begin(), sz.solutions.end(), y)) {
            report.failure = "a restricted point does not give a point over the top";
            return report;
        }
        images.push_back(std::move(y));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        report.failure = "basis expansion is not injective on points";
        return report;
    }
    for (const auto& y : sz.solutions) {
        Point s;
        for (const auto c : y) {
            if (split[c].size() != t) {
                report.failure = "top element outside the basis span";
                return report;
            }
            s.insert(s.end(), split[c].begin(), split[c].end());
        }
        if (!std::binary_search(sr.solutions.begin(), sr.solutions.end(), s)) {
            report.failure = "a top point is missing from the restriction";
            return report;
        }
    }
    report.bijection = sr.count == sz.count;
    if (!report.bijection) report.failure = "counts differ";
    return report;
}

schemes::PointCarrier constants_carrier(const schemes::CoeffRing& ring) {
    schemes::PointCarrier c;
    c.name = ring.label();
    c.ring = ring.domain()->ring();
    c.lift.resize(c.ring->size());
    for (std::uint32_t x = 0; x < c.ring->size(); ++x) c.lift[x] = x;
    return c;
}

}  // namespace

std::vector<BijectionReport> check_res_bijection(const schemes::AffinePresentation& z, const ExtensionData& ext,
                                                 const std::vector<arith::AlgebraPtr>& algebras,
                                                 const Guards& guards) {
    const auto res = res_affine(z, ext);
    std::vector<BijectionReport> out;
    out.push_back(compare_points(res, z, constants_carrier(ext.base), constants_carrier(ext.top), ext.embed,
                                 ext.basis, guards));
    if (ext.type != ExtensionType::Field) return out;
    const auto& k = ext.base.k();
    const auto& k_top = ext.top.k();
    const auto emb = arith::find_embedding(k, k_top);
    for (const auto& a : algebras) {
        if (!arith::same_field(a->base(), k)) continue;
        const auto a_top = arith::FiniteAlgebra::base_change(*a, k_top, guards.size_guard);
        const auto base = schemes::point_carrier(ext.base, *a, guards);
        const auto top = schemes::point_carrier(ext.top, *a_top, guards);
        std::vector<std::uint32_t> embed(a->size());
        for (std::uint32_t x = 0; x < a->size(); ++x) {
            auto c = a->coords(x);
            for (auto& v : c) v = (*emb)(v);
            embed[x] = a_top->from_coords(c);
        }
        std::vector<std::uint32_t> basis;
        for (const auto b : ext.basis) basis.push_back(a_top->from_base(b));
        out.push_back(compare_points(res, z, base, top, embed, basis, guards));
    }
    return out;
}

namespace {

std::uint64_t count_over_k(const schemes::AffinePresentation& z, const arith::FiniteAlgebra& a, const Guards& g) {
    return schemes::solve_over_k(z, a, g).count;
}

}  // namespace

std::vector<CountCell> wr_gr_check(const schemes::SchemeSpec& z, const ExtensionData& ext,
                                   const std::vector<arith::AlgebraPtr>& algebras, const Guards& guards) {
    const auto z_top = schemes::instantiate(z, ext.top);
    const auto residue = ext_build_field(ext.base.k(), ext.top.k());
    const auto lhs = res_affine(transform::gr_transform(z_top).result, residue);
    const auto rhs = transform::gr_transform(res_affine(z_top, ext)).result;
    std::vector<CountCell> cells;
    for (const auto& a : algebras) {
        if (!a->is_algebra_over(ext.base.k())) continue;
        cells.push_back({a->name(), count_over_k(lhs, *a, guards), count_over_k(rhs, *a, guards)});
    }
    return cells;
}

std::vector<CountCell> tot_gr_check(const schemes::SchemeSpec& z, const ExtensionData& ext,
                                    const std::vector<arith::AlgebraPtr>& algebras, const Guards& guards) {
    if (!arith::same_field(ext.base.k(), ext.top.k()))
        throw Error(ErrorCode::InvalidArgument, "extension is not totally ramified");
    const auto z_top = schemes::instantiate(z, ext.top);
    const auto lhs = transform::gr_transform(z_top).result;
    const auto rhs = transform::gr_transform(res_affine(z_top, ext)).result;
    std::vector<CountCell> cells;
    for (const auto& a : algebras) {
        if (!a->is_algebra_over(ext.base.k())) continue;
        cells.push_back({a->name(), count_over_k(lhs, *a, guards), count_over_k(rhs, *a, guards)});
    }
    return cells;
}

std::vector<CountCell> bc_check(const schemes::SchemeSpec& z, const ExtensionData& ext,
                                const std::vector<arith::AlgebraPtr>& algebras, const Guards& guards) {
    if (ext.type != ExtensionType::Mixed || ext.e != 1)
        throw Error(ErrorCode::InvalidArgument, "base change check needs an unramified mixed extension");
    const auto lhs = transform::gr_transform(schemes::instantiate(z, ext.base)).result;
    const auto rhs = transform::gr_transform(schemes::instantiate(z, ext.top)).result;
    std::vector<CountCell> cells;
    for (const auto& a : algebras) {
        if (!arith::same_field(a->base(), ext.base.k())) continue;
        const auto a_top = arith::FiniteAlgebra::base_change(*a, ext.top.k(), guards.size_guard);
        cells.push_back({a_top->name(), count_over_k(lhs, *a_top, guards), count_over_k(rhs, *a_top, guards)});
    }
    return cells;
}

}  // namespace greenberg::weil
