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


#include "greenberg/schemes/solve.hpp"

#include <algorithm>
#include <functional>

#include "greenberg/poly/evaluate.hpp"

namespace greenberg::schemes {

PointCarrier point_carrier(const CoeffRing& ring, const arith::FiniteAlgebra& algebra, const Guards& guards) {
    if (!algebra.is_algebra_over(ring.k()))
        throw Error(ErrorCode::BaseMismatch, algebra.name() + " is not an algebra over " + ring.k()->name());
    if (algebra.size() > guards.size_guard)
        throw Error(ErrorCode::SizeGuard, algebra.name() + " has more than " + std::to_string(guards.size_guard) +
                                              " elements");
    const auto phi = algebra.structure_map(ring.k());
    PointCarrier c;
    const std::uint32_t constants = ring.domain()->ring()->size();
    if (!ring.over_ga()) {
        c.name = algebra.name();
        c.ring = algebra.ring();
        c.lift.assign(phi.begin(), phi.end());
        return c;
    }
    c.coords = std::make_shared<const witt::CoordinateRing>(ring.ga()->points(algebra));
    c.name = c.coords->name();
    c.ring = c.coords->tabulate(guards.size_guard);
    c.lift.resize(constants);
    for (std::uint32_t k = 0; k < constants; ++k)
        c.lift[k] = static_cast<std::uint32_t>(c.coords->encode(ring.ga()->lift_constant(ring.coords(k), phi)));
    return c;
}

SolveResult solve(const AffinePresentation& z, const PointCarrier& carrier, const Guards& guards,
                  const SolveOptions& options) {
    const std::size_t n = z.vars.size();
    const std::uint32_t q = carrier.ring->size();
    std::vector<std::uint32_t> values(n, 0);
    std::vector<bool> assigned(n, false);
    for (std::size_t i = 0; i < options.fixed.size() && i < n; ++i) {
        if (!options.fixed[i]) continue;
        values[i] = *options.fixed[i];
        assigned[i] = true;
    }
    std::size_t free_count = 0;
    for (std::size_t i = 0; i < n; ++i) free_count += assigned[i] ? 0 : 1;

    SolveResult result;
    result.candidates = 1;
    for (std::size_t i = 0; i < free_count; ++i) {
        if (result.candidates > guards.candidate_guard / q + 1) {
            result.candidates = guards.candidate_guard + 1;
            break;
        }
        result.candidates *= q;
    }
    if (result.candidates > guards.candidate_guard)
        throw Error(ErrorCode::SizeGuard, "candidate space " + std::to_string(q) + "^" + std::to_string(free_count) +
                                              " exceeds the guard " + std::to_string(guards.candidate_guard));

    const poly::CompiledSystem system(z.gens, z.vars, carrier.ring,
                                      [&carrier](std::uint32_t c) { return carrier.lift.at(c); });

    // Variable order: repeatedly take the generator with the fewest open
    // variables and assign those next.
    std::vector<std::size_t> order;
    std::vector<bool> placed = assigned;
    std::vector<bool> used(z.gens.size(), false);
    while (true) {
        std::size_t best = z.gens.size(), best_open = n + 1;
        for (std::size_t g = 0; g < z.gens.size(); ++g) {
            if (used[g]) continue;
            std::size_t open = 0;
            for (const auto s : system.support(g)) open += placed[s] ? 0 : 1;
            if (open < best_open) {
                best = g;
                best_open = open;
            }
        }
        if (best == z.gens.size()) break;
        used[best] = true;
        for (const auto s : system.support(best))
            if (!placed[s]) {
                placed[s] = true;
                order.push_back(s);
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!placed[i]) order.push_back(i);

    // checks[d]: generators whose last open variable is order[d]; checks[free] holds the rest.
    std::vector<std::size_t> position(n, 0);
    for (std::size_t d = 0; d < order.size(); ++d) position[order[d]] = d + 1;
    std::vector<std::vector<std::size_t>> checks(order.size() + 1);
    for (std::size_t g = 0; g < z.gens.size(); ++g) {
        std::size_t last = 0;
        for (const auto s : system.support(g)) last = std::max(last, position[s]);
        checks[last].push_back(g);
    }
    const auto passes = [&](std::size_t level) {
        for (const auto g : checks[level])
            if (system.evaluate_one(g, values.data()) != carrier.ring->zero()) return false;
        return true;
    };
    if (!passes(0)) return result;

    std::function<void(std::size_t)> descend = [&](std::size_t d) {
        if (d == order.size()) {
            ++result.count;
            if (options.keep_solutions) result.solutions.push_back(values);
            return;
        }
        const std::size_t v = order[d];
        for (std::uint32_t x = 0; x < q; ++x) {
            values[v] = x;
            if (passes(d + 1)) descend(d + 1);
        }
        values[v] = 0;
    };
    descend(0);
    std::sort(result.solutions.begin(), result.solutions.end());
    return result;
}

SolveResult solve_over_k(const AffinePresentation& z, const arith::FiniteAlgebra& algebra, const Guards& guards,
                         bool keep_solutions) {
    if (z.ring.over_ga()) throw Error(ErrorCode::RingMismatch, "presentation is over " + z.ring.label() + ", not k");
    return solve(z, point_carrier(z.ring, algebra, guards), guards, {keep_solutions, {}});
}

SolveResult solve_over_ga(const AffinePresentation& z, const arith::FiniteAlgebra& algebra, const Guards& guards,
                          bool keep_solutions) {
    if (!z.ring.over_ga()) throw Error(ErrorCode::RingMismatch, "presentation is over k, not a truncated ring");
    return solve(z, point_carrier(z.ring, algebra, guards), guards, {keep_solutions, {}});
}

namespace {

std::vector<poly::RingPoly> ordered_images(const MorphismPresentation& f) {
    std::vector<poly::RingPoly> images;
    for (const auto& v : f.target.vars) images.push_back(f.images.at(v));
    return images;
}

}  // namespace

MorphismEvaluator::MorphismEvaluator(const MorphismPresentation& f, const PointCarrier& carrier)
    : system_(ordered_images(f), f.source.vars, carrier.ring,
              [&carrier](std::uint32_t c) { return carrier.lift.at(c); }) {}

std::vector<std::uint32_t> MorphismEvaluator::operator()(const std::vector<std::uint32_t>& point) const {
    std::vector<std::uint32_t> out(system_.outputs());
    system_.evaluate(point.data(), out.data());
    return out;
}

}  // namespace greenberg::schemes
