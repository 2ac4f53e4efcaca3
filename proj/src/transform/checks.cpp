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


#include "greenberg/transform/checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "greenberg/schemes/solve.hpp"
#include "greenberg/transform/transform.hpp"

namespace greenberg::transform {

namespace {

using Point = std::vector<std::uint32_t>;

bool contains(const std::vector<Point>& sorted, const Point& p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
}

std::map<std::string, std::size_t> positions(const std::vector<std::string>& vars) {
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < vars.size(); ++i) pos[vars[i]] = i;
    return pos;
}

void require_level(const schemes::CoeffRing& ring, unsigned level) {
    if (level > ring.level())
        throw Error(ErrorCode::LevelMismatch, "level " + std::to_string(level) + " exceeds " + ring.label());
}

}  // namespace

RatPtsReport check_rat_pts(const schemes::AffinePresentation& z, const arith::FiniteAlgebra& algebra,
                           const Guards& guards) {
    RatPtsReport report;
    const TransformResult t = gr_transform(z);
    const auto kpoints = schemes::point_carrier(t.result.ring, algebra, guards);
    const auto rpoints = schemes::point_carrier(z.ring, algebra, guards);
    const auto st = schemes::solve(t.result, kpoints, guards, {true, {}});
    const auto sz = schemes::solve(z, rpoints, guards, {true, {}});
    report.transform_count = st.count;
    report.direct_count = sz.count;

    const auto pos = positions(t.result.vars);
    const auto to_direct = [&](const Point& s) {
        Point r;
        for (const auto& v : z.vars) {
            Point coords;
            for (const auto& name : t.var_map.at(v)) coords.push_back(s[pos.at(name)]);
            r.push_back(rpoints.coords ? static_cast<std::uint32_t>(rpoints.coords->encode(coords)) : coords[0]);
        }
        return r;
    };
    const auto to_transform = [&](const Point& d) {
        Point r(t.result.vars.size());
        for (std::size_t i = 0; i < z.vars.size(); ++i) {
            const Point coords = rpoints.coords ? rpoints.coords->decode(d[i]) : Point{d[i]};
            const auto& names = t.var_map.at(z.vars[i]);
            for (std::size_t j = 0; j < names.size(); ++j) r[pos.at(names[j])] = coords[j];
        }
        return r;
    };

    std::vector<Point> images;
    for (const auto& s : st.solutions) {
        Point d = to_direct(s);
        if (!contains(sz.solutions, d)) {
            report.failure = "a point of the transform is not a point over R_N(A)";
            return report;
        }
        images.push_back(std::move(d));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        report.failure = "coordinate map is not injective";
        return report;
    }
    for (const auto& d : sz.solutions) {
        if (!contains(st.solutions, to_transform(d))) {
            report.failure = "a point over R_N(A) is missing from the transform";
            return report;
        }
    }
    report.bijection = st.count == sz.count;
    if (!report.bijection) report.failure = "counts differ";
    return report;
}

LiftReport check_surjective_lift(const schemes::AffinePresentation& z, unsigned m, unsigned i,
                                 const arith::FiniteAlgebra& algebra, const Guards& guards) {
    require_level(z.ring, m + i);
    const auto upper = schemes::scheme_reduce_level(z, m + i);
    const auto cl = change_level(upper, m);
    const auto carrier = schemes::point_carrier(cl.source.ring, algebra, guards);
    const auto su = schemes::solve(cl.source, carrier, guards, {true, {}});
    const auto sl = schemes::solve(cl.target, carrier, guards, {true, {}});
    const schemes::MorphismEvaluator project(cl, carrier);

    LiftReport report;
    report.upper_points = su.count;
    report.lower_points = sl.count;
    report.lower_vars = cl.target.vars;
    std::vector<bool> hit(sl.solutions.size(), false);
    for (const auto& s : su.solutions) {
        const Point image = project(s);
        const auto it = std::lower_bound(sl.solutions.begin(), sl.solutions.end(), image);
        if (it == sl.solutions.end() || *it != image) {
            report.well_defined = false;
            continue;
        }
        hit[static_cast<std::size_t>(it - sl.solutions.begin())] = true;
    }
    for (std::size_t k = 0; k < hit.size(); ++k) {
        if (hit[k]) {
            ++report.lifted;
        } else if (report.witnesses.size() < 5) {
            report.witnesses.push_back(sl.solutions[k]);
        }
    }
    report.surjective = report.lifted == report.lower_points;
    return report;
}

CartesianReport check_cartesian_etale(const schemes::MorphismPresentation& f, unsigned m, unsigned i,
                                      const arith::FiniteAlgebra& algebra, const Guards& guards) {
    require_level(f.source.ring, m + i);
    const auto fu = schemes::morphism_reduce_level(f, m + i);
    const auto fl = schemes::morphism_reduce_level(f, m);
    const auto gfu = gr_transform_morphism(fu);
    const auto gfl = gr_transform_morphism(fl);
    const auto cl_source = change_level(fu.source, m);
    const auto cl_target = change_level(fu.target, m);
    const auto carrier = schemes::point_carrier(gfu.source.ring, algebra, guards);

    const auto s = schemes::solve(gfu.source, carrier, guards, {true, {}});
    const auto l = schemes::solve(gfl.source, carrier, guards, {true, {}});
    const auto p = schemes::solve(gfu.target, carrier, guards, {true, {}});
    const schemes::MorphismEvaluator map_up(gfu, carrier), map_low(gfl, carrier);
    const schemes::MorphismEvaluator trunc_source(cl_source, carrier), trunc_target(cl_target, carrier);

    std::map<Point, std::uint64_t> over;  // Gr_m(Z'_m)(A) point -> number of b above it
    for (const auto& b : p.solutions) ++over[trunc_target(b)];
    CartesianReport report;
    report.source_points = s.count;
    for (const auto& a : l.solutions) {
        const auto it = over.find(map_low(a));
        if (it != over.end()) report.fiber_points += it->second;
    }
    std::set<std::pair<Point, Point>> pairs;
    for (const auto& x : s.solutions) {
        Point a = trunc_source(x), b = map_up(x);
        if (!contains(l.solutions, a) || !contains(p.solutions, b) || map_low(a) != trunc_target(b)) {
            report.failure = "a point does not map into the fiber product";
            return report;
        }
        pairs.emplace(std::move(a), std::move(b));
    }
    if (pairs.size() != s.count) {
        report.failure = "map to the fiber product is not injective";
        return report;
    }
    report.bijective = report.source_points == report.fiber_points;
    if (!report.bijective) report.failure = "map to the fiber product is not surjective";
    return report;
}

KernelReport ker_change_level_count(const schemes::GroupSchemeSpec& group, unsigned m, unsigned i,
                                    const arith::FiniteAlgebra& algebra, const Guards& guards) {
    const auto& z = group.presentation;
    require_level(z.ring, m + i);
    const auto upper = schemes::scheme_reduce_level(z, m + i);
    const TransformResult t = gr_transform(upper);
    const auto carrier = schemes::point_carrier(t.result.ring, algebra, guards);
    const auto pos = positions(t.result.vars);

    schemes::SolveOptions options;
    options.fixed.assign(t.result.vars.size(), std::nullopt);
    for (std::size_t v = 0; v < z.vars.size(); ++v) {
        const auto coords = upper.ring.coords(schemes::truncate_constant(z.ring, upper.ring, group.identity.at(v)));
        const auto& names = t.var_map.at(z.vars[v]);
        for (unsigned j = 0; j <= m; ++j) options.fixed[pos.at(names[j])] = carrier.lift.at(coords[j]);
    }
    KernelReport report;
    report.count = schemes::solve(t.result, carrier, guards, options).count;
    report.lie_dim = schemes::group_lie_dim(group);
    report.expected = 1;
    for (unsigned k = 0; k < i * report.lie_dim; ++k) report.expected *= algebra.size();
    return report;
}

std::string check_group_law(const schemes::GroupSchemeSpec& group, const arith::FiniteAlgebra& algebra,
                            const Guards& guards) {
    if (!group.law) return "no group law given";
    const auto& z = group.presentation;
    const auto carrier = schemes::point_carrier(z.ring, algebra, guards);
    const auto points = schemes::solve(z, carrier, guards, {true, {}}).solutions;
    const schemes::MorphismEvaluator law(*group.law, carrier);
    Point e;
    for (const auto c : group.identity) e.push_back(carrier.lift.at(c));
    if (!contains(points, e)) return "identity is not a point";
    const auto op = [&](const Point& a, const Point& b) {
        Point ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        return law(ab);
    };
    for (const auto& a : points) {
        if (op(e, a) != a || op(a, e) != a) return "identity law fails";
        bool inverse = false;
        for (const auto& b : points) {
            const Point c = op(a, b);
            if (!contains(points, c)) return "law does not preserve the scheme";
            inverse = inverse || c == e;
        }
        if (!inverse) return "an element has no inverse";
    }
    return "";
}

}  // namespace greenberg::transform
