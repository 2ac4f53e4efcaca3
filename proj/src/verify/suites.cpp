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


#include "greenberg/verify/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "greenberg/ga/greenberg_algebra.hpp"
#include "greenberg/ga/ideals.hpp"
#include "greenberg/ga/oracle.hpp"
#include "greenberg/schemes/solve.hpp"
#include "greenberg/transform/checks.hpp"
#include "greenberg/transform/transform.hpp"
#include "greenberg/verify/corpus.hpp"
#include "greenberg/weil/extension.hpp"
#include "greenberg/witt/laws.hpp"
#include "greenberg/witt/witt_ring.hpp"

namespace greenberg::verify {

namespace {

using arith::AlgebraPtr;
using ga::GreenbergAlgebra;
using schemes::CoeffRing;

struct Outcome {
    bool ok = false;
    std::string detail;
};

class Recorder {
   public:
    explicit Recorder(CriterionResult& r) : r_(r) {}

    void cell(const std::string& key, const std::function<Outcome()>& f) {
        Cell c{key, CellStatus::Pass, ""};
        try {
            const Outcome o = f();
            c.status = o.ok ? CellStatus::Pass : CellStatus::Fail;
            c.detail = o.detail;
        } catch (const Error& e) {
            c.status = e.code() == ErrorCode::SizeGuard ? CellStatus::Skipped : CellStatus::Fail;
            c.detail = e.what();
        }
        r_.cells.push_back(std::move(c));
    }

   private:
    CriterionResult& r_;
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::string n_str(unsigned n) { return std::to_string(n); }

std::string cell_key(const ga::BaseRingSpec& base, unsigned level, const AlgebraPtr& a) {
    return base.label() + " N=" + n_str(level) + " A=" + a->name();
}

CoeffRing ring_at(const ga::BaseRingSpec& base, unsigned level) {
    return CoeffRing::algebra(GreenbergAlgebra::build(base, level));
}

const std::pair<unsigned, unsigned> kLevelSteps[] = {{0, 1}, {0, 2}, {1, 1}};

// Witt laws, Z/p^n and the V/F identities.
void criterion1(Recorder& rec, std::uint64_t seed) {
    for (const std::uint32_t p : {2u, 3u, 5u})
        for (unsigned n = 1; n <= (p == 2 ? 4u : 3u); ++n)
            rec.cell("ghost identities p=" + n_str(p) + " n=" + n_str(n), [&] {
                const auto laws = witt::build_laws(p, n);
                const std::string msg = witt::check_ghost_identities(*laws);
                return Outcome{msg.empty(), msg.empty() ? "sum, product and negation" : msg};
            });

    for (const std::uint32_t p : {2u, 3u, 5u})
        for (unsigned n = 0; n <= 2; ++n)
            rec.cell("W" + n_str(n + 1) + "(F" + n_str(p) + ") = Z/" + n_str(p) + "^" + n_str(n + 1), [&] {
                const witt::WittRing w(p, n + 1, poly::field_ring(arith::FiniteField::prime(p)));
                const std::uint64_t m = ipow(p, n + 1);
                std::vector<witt::WittRing::Vec> img(m);
                std::set<std::uint64_t> codes;
                for (std::uint64_t j = 0; j < m; ++j) {
                    img[j] = w.from_integer(static_cast<std::int64_t>(j));
                    codes.insert(w.ring().encode(img[j]));
                }
                if (codes.size() != m || w.ring().count() != m) return Outcome{false, "not a bijection"};
                for (std::uint64_t a = 0; a < m; ++a)
                    for (std::uint64_t b = 0; b < m; ++b) {
                        if (w.add(img[a], img[b]) != img[(a + b) % m])
                            return Outcome{false, "sum fails at " + std::to_string(a) + ", " + std::to_string(b)};
                        if (w.mul(img[a], img[b]) != img[(a * b) % m])
                            return Outcome{false, "product fails at " + std::to_string(a) + ", " + std::to_string(b)};
                    }
                return Outcome{true, std::to_string(m * m) + " pairs"};
            });

    const auto algebras = test_algebras();
    for (const auto& a : algebras)
        for (unsigned n = 2; n <= 3; ++n)
            rec.cell("V and F on W" + n_str(n) + "(" + a->name() + ")", [&] {
                const std::uint32_t p = a->base()->characteristic();
                const witt::WittRing w(p, n, a->ring());
                std::vector<witt::WittRing::Vec> all;
                for (std::uint64_t c = 0; c < w.ring().count(); ++c) all.push_back(w.ring().decode(c));
                const auto pw = w.from_integer(p);
                for (const auto& x : all)
                    if (w.mul(pw, x) != w.verschiebung(w.frobenius(x))) return Outcome{false, "p != VF"};
                for (const auto& x : all) {
                    const auto vx = w.verschiebung(x);
                    for (const auto& y : all) {
                        if (w.verschiebung(w.add(x, y)) != w.add(vx, w.verschiebung(y)))
                            return Outcome{false, "V is not additive"};
                        if (w.mul(vx, y) != w.verschiebung(w.mul(x, w.frobenius(y))))
                            return Outcome{false, "V(x)y != V(xF(y))"};
                    }
                }
                return Outcome{true, std::to_string(all.size() * all.size()) + " pairs"};
            });

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
    const std::pair<std::uint32_t, unsigned> sampled[] = {{2, 4}, {3, 3}, {5, 3}};
    for (const auto& [p, n] : sampled) {
        std::vector<std::pair<std::int64_t, std::int64_t>> samples;
        for (int s = 0; s < 64; ++s) samples.emplace_back(dist(rng), dist(rng));
        rec.cell("Z -> W" + n_str(n) + "(F" + n_str(p) + ") on seeded samples", [&] {
            const witt::WittRing w(p, n, poly::field_ring(arith::FiniteField::prime(p)));
            for (const auto& [a, b] : samples) {
                if (w.from_integer(a + b) != w.add(w.from_integer(a), w.from_integer(b)) ||
                    w.from_integer(a * b) != w.mul(w.from_integer(a), w.from_integer(b)))
                    return Outcome{false, "fails at " + std::to_string(a) + ", " + std::to_string(b)};
            }
            return Outcome{true, std::to_string(samples.size()) + " samples"};
        });
    }
}

void criterion2(Recorder& rec, const Guards& guards) {
    for (const auto& base : base_corpus())
        for (unsigned level = 0; level <= 3; ++level)
            for (const auto& a : test_algebras()) {
                if (!a->is_algebra_over(base.k)) continue;
                rec.cell(cell_key(base, level, a), [&] {
                    const auto ga = GreenbergAlgebra::build(base, level);
                    const auto ring = ga->points(*a).tabulate(guards.size_guard);
                    if (ring->size() != ipow(a->size(), level + 1)) return Outcome{false, "wrong number of elements"};
                    const std::string msg = ring->check_axioms();
                    return Outcome{msg.empty(), msg.empty() ? std::to_string(ring->size()) + " elements" : msg};
                });
            }
}

void criterion3(Recorder& rec) {
    for (const auto& base : base_corpus()) {
        if (base.char_case != ga::CharCase::Mixed) continue;
        for (unsigned level = 0; level <= 3; ++level) {
            if (ipow(base.p(), level + 1) > 4096) continue;
            rec.cell(base.label() + " N=" + n_str(level), [&] {
                const auto ga = GreenbergAlgebra::build(base, level);
                const auto cmp = ga::compare_with_oracle(*ga, ga::ga_oracle(base, level));
                const bool ok = cmp.bijective && cmp.isomorphic;
                return Outcome{ok, ok ? std::to_string(cmp.elements) + " elements" : cmp.failure};
            });
        }
    }
}

void criterion4(Recorder& rec, const Guards& guards) {
    for (const auto& base : base_corpus())
        for (unsigned level = 0; level <= 3; ++level)
            for (const auto& a : test_algebras()) {
                if (!a->is_algebra_over(base.k)) continue;
                rec.cell(cell_key(base, level, a), [&] {
                    const auto ga = GreenbergAlgebra::build(base, level);
                    ga::IdealPowers ideals(ga, *a, guards.size_guard);
                    const auto& coords = ideals.coords();
                    const auto& ring = ideals.ring();
                    const std::uint32_t zero = static_cast<std::uint32_t>(coords.encode(coords.zero()));
                    std::ostringstream detail;
                    if (ideals.power(level + 1) != std::vector<std::uint32_t>{zero})
                        return Outcome{false, "M^" + n_str(level + 1) + " has " +
                                                  std::to_string(ideals.power(level + 1).size()) + " elements"};
                    for (unsigned m = 0; m < level; ++m) {
                        const auto kernel = ideals.truncation_kernel(m);
                        const auto& power = ideals.power(m + 1);
                        if (kernel != power)
                            return Outcome{false, "ker(trunc to " + n_str(m) + ") has " +
                                                      std::to_string(kernel.size()) + " elements, M^" + n_str(m + 1) +
                                                      " has " + std::to_string(power.size())};
                    }
                    detail << "|M| = " << ideals.power(1).size();
                    if (level >= 1) {
                        const auto lower = GreenbergAlgebra::build(base, level - 1)->points(*a);
                        std::set<std::uint32_t> image;
                        for (std::uint64_t c = 0; c < lower.count(); ++c) {
                            auto x = lower.decode(c);
                            x.push_back(a->zero());
                            image.insert(ring.mul(ideals.pi(), static_cast<std::uint32_t>(coords.encode(x))));
                        }
                        const auto& m1 = ideals.power(1);
                        if (image.size() != lower.count())
                            return Outcome{false, "pi-multiplication from R_" + n_str(level - 1) +
                                                      " is not injective (" + std::to_string(image.size()) + " of " +
                                                      std::to_string(lower.count()) + ")"};
                        if (!std::equal(image.begin(), image.end(), m1.begin(), m1.end()))
                            return Outcome{false, "pi * R_" + n_str(level - 1) + " has " +
                                                      std::to_string(image.size()) + " elements, M has " +
                                                      std::to_string(m1.size())};
                        for (const auto k : ideals.truncation_kernel(level - 1))
                            if (ring.mul(ideals.pi(), k) != zero)
                                return Outcome{false, "pi does not kill the top coordinate"};
                    }
                    return Outcome{true, detail.str()};
                });
            }
}

void criterion5(Recorder& rec, const Guards& guards) {
    for (const auto& entry : scheme_corpus())
        for (const auto& base : base_corpus())
            for (unsigned level = 0; level <= 2; ++level)
                for (const auto& a : test_algebras()) {
                    if (!a->is_algebra_over(base.k)) continue;
                    rec.cell(entry.spec.name + " over " + cell_key(base, level, a), [&] {
                        const auto z = schemes::instantiate(entry.spec, ring_at(base, level));
                        const auto r = transform::check_rat_pts(z, *a, guards);
                        const bool ok = r.bijection && r.transform_count == r.direct_count;
                        return Outcome{ok, ok ? std::to_string(r.direct_count) + " points" : r.failure};
                    });
                }
}

void criterion6(Recorder& rec) {
    const auto f3 = arith::FiniteField::prime(3);
    const ga::BaseRingSpec base{ga::CharCase::Equal, f3, {}};
    const auto z = schemes::instantiate(square_zero_scheme(), ring_at(base, 1));
    const auto t = transform::gr_transform(z);
    rec.cell("Gr_1(y^2 - pi*x) over F3[[t]]", [&] {
        const auto kd = CoeffRing::field(f3).domain();
        std::vector<poly::RingPoly> expected{poly::parse_polynomial(kd, "y_0^2"),
                                             poly::parse_polynomial(kd, "x_0 - 2*y_0*y_1")};
        std::vector<bool> used(expected.size(), false);
        std::ostringstream got;
        for (const auto& g : t.result.gens) {
            got << (got.tellp() > 0 ? ", " : "") << g.to_string();
            bool matched = false;
            for (std::size_t i = 0; i < expected.size() && !matched; ++i)
                if (!used[i] && (g == expected[i] || g == -expected[i])) used[i] = matched = true;
            if (!matched) return Outcome{false, "unexpected generator " + g.to_string()};
        }
        const bool ok = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
        return Outcome{ok, got.str()};
    });
    rec.cell("Weil restriction along R_1/k equals Gr_1", [&] {
        const auto res = weil::res_affine(z, weil::ext_build_equal(f3, 1, 0, true));
        if (res.vars != t.result.vars) return Outcome{false, "variables differ"};
        if (res.gens != t.result.gens) return Outcome{false, "generators differ"};
        return Outcome{true, std::to_string(res.gens.size()) + " generators, identical terms"};
    });
}

std::string format_point(const std::vector<std::string>& vars, const std::vector<std::uint32_t>& pt) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? ", " : "") << vars.at(i) << "=" << pt[i];
    return "(" + os.str() + ")";
}

void criterion7(Recorder& rec, const Guards& guards) {
    for (const auto& entry : scheme_corpus())
        for (const auto& base : base_corpus())
            for (const auto& [m, i] : kLevelSteps)
                for (const auto& a : test_algebras()) {
                    if (!a->is_algebra_over(base.k)) continue;
                    const bool smooth = entry.smooth(base.p());
                    rec.cell("lift " + entry.spec.name + " over " + base.label() + " (m,i)=(" + n_str(m) + "," +
                                 n_str(i) + ") A=" + a->name(),
                             [&, m = m, i = i] {
                                 const auto z = schemes::instantiate(entry.spec, ring_at(base, m + i));
                                 const auto r = transform::check_surjective_lift(z, m, i, *a, guards);
                                 std::ostringstream os;
                                 os << r.upper_points << " -> " << r.lower_points << ", " << r.lifted << " lifted";
                                 if (!r.well_defined) return Outcome{false, "image outside Gr_m: " + os.str()};
                                 if (smooth && !r.surjective) return Outcome{false, "smooth but " + os.str()};
                                 return Outcome{true, os.str() + (smooth ? "" : " (not smooth)")};
                             });
                }

    rec.cell("x*y-pi over W(F2) (m,i)=(0,1) A=F2 does not lift", [&] {
        const ga::BaseRingSpec base{ga::CharCase::Mixed, arith::FiniteField::prime(2), {}};
        const auto z = schemes::instantiate(corpus_scheme("x*y-pi").spec, ring_at(base, 1));
        const auto f2 = arith::FiniteAlgebra::field(arith::FiniteField::prime(2));
        const auto r = transform::check_surjective_lift(z, 0, 1, *f2, guards);
        if (r.surjective || r.witnesses.empty()) return Outcome{false, "every point lifts"};
        return Outcome{true, "witness " + format_point(r.lower_vars, r.witnesses.front())};
    });

    for (const auto& entry : etale_corpus())
        for (const auto& base : base_corpus()) {
            if (!entry.applies(base.p())) continue;
            for (const auto& [m, i] : kLevelSteps)
                for (const auto& a : test_algebras()) {
                    if (!a->is_algebra_over(base.k)) continue;
                    rec.cell("cartesian " + entry.name + " over " + base.label() + " (m,i)=(" + n_str(m) + "," +
                                 n_str(i) + ") A=" + a->name(),
                             [&, m = m, i = i] {
                                 const auto f = entry.over(ring_at(base, m + i));
                                 const auto r = transform::check_cartesian_etale(f, m, i, *a, guards);
                                 return Outcome{r.bijective, r.bijective ? std::to_string(r.source_points) + " points"
                                                                         : r.failure};
                             });
                }
        }
}

void criterion8(Recorder& rec, const Guards& guards) {
    const auto groups = group_corpus();
    const auto& gm = groups[1];
    const std::pair<std::uint32_t, arith::FieldPtr> fields[] = {
        {2, arith::FiniteField::prime(2)}, {3, arith::FiniteField::prime(3)}, {2, f4()}};
    for (const auto& [p, fq] : fields)
        for (const auto& base : base_corpus()) {
            if (base.p() != p) continue;
            for (unsigned n = 0; n <= 2; ++n)
                rec.cell("Gm units over " + base.label() + " n=" + n_str(n) + " F" + n_str(fq->order()), [&] {
                    const auto a = arith::FiniteAlgebra::field(fq);
                    const auto t = transform::gr_transform(gm.over(ring_at(base, n)).presentation);
                    const auto count = schemes::solve_over_k(t.result, *a, guards).count;
                    const std::uint64_t expected = (fq->order() - 1) * ipow(fq->order(), n);
                    return Outcome{count == expected,
                                   std::to_string(count) + " (expected " + std::to_string(expected) + ")"};
                });
        }

    for (const auto& g : groups)
        for (const auto& base : base_corpus())
            for (const auto& [m, i] : kLevelSteps)
                for (const auto& a : test_algebras()) {
                    if (!a->is_algebra_over(base.k)) continue;
                    rec.cell("kernel " + g.name + " over " + base.label() + " (m,i)=(" + n_str(m) + "," + n_str(i) +
                                 ") A=" + a->name(),
                             [&, m = m, i = i] {
                                 const auto r = transform::ker_change_level_count(g.over(ring_at(base, m + i)), m, i,
                                                                                  *a, guards);
                                 const std::uint64_t expected = ipow(a->size(), i * g.dim);
                                 const bool ok = r.count == expected && r.lie_dim == g.dim;
                                 return Outcome{ok, std::to_string(r.count) + " (expected " +
                                                        std::to_string(expected) + ", d=" + n_str(r.lie_dim) + ")"};
                             });
                }

    for (const auto& g : groups)
        for (const auto& base : base_corpus())
            for (unsigned n = 1; n <= 2; ++n)
                for (const auto& a : test_algebras()) {
                    if (!a->is_algebra_over(base.k) || a->dim() != 1) continue;
                    rec.cell("growth " + g.name + " over " + cell_key(base, n, a), [&] {
                        const auto top =
                            schemes::solve_over_k(transform::gr_transform(g.over(ring_at(base, n)).presentation).result,
                                                  *a, guards)
                                .count;
                        const auto bottom =
                            schemes::solve_over_k(schemes::instantiate(g.spec, CoeffRing::field(base.k)), *a, guards)
                                .count;
                        const std::uint64_t expected = bottom * ipow(a->size(), n * g.dim);
                        return Outcome{top == expected,
                                       std::to_string(top) + " = " + std::to_string(bottom) + " * " +
                                           std::to_string(a->size()) + "^" + n_str(n * g.dim) +
                                           (top == expected ? "" : " fails")};
                    });
                }

    for (const auto& g : groups)
        for (const auto& base : base_corpus())
            for (unsigned n = 0; n <= 2; ++n)
                for (const auto& a : test_algebras()) {
                    if (!a->is_algebra_over(base.k)) continue;
                    rec.cell("group law " + g.name + " over " + cell_key(base, n, a), [&] {
                        const std::string msg = transform::check_group_law(g.over(ring_at(base, n)), *a, guards);
                        return Outcome{msg.empty(), msg.empty() ? "closed, unital, inverses" : msg};
                    });
                }
}

struct NamedExtension {
    std::string name;
    weil::ExtensionData ext;
};

std::string cells_detail(const std::vector<weil::CountCell>& cells, bool& ok) {
    std::ostringstream os;
    ok = !cells.empty();
    for (const auto& c : cells) {
        os << (os.tellp() > 0 ? ", " : "") << c.algebra << ": " << c.lhs << (c.equal() ? " = " : " != ") << c.rhs;
        ok = ok && c.equal();
    }
    return os.str();
}

void criterion9(Recorder& rec, const Guards& guards) {
    const auto f2 = arith::FiniteField::prime(2), f3 = arith::FiniteField::prime(3);
    const auto algebras = weil_algebras();
    const std::vector<schemes::SchemeSpec> schemes_grid{corpus_scheme("A1").spec, corpus_scheme("Gm").spec,
                                                        weil_quadric()};

    std::vector<std::pair<std::string, std::function<weil::ExtensionData()>>> grid;
    for (unsigned n : {1u, 2u})
        grid.emplace_back("Z2[pi]/(pi^2-2) n=" + n_str(n), [=] { return weil::ext_build_mixed(f2, f2, {0, -2}, n); });
    for (unsigned n : {1u, 2u})
        grid.emplace_back("W(F4) n=" + n_str(n), [=] { return weil::ext_build_mixed(f2, f4(), {}, n); });
    grid.emplace_back("W(F4)[pi]/(pi^2-2) n=1", [=] { return weil::ext_build_mixed(f2, f4(), {0, -2}, 1); });
    grid.emplace_back("F2[[s]]/F2[[t]] t=s^2 n=2", [=] { return weil::ext_build_equal(f2, 3, 1, false); });

    // Point bijections.
    std::vector<std::pair<std::string, std::function<weil::ExtensionData()>>> bij = grid;
    bij.emplace_back("F4/F2", [=] { return weil::ext_build_field(f2, f4()); });
    bij.emplace_back("F9/F3", [=] { return weil::ext_build_field(f3, arith::FiniteField::build(3, {1, 0, 1})); });
    bij.emplace_back("F3[[t]]_1/F3", [=] { return weil::ext_build_equal(f3, 1, 0, true); });
    bij.emplace_back("F2[[t]]_2/F2", [=] { return weil::ext_build_equal(f2, 2, 0, true); });
    std::vector<schemes::SchemeSpec> bij_schemes = schemes_grid;
    bij_schemes.push_back(corpus_scheme("x^2+x+1").spec);
    bij_schemes.push_back(corpus_scheme("x*y-pi").spec);
    for (const auto& [name, build] : bij)
        for (const auto& s : bij_schemes)
            rec.cell("res bijection " + s.name + " along " + name, [&] {
                const auto ext = build();
                const auto reports = weil::check_res_bijection(schemes::instantiate(s, ext.top), ext, algebras, guards);
                std::ostringstream os;
                bool ok = true;
                for (const auto& r : reports) {
                    os << (os.tellp() > 0 ? "; " : "") << r.carrier << ": " << r.restricted_count << "/" << r.top_count;
                    if (!r.bijection) {
                        os << " " << r.failure;
                        ok = false;
                    }
                }
                return Outcome{ok, os.str()};
            });

    for (const auto& [name, build] : grid)
        for (const auto& s : schemes_grid) {
            rec.cell("wr-gr " + s.name + " along " + name, [&] {
                bool ok = false;
                const std::string d = cells_detail(weil::wr_gr_check(s, build(), algebras, guards), ok);
                return Outcome{ok, d};
            });
            const auto ext = build();
            if (arith::same_field(ext.base.k(), ext.top.k()))
                rec.cell("tot-gr " + s.name + " along " + name, [&] {
                    bool ok = false;
                    const std::string d = cells_detail(weil::tot_gr_check(s, ext, algebras, guards), ok);
                    return Outcome{ok, d};
                });
            if (ext.type == weil::ExtensionType::Mixed && ext.e == 1)
                rec.cell("base change " + s.name + " along " + name, [&] {
                    bool ok = false;
                    const std::string d = cells_detail(weil::bc_check(s, ext, algebras, guards), ok);
                    return Outcome{ok, d};
                });
        }
}

const char* kTitles[] = {
    "",
    "Witt laws: ghost identities, Z/p^n, Verschiebung and Frobenius",
    "Greenberg algebras satisfy the ring axioms",
    "Greenberg algebras agree with the integer oracle",
    "truncation kernels are ideal powers",
    "rational points of the Greenberg transform",
    "the square-zero example and its Weil restriction",
    "change of level: well-definedness, smooth lifting, etale squares",
    "group schemes: unit counts, kernels, growth, group law",
    "Weil restriction bijections and commutation with the transform",
};

}  // namespace

bool CriterionResult::pass() const { return count(CellStatus::Fail) == 0 && count(CellStatus::Pass) > 0; }

std::size_t CriterionResult::count(CellStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [&](const Cell& c) { return c.status == status; }));
}

CriterionResult run_criterion(int id, const Guards& guards, std::uint64_t seed) {
    if (id < 1 || id > 9) throw Error(ErrorCode::InvalidArgument, "criterion must be 1..9, got " + std::to_string(id));
    CriterionResult r;
    r.id = id;
    r.title = kTitles[id];
    Recorder rec(r);
    switch (id) {
        case 1: criterion1(rec, seed); break;
        case 2: criterion2(rec, guards); break;
        case 3: criterion3(rec); break;
        case 4: criterion4(rec, guards); break;
        case 5: criterion5(rec, guards); break;
        case 6: criterion6(rec); break;
        case 7: criterion7(rec, guards); break;
        case 8: criterion8(rec, guards); break;
        case 9: criterion9(rec, guards); break;
    }
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"witt", "algebra", "ratpts", "levels", "groups", "weil", "all"};
    return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
    static const std::map<std::string, std::vector<int>> suites{
        {"witt", {1}},   {"algebra", {2, 3, 4}}, {"ratpts", {5, 6}},
        {"levels", {7}}, {"groups", {8}},        {"weil", {9}},
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9}},
    };
    const auto it = suites.find(suite);
    if (it == suites.end()) throw Error(ErrorCode::InvalidArgument, "unknown suite \"" + suite + "\"");
    return it->second;
}

nlohmann::json criterion_json(const CriterionResult& r) {
    nlohmann::json j;
    j["criterion"] = r.id;
    j["title"] = r.title;
    j["pass"] = r.pass();
    j["passed"] = r.count(CellStatus::Pass);
    j["failed"] = r.count(CellStatus::Fail);
    j["skipped"] = r.count(CellStatus::Skipped);
    j["cells"] = nlohmann::json::array();
    for (const auto& c : r.cells) {
        const char* status = c.status == CellStatus::Pass ? "pass" : c.status == CellStatus::Fail ? "fail" : "skipped";
        j["cells"].push_back({{"key", c.key}, {"status", status}, {"detail", c.detail}});
    }
    return j;
}

}  // namespace greenberg::verify
