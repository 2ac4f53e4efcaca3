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


// greenberg: command-line front end.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "greenberg/io/json_io.hpp"
#include "greenberg/schemes/solve.hpp"
#include "greenberg/transform/checks.hpp"
#include "greenberg/transform/transform.hpp"
#include "greenberg/verify/suites.hpp"
#include "greenberg/weil/extension.hpp"
#include "greenberg/witt/laws.hpp"

using namespace greenberg;
using io::Json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string config;
    std::string cache;
    std::string output;
    std::optional<std::uint64_t> size_guard, candidate_guard, term_guard, seed;

    std::string base;
    std::optional<unsigned> level;
    std::string scheme, algebra, extension, morphism, group;
    std::vector<std::string> algebras;
    unsigned to = 0, m = 0, i = 1;
    bool list = false;
    std::string suite;
};

struct Context {
    io::JobConfig config;
    std::string output;
};

Context setup(const Options& o) {
    Context c;
    if (!o.config.empty()) {
        const auto doc = io::Document::load(o.config);
        c.config = io::parse_config(io::Node(doc));
    }
    if (o.size_guard) c.config.guards.size_guard = *o.size_guard;
    if (o.candidate_guard) c.config.guards.candidate_guard = *o.candidate_guard;
    if (o.term_guard) c.config.guards.term_guard = *o.term_guard;
    if (o.seed) c.config.seed = *o.seed;
    if (!o.cache.empty()) c.config.cache = o.cache;
    if (c.config.cache) witt::set_cache_dir(*c.config.cache);
    poly::set_term_guard(c.config.guards.term_guard);
    c.output = !o.output.empty() ? o.output : c.config.output.value_or("");
    return c;
}

void emit(const Context& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + c.output);
    out << text;
}

io::Document load(const std::string& path, const char* what) {
    if (path.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing --") + what);
    return io::Document::load(path);
}

// --base/--level override, else the ring stored in the scheme file.
std::optional<schemes::CoeffRing> ring_option(const Options& o, std::optional<unsigned> level) {
    if (o.base.empty()) return std::nullopt;
    if (!level) throw Error(ErrorCode::InvalidArgument, "--base needs --level");
    const auto doc = io::Document::load(o.base);
    const auto base = io::parse_base_ring(io::Node(doc));
    return schemes::CoeffRing::algebra(ga::GreenbergAlgebra::build(base, *level));
}

schemes::AffinePresentation load_scheme(const Options& o, std::optional<unsigned> level) {
    const auto doc = load(o.scheme, "scheme");
    const auto file = io::parse_scheme(io::Node(doc));
    const auto ring = ring_option(o, level);
    auto z = ring ? file.over(*ring) : file.presentation();
    if (level && z.ring.level() != *level)
        throw Error(ErrorCode::LevelMismatch, "scheme is at level " + std::to_string(z.ring.level()) + ", expected " +
                                                  std::to_string(*level));
    return z;
}

arith::AlgebraPtr load_algebra(const std::string& path, const Guards& guards) {
    const auto doc = load(path, "algebra");
    return io::parse_algebra(io::Node(doc), guards);
}

Json morphism_json(const schemes::MorphismPresentation& f) {
    Json j;
    j["source"] = io::presentation_json(f.source);
    j["target"] = io::presentation_json(f.target);
    j["images"] = Json::object();
    for (const auto& [v, p] : f.images) j["images"][v] = p.to_string();
    return j;
}

int cmd_structure_polys(const Options& o) {
    const auto c = setup(o);
    const auto doc = load(o.base, "base");
    const auto base = io::parse_base_ring(io::Node(doc));
    if (!o.level) throw Error(ErrorCode::InvalidArgument, "missing --level");
    emit(c, ga::GreenbergAlgebra::build(base, *o.level)->dump());
    return 0;
}

int cmd_transform(const Options& o) {
    const auto c = setup(o);
    const auto t = transform::gr_transform(load_scheme(o, o.level));
    Json j = io::presentation_json(t.result);
    j["level"] = t.level;
    j["source_ring"] = io::coeff_ring_json(t.source.ring);
    emit(c, io::dump(j));
    return 0;
}

int cmd_change_level(const Options& o) {
    const auto c = setup(o);
    emit(c, io::dump(morphism_json(transform::change_level(load_scheme(o, o.level), o.to))));
    return 0;
}

std::string format_element(const schemes::PointCarrier& carrier, const arith::FiniteAlgebra& a, std::uint32_t x) {
    if (!carrier.coords) return a.to_string(x);
    std::string s = "(";
    const auto coords = carrier.coords->decode(x);
    for (std::size_t j = 0; j < coords.size(); ++j) s += (j ? ", " : "") + a.to_string(coords[j]);
    return s + ")";
}

int cmd_count(const Options& o) {
    const auto c = setup(o);
    const auto z = load_scheme(o, o.level);
    const auto a = load_algebra(o.algebra, c.config.guards);
    const auto carrier = schemes::point_carrier(z.ring, *a, c.config.guards);
    const auto r = schemes::solve(z, carrier, c.config.guards, {o.list, {}});
    Json j;
    j["ring"] = io::coeff_ring_json(z.ring);
    j["algebra"] = a->name();
    j["count"] = r.count;
    j["candidates"] = r.candidates;
    if (o.list) {
        j["vars"] = z.vars;
        j["solutions"] = Json::array();
        for (const auto& s : r.solutions) {
            Json row = Json::array();
            for (const auto x : s) row.push_back(format_element(carrier, *a, x));
            j["solutions"].push_back(row);
        }
    }
    emit(c, io::dump(j));
    return 0;
}

weil::ExtensionData load_extension(const Options& o) {
    const auto doc = load(o.extension, "extension");
    return io::parse_extension(io::Node(doc));
}

int cmd_weil_restrict(const Options& o) {
    const auto c = setup(o);
    const auto ext = load_extension(o);
    const auto doc = load(o.scheme, "scheme");
    const auto z = io::parse_scheme(io::Node(doc)).over(ext.top);
    Json j = io::presentation_json(weil::res_affine(z, ext));
    j["basis"] = ext.basis_labels;
    j["gamma"] = ext.gamma;
    emit(c, io::dump(j));
    return 0;
}

Json cells_json(const std::vector<weil::CountCell>& cells, bool& ok) {
    Json arr = Json::array();
    for (const auto& cell : cells) {
        arr.push_back({{"algebra", cell.algebra}, {"lhs", cell.lhs}, {"rhs", cell.rhs}, {"equal", cell.equal()}});
        ok = ok && cell.equal();
    }
    return arr;
}

int cmd_wr_gr_check(const Options& o) {
    const auto c = setup(o);
    const auto ext = load_extension(o);
    const auto doc = load(o.scheme, "scheme");
    const auto spec = io::parse_scheme(io::Node(doc)).spec();
    std::vector<arith::AlgebraPtr> algebras;
    for (const auto& path : o.algebras) algebras.push_back(load_algebra(path, c.config.guards));
    if (algebras.empty()) throw Error(ErrorCode::InvalidArgument, "give at least one --algebra");
    bool ok = true;
    Json j;
    j["wr_gr"] = cells_json(weil::wr_gr_check(spec, ext, algebras, c.config.guards), ok);
    if (arith::same_field(ext.base.k(), ext.top.k()))
        j["tot_gr"] = cells_json(weil::tot_gr_check(spec, ext, algebras, c.config.guards), ok);
    if (ext.type == weil::ExtensionType::Mixed && ext.e == 1)
        j["base_change"] = cells_json(weil::bc_check(spec, ext, algebras, c.config.guards), ok);
    j["pass"] = ok;
    emit(c, io::dump(j));
    return ok ? 0 : kExitFailure;
}

int cmd_check(const Options& o, const std::string& which) {
    const auto c = setup(o);
    const auto& g = c.config.guards;
    const auto a = load_algebra(o.algebra, g);
    Json j;
    bool ok = true;
    if (which == "rat-pts") {
        const auto r = transform::check_rat_pts(load_scheme(o, o.level), *a, g);
        ok = r.bijection;
        j = {{"transform_count", r.transform_count}, {"direct_count", r.direct_count}, {"bijection", r.bijection}};
        if (!r.failure.empty()) j["failure"] = r.failure;
    } else if (which == "surjective") {
        const auto r = transform::check_surjective_lift(load_scheme(o, o.m + o.i), o.m, o.i, *a, g);
        ok = r.well_defined && r.surjective;
        j = {{"upper_points", r.upper_points}, {"lower_points", r.lower_points}, {"lifted", r.lifted},
             {"well_defined", r.well_defined}, {"surjective", r.surjective}};
        Json w = Json::array();
        for (const auto& pt : r.witnesses) {
            Json point = Json::object();
            for (std::size_t v = 0; v < pt.size(); ++v) point[r.lower_vars.at(v)] = a->to_string(pt[v]);
            w.push_back(point);
        }
        j["witnesses"] = w;
    } else if (which == "cartesian") {
        const auto doc = load(o.morphism, "morphism");
        const auto f = io::parse_morphism(io::Node(doc), ring_option(o, o.m + o.i));
        const auto r = transform::check_cartesian_etale(f, o.m, o.i, *a, g);
        ok = r.bijective;
        j = {{"source_points", r.source_points}, {"fiber_points", r.fiber_points}, {"bijective", r.bijective}};
        if (!r.failure.empty()) j["failure"] = r.failure;
    } else {
        const auto doc = load(o.group, "group");
        const auto grp = io::parse_group(io::Node(doc), ring_option(o, o.m + o.i));
        const auto r = transform::ker_change_level_count(grp, o.m, o.i, *a, g);
        ok = r.count == r.expected;
        j = {{"count", r.count}, {"expected", r.expected}, {"lie_dim", r.lie_dim}};
    }
    j["pass"] = ok;
    emit(c, io::dump(j));
    return ok ? 0 : kExitFailure;
}

int cmd_verify(const Options& o) {
    const auto c = setup(o);
    const auto criteria = verify::suite_criteria(o.suite);
    Json report;
    report["suite"] = o.suite;
    report["seed"] = c.config.seed;
    report["criteria"] = Json::array();
    bool ok = true;
    for (const int id : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = verify::run_criterion(id, c.config.guards, c.config.seed);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "criterion " << id << ": " << (r.pass() ? "pass" : "FAIL") << " in " << secs << " s\n";
        report["criteria"].push_back(verify::criterion_json(r));
        ok = ok && r.pass();
    }
    report["pass"] = ok;
    emit(c, io::dump(report));
    return ok ? 0 : kExitFailure;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--output,-o", o.output, "write the result to a file");
}

void add_scheme_ring(CLI::App* cmd, Options& o) {
    cmd->add_option("--scheme", o.scheme, "scheme file")->required();
    cmd->add_option("--base", o.base, "base ring file (overrides the scheme's ring)");
    cmd->add_option("--level", o.level, "level N of the base ring");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greenberg algebras, Greenberg transforms and Weil restriction over finite rings"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--config", o.config, "job configuration file");
    app.add_option("--cache", o.cache, "structure-polynomial cache directory (default $GREENBERG_CACHE)");
    app.add_option("--size-guard", o.size_guard, "largest enumerated ring");
    app.add_option("--candidate-guard", o.candidate_guard, "largest candidate space of a search");
    app.add_option("--term-guard", o.term_guard, "largest polynomial");
    app.add_option("--seed", o.seed, "seed of the sampled checks");

    auto* sp = app.add_subcommand("structure-polys", "dump the structure polynomials of R_N");
    sp->add_option("--base", o.base, "base ring file")->required();
    sp->add_option("--level", o.level, "level N")->required();
    add_common(sp, o);

    auto* tr = app.add_subcommand("transform", "Greenberg transform of an affine scheme");
    add_scheme_ring(tr, o);
    add_common(tr, o);

    auto* cl = app.add_subcommand("change-level", "change-of-level morphism Gr_N(Z) -> Gr_M(Z_M)");
    add_scheme_ring(cl, o);
    cl->add_option("--to", o.to, "target level M")->required();
    add_common(cl, o);

    auto* cnt = app.add_subcommand("count", "count points over a finite algebra");
    add_scheme_ring(cnt, o);
    cnt->add_option("--algebra", o.algebra, "algebra file")->required();
    cnt->add_flag("--list", o.list, "list the solutions");
    add_common(cnt, o);

    auto* wr = app.add_subcommand("weil-restrict", "Weil restriction along a finite free extension");
    wr->add_option("--scheme", o.scheme, "scheme file over the top ring")->required();
    wr->add_option("--extension", o.extension, "extension file")->required();
    add_common(wr, o);

    auto* wg = app.add_subcommand("wr-gr-check", "compare Weil restriction and Greenberg transform counts");
    wg->add_option("--scheme", o.scheme, "scheme file with term-list generators")->required();
    wg->add_option("--extension", o.extension, "extension file")->required();
    wg->add_option("--algebra", o.algebras, "algebra file (repeatable)")->required();
    add_common(wg, o);

    auto* chk = app.add_subcommand("check", "point-level checks");
    chk->require_subcommand(1);
    chk->fallthrough();
    auto* rp = chk->add_subcommand("rat-pts", "Gr_N(Z)(A) against Z(R_N(A))");
    add_scheme_ring(rp, o);
    auto* sj = chk->add_subcommand("surjective", "lifting along Gr_{m+i}(Z) -> Gr_m(Z_m)");
    sj->add_option("--scheme", o.scheme, "scheme file at level m+i")->required();
    sj->add_option("--base", o.base, "base ring file");
    auto* ca = chk->add_subcommand("cartesian", "cartesian square of an etale morphism");
    ca->add_option("--morphism", o.morphism, "morphism file")->required();
    ca->add_option("--base", o.base, "base ring file");
    auto* kr = chk->add_subcommand("kernel", "kernel of the change of level of a group scheme");
    kr->add_option("--group", o.group, "group scheme file")->required();
    kr->add_option("--base", o.base, "base ring file");
    for (auto* sub : {rp, sj, ca, kr}) {
        sub->add_option("--algebra", o.algebra, "algebra file")->required();
        add_common(sub, o);
    }
    for (auto* sub : {sj, ca, kr}) {
        sub->add_option("--m", o.m, "lower level m");
        sub->add_option("--i", o.i, "level step i");
    }

    auto* ver = app.add_subcommand("verify", "run the acceptance suites");
    ver->add_option("suite", o.suite, "witt, algebra, ratpts, levels, groups, weil or all")
        ->required()
        ->check(CLI::IsMember(verify::suite_names()));
    add_common(ver, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (sp->parsed()) return cmd_structure_polys(o);
        if (tr->parsed()) return cmd_transform(o);
        if (cl->parsed()) return cmd_change_level(o);
        if (cnt->parsed()) return cmd_count(o);
        if (wr->parsed()) return cmd_weil_restrict(o);
        if (wg->parsed()) return cmd_wr_gr_check(o);
        if (rp->parsed()) return cmd_check(o, "rat-pts");
        if (sj->parsed()) return cmd_check(o, "surjective");
        if (ca->parsed()) return cmd_check(o, "cartesian");
        if (kr->parsed()) return cmd_check(o, "kernel");
        if (ver->parsed()) return cmd_verify(o);
    } catch (const Error& e) {
        const Json err{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        const bool usage = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidArgument ||
                           e.code() == ErrorCode::Io;
        return usage ? kExitUsage : kExitFailure;
    }
    return kExitUsage;
}
