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

#include "greenberg/witt/laws.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "greenberg/error.hpp"
#include "greenberg/poly/evaluate.hpp"

namespace greenberg::witt {

namespace fs = std::filesystem;
using poly::IntPoly;

namespace {

std::mutex g_mutex;
std::map<std::pair<std::uint32_t, unsigned>, WittLawsPtr> g_laws;
std::map<std::pair<std::uint32_t, unsigned>, ReducedWittLawsPtr> g_reduced;
std::optional<std::string> g_cache_override;

mpz_class mpz_pow(std::uint32_t p, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

std::uint64_t upow(std::uint64_t p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

IntPoly var(const std::string& name) { return IntPoly::variable(poly::IntegerDomain::instance(), name); }

// sum_{i<j} p^i L_i^{p^{j-i}}
IntPoly ghost_prefix(std::uint32_t p, unsigned j, const std::vector<IntPoly>& laws) {
    IntPoly acc(poly::IntegerDomain::instance());
    for (unsigned i = 0; i < j; ++i) acc += laws[i].pow(upow(p, j - i)).scale(mpz_pow(p, i));
    return acc;
}

// Appends the laws of index j to `laws`.
void extend(WittLaws& laws) {
    const unsigned j = laws.n;
    const std::uint32_t p = laws.p;
    std::vector<IntPoly> xs, ys;
    for (unsigned i = 0; i <= j; ++i) {
        xs.push_back(var(xvar(i)));
        ys.push_back(var(yvar(i)));
    }
    const IntPoly wx = ghost(p, j, xs), wy = ghost(p, j, ys);
    const mpz_class pj = mpz_pow(p, j);
    laws.sum.push_back(poly::div_exact_int(wx + wy - ghost_prefix(p, j, laws.sum), pj));
    laws.prod.push_back(poly::div_exact_int(wx * wy - ghost_prefix(p, j, laws.prod), pj));
    laws.neg.push_back(poly::div_exact_int(-wx - ghost_prefix(p, j, laws.neg), pj));
    laws.n = j + 1;
}

fs::path cache_file(std::uint32_t p, unsigned n) {
    return fs::path(cache_dir()) / ("witt_p" + std::to_string(p) + "_n" + std::to_string(n) + ".txt");
}

std::optional<WittLaws> load_from_disk(std::uint32_t p, unsigned n) {
    if (cache_dir().empty()) return std::nullopt;
    std::ifstream in(cache_file(p, n));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        WittLaws laws = parse_laws(ss.str());
        if (laws.p != p || laws.n != n) return std::nullopt;
        return laws;
    } catch (const Error&) {
        return std::nullopt;  // unreadable cache entries are rebuilt
    }
}

void store_to_disk(const WittLaws& laws) {
    const std::string dir = cache_dir();
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return;
    const fs::path target = cache_file(laws.p, laws.n);
    std::ostringstream tmpname;
    tmpname << target.string() << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id());
    {
        std::ofstream out(tmpname.str(), std::ios::trunc);
        if (!out) return;
        out << serialize_laws(laws);
        if (!out) return;
    }
    fs::rename(tmpname.str(), target, ec);
    if (ec) fs::remove(tmpname.str(), ec);
}

}  // namespace

std::string xvar(unsigned i) { return "x" + std::to_string(i); }
std::string yvar(unsigned i) { return "y" + std::to_string(i); }

IntPoly ghost(std::uint32_t p, unsigned j, const std::vector<IntPoly>& coords) {
    IntPoly acc(poly::IntegerDomain::instance());
    for (unsigned i = 0; i <= j; ++i) acc += coords.at(i).pow(upow(p, j - i)).scale(mpz_pow(p, i));
    return acc;
}

std::string cache_dir() {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (g_cache_override) return *g_cache_override;
    if (const char* env = std::getenv("GREENBERG_CACHE")) return env;
    return "./.cache";
}

void set_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache_override = dir;
}

void clear_memory_cache() {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_laws.clear();
    g_reduced.clear();
}

WittLawsPtr build_laws(std::uint32_t p, unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "Witt length must be >= 1");
    if (!arith::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        const auto it = g_laws.find({p, n});
        if (it != g_laws.end()) return it->second;
    }
    // Building happens outside the lock; concurrent duplicate builds produce
    // identical laws and the first one stored wins.
    std::optional<WittLaws> laws = load_from_disk(p, n);
    if (!laws) {
        WittLaws built;
        if (n > 1) {
            built = *build_laws(p, n - 1);
        } else {
            built.p = p;
            built.n = 0;
        }
        if (upow(p, n - 1) > poly::kMaxExponent)
            throw Error(ErrorCode::ExponentOverflow, "p^(n-1) exceeds the exponent bound");
        extend(built);
        const std::string failure = check_ghost_identities(built);
        if (!failure.empty()) throw Error(ErrorCode::NotDivisible, "Witt law construction: " + failure);
        store_to_disk(built);
        laws = std::move(built);
    }
    auto ptr = std::make_shared<const WittLaws>(std::move(*laws));
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_laws.try_emplace({p, n}, ptr).first->second;
}

ReducedWittLawsPtr reduced_laws(std::uint32_t p, unsigned n) {
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        const auto it = g_reduced.find({p, n});
        if (it != g_reduced.end()) return it->second;
    }
    const WittLawsPtr laws = build_laws(p, n);
    auto r = std::make_shared<ReducedWittLaws>();
    r->p = p;
    r->n = n;
    r->fp = poly::RingDomain::of_field(arith::FiniteField::prime(p));
    for (unsigned j = 0; j < n; ++j) {
        r->sum.push_back(poly::map_coeffs(laws->sum[j], r->fp));
        r->prod.push_back(poly::map_coeffs(laws->prod[j], r->fp));
        r->neg.push_back(poly::map_coeffs(laws->neg[j], r->fp));
    }
    ReducedWittLawsPtr ptr = r;
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_reduced.try_emplace({p, n}, ptr).first->second;
}

std::string check_ghost_identities(const WittLaws& laws) {
    const std::uint32_t p = laws.p;
    std::vector<IntPoly> xs, ys;
    for (unsigned i = 0; i < laws.n; ++i) {
        xs.push_back(var(xvar(i)));
        ys.push_back(var(yvar(i)));
    }
    for (unsigned j = 0; j < laws.n; ++j) {
        for (const auto* family : {&laws.sum, &laws.prod, &laws.neg}) {
            for (const auto& v : (*family)[j].vars()) {
                const unsigned idx = static_cast<unsigned>(std::stoul(v.substr(1)));
                if (idx > j) return "law of index " + std::to_string(j) + " mentions " + v;
            }
        }
        const IntPoly wx = ghost(p, j, xs), wy = ghost(p, j, ys);
        if (ghost(p, j, laws.sum) != wx + wy) return "sum ghost identity fails at j=" + std::to_string(j);
        if (ghost(p, j, laws.prod) != wx * wy) return "product ghost identity fails at j=" + std::to_string(j);
        if (ghost(p, j, laws.neg) != -wx) return "negation ghost identity fails at j=" + std::to_string(j);
    }
    return {};
}

std::string serialize_laws(const WittLaws& laws) {
    std::ostringstream os;
    os << "witt-laws p=" << laws.p << " n=" << laws.n << "\n";
    const std::pair<const char*, const std::vector<IntPoly>*> families[] = {
        {"sum", &laws.sum}, {"prod", &laws.prod}, {"neg", &laws.neg}};
    for (const auto& [name, family] : families)
        for (unsigned j = 0; j < laws.n; ++j) os << name << j << ": " << (*family)[j].to_string() << "\n";
    return os.str();
}

WittLaws parse_laws(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    WittLaws laws;
    if (!std::getline(in, line) || std::sscanf(line.c_str(), "witt-laws p=%u n=%u", &laws.p, &laws.n) != 2)
        throw Error(ErrorCode::ParseError, "bad Witt law header");
    const auto domain = poly::IntegerDomain::instance();
    std::vector<IntPoly>* families[] = {&laws.sum, &laws.prod, &laws.neg};
    const char* names[] = {"sum", "prod", "neg"};
    for (int f = 0; f < 3; ++f) {
        for (unsigned j = 0; j < laws.n; ++j) {
            if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "truncated Witt law file");
            const std::string prefix = std::string(names[f]) + std::to_string(j) + ": ";
            if (line.compare(0, prefix.size(), prefix) != 0)
                throw Error(ErrorCode::ParseError, "expected '" + prefix + "'");
            families[f]->push_back(poly::parse_polynomial(domain, line.substr(prefix.size())));
        }
    }
    return laws;
}

}  // namespace greenberg::witt
