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

#include "greenberg/ga/greenberg_algebra.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "greenberg/error.hpp"
#include "greenberg/poly/evaluate.hpp"
#include "greenberg/witt/laws.hpp"
#include "greenberg/witt/witt_ring.hpp"

namespace greenberg::ga {

namespace fs = std::filesystem;
using poly::RingPoly;
using witt::CoordinateLaws;

unsigned BaseRingSpec::rho() const {
    if (char_case == CharCase::Equal || eisenstein.empty()) return 1;
    return static_cast<unsigned>(eisenstein.size());
}

std::vector<std::int64_t> BaseRingSpec::effective_eisenstein() const {
    if (char_case == CharCase::Equal) return {};
    if (eisenstein.empty()) return {-static_cast<std::int64_t>(p())};
    return eisenstein;
}

std::string BaseRingSpec::key() const {
    std::ostringstream os;
    os << (char_case == CharCase::Equal ? "equal" : "mixed") << "_p" << p() << "_k";
    for (std::size_t i = 0; i < k->modulus().size(); ++i) os << (i ? "," : "") << k->modulus()[i];
    if (char_case == CharCase::Mixed) {
        os << "_f";
        for (std::size_t i = 0; i < eisenstein.size(); ++i) os << (i ? "," : "") << eisenstein[i];
    }
    return os.str();
}

std::string BaseRingSpec::label() const {
    if (char_case == CharCase::Equal) return k->name() + "[[t]]";
    if (eisenstein.empty()) return "W(" + k->name() + ")";
    std::ostringstream os;
    const unsigned r = rho();
    os << "W(" << k->name() << ")[t]/(t^" << r;
    for (unsigned i = 0; i < r; ++i) {
        const std::int64_t a = eisenstein[i];
        if (a == 0) continue;
        os << (a < 0 ? " - " : " + ") << (a < 0 ? -a : a);
        const unsigned e = r - 1 - i;
        if (e >= 1) os << "*t";
        if (e > 1) os << "^" << e;
    }
    os << ")";
    return os.str();
}

bool BaseRingSpec::operator==(const BaseRingSpec& o) const {
    return char_case == o.char_case && arith::same_field(k, o.k) && eisenstein == o.eisenstein;
}

void validate(const BaseRingSpec& spec) {
    if (!spec.k) throw Error(ErrorCode::InvalidArgument, "base ring without residue field");
    if (spec.char_case == CharCase::Equal) {
        if (!spec.eisenstein.empty())
            throw Error(ErrorCode::InvalidArgument, "equal-characteristic bases take no Eisenstein polynomial");
        return;
    }
    if (spec.eisenstein.empty()) return;
    const std::int64_t p = spec.p();
    for (std::size_t i = 0; i < spec.eisenstein.size(); ++i)
        if (spec.eisenstein[i] % p != 0)
            throw Error(ErrorCode::NotEisenstein, "coefficient a_" + std::to_string(i + 1) + " = " +
                                                      std::to_string(spec.eisenstein[i]) + " is not divisible by p");
    if (spec.eisenstein.back() % (p * p) == 0)
        throw Error(ErrorCode::NotEisenstein, "constant coefficient is divisible by p^2");
}

RamificationData RamificationData::compute(const BaseRingSpec& spec, unsigned level) {
    RamificationData d;
    d.level = level;
    if (spec.char_case == CharCase::Equal) {
        d.m = 1;
        d.r = level;
        d.lengths.assign(level + 1, 1);
        return d;
    }
    const unsigned rho = spec.rho();
    d.m = (level + 1 + rho - 1) / rho;
    d.r = std::min(rho - 1, level);
    for (unsigned i = 0; i <= d.r; ++i) d.lengths.push_back((level + 1 - i + rho - 1) / rho);
    return d;
}

namespace {

using Carrier = poly::PolyCarrier<poly::RingDomain>;
using WVec = std::vector<RingPoly>;

struct SymbolicWitt {
    witt::ReducedWittLawsPtr laws;
    Carrier ring;
    std::uint32_t p;

    RingPoly lift(std::uint32_t c) const { return RingPoly::constant(ring.domain, c); }
    WVec add(const WVec& a, const WVec& b) const {
        return witt::apply_law(laws->sum, a, b, ring, [&](std::uint32_t c) { return lift(c); });
    }
    WVec mul(const WVec& a, const WVec& b) const {
        return witt::apply_law(laws->prod, a, b, ring, [&](std::uint32_t c) { return lift(c); });
    }
    WVec neg(const WVec& a) const {
        return witt::apply_law(laws->neg, a, WVec{}, ring, [&](std::uint32_t c) { return lift(c); });
    }
    WVec times_p(const WVec& a) const {
        WVec r(a.size(), ring.zero());
        for (std::size_t i = 0; i + 1 < a.size(); ++i) r[i + 1] = a[i].pow(p);
        return r;
    }
};

}  // namespace

CoordinateLaws master_laws(const BaseRingSpec& base, unsigned master_level) {
    const std::uint32_t p = base.p();
    CoordinateLaws out;
    out.width = master_level + 1;
    out.fp = poly::RingDomain::of_field(arith::FiniteField::prime(p));
    const auto& fp = out.fp;
    auto x = [&](unsigned j) { return RingPoly::variable(fp, witt::xvar(j)); };
    auto y = [&](unsigned j) { return RingPoly::variable(fp, witt::yvar(j)); };
    out.zero.assign(out.width, 0);
    out.one.assign(out.width, 0);
    out.one[0] = 1;

    if (base.char_case == CharCase::Equal) {
        for (unsigned j = 0; j <= master_level; ++j) {
            out.add.push_back(x(j) + y(j));
            RingPoly conv(fp);
            for (unsigned a = 0; a <= j; ++a) conv += x(a) * y(j - a);
            out.mul.push_back(conv);
            out.neg.push_back(-x(j));
        }
        return out;
    }

    const unsigned rho = base.rho();
    if ((master_level + 1) % rho != 0) throw Error(ErrorCode::InvalidArgument, "master level must be m*rho - 1");
    const unsigned m = (master_level + 1) / rho;
    SymbolicWitt w{witt::reduced_laws(p, m), Carrier{fp}, p};
    std::vector<WVec> xw(rho), yw(rho);
    for (unsigned i = 0; i < rho; ++i)
        for (unsigned s = 0; s < m; ++s) {
            xw[i].push_back(x(rho * s + i));
            yw[i].push_back(y(rho * s + i));
        }

    // Witt convolution z_l = sum_{i+j=l} x^(i) y^(j).
    std::vector<WVec> z(2 * rho - 1);
    for (unsigned i = 0; i < rho; ++i)
        for (unsigned j = 0; j < rho; ++j) {
            WVec prod = w.mul(xw[i], yw[j]);
            z[i + j] = z[i + j].empty() ? std::move(prod) : w.add(z[i + j], prod);
        }

    // pi^rho = -(a_1 pi^{rho-1} + ... + a_rho); multiplication by the integer
    // c = p^v u uses the Witt vector of u followed by (V F)^v.
    const auto a = base.effective_eisenstein();
    const witt::WittRing fp_witt(p, m, poly::field_ring(arith::FiniteField::prime(p)));
    std::int64_t pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= p;
    auto times_const = [&](const WVec& v, std::int64_t c) -> WVec {
        c %= pm;
        if (c < 0) c += pm;
        if (c == 0) return WVec(m, w.ring.zero());
        unsigned val = 0;
        while (c % p == 0) {
            c /= p;
            ++val;
        }
        WVec u;
        for (auto coord : fp_witt.from_integer(c)) u.push_back(w.lift(coord));
        WVec r = w.mul(u, v);
        for (unsigned i = 0; i < val; ++i) r = w.times_p(r);
        return r;
    };
    for (int l = 2 * static_cast<int>(rho) - 2; l >= static_cast<int>(rho); --l)
        for (unsigned j = 1; j <= rho; ++j) z[l - j] = w.add(z[l - j], times_const(z[l], -a[j - 1]));

    std::vector<WVec> sum(rho), neg(rho);
    for (unsigned i = 0; i < rho; ++i) {
        sum[i] = w.add(xw[i], yw[i]);
        neg[i] = w.neg(xw[i]);
    }
    for (unsigned j = 0; j <= master_level; ++j) {
        const unsigned i = j % rho, s = j / rho;
        out.add.push_back(sum[i][s]);
        out.mul.push_back(z[i][s]);
        out.neg.push_back(neg[i][s]);
    }
    return out;
}

CoordinateLaws truncate_laws(const CoordinateLaws& master, unsigned level) {
    if (level >= master.width) throw Error(ErrorCode::LevelMismatch, "truncation above the master level");
    CoordinateLaws out;
    out.width = level + 1;
    out.fp = master.fp;
    auto check = [&](const RingPoly& poly, const char* family, unsigned j) {
        for (const auto& v : poly.vars()) {
            const unsigned idx = static_cast<unsigned>(std::stoul(v.substr(1)));
            if (idx > level)
                throw Error(ErrorCode::GradingViolation, std::string(family) + " coordinate " + std::to_string(j) +
                                                             " depends on dropped input " + v);
        }
    };
    for (unsigned j = 0; j <= level; ++j) {
        check(master.add[j], "add", j);
        check(master.mul[j], "mul", j);
        check(master.neg[j], "neg", j);
        out.add.push_back(master.add[j]);
        out.mul.push_back(master.mul[j]);
        out.neg.push_back(master.neg[j]);
    }
    out.zero.assign(master.zero.begin(), master.zero.begin() + level + 1);
    out.one.assign(master.one.begin(), master.one.begin() + level + 1);
    return out;
}

namespace {

std::mutex g_mutex;
std::map<std::pair<std::string, unsigned>, GreenbergAlgebraPtr> g_algebras;
std::map<std::pair<std::string, unsigned>, std::shared_ptr<const CoordinateLaws>> g_masters;

std::string serialize(const CoordinateLaws& laws, const std::string& key) {
    std::ostringstream os;
    os << "greenberg-laws " << key << " width=" << laws.width << "\n";
    const std::pair<const char*, const std::vector<RingPoly>*> families[] = {
        {"add", &laws.add}, {"mul", &laws.mul}, {"neg", &laws.neg}};
    for (const auto& [name, family] : families)
        for (unsigned j = 0; j < laws.width; ++j) os << name << j << ": " << (*family)[j].to_string() << "\n";
    return os.str();
}

std::optional<CoordinateLaws> parse(const std::string& text, const std::string& key, std::uint32_t p) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    const std::string head = "greenberg-laws " + key + " width=";
    if (line.compare(0, head.size(), head) != 0) return std::nullopt;
    CoordinateLaws laws;
    laws.width = static_cast<unsigned>(std::stoul(line.substr(head.size())));
    laws.fp = poly::RingDomain::of_field(arith::FiniteField::prime(p));
    std::vector<RingPoly>* families[] = {&laws.add, &laws.mul, &laws.neg};
    const char* names[] = {"add", "mul", "neg"};
    for (int f = 0; f < 3; ++f)
        for (unsigned j = 0; j < laws.width; ++j) {
            if (!std::getline(in, line)) return std::nullopt;
            const std::string prefix = std::string(names[f]) + std::to_string(j) + ": ";
            if (line.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
            families[f]->push_back(poly::parse_polynomial(laws.fp, line.substr(prefix.size())));
        }
    laws.zero.assign(laws.width, 0);
    laws.one.assign(laws.width, 0);
    laws.one[0] = 1;
    return laws;
}

fs::path master_file(const std::string& key, unsigned master_level) {
    return fs::path(witt::cache_dir()) / ("greenberg_" + key + "_master" + std::to_string(master_level) + ".txt");
}

std::shared_ptr<const CoordinateLaws> cached_master(const BaseRingSpec& base, unsigned master_level) {
    const auto memo_key = std::make_pair(base.key(), master_level);
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        const auto it = g_masters.find(memo_key);
        if (it != g_masters.end()) return it->second;
    }
    std::optional<CoordinateLaws> laws;
    const bool use_disk = !witt::cache_dir().empty() && base.char_case == CharCase::Mixed;
    if (use_disk) {
        std::ifstream in(master_file(base.key(), master_level));
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                laws = parse(ss.str(), base.key(), base.p());
            } catch (const Error&) {
                laws.reset();  // rebuilt below
            }
        }
    }
    if (!laws) {
        laws = master_laws(base, master_level);
        if (use_disk) {
            std::error_code ec;
            fs::create_directories(witt::cache_dir(), ec);
            const fs::path target = master_file(base.key(), master_level);
            std::ostringstream tmp;
            tmp << target.string() << ".tmp." << ::getpid() << "."
                << std::hash<std::thread::id>{}(std::this_thread::get_id());
            {
                std::ofstream out(tmp.str(), std::ios::trunc);
                if (out) out << serialize(*laws, base.key());
            }
            fs::rename(tmp.str(), target, ec);
            if (ec) fs::remove(tmp.str(), ec);
        }
    }
    auto ptr = std::make_shared<const CoordinateLaws>(std::move(*laws));
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_masters.try_emplace(memo_key, ptr).first->second;
}

std::vector<std::string> constant_labels(const arith::FiniteField& k, unsigned width) {
    const arith::TupleCodec codec(k.order(), width);
    std::vector<std::string> labels;
    for (std::uint64_t c = 0; c < codec.count(); ++c) {
        const auto coords = codec.decode(c);
        std::string s = "[";
        for (unsigned j = 0; j < width; ++j) s += (j ? ";" : "") + k.to_string(coords[j]);
        labels.push_back(s + "]");
    }
    return labels;
}

}  // namespace

std::shared_ptr<const GreenbergAlgebra> GreenbergAlgebra::build(const BaseRingSpec& base, unsigned level) {
    validate(base);
    const auto memo_key = std::make_pair(base.key(), level);
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        const auto it = g_algebras.find(memo_key);
        if (it != g_algebras.end()) return it->second;
    }
    std::shared_ptr<GreenbergAlgebra> ga(new GreenbergAlgebra());
    ga->base_ = base;
    ga->ram_ = RamificationData::compute(base, level);
    ga->master_level_ = base.char_case == CharCase::Equal ? level : ga->ram_.m * base.rho() - 1;
    const auto master = cached_master(base, ga->master_level_);
    ga->laws_ = std::make_shared<const CoordinateLaws>(truncate_laws(*master, level));

    const auto kring = poly::field_ring(base.k);
    ga->k_points_ = std::make_shared<const witt::CoordinateRing>(
        ga->laws_, kring, "R" + std::to_string(level) + "(" + base.k->name() + ")");
    ga->pi_.assign(level + 1, 0);
    if (level >= 1) {
        if (base.char_case == CharCase::Mixed && base.rho() == 1) {
            // pi = -a_1 is p times a unit; its coordinates come from Z -> W_{N+1}(F_p).
            const witt::CoordinateRing fp_points(ga->laws_, poly::field_ring(arith::FiniteField::prime(base.p())), "fp");
            ga->pi_ = fp_points.from_integer(-base.effective_eisenstein()[0]);
        } else {
            ga->pi_[1] = 1;
        }
    }
    const std::uint64_t count = ga->k_points_->count();
    if (count <= 4096) {
        const auto table = ga->k_points_->tabulate(4096);
        ga->constants_ = std::make_shared<const poly::RingDomain>(table, constant_labels(*base.k, level + 1));
    }
    GreenbergAlgebraPtr ptr = ga;
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_algebras.try_emplace(memo_key, ptr).first->second;
}

const poly::RingDomainPtr& GreenbergAlgebra::constants() const {
    if (!constants_)
        throw Error(ErrorCode::SizeGuard, "R" + std::to_string(level()) + "(" + base_.k->name() +
                                              ") is too large to tabulate its constants");
    return constants_;
}

std::pair<unsigned, unsigned> GreenbergAlgebra::component_slot(unsigned j) const {
    const unsigned rho = base_.rho();
    return {j % rho, j / rho};
}

witt::CoordinateRing GreenbergAlgebra::points(const arith::FiniteAlgebra& algebra) const {
    if (!algebra.is_algebra_over(base_.k))
        throw Error(ErrorCode::BaseMismatch, algebra.name() + " is not an algebra over " + base_.k->name());
    return witt::CoordinateRing(laws_, algebra.ring(), "R" + std::to_string(level()) + "(" + algebra.name() + ")");
}

GreenbergAlgebra::Coords GreenbergAlgebra::lift_constant(const Coords& k_coords,
                                                         const std::vector<std::uint32_t>& structure_map) const {
    Coords r(k_coords.size());
    for (std::size_t i = 0; i < k_coords.size(); ++i) r[i] = structure_map.at(k_coords[i]);
    return r;
}

GreenbergAlgebra::Coords GreenbergAlgebra::constant(const std::vector<std::int64_t>& pi_poly) const {
    std::size_t d = pi_poly.size();
    while (d > 0 && pi_poly[d - 1] == 0) --d;
    if (d > 0 && d - 1 > level())
        throw Error(ErrorCode::DegreeTooHigh, "pi-degree " + std::to_string(d - 1) + " exceeds level " +
                                                  std::to_string(level()));
    const witt::CoordinateRing& r = *k_points_;
    Coords acc = r.zero();
    for (std::size_t i = d; i-- > 0;) acc = r.add(r.mul(acc, pi_), r.from_integer(pi_poly[i]));
    return acc;
}

GreenbergAlgebra::Coords GreenbergAlgebra::truncate(const Coords& a, unsigned target_level) const {
    if (target_level > level())
        throw Error(ErrorCode::LevelMismatch, "cannot truncate level " + std::to_string(level()) + " to " +
                                                  std::to_string(target_level));
    if (a.size() != width()) throw Error(ErrorCode::LengthMismatch, "element has wrong number of coordinates");
    return Coords(a.begin(), a.begin() + target_level + 1);
}

std::string GreenbergAlgebra::dump() const {
    std::ostringstream os;
    os << "# structure polynomials of " << base_.label() << " at level " << level() << " over F" << p() << "\n";
    const std::pair<const char*, const std::vector<RingPoly>*> families[] = {
        {"add", &laws_->add}, {"mul", &laws_->mul}, {"neg", &laws_->neg}};
    for (const auto& [name, family] : families) {
        os << "[" << name << "]\n";
        for (unsigned j = 0; j < width(); ++j) os << "z" << j << " = " << (*family)[j].to_string() << "\n";
    }
    const std::pair<const char*, const std::vector<std::uint32_t>*> points[] = {{"one", &laws_->one}, {"pi", &pi_}};
    for (const auto& [name, coords] : points) {
        os << "[" << name << "]\n";
        for (unsigned j = 0; j < width(); ++j) os << "z" << j << " = " << (*coords)[j] << "\n";
    }
    return os.str();
}

}  // namespace greenberg::ga
