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


#include "greenberg/ga/oracle.hpp"

#include <algorithm>

#include "greenberg/error.hpp"
#include "greenberg/poly/domain.hpp"
#include "greenberg/witt/witt_ring.hpp"

namespace greenberg::ga {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::uint64_t mod(std::int64_t a, std::uint64_t m) {
    const std::int64_t mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((a % mm) + mm) % mm);
}

// Multiplication in (Z/M)[pi]/(f) on coefficient vectors of length rho, or
// truncated multiplication in F_p[t]/(t^{N+1}) when `eisenstein` is empty
// and the equal case is requested.
struct Model {
    unsigned rho;
    std::uint64_t M;
    bool equal;
    std::vector<std::int64_t> a;  // a_1..a_rho

    std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) const {
        std::vector<std::uint64_t> z(2 * rho, 0);
        for (unsigned i = 0; i < rho; ++i)
            for (unsigned j = 0; j < rho; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % M;
        if (!equal) {
            // pi^l = pi^{l-rho} * pi^rho = -sum_j a_j pi^{l-j}.
            for (unsigned l = 2 * rho - 1; l >= rho; --l) {
                const std::uint64_t c = z[l];
                z[l] = 0;
                if (c == 0) continue;
                for (unsigned j = 1; j <= rho; ++j)
                    z[l - j] = (z[l - j] + M - (c * mod(a[j - 1], M)) % M) % M;
            }
        }
        z.resize(rho);
        return z;
    }
};

}  // namespace

std::uint32_t OracleRing::code_of(const std::vector<std::uint64_t>& v) const {
    std::uint64_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * modulus + v[i] % modulus;
    return classes.at(code);
}

OracleRing ga_oracle(const BaseRingSpec& base, unsigned level) {
    if (!base.k->is_prime_field())
        throw Error(ErrorCode::NotPrimeField, "the oracle needs k = F_p, got " + base.k->name());
    validate(base);
    const RamificationData ram = RamificationData::compute(base, level);
    const std::uint32_t p = base.p();
    const bool equal = base.char_case == CharCase::Equal;

    Model model;
    model.equal = equal;
    model.rho = equal ? level + 1 : base.rho();
    model.M = equal ? p : ipow(p, ram.m);
    model.a = equal ? std::vector<std::int64_t>{} : base.effective_eisenstein();

    OracleRing o;
    o.p = p;
    o.rho = model.rho;
    o.modulus = model.M;
    const arith::TupleCodec codec(static_cast<std::uint32_t>(model.M), model.rho);

    // Relations: pi^{N+1+k}, k < rho (the ideal (pi^{N+1}) as a Z-module).
    std::vector<std::vector<std::uint64_t>> relations;
    if (!equal) {
        std::vector<std::uint64_t> pi(model.rho, 0), power(model.rho, 0);
        power[0] = 1 % model.M;
        if (model.rho == 1)
            pi[0] = mod(-model.a[0], model.M);
        else
            pi[1] = 1;
        for (unsigned e = 0; e < level + model.rho; ++e) {
            if (e >= level + 1) relations.push_back(power);
            power = model.mul(power, pi);
        }
    }

    // The relation lattice mod p^m as a subgroup of (Z/M)^rho.
    std::vector<bool> in_lattice(codec.count(), false);
    std::vector<std::uint64_t> lattice{0};
    in_lattice[0] = true;
    for (std::size_t head = 0; head < lattice.size(); ++head) {
        const auto x = codec.decode(lattice[head]);
        for (const auto& r : relations) {
            std::vector<std::uint32_t> y(model.rho);
            for (unsigned i = 0; i < model.rho; ++i) y[i] = static_cast<std::uint32_t>((x[i] + r[i]) % model.M);
            const std::uint64_t c = codec.encode(y);
            if (!in_lattice[c]) {
                in_lattice[c] = true;
                lattice.push_back(c);
            }
        }
    }

    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    o.classes.assign(codec.count(), kUnset);
    for (std::uint64_t c = 0; c < codec.count(); ++c) {
        if (o.classes[c] != kUnset) continue;
        const auto x = codec.decode(c);
        const auto idx = static_cast<std::uint32_t>(o.reps.size());
        o.reps.emplace_back(x.begin(), x.end());
        for (const std::uint64_t l : lattice) {
            const auto y = codec.decode(l);
            std::vector<std::uint32_t> s(model.rho);
            for (unsigned i = 0; i < model.rho; ++i) s[i] = static_cast<std::uint32_t>((x[i] + y[i]) % model.M);
            o.classes[codec.encode(s)] = idx;
        }
    }
    if (o.reps.size() != ipow(p, level + 1))
        throw Error(ErrorCode::InvalidArgument, "oracle model has " + std::to_string(o.reps.size()) +
                                                    " elements, expected p^(N+1)");

    const auto add = [&o, &model](std::uint32_t x, std::uint32_t y) {
        std::vector<std::uint64_t> s(model.rho);
        for (unsigned i = 0; i < model.rho; ++i) s[i] = (o.reps[x][i] + o.reps[y][i]) % model.M;
        return o.code_of(s);
    };
    const auto mul = [&o, &model](std::uint32_t x, std::uint32_t y) { return o.code_of(model.mul(o.reps[x], o.reps[y])); };
    std::vector<std::uint64_t> one(model.rho, 0);
    one[0] = 1 % model.M;
    o.ring = arith::FiniteRing::tabulate("oracle(" + base.label() + ", N=" + std::to_string(level) + ")",
                                         static_cast<std::uint32_t>(o.reps.size()), o.code_of(std::vector<std::uint64_t>(model.rho, 0)),
                                         o.code_of(one), add, mul, 4096);
    return o;
}

OracleComparison compare_with_oracle(const GreenbergAlgebra& algebra, const OracleRing& oracle) {
    OracleComparison result;
    const auto& points = algebra.k_points();
    const auto table = points.tabulate(4096);
    const std::uint32_t n = table->size();
    result.elements = n;
    const bool equal = algebra.base().char_case == CharCase::Equal;
    const unsigned rho = algebra.base().rho();
    const unsigned m = algebra.ram().m;

    // int(w) for w in W_m(F_p), through Z -> W_m(F_p).
    std::vector<std::uint64_t> witt_to_int;
    if (!equal) {
        const witt::WittRing w(oracle.p, m, poly::field_ring(arith::FiniteField::prime(oracle.p)));
        witt_to_int.assign(oracle.modulus, 0);
        for (std::uint64_t x = 0; x < oracle.modulus; ++x)
            witt_to_int[w.ring().encode(w.from_integer(static_cast<std::int64_t>(x)))] = x;
    }
    const arith::TupleCodec slot_codec(oracle.p, m);

    std::vector<std::uint32_t> phi(n);
    std::vector<bool> hit(oracle.ring->size(), false);
    result.bijective = n == oracle.ring->size();
    for (std::uint32_t x = 0; x < n; ++x) {
        const auto c = points.decode(x);
        std::vector<std::uint64_t> v(oracle.rho, 0);
        if (equal) {
            for (unsigned j = 0; j < c.size(); ++j) v[j] = c[j];
        } else {
            for (unsigned i = 0; i < rho; ++i) {
                std::vector<std::uint32_t> w(m, 0);
                for (unsigned j = i, s = 0; j < c.size(); j += rho, ++s) w[s] = c[j];
                v[i] = witt_to_int[slot_codec.encode(w)];
            }
        }
        phi[x] = oracle.code_of(v);
        if (hit[phi[x]]) result.bijective = false;
        hit[phi[x]] = true;
    }
    if (!result.bijective) {
        result.failure = "coordinate map is not a bijection";
        return result;
    }
    if (phi[table->one()] != oracle.ring->one()) {
        result.failure = "one is not mapped to one";
        return result;
    }
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            if (phi[table->add(a, b)] != oracle.ring->add(phi[a], phi[b]) ||
                phi[table->mul(a, b)] != oracle.ring->mul(phi[a], phi[b])) {
                result.failure = "operations differ at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
                return result;
            }
        }
    }
    result.isomorphic = true;
    return result;
}

}  // namespace greenberg::ga
