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

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "greenberg/arith/finite_ring.hpp"
#include "greenberg/error.hpp"
#include "greenberg/poly/polynomial.hpp"

namespace greenberg::poly {

// A carrier is any commutative ring type with
//   using Value; Value zero() const; Value one() const;
//   Value add(const Value&, const Value&) const; Value mul(...) const; Value neg(const Value&) const;
// Polynomials are evaluated in a carrier through a coefficient lift D::Value -> Carrier::Value.

/// Tabulated finite ring as a carrier.
struct FiniteCarrier {
    using Value = std::uint32_t;
    arith::FiniteRingPtr ring;

    Value zero() const { return ring->zero(); }
    Value one() const { return ring->one(); }
    Value add(Value a, Value b) const { return ring->add(a, b); }
    Value mul(Value a, Value b) const { return ring->mul(a, b); }
    Value neg(Value a) const { return ring->neg(a); }
};

/// Polynomials over D as a carrier.
template <class D>
struct PolyCarrier {
    using Value = Polynomial<D>;
    std::shared_ptr<const D> domain;

    Value zero() const { return Value(domain); }
    Value one() const { return Value::integer(domain, 1); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
};

template <class Carrier>
typename Carrier::Value carrier_pow(const Carrier& r, typename Carrier::Value a, std::uint64_t e) {
    typename Carrier::Value result = r.one();
    while (e > 0) {
        if (e & 1) result = r.mul(result, a);
        e >>= 1;
        if (e) a = r.mul(a, a);
    }
    return result;
}

/// Evaluates p with `values[k]` assigned to `p.vars()[k]`.
template <class D, class Carrier, class Lift>
typename Carrier::Value evaluate_aligned(const Polynomial<D>& p, const std::vector<typename Carrier::Value>& values,
                                         const Carrier& ring, const Lift& lift) {
    using CV = typename Carrier::Value;
    const std::size_t w = p.vars().size();
    // Powers of each variable up to the largest exponent used.
    std::vector<std::vector<CV>> powers(w);
    for (std::size_t k = 0; k < w; ++k) {
        std::uint32_t maxe = 0;
        for (const auto& t : p.terms()) maxe = std::max(maxe, t.exps[k]);
        powers[k].reserve(maxe + 1);
        powers[k].push_back(ring.one());
        // Sparse exponent sets (e.g. only p-th powers) use repeated squaring.
        if (maxe > 8) {
            powers[k].resize(maxe + 1, ring.zero());
            std::vector<bool> needed(maxe + 1, false);
            for (const auto& t : p.terms()) needed[t.exps[k]] = true;
            for (std::uint32_t e = 1; e <= maxe; ++e)
                if (needed[e]) powers[k][e] = carrier_pow(ring, values[k], e);
        } else {
            for (std::uint32_t e = 1; e <= maxe; ++e) powers[k].push_back(ring.mul(powers[k].back(), values[k]));
        }
    }
    CV acc = ring.zero();
    for (const auto& t : p.terms()) {
        CV term = lift(t.coeff);
        for (std::size_t k = 0; k < w; ++k)
            if (t.exps[k]) term = ring.mul(term, powers[k][t.exps[k]]);
        acc = ring.add(acc, term);
    }
    return acc;
}

/// Evaluates p under a name -> value assignment. Throws MissingVariable.
template <class D, class Carrier, class Lift>
typename Carrier::Value evaluate(const Polynomial<D>& p, const std::map<std::string, typename Carrier::Value>& assignment,
                                 const Carrier& ring, const Lift& lift) {
    std::vector<typename Carrier::Value> values;
    values.reserve(p.vars().size());
    for (const auto& v : p.vars()) {
        const auto it = assignment.find(v);
        if (it == assignment.end()) throw Error(ErrorCode::MissingVariable, "no value for " + v);
        values.push_back(it->second);
    }
    return evaluate_aligned(p, values, ring, lift);
}

/// Symbolic composition; variables without an image stay as they are.
template <class D>
Polynomial<D> substitute(const Polynomial<D>& p, const std::map<std::string, Polynomial<D>>& images) {
    PolyCarrier<D> ring{p.domain()};
    std::vector<Polynomial<D>> values;
    for (const auto& v : p.vars()) {
        for (const auto& [name, img] : images)
            if (img.domain() != p.domain() && !(*img.domain() == *p.domain()))
                throw Error(ErrorCode::RingMismatch, "substitution image for " + name + " has another coefficient ring");
        const auto it = images.find(v);
        values.push_back(it == images.end() ? Polynomial<D>::variable(p.domain(), v) : it->second);
    }
    const auto& domain = p.domain();
    return evaluate_aligned(p, values, ring, [&](const typename D::Value& c) { return Polynomial<D>::constant(domain, c); });
}

/// Renames variables; the map must be injective on the variables of p.
template <class D>
Polynomial<D> rename(const Polynomial<D>& p, const std::map<std::string, std::string>& names) {
    std::vector<std::string> vars;
    for (const auto& v : p.vars()) {
        const auto it = names.find(v);
        vars.push_back(it == names.end() ? v : it->second);
    }
    std::vector<std::pair<Exponents, typename D::Value>> terms;
    for (const auto& t : p.terms()) terms.emplace_back(t.exps, t.coeff);
    return Polynomial<D>::from_terms(p.domain(), vars, std::move(terms));
}

/// A family of polynomials over a common ordered list of input slots,
/// compiled for repeated evaluation in one finite ring. Coefficients are
/// lifted once at compile time.
class CompiledSystem {
   public:
    CompiledSystem() = default;
    /// `lift` maps coefficient codes of the polynomials' domain into `target`.
    CompiledSystem(const std::vector<RingPoly>& polys, const std::vector<std::string>& slots,
                   arith::FiniteRingPtr target, const std::function<std::uint32_t(std::uint32_t)>& lift);

    std::size_t outputs() const noexcept { return polys_.size(); }
    std::size_t slots() const noexcept { return max_exp_.size(); }
    /// Slots mentioned by output i.
    const std::vector<std::size_t>& support(std::size_t i) const { return support_[i]; }

    /// Evaluates every output.
    void evaluate(const std::uint32_t* values, std::uint32_t* out) const;
    /// Evaluates output i only.
    std::uint32_t evaluate_one(std::size_t i, const std::uint32_t* values) const;

   private:
    struct Factor {
        std::uint32_t slot;
        std::uint32_t exp;
    };
    struct Term {
        std::uint32_t coeff;
        std::vector<Factor> factors;
    };
    std::uint32_t eval_terms(const std::vector<Term>& terms, const std::uint32_t* values) const;

    arith::FiniteRingPtr ring_;
    std::vector<std::vector<Term>> polys_;
    std::vector<std::vector<std::size_t>> support_;
    std::vector<std::uint32_t> max_exp_;
};

}  // namespace greenberg::poly
