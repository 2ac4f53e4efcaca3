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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "greenberg/error.hpp"
#include "greenberg/poly/domain.hpp"

namespace greenberg::poly {

using Exponents = std::vector<std::uint32_t>;

/// Largest exponent a polynomial may carry.
inline constexpr std::uint32_t kMaxExponent = 1u << 16;

/// Natural order on variable names: digit runs compare numerically, so
/// x2 < x10 and x0 < y0.
bool natural_less(const std::string& a, const std::string& b);

/// Process-wide cap on the number of terms of a product (SizeGuard).
std::uint64_t term_guard();
void set_term_guard(std::uint64_t guard);

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : e) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

/// Graded lexicographic comparison, "a comes before b" in canonical order:
/// larger total degree first, then lexicographically larger exponents first.
bool grlex_before(const Exponents& a, const Exponents& b);

/// Sparse multivariate polynomial over a coefficient domain D.
///
/// Canonical form: `vars()` lists exactly the variables that occur, in
/// natural order; terms are sorted by `grlex_before`; no zero coefficients.
/// Two equal polynomials therefore have identical data and text.
template <class D>
class Polynomial {
   public:
    using Domain = D;
    using Value = typename D::Value;
    using DomainPtr = std::shared_ptr<const D>;
    struct Term {
        Exponents exps;
        Value coeff;
        bool operator==(const Term& o) const { return exps == o.exps && coeff == o.coeff; }
    };

    explicit Polynomial(DomainPtr domain) : domain_(std::move(domain)) {}

    static Polynomial constant(DomainPtr domain, const Value& c) {
        Polynomial p(std::move(domain));
        if (!p.domain_->is_zero(c)) p.terms_.push_back({{}, c});
        return p;
    }
    static Polynomial integer(DomainPtr domain, std::int64_t m) {
        const Value c = domain->from_integer(m);
        return constant(std::move(domain), c);
    }
    static Polynomial variable(DomainPtr domain, const std::string& name) {
        const Value one = domain->one();
        return monomial(std::move(domain), one, {{name, 1}});
    }
    static Polynomial monomial(DomainPtr domain, const Value& c,
                               const std::vector<std::pair<std::string, std::uint32_t>>& powers) {
        std::map<std::string, std::uint32_t> merged;
        for (const auto& [name, e] : powers) {
            if (e == 0) continue;
            const std::uint64_t total = std::uint64_t{merged[name]} + e;
            if (total > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "exponent of " + name);
            merged[name] = static_cast<std::uint32_t>(total);
        }
        std::vector<std::string> vars;
        for (const auto& [name, e] : merged)
            if (e > 0) vars.push_back(name);
        std::sort(vars.begin(), vars.end(), natural_less);
        Exponents exps;
        for (const auto& v : vars) exps.push_back(merged[v]);
        Polynomial p(std::move(domain));
        if (p.domain_->is_zero(c)) return p;
        p.vars_ = std::move(vars);
        p.terms_.push_back({std::move(exps), c});
        return p;
    }

    const DomainPtr& domain() const noexcept { return domain_; }
    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return vars_.empty(); }
    /// Constant term (zero if absent).
    Value constant_term() const {
        if (!terms_.empty() && is_zero_exps(terms_.back().exps)) return terms_.back().coeff;
        return domain_->zero();
    }
    bool mentions(const std::string& name) const {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }
    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, degree_of(t.exps));
        return d;
    }
    std::uint32_t degree_in(const std::string& name) const {
        const auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) return 0;
        const std::size_t k = static_cast<std::size_t>(it - vars_.begin());
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.exps[k]);
        return d;
    }

    Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
    Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = domain_->neg(t.coeff);
        r.normalize_after_coeff_change();
        return r;
    }
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scale(const Value& c) const {
        Polynomial r(domain_);
        r.vars_ = vars_;
        for (const auto& t : terms_) {
            Value v = domain_->mul(t.coeff, c);
            if (!domain_->is_zero(v)) r.terms_.push_back({t.exps, std::move(v)});
        }
        r.prune_vars();
        return r;
    }
    Polynomial pow(std::uint64_t e) const {
        Polynomial result = integer(domain_, 1), base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }
    /// Partial derivative with respect to `name`.
    Polynomial derivative(const std::string& name) const {
        const auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) return Polynomial(domain_);
        const std::size_t k = static_cast<std::size_t>(it - vars_.begin());
        Accumulator acc;
        for (const auto& t : terms_) {
            if (t.exps[k] == 0) continue;
            Exponents e = t.exps;
            const Value c = domain_->mul(t.coeff, domain_->from_integer(e[k]));
            --e[k];
            accumulate(acc, std::move(e), c);
        }
        return finish(domain_, vars_, std::move(acc));
    }

    bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical text, e.g. "3*x0^2*y1 + x1 - 2"; "0" for the zero polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            const bool neg = domain_->signed_output() && domain_->is_negative(t.coeff);
            const Value mag = neg ? domain_->neg(t.coeff) : t.coeff;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            const std::string mono = monomial_text(t.exps);
            if (mono.empty())
                out += domain_->format(mag);
            else if (domain_->is_one(mag))
                out += mono;
            else
                out += domain_->format(mag) + "*" + mono;
        }
        return out;
    }

    /// Builds from (exponents over `vars`, coefficient) pairs in any order;
    /// `vars` need not be sorted and may contain unused names.
    static Polynomial from_terms(DomainPtr domain, const std::vector<std::string>& vars,
                                 std::vector<std::pair<Exponents, Value>> terms) {
        std::vector<std::size_t> perm(vars.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return natural_less(vars[a], vars[b]); });
        std::vector<std::string> sorted;
        for (auto i : perm) sorted.push_back(vars[i]);
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1]) throw Error(ErrorCode::InvalidArgument, "duplicate variable " + sorted[i]);
        Accumulator acc;
        Polynomial tmp(domain);
        for (auto& [e, c] : terms) {
            if (e.size() != vars.size()) throw Error(ErrorCode::InvalidArgument, "exponent arity mismatch");
            Exponents pe(e.size());
            for (std::size_t i = 0; i < perm.size(); ++i) {
                if (e[perm[i]] > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "exponent of " + sorted[i]);
                pe[i] = e[perm[i]];
            }
            tmp.accumulate(acc, std::move(pe), c);
        }
        return finish(std::move(domain), sorted, std::move(acc));
    }

    /// Text of one monomial over `vars()`, e.g. "x0^2*y1"; empty for 1.
    std::string monomial_text(const Exponents& exps) const {
        std::string s;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars_[i];
            if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
        }
        return s;
    }

   private:
    using Accumulator = std::unordered_map<Exponents, Value, ExponentsHash>;

    static std::uint64_t degree_of(const Exponents& e) {
        std::uint64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }
    static bool is_zero_exps(const Exponents& e) {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    void accumulate(Accumulator& acc, Exponents e, const Value& c) const {
        auto [it, inserted] = acc.try_emplace(std::move(e), c);
        if (!inserted) it->second = domain_->add(it->second, c);
    }

    static Polynomial finish(DomainPtr domain, const std::vector<std::string>& vars, Accumulator acc) {
        Polynomial r(std::move(domain));
        r.vars_ = vars;
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!r.domain_->is_zero(c)) r.terms_.push_back({e, std::move(c)});
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return grlex_before(a.exps, b.exps); });
        r.prune_vars();
        return r;
    }

    // Removes variables that no longer occur; term order is unaffected.
    void prune_vars() {
        std::vector<bool> used(vars_.size(), false);
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < t.exps.size(); ++i)
                if (t.exps[i]) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) vars.push_back(vars_[i]);
        for (auto& t : terms_) {
            Exponents e;
            for (std::size_t i = 0; i < t.exps.size(); ++i)
                if (used[i]) e.push_back(t.exps[i]);
            t.exps = std::move(e);
        }
        vars_ = std::move(vars);
    }

    void normalize_after_coeff_change() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [&](const Term& t) { return domain_->is_zero(t.coeff); }),
                     terms_.end());
        prune_vars();
    }

    void check_domain(const Polynomial& o) const {
        if (domain_ != o.domain_ && !(*domain_ == *o.domain_))
            throw Error(ErrorCode::RingMismatch, "polynomials over " + domain_->name() + " and " + o.domain_->name());
    }

    // Merged variable list and index maps from each operand into it.
    static std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                               std::vector<std::size_t>& ia, std::vector<std::size_t>& ib) {
        std::vector<std::string> out;
        std::size_t i = 0, j = 0;
        ia.assign(a.size(), 0);
        ib.assign(b.size(), 0);
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && natural_less(a[i], b[j]))) {
                ia[i++] = out.size();
                out.push_back(a[i - 1]);
            } else if (i == a.size() || natural_less(b[j], a[i])) {
                ib[j++] = out.size();
                out.push_back(b[j - 1]);
            } else {
                ia[i++] = out.size();
                ib[j++] = out.size();
                out.push_back(a[i - 1]);
            }
        }
        return out;
    }
    static Exponents remap(const Exponents& e, const std::vector<std::size_t>& idx, std::size_t width) {
        Exponents r(width, 0);
        for (std::size_t i = 0; i < e.size(); ++i) r[idx[i]] = e[i];
        return r;
    }

    Polynomial combine(const Polynomial& o, bool subtract) const {
        check_domain(o);
        if (o.terms_.empty()) return *this;
        if (terms_.empty()) return subtract ? -o : o;
        std::vector<std::size_t> ia, ib;
        const auto vars = merge_vars(vars_, o.vars_, ia, ib);
        Accumulator acc;
        acc.reserve(terms_.size() + o.terms_.size());
        for (const auto& t : terms_) accumulate(acc, remap(t.exps, ia, vars.size()), t.coeff);
        for (const auto& t : o.terms_)
            accumulate(acc, remap(t.exps, ib, vars.size()), subtract ? domain_->neg(t.coeff) : t.coeff);
        return finish(domain_, vars, std::move(acc));
    }

    DomainPtr domain_;
    std::vector<std::string> vars_;
    std::vector<Term> terms_;
};

template <class D>
Polynomial<D> Polynomial<D>::operator*(const Polynomial& o) const {
    check_domain(o);
    if (terms_.empty() || o.terms_.empty()) return Polynomial(domain_);
    std::vector<std::size_t> ia, ib;
    const auto vars = merge_vars(vars_, o.vars_, ia, ib);
    const std::size_t w = vars.size();
    std::vector<Exponents> ea, eb;
    ea.reserve(terms_.size());
    eb.reserve(o.terms_.size());
    for (const auto& t : terms_) ea.push_back(remap(t.exps, ia, w));
    for (const auto& t : o.terms_) eb.push_back(remap(t.exps, ib, w));
    Accumulator acc;
    const std::uint64_t guard = term_guard();
    Exponents e(w);
    for (std::size_t i = 0; i < ea.size(); ++i) {
        for (std::size_t j = 0; j < eb.size(); ++j) {
            for (std::size_t k = 0; k < w; ++k) {
                e[k] = ea[i][k] + eb[j][k];
                if (e[k] > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "exponent of " + vars[k]);
            }
            accumulate(acc, e, domain_->mul(terms_[i].coeff, o.terms_[j].coeff));
        }
        if (acc.size() > guard)
            throw Error(ErrorCode::SizeGuard, "product exceeds " + std::to_string(guard) + " terms");
    }
    return finish(domain_, vars, std::move(acc));
}

using IntPoly = Polynomial<IntegerDomain>;
using RingPoly = Polynomial<RingDomain>;

/// Reduces integer coefficients into a finite ring domain (Z -> ring).
RingPoly map_coeffs(const IntPoly& a, const RingDomainPtr& target);

/// Divides every coefficient by c; throws NotDivisible instead of truncating.
IntPoly div_exact_int(const IntPoly& a, const mpz_class& c);

/// Parses canonical text (and the same grammar with arbitrary term order and
/// spacing) back into a polynomial over `domain`. Coefficients are parsed by
/// the domain, so ring labels such as "[1,0]" round-trip.
template <class D>
Polynomial<D> parse_polynomial(const std::shared_ptr<const D>& domain, const std::string& text);

}  // namespace greenberg::poly
