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

#include "greenberg/poly/evaluate.hpp"

namespace greenberg::poly {

CompiledSystem::CompiledSystem(const std::vector<RingPoly>& polys, const std::vector<std::string>& slots,
                               arith::FiniteRingPtr target, const std::function<std::uint32_t(std::uint32_t)>& lift)
    : ring_(std::move(target)), max_exp_(slots.size(), 0) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < slots.size(); ++i) index[slots[i]] = i;
    for (const auto& p : polys) {
        std::vector<std::size_t> map;
        std::vector<bool> used(slots.size(), false);
        for (const auto& v : p.vars()) {
            const auto it = index.find(v);
            if (it == index.end()) throw Error(ErrorCode::MissingVariable, "no slot for " + v);
            map.push_back(it->second);
        }
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            const std::uint32_t c = lift(t.coeff);
            if (c == ring_->zero()) continue;
            Term term{c, {}};
            for (std::size_t k = 0; k < t.exps.size(); ++k) {
                if (t.exps[k] == 0) continue;
                term.factors.push_back({static_cast<std::uint32_t>(map[k]), t.exps[k]});
                max_exp_[map[k]] = std::max(max_exp_[map[k]], t.exps[k]);
                used[map[k]] = true;
            }
            terms.push_back(std::move(term));
        }
        polys_.push_back(std::move(terms));
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (used[i]) support.push_back(i);
        support_.push_back(std::move(support));
    }
}

std::uint32_t CompiledSystem::eval_terms(const std::vector<Term>& terms, const std::uint32_t* values) const {
    const arith::FiniteRing& r = *ring_;
    std::uint32_t acc = r.zero();
    for (const auto& t : terms) {
        std::uint32_t v = t.coeff;
        for (const auto& f : t.factors) {
            v = r.mul(v, f.exp == 1 ? values[f.slot] : r.pow(values[f.slot], f.exp));
            if (v == r.zero()) break;
        }
        acc = r.add(acc, v);
    }
    return acc;
}

void CompiledSystem::evaluate(const std::uint32_t* values, std::uint32_t* out) const {
    for (std::size_t i = 0; i < polys_.size(); ++i) out[i] = eval_terms(polys_[i], values);
}

std::uint32_t CompiledSystem::evaluate_one(std::size_t i, const std::uint32_t* values) const {
    return eval_terms(polys_[i], values);
}

}  // namespace greenberg::poly
