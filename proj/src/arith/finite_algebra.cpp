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

#include "greenberg/arith/finite_algebra.hpp"

#include "greenberg/error.hpp"

namespace greenberg::arith {

namespace {

using Vec = std::vector<FqElem>;

Vec vec_add(const FiniteField& f, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_mul(const FiniteField& f, const FiniteAlgebra::Table& table, const Vec& a, const Vec& b) {
    const std::size_t t = a.size();
    Vec r(t, 0);
    for (std::size_t i = 0; i < t; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < t; ++j) {
            if (b[j] == 0) continue;
            const FqElem c = f.mul(a[i], b[j]);
            for (std::size_t k = 0; k < t; ++k) r[k] = f.add(r[k], f.mul(c, table[i][j][k]));
        }
    }
    return r;
}

Vec basis_vector(std::size_t t, std::size_t i) {
    Vec v(t, 0);
    v[i] = 1;
    return v;
}

}  // namespace

std::shared_ptr<const FiniteAlgebra> FiniteAlgebra::from_structure_constants(std::string name, FieldPtr base,
                                                                             Table table, std::vector<FqElem> unit,
                                                                             std::uint64_t size_guard) {
    const std::size_t t = table.size();
    if (t == 0) throw Error(ErrorCode::InvalidArgument, "algebra of dimension 0");
    if (unit.size() != t) throw Error(ErrorCode::InvalidArgument, "unit has wrong length");
    for (const auto& row : table) {
        if (row.size() != t) throw Error(ErrorCode::InvalidArgument, "structure table is not square");
        for (const auto& entry : row)
            if (entry.size() != t) throw Error(ErrorCode::InvalidArgument, "structure constant has wrong length");
    }
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < t; ++i) {
        size *= base->order();
        if (size > size_guard)
            throw Error(ErrorCode::SizeGuard, name + " has more than " + std::to_string(size_guard) + " elements");
    }
    const FiniteField& f = *base;
    for (std::size_t i = 0; i < t; ++i) {
        const Vec ei = basis_vector(t, i);
        if (vec_mul(f, table, unit, ei) != ei)
            throw Error(ErrorCode::InvalidArgument, name + ": unit is not neutral on e_" + std::to_string(i));
        for (std::size_t j = 0; j < t; ++j) {
            const Vec ej = basis_vector(t, j);
            if (table[i][j] != table[j][i])
                throw Error(ErrorCode::InvalidArgument, name + ": multiplication is not commutative");
            const Vec eij = vec_mul(f, table, ei, ej);
            for (std::size_t k = 0; k < t; ++k) {
                const Vec ek = basis_vector(t, k);
                if (vec_mul(f, table, eij, ek) != vec_mul(f, table, ei, vec_mul(f, table, ej, ek)))
                    throw Error(ErrorCode::InvalidArgument, name + ": multiplication is not associative");
            }
        }
    }

    std::shared_ptr<FiniteAlgebra> alg(new FiniteAlgebra());
    alg->name_ = std::move(name);
    alg->base_ = std::move(base);
    alg->dim_ = static_cast<unsigned>(t);
    alg->table_ = std::move(table);
    alg->unit_ = std::move(unit);
    const FiniteAlgebra* self = alg.get();
    const FiniteField* field = alg->base_.get();
    auto add = [self, field](Element a, Element b) {
        return self->from_coords(vec_add(*field, self->coords(a), self->coords(b)));
    };
    auto mul = [self](Element a, Element b) { return self->mul_coords(a, b); };
    alg->ring_ = FiniteRing::tabulate(alg->name_, static_cast<std::uint32_t>(size), 0, alg->from_coords(alg->unit_),
                                      add, mul, size_guard);
    return alg;
}

std::shared_ptr<const FiniteAlgebra> FiniteAlgebra::field(FieldPtr base, std::uint64_t size_guard) {
    std::string name = base->name();
    return from_structure_constants(std::move(name), std::move(base), Table{{{1}}}, {1}, size_guard);
}

std::shared_ptr<const FiniteAlgebra> FiniteAlgebra::dual_numbers(FieldPtr base, unsigned m,
                                                                 std::uint64_t size_guard) {
    if (m < 2) throw Error(ErrorCode::InvalidArgument, "dual numbers need m >= 2");
    Table table(m, std::vector<Vec>(m, Vec(m, 0)));
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j)
            if (i + j < m) table[i][j][i + j] = 1;
    Vec unit(m, 0);
    unit[0] = 1;
    std::string name = base->name() + "[e]/(e^" + std::to_string(m) + ")";
    return from_structure_constants(std::move(name), std::move(base), std::move(table), std::move(unit),
                                    size_guard);
}

std::shared_ptr<const FiniteAlgebra> FiniteAlgebra::product(const FiniteAlgebra& left, const FiniteAlgebra& right,
                                                            std::uint64_t size_guard) {
    if (!same_field(left.base(), right.base()))
        throw Error(ErrorCode::BaseMismatch, "product of algebras over " + left.base()->name() + " and " +
                                                 right.base()->name());
    const unsigned t1 = left.dim(), t2 = right.dim(), t = t1 + t2;
    Table table(t, std::vector<Vec>(t, Vec(t, 0)));
    for (unsigned i = 0; i < t1; ++i)
        for (unsigned j = 0; j < t1; ++j)
            for (unsigned k = 0; k < t1; ++k) table[i][j][k] = left.table()[i][j][k];
    for (unsigned i = 0; i < t2; ++i)
        for (unsigned j = 0; j < t2; ++j)
            for (unsigned k = 0; k < t2; ++k) table[t1 + i][t1 + j][t1 + k] = right.table()[i][j][k];
    Vec unit(left.unit_coords());
    unit.insert(unit.end(), right.unit_coords().begin(), right.unit_coords().end());
    return from_structure_constants("(" + left.name() + " x " + right.name() + ")", left.base(), std::move(table),
                                    std::move(unit), size_guard);
}

std::shared_ptr<const FiniteAlgebra> FiniteAlgebra::base_change(const FiniteAlgebra& algebra, FieldPtr larger,
                                                                std::uint64_t size_guard) {
    const auto emb = find_embedding(algebra.base(), larger);
    if (!emb) throw Error(ErrorCode::BaseMismatch, algebra.base()->name() + " does not embed in " + larger->name());
    Table table = algebra.table();
    for (auto& row : table)
        for (auto& entry : row)
            for (auto& c : entry) c = (*emb)(c);
    Vec unit = algebra.unit_coords();
    for (auto& c : unit) c = (*emb)(c);
    std::string name = algebra.name() + "@" + larger->name();
    return from_structure_constants(std::move(name), std::move(larger), std::move(table), std::move(unit),
                                    size_guard);
}

std::vector<FqElem> FiniteAlgebra::coords(Element a) const {
    Vec c(dim_);
    const std::uint32_t q = base_->order();
    for (unsigned i = 0; i < dim_; ++i) {
        c[i] = a % q;
        a /= q;
    }
    return c;
}

FiniteAlgebra::Element FiniteAlgebra::from_coords(const std::vector<FqElem>& c) const {
    Element code = 0, scale = 1;
    for (unsigned i = 0; i < dim_; ++i) {
        code += c.at(i) * scale;
        scale *= base_->order();
    }
    return code;
}

FiniteAlgebra::Element FiniteAlgebra::mul_coords(Element a, Element b) const {
    return from_coords(vec_mul(*base_, table_, coords(a), coords(b)));
}

FiniteAlgebra::Element FiniteAlgebra::from_base(FqElem c) const {
    Vec v(dim_);
    for (unsigned i = 0; i < dim_; ++i) v[i] = base_->mul(c, unit_[i]);
    return from_coords(v);
}

std::vector<FiniteAlgebra::Element> FiniteAlgebra::enumerate(std::uint64_t size_guard) const {
    if (size() > size_guard)
        throw Error(ErrorCode::SizeGuard, name_ + " has more than " + std::to_string(size_guard) + " elements");
    return ring_->elements();
}

bool FiniteAlgebra::is_algebra_over(const FieldPtr& k) const { return find_embedding(k, base_).has_value(); }

std::vector<FiniteAlgebra::Element> FiniteAlgebra::structure_map(const FieldPtr& k) const {
    const auto emb = find_embedding(k, base_);
    if (!emb) throw Error(ErrorCode::BaseMismatch, name_ + " is not an algebra over " + k->name());
    std::vector<Element> out(k->order());
    for (FqElem c = 0; c < k->order(); ++c) out[c] = from_base((*emb)(c));
    return out;
}

std::string FiniteAlgebra::to_string(Element a) const {
    if (dim_ == 1) return base_->to_string(coords(a)[0]);
    std::string s = "(";
    const auto c = coords(a);
    for (unsigned i = 0; i < dim_; ++i) {
        if (i) s += ",";
        s += base_->to_string(c[i]);
    }
    return s + ")";
}

}  // namespace greenberg::arith
