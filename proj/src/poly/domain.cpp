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

#include "greenberg/poly/domain.hpp"

#include "greenberg/error.hpp"

namespace greenberg::poly {

std::shared_ptr<const IntegerDomain> IntegerDomain::instance() {
    static const auto domain = std::make_shared<const IntegerDomain>();
    return domain;
}

IntegerDomain::Value IntegerDomain::parse(const std::string& text) const {
    mpz_class v;
    if (text.empty() || v.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, "bad integer '" + text + "'");
    return v;
}

RingDomain::RingDomain(arith::FiniteRingPtr ring, std::vector<std::string> labels)
    : ring_(std::move(ring)), labels_(std::move(labels)) {
    if (labels_.size() != ring_->size()) throw Error(ErrorCode::InvalidArgument, "one label per ring element required");
    for (Value c = 0; c < labels_.size(); ++c) {
        if (!by_label_.emplace(labels_[c], c).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate coefficient label " + labels_[c]);
    }
    Value x = ring_->one();
    characteristic_ = 1;
    while (x != ring_->zero()) {
        x = ring_->add(x, ring_->one());
        ++characteristic_;
    }
}

std::shared_ptr<const RingDomain> RingDomain::of_field(const arith::FieldPtr& field) {
    std::vector<std::string> labels;
    for (arith::FqElem a = 0; a < field->order(); ++a) labels.push_back(field->to_string(a));
    auto d = std::make_shared<RingDomain>(field_ring(field), std::move(labels));
    d->field_ = field;
    return d;
}

RingDomain::Value RingDomain::from_mpz(const mpz_class& m) const {
    mpz_class r = m % mpz_class(static_cast<unsigned long>(characteristic_));
    if (r < 0) r += static_cast<unsigned long>(characteristic_);
    return from_integer(r.get_si());
}

RingDomain::Value RingDomain::parse(const std::string& text) const {
    const auto it = by_label_.find(text);
    if (it != by_label_.end()) return it->second;
    // Integers outside the label range are read through Z -> ring.
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
        mpz_class v(text, 10);
        return from_mpz(v);
    }
    throw Error(ErrorCode::ParseError, "unknown coefficient '" + text + "' for " + ring_->name());
}

arith::FiniteRingPtr field_ring(const arith::FieldPtr& field) {
    const arith::FiniteField* f = field.get();
    return arith::FiniteRing::tabulate(
        field->name(), field->order(), 0, 1, [f](auto a, auto b) { return f->add(a, b); },
        [f](auto a, auto b) { return f->mul(a, b); }, 4096);
}

}  // namespace greenberg::poly
