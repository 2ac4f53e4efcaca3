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

#include "greenberg/witt/witt_ring.hpp"

#include <map>
#include <mutex>

#include "greenberg/error.hpp"

namespace greenberg::witt {

CoordinateLawsPtr witt_coordinate_laws(std::uint32_t p, unsigned n) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, unsigned>, CoordinateLawsPtr> memo;
    {
        std::lock_guard<std::mutex> lock(mutex);
        const auto it = memo.find({p, n});
        if (it != memo.end()) return it->second;
    }
    const ReducedWittLawsPtr r = reduced_laws(p, n);
    auto laws = std::make_shared<CoordinateLaws>();
    laws->width = n;
    laws->fp = r->fp;
    laws->add = r->sum;
    laws->mul = r->prod;
    laws->neg = r->neg;
    laws->zero.assign(n, 0);
    laws->one.assign(n, 0);
    laws->one[0] = 1;
    std::lock_guard<std::mutex> lock(mutex);
    return memo.try_emplace({p, n}, laws).first->second;
}

WittRing::WittRing(std::uint32_t p, unsigned n, arith::FiniteRingPtr algebra)
    : p_(p),
      n_(n),
      ring_(witt_coordinate_laws(p, n), algebra,
            "W" + std::to_string(n) + "(" + algebra->name() + ")") {
    if (algebra->from_integer(p) != algebra->zero())
        throw Error(ErrorCode::InvalidArgument, algebra->name() + " is not an F_" + std::to_string(p) + "-algebra");
}

WittRing::Vec WittRing::verschiebung(const Vec& a) const {
    if (a.size() != n_) throw Error(ErrorCode::LengthMismatch, "Witt vector has wrong length");
    Vec r(n_, algebra()->zero());
    for (unsigned i = 0; i + 1 < n_; ++i) r[i + 1] = a[i];
    return r;
}

WittRing::Vec WittRing::frobenius(const Vec& a) const {
    if (a.size() != n_) throw Error(ErrorCode::LengthMismatch, "Witt vector has wrong length");
    Vec r(n_);
    for (unsigned i = 0; i < n_; ++i) r[i] = algebra()->pow(a[i], p_);
    return r;
}

WittRing::Vec WittRing::teichmueller(std::uint32_t x) const {
    Vec r(n_, algebra()->zero());
    r[0] = x;
    return r;
}

WittRing::Vec WittRing::map(const Vec& a, const std::vector<std::uint32_t>& phi) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = phi.at(a[i]);
    return r;
}

}  // namespace greenberg::witt
