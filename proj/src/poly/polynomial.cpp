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

#include "greenberg/poly/polynomial.hpp"

#include <cctype>

namespace greenberg::poly {

namespace {

std::atomic<std::uint64_t> g_term_guard{1000000};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (is_digit(a[i]) && is_digit(b[j])) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && is_digit(a[ie])) ++ie;
            while (je < b.size() && is_digit(b[je])) ++je;
            std::size_t is = i, js = j;
            while (is + 1 < ie && a[is] == '0') ++is;
            while (js + 1 < je && b[js] == '0') ++js;
            if (ie - is != je - js) return ie - is < je - js;
            const int c = a.compare(is, ie - is, b, js, je - js);
            if (c != 0) return c < 0;
            if (ie - i != je - j) return ie - i < je - j;
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

std::uint64_t term_guard() { return g_term_guard.load(std::memory_order_relaxed); }
void set_term_guard(std::uint64_t guard) { g_term_guard.store(guard, std::memory_order_relaxed); }

bool grlex_before(const Exponents& a, const Exponents& b) {
    std::uint64_t da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

RingPoly map_coeffs(const IntPoly& a, const RingDomainPtr& target) {
    std::vector<std::pair<Exponents, RingDomain::Value>> terms;
    terms.reserve(a.size());
    for (const auto& t : a.terms()) terms.emplace_back(t.exps, target->from_mpz(t.coeff));
    return RingPoly::from_terms(target, a.vars(), std::move(terms));
}

IntPoly div_exact_int(const IntPoly& a, const mpz_class& c) {
    if (c == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
    std::vector<std::pair<Exponents, mpz_class>> terms;
    terms.reserve(a.size());
    for (const auto& t : a.terms()) {
        if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
            throw Error(ErrorCode::NotDivisible,
                        "coefficient " + t.coeff.get_str() + " is not divisible by " + c.get_str());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
        terms.emplace_back(t.exps, std::move(q));
    }
    return IntPoly::from_terms(a.domain(), a.vars(), std::move(terms));
}

namespace {

class Cursor {
   public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected a number");
        return text_.substr(start, pos_ - start);
    }
    std::string bracket() {
        skip_space();
        const std::size_t start = pos_;
        expect('[');
        int depth = 1;
        while (pos_ < text_.size() && depth > 0) {
            if (text_[pos_] == '[') ++depth;
            if (text_[pos_] == ']') --depth;
            ++pos_;
        }
        if (depth != 0) fail("unbalanced '['");
        return text_.substr(start, pos_ - start);
    }
    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_) fail("expected a variable name");
        return text_.substr(start, pos_ - start);
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, what + " at column " + std::to_string(pos_ + 1) + " of \"" + text_ + "\"");
    }

   private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

template <class D>
Polynomial<D> parse_polynomial(const std::shared_ptr<const D>& domain, const std::string& text) {
    using P = Polynomial<D>;
    Cursor cur(text);
    P result(domain);
    if (cur.at_end()) cur.fail("empty polynomial");
    bool negative = cur.accept('-');
    while (true) {
        typename D::Value coeff = domain->one();
        std::vector<std::pair<std::string, std::uint32_t>> powers;
        const char c = cur.peek();
        bool need_mono = true;
        if (is_digit(c) || c == '[') {
            coeff = domain->parse(c == '[' ? cur.bracket() : cur.digits());
            need_mono = cur.accept('*');
        }
        if (need_mono) {
            do {
                std::string name = cur.identifier();
                std::uint32_t e = 1;
                if (cur.accept('^')) {
                    const std::string d = cur.digits();
                    if (d.size() > 6 || std::stoul(d) > kMaxExponent) cur.fail("exponent too large");
                    e = static_cast<std::uint32_t>(std::stoul(d));
                }
                powers.emplace_back(std::move(name), e);
            } while (cur.accept('*'));
        }
        if (negative) coeff = domain->neg(coeff);
        result += P::monomial(domain, coeff, powers);
        if (cur.at_end()) break;
        if (cur.accept('+'))
            negative = false;
        else if (cur.accept('-'))
            negative = true;
        else
            cur.fail("expected '+' or '-'");
    }
    return result;
}

template IntPoly parse_polynomial<IntegerDomain>(const IntegerDomainPtr&, const std::string&);
template RingPoly parse_polynomial<RingDomain>(const RingDomainPtr&, const std::string&);

}  // namespace greenberg::poly
