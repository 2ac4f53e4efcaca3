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


#include "greenberg/io/json_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace greenberg::io {

namespace {

std::string escape_token(const std::string& key) {
    std::string out;
    for (const char c : key) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

// Walks already validated JSON text and records the offset of the value at
// `target`.
class Locator {
   public:
    Locator(const std::string& text, const std::string& target) : text_(text), target_(target) {}

    std::optional<std::size_t> run() {
        std::size_t i = 0;
        value(i, "");
        return found_;
    }

   private:
    void skip(std::size_t& i) const {
        while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
    }
    std::string string_token(std::size_t& i) const {
        std::string s;
        ++i;
        while (i < text_.size() && text_[i] != '"') {
            if (text_[i] == '\\' && i + 1 < text_.size()) ++i;
            s += text_[i++];
        }
        ++i;
        return s;
    }
    void value(std::size_t& i, const std::string& ptr) {
        skip(i);
        if (i >= text_.size()) return;
        if (ptr == target_ && !found_) found_ = i;
        const char c = text_[i];
        if (c == '{' || c == '[') {
            const char close = c == '{' ? '}' : ']';
            ++i;
            for (std::size_t index = 0;; ++index) {
                skip(i);
                if (i >= text_.size() || text_[i] == close) break;
                std::string child = ptr + "/";
                if (c == '{') {
                    child += escape_token(string_token(i));
                    skip(i);
                    ++i;  // ':'
                } else {
                    child += std::to_string(index);
                }
                value(i, child);
                skip(i);
                if (i < text_.size() && text_[i] == ',') ++i;
            }
            ++i;
        } else if (c == '"') {
            string_token(i);
        } else {
            while (i < text_.size() && text_[i] != ',' && text_[i] != ']' && text_[i] != '}' &&
                   !std::isspace(static_cast<unsigned char>(text_[i])))
                ++i;
        }
    }

    const std::string& text_;
    const std::string& target_;
    std::optional<std::size_t> found_;
};

}  // namespace

Document Document::parse(std::string text, std::string name) {
    Document d;
    d.name_ = std::move(name);
    d.text_ = std::move(text);
    try {
        d.root_ = Json::parse(d.text_);
    } catch (const Json::parse_error& e) {
        const auto [line, col] = line_column(d.text_, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        const auto pos = what.find("syntax error");
        throw Error(ErrorCode::ParseError, d.name_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                                               (pos == std::string::npos ? what : what.substr(pos)));
    }
    return d;
}

Document Document::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

std::pair<std::size_t, std::size_t> Document::locate(const std::string& pointer) const {
    const auto offset = Locator(text_, pointer).run();
    if (!offset) return {0, 0};
    return line_column(text_, *offset);
}

void Node::fail(const std::string& what, ErrorCode code) const {
    const auto [line, col] = doc_->locate(pointer_);
    std::string where = doc_->name();
    if (line > 0) where += ":" + std::to_string(line) + ":" + std::to_string(col);
    throw Error(code, where + ": " + what + " (at " + (pointer_.empty() ? "/" : pointer_) + ")");
}

void Node::only(std::initializer_list<const char*> allowed) const {
    if (!value_->is_object()) fail("expected an object");
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : value_->items())
        if (!keys.count(item.key())) at(item.key()).fail("unknown key \"" + item.key() + "\"");
}

bool Node::has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

Node Node::at(const std::string& key) const {
    if (!value_->is_object()) fail("expected an object");
    const auto it = value_->find(key);
    if (it == value_->end()) fail("missing key \"" + key + "\"");
    return Node(*doc_, *it, pointer_ + "/" + escape_token(key));
}

std::optional<Node> Node::find(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return at(key);
}

std::vector<Node> Node::items() const {
    if (!value_->is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < value_->size(); ++i)
        out.emplace_back(*doc_, (*value_)[i], pointer_ + "/" + std::to_string(i));
    return out;
}

std::vector<std::pair<std::string, Node>> Node::members() const {
    if (!value_->is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (const auto& item : value_->items()) out.emplace_back(item.key(), at(item.key()));
    return out;
}

std::int64_t Node::integer() const {
    if (!value_->is_number_integer()) fail("expected an integer");
    return value_->get<std::int64_t>();
}

std::uint64_t Node::unsigned_integer() const {
    if (!value_->is_number_integer() || (value_->is_number_integer() && !value_->is_number_unsigned() &&
                                         value_->get<std::int64_t>() < 0))
        fail("expected a non-negative integer");
    return value_->get<std::uint64_t>();
}

bool Node::boolean() const {
    if (!value_->is_boolean()) fail("expected true or false");
    return value_->get<bool>();
}

std::string Node::string() const {
    if (!value_->is_string()) fail("expected a string");
    return value_->get<std::string>();
}

std::vector<std::int64_t> Node::integers() const {
    std::vector<std::int64_t> out;
    for (const auto& n : items()) out.push_back(n.integer());
    return out;
}

std::vector<std::string> Node::strings() const {
    std::vector<std::string> out;
    for (const auto& n : items()) out.push_back(n.string());
    return out;
}

namespace {

// Rethrows library errors with the position of `node`.
template <class F>
auto located(const Node& node, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        node.fail(e.what(), e.code());
    }
}

unsigned small(const Node& node, std::uint64_t limit) {
    const auto v = node.unsigned_integer();
    if (v > limit) node.fail("value " + std::to_string(v) + " exceeds " + std::to_string(limit));
    return static_cast<unsigned>(v);
}

arith::FieldPtr residue_field(const Node& parent, std::int64_t p, const char* key) {
    const auto node = parent.find(key);
    if (!node) return located(parent, [&] { return arith::FiniteField::prime(p); });
    node->only({"modulus"});
    const auto modulus = node->at("modulus").integers();
    return located(*node, [&] { return arith::FiniteField::build(p, modulus); });
}

}  // namespace

arith::FieldPtr parse_field(const Node& node) {
    node.only({"p", "modulus"});
    const std::int64_t p = node.at("p").integer();
    if (!node.has("modulus")) return located(node.at("p"), [&] { return arith::FiniteField::prime(p); });
    const auto modulus = node.at("modulus").integers();
    return located(node, [&] { return arith::FiniteField::build(p, modulus); });
}

Json field_json(const arith::FieldPtr& k) {
    Json j;
    j["p"] = k->characteristic();
    if (!k->is_prime_field()) j["modulus"] = k->modulus();
    return j;
}

arith::AlgebraPtr parse_algebra(const Node& node, const Guards& guards) {
    node.only({"kind", "base", "m", "left", "right"});
    const std::string kind = node.at("kind").string();
    if (kind == "field") {
        node.only({"kind", "base"});
        const auto k = parse_field(node.at("base"));
        return located(node, [&] { return arith::FiniteAlgebra::field(k, guards.size_guard); });
    }
    if (kind == "dual_numbers") {
        node.only({"kind", "base", "m"});
        const auto k = parse_field(node.at("base"));
        const unsigned m = node.has("m") ? small(node.at("m"), 64) : 2;
        if (m < 2) node.at("m").fail("m must be at least 2");
        return located(node, [&] { return arith::FiniteAlgebra::dual_numbers(k, m, guards.size_guard); });
    }
    if (kind == "product") {
        node.only({"kind", "left", "right"});
        const auto l = parse_algebra(node.at("left"), guards);
        const auto r = parse_algebra(node.at("right"), guards);
        return located(node, [&] { return arith::FiniteAlgebra::product(*l, *r, guards.size_guard); });
    }
    node.at("kind").fail("unknown algebra kind \"" + kind + "\"");
}

ga::BaseRingSpec parse_base_ring(const Node& node) {
    node.only({"case", "p", "residue", "eisenstein"});
    const std::string c = node.at("case").string();
    ga::BaseRingSpec spec;
    if (c == "equal")
        spec.char_case = ga::CharCase::Equal;
    else if (c == "mixed")
        spec.char_case = ga::CharCase::Mixed;
    else
        node.at("case").fail("case must be \"equal\" or \"mixed\"");
    const std::int64_t p = node.at("p").integer();
    spec.k = residue_field(node, p, "residue");
    if (node.has("eisenstein")) spec.eisenstein = node.at("eisenstein").integers();
    located(node, [&] { ga::validate(spec); });
    return spec;
}

Json base_ring_json(const ga::BaseRingSpec& base) {
    Json j;
    j["case"] = base.char_case == ga::CharCase::Equal ? "equal" : "mixed";
    j["p"] = base.p();
    if (!base.k->is_prime_field()) j["residue"] = Json{{"modulus", base.k->modulus()}};
    if (!base.eisenstein.empty()) j["eisenstein"] = base.eisenstein;
    return j;
}

schemes::CoeffRing parse_coeff_ring(const Node& node) {
    node.only({"field", "base", "level"});
    if (node.has("field")) {
        node.only({"field"});
        return schemes::CoeffRing::field(parse_field(node.at("field")));
    }
    const auto base = parse_base_ring(node.at("base"));
    const unsigned level = small(node.at("level"), 64);
    return located(node, [&] { return schemes::CoeffRing::algebra(ga::GreenbergAlgebra::build(base, level)); });
}

Json coeff_ring_json(const schemes::CoeffRing& ring) {
    if (!ring.over_ga()) return Json{{"field", field_json(ring.k())}};
    return Json{{"base", base_ring_json(ring.ga()->base())}, {"level", ring.level()}};
}

namespace {

schemes::CoefficientSpec parse_coefficient(const Node& node) {
    schemes::CoefficientSpec c;
    if (node.json().is_number_integer()) {
        c.pi_poly = {node.integer()};
        return c;
    }
    node.only({"pi", "coords"});
    if (node.has("pi") == node.has("coords")) node.fail("give exactly one of \"pi\" and \"coords\"");
    if (node.has("pi")) {
        c.pi_poly = node.at("pi").integers();
    } else {
        std::vector<std::uint32_t> coords;
        for (const auto v : node.at("coords").integers()) {
            if (v < 0 || v > 0xffffffffLL) node.at("coords").fail("coordinates are field element codes");
            coords.push_back(static_cast<std::uint32_t>(v));
        }
        c.coords = std::move(coords);
    }
    return c;
}

std::vector<schemes::TermSpec> parse_terms(const Node& node, std::size_t nvars) {
    std::vector<schemes::TermSpec> terms;
    for (const auto& t : node.items()) {
        t.only({"c", "e", "neg"});
        schemes::TermSpec term;
        term.coeff = t.has("c") ? parse_coefficient(t.at("c")) : schemes::CoefficientSpec{{1}, {}, false};
        if (t.has("neg")) term.coeff.negate = t.at("neg").boolean();
        for (const auto& e : t.at("e").items()) term.exps.push_back(small(e, poly::kMaxExponent));
        if (term.exps.size() != nvars)
            t.at("e").fail("expected " + std::to_string(nvars) + " exponents, got " + std::to_string(term.exps.size()));
        terms.push_back(std::move(term));
    }
    return terms;
}

// Parses text over the ring and re-expresses it in the declared variables.
poly::RingPoly parse_text(const schemes::CoeffRing& ring, const std::vector<std::string>& vars,
                          const std::string& text) {
    const auto p = poly::parse_polynomial(ring.domain(), text);
    const std::set<std::string> declared(vars.begin(), vars.end());
    for (const auto& v : p.vars())
        if (!declared.count(v)) throw Error(ErrorCode::MissingVariable, "undeclared variable " + v);
    return p;
}

struct TextSlot {
    std::string text;
    std::string pointer;
};

}  // namespace

SchemeFile parse_scheme(const Node& node) {
    node.only({"name", "ring", "vars", "gens"});
    SchemeFile f;
    if (node.has("name")) f.name = node.at("name").string();
    if (node.has("ring")) f.ring = parse_coeff_ring(node.at("ring"));
    f.vars = node.at("vars").strings();
    const std::set<std::string> unique(f.vars.begin(), f.vars.end());
    if (unique.size() != f.vars.size()) node.at("vars").fail("repeated variable");
    for (const auto& v : f.vars)
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            node.at("vars").fail("bad variable name \"" + v + "\"");
    if (node.has("gens"))
        for (const auto& g : node.at("gens").items()) {
            f.pointers.push_back(g.pointer());
            if (g.is_string())
                f.gens.emplace_back(g.string());
            else
                f.gens.emplace_back(parse_terms(g, f.vars.size()));
        }
    return f;
}

schemes::AffinePresentation SchemeFile::over(const schemes::CoeffRing& r) const {
    if (ring && *ring != r)
        throw Error(ErrorCode::RingMismatch, "scheme " + name + " is declared over " + ring->label() + ", not " +
                                                 r.label());
    schemes::AffinePresentation z{r, vars, {}};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (const auto* terms = std::get_if<std::vector<schemes::TermSpec>>(&gens[i])) {
            z.gens.push_back(schemes::instantiate(*terms, vars, r));
        } else {
            try {
                z.gens.push_back(parse_text(r, vars, std::get<std::string>(gens[i])));
            } catch (const Error& e) {
                throw Error(e.code(), std::string(e.what()) + " (generator " + pointers[i] + ")");
            }
        }
    }
    z.validate();
    return z;
}

schemes::AffinePresentation SchemeFile::presentation() const {
    if (!ring) throw Error(ErrorCode::InvalidArgument, "scheme " + name + " does not declare its ring");
    return over(*ring);
}

schemes::SchemeSpec SchemeFile::spec() const {
    schemes::SchemeSpec s{name, vars, {}};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto* terms = std::get_if<std::vector<schemes::TermSpec>>(&gens[i]);
        if (!terms)
            throw Error(ErrorCode::InvalidArgument, "generator " + pointers[i] +
                                                        " is text; ring-independent use needs term lists");
        s.gens.push_back(*terms);
    }
    return s;
}

Json presentation_json(const schemes::AffinePresentation& z) {
    Json j;
    j["ring"] = coeff_ring_json(z.ring);
    j["vars"] = z.vars;
    j["gens"] = Json::array();
    for (const auto& g : z.gens) j["gens"].push_back(g.to_string());
    return j;
}

namespace {

schemes::AffinePresentation scheme_over(const Node& node, const std::optional<schemes::CoeffRing>& ring) {
    const auto f = parse_scheme(node);
    return located(node, [&] { return ring ? f.over(*ring) : f.presentation(); });
}

std::map<std::string, poly::RingPoly> parse_images(const Node& node, const schemes::AffinePresentation& source) {
    std::map<std::string, poly::RingPoly> images;
    for (const auto& [var, value] : node.members()) {
        if (value.is_string())
            images.emplace(var, located(value, [&] { return parse_text(source.ring, source.vars, value.string()); }));
        else
            images.emplace(var, located(value, [&] {
                               return schemes::instantiate(parse_terms(value, source.vars.size()), source.vars,
                                                           source.ring);
                           }));
    }
    return images;
}

}  // namespace

schemes::MorphismPresentation parse_morphism(const Node& node, const std::optional<schemes::CoeffRing>& ring) {
    node.only({"source", "target", "images"});
    schemes::MorphismPresentation f;
    f.source = scheme_over(node.at("source"), ring);
    f.target = scheme_over(node.at("target"), ring ? ring : std::optional(f.source.ring));
    f.images = parse_images(node.at("images"), f.source);
    located(node, [&] { f.validate(); });
    return f;
}

schemes::GroupSchemeSpec parse_group(const Node& node, const std::optional<schemes::CoeffRing>& ring) {
    node.only({"scheme", "identity", "law"});
    schemes::GroupSchemeSpec g;
    g.presentation = scheme_over(node.at("scheme"), ring);
    const auto ids = node.at("identity").items();
    if (ids.size() != g.presentation.vars.size()) node.at("identity").fail("one identity coordinate per variable");
    for (const auto& c : ids)
        g.identity.push_back(located(c, [&] { return schemes::instantiate(parse_coefficient(c), g.presentation.ring); }));
    if (node.has("law")) {
        schemes::MorphismPresentation law;
        law.source = schemes::scheme_product(g.presentation, g.presentation);
        law.target = g.presentation;
        law.images = parse_images(node.at("law"), law.source);
        located(node.at("law"), [&] { law.validate(); });
        g.law = std::move(law);
    }
    return g;
}

weil::ExtensionData parse_extension(const Node& node) {
    const std::string type = node.at("type").string();
    if (type == "field") {
        node.only({"type", "p", "residue_base", "residue_top"});
        const std::int64_t p = node.at("p").integer();
        const auto k = residue_field(node, p, "residue_base");
        const auto top = residue_field(node, p, "residue_top");
        return located(node, [&] { return weil::ext_build_field(k, top); });
    }
    if (type == "mixed") {
        node.only({"type", "p", "residue_top", "eisenstein", "n"});
        const std::int64_t p = node.at("p").integer();
        const auto top = residue_field(node, p, "residue_top");
        std::vector<std::int64_t> f;
        if (node.has("eisenstein")) f = node.at("eisenstein").integers();
        const unsigned n = small(node.at("n"), 16);
        return located(node, [&] { return weil::ext_build_mixed(arith::FiniteField::prime(p), top, f, n); });
    }
    if (type == "equal") {
        node.only({"type", "p", "residue", "top_level", "base_level"});
        const std::int64_t p = node.at("p").integer();
        const auto k = residue_field(node, p, "residue");
        const unsigned top = small(node.at("top_level"), 64);
        const bool over_k = !node.has("base_level");
        const unsigned base = over_k ? 0 : small(node.at("base_level"), 64);
        return located(node, [&] { return weil::ext_build_equal(k, top, base, over_k); });
    }
    node.at("type").fail("extension type must be \"field\", \"mixed\" or \"equal\"");
}

JobConfig parse_config(const Node& node) {
    node.only({"guards", "cache", "seed", "output"});
    JobConfig c;
    if (const auto g = node.find("guards")) {
        g->only({"size_guard", "candidate_guard", "term_guard"});
        if (g->has("size_guard")) c.guards.size_guard = g->at("size_guard").unsigned_integer();
        if (g->has("candidate_guard")) c.guards.candidate_guard = g->at("candidate_guard").unsigned_integer();
        if (g->has("term_guard")) c.guards.term_guard = g->at("term_guard").unsigned_integer();
    }
    if (node.has("cache")) c.cache = node.at("cache").string();
    if (node.has("seed")) c.seed = node.at("seed").unsigned_integer();
    if (node.has("output")) c.output = node.at("output").string();
    return c;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace greenberg::io
