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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/error.hpp"
#include "greenberg/ga/greenberg_algebra.hpp"
#include "greenberg/schemes/presentation.hpp"
#include "greenberg/weil/extension.hpp"
#include "json.hpp"

namespace greenberg::io {

using Json = nlohmann::json;

/// A parsed JSON document that remembers its text, so that validation errors
/// can point at a line and column.
class Document {
   public:
    /// Throws ParseError with line/column on malformed JSON.
    static Document parse(std::string text, std::string name);
    /// Throws Io if the file cannot be read.
    static Document load(const std::string& path);

    const Json& root() const noexcept { return root_; }
    const std::string& name() const noexcept { return name_; }
    /// 1-based line and column of the value at a JSON pointer; {0, 0} if absent.
    std::pair<std::size_t, std::size_t> locate(const std::string& pointer) const;

   private:
    std::string name_;
    std::string text_;
    Json root_;
};

/// Cursor on a value of a Document. All accessors throw ParseError with the
/// source position and JSON pointer of the offending value.
class Node {
   public:
    Node(const Document& doc, const Json& value, std::string pointer)
        : doc_(&doc), value_(&value), pointer_(std::move(pointer)) {}
    explicit Node(const Document& doc) : Node(doc, doc.root(), "") {}

    const Json& json() const noexcept { return *value_; }
    const std::string& pointer() const noexcept { return pointer_; }

    /// Rejects keys outside `allowed`; requires an object.
    void only(std::initializer_list<const char*> allowed) const;
    bool has(const std::string& key) const;
    Node at(const std::string& key) const;
    std::optional<Node> find(const std::string& key) const;
    /// Elements of an array.
    std::vector<Node> items() const;
    /// Members of an object in key order.
    std::vector<std::pair<std::string, Node>> members() const;

    std::int64_t integer() const;
    std::uint64_t unsigned_integer() const;
    bool boolean() const;
    std::string string() const;
    bool is_string() const { return value_->is_string(); }
    bool is_object() const { return value_->is_object(); }
    std::vector<std::int64_t> integers() const;
    std::vector<std::string> strings() const;

    [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::ParseError) const;

   private:
    const Document* doc_;
    const Json* value_;
    std::string pointer_;
};

/// {"p": 2, "modulus": [1, 1, 1]}; the modulus is optional for prime fields.
arith::FieldPtr parse_field(const Node& node);
Json field_json(const arith::FieldPtr& k);

/// {"kind": "field" | "dual_numbers" | "product", "base": field, "m": 2,
///  "left": algebra, "right": algebra}.
arith::AlgebraPtr parse_algebra(const Node& node, const Guards& guards);

/// {"case": "equal" | "mixed", "p": 2, "residue": {"modulus": [...]},
///  "eisenstein": [0, -2]}.
ga::BaseRingSpec parse_base_ring(const Node& node);
Json base_ring_json(const ga::BaseRingSpec& base);

/// {"field": field} or {"base": base ring, "level": N}.
schemes::CoeffRing parse_coeff_ring(const Node& node);
Json coeff_ring_json(const schemes::CoeffRing& ring);

/// A generator as a term list (ring independent) or as canonical text.
using GeneratorSource = std::variant<std::vector<schemes::TermSpec>, std::string>;

struct SchemeFile {
    std::string name;
    std::optional<schemes::CoeffRing> ring;
    std::vector<std::string> vars;
    std::vector<GeneratorSource> gens;
    /// Node of each text generator, for error positions.
    std::vector<std::string> pointers;

    /// Instantiates over `ring`; a ring stored in the file must agree.
    /// Text generators are parsed with the ring's coefficient labels.
    schemes::AffinePresentation over(const schemes::CoeffRing& ring) const;
    /// Instantiates over the stored ring. Throws InvalidArgument if none.
    schemes::AffinePresentation presentation() const;
    /// Ring-independent form; throws InvalidArgument for text generators.
    schemes::SchemeSpec spec() const;
};

/// {"name": ..., "ring": ring?, "vars": [...], "gens": [gen, ...]} where a
/// gen is a polynomial string or a list of terms
/// {"c": coefficient, "e": [exponents], "neg": true?} and a coefficient is an
/// integer, {"pi": [c0, c1, ...]} or {"coords": [k-codes]}.
SchemeFile parse_scheme(const Node& node);
Json presentation_json(const schemes::AffinePresentation& z);

/// {"source": scheme, "target": scheme, "images": {"y": gen, ...}}; both
/// schemes are instantiated over `ring` when given.
schemes::MorphismPresentation parse_morphism(const Node& node, const std::optional<schemes::CoeffRing>& ring);

/// {"scheme": scheme, "identity": [coefficient per variable],
///  "law": {"x": gen, ...}?} with the law in variables l_v, r_v.
schemes::GroupSchemeSpec parse_group(const Node& node, const std::optional<schemes::CoeffRing>& ring);

/// {"type": "field", "p", "residue_base": {...}, "residue_top": {...}}
/// {"type": "mixed", "p", "residue_top": {...}, "eisenstein": [...], "n"}
/// {"type": "equal", "p", "residue": {...}, "top_level", "base_level"?}
weil::ExtensionData parse_extension(const Node& node);

struct JobConfig {
    Guards guards;
    std::optional<std::string> cache;
    std::uint64_t seed = 0;
    std::optional<std::string> output;
};

/// {"guards": {"size_guard", "candidate_guard", "term_guard"}, "cache",
///  "seed", "output"}.
JobConfig parse_config(const Node& node);

/// Serializes with sorted keys and two-space indentation.
std::string dump(const Json& j);

}  // namespace greenberg::io
