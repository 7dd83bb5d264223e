#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leibniz/gamma.hpp"
#include "leibniz/system.hpp"

namespace leibniz::io {

using nlohmann::json;

/// Malformed or schema-violating JSON input.
struct SchemaError : leibniz::Error {
  using leibniz::Error::Error;
};

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const json& j);
json to_json(const Rational& q);

struct RawTable {
  int n;
  std::vector<RawGammaEntry> entries;
};

/// {"n":4,"entries":[[1,1,"2"],[1,2,"3"],...]}
RawTable raw_table_from_json(const json& j);
/// Validates; throws SchemaError listing the violations.
GammaTable table_from_json(const json& j);
/// Interior entries with i <= j only.
json to_json(const GammaTable& table);

GammaVector gamma_vector_from_json(const json& j);
json to_json(const GammaVector& gamma);

/// {"generators":["t"],"values":{"t":"1"}}
DerivationSpec spec_from_json(const json& j);
DerivationSpec spec_from_json(const json& j, const RingPtr& ring);
json to_json(const DerivationSpec& spec);

/// {"n":2,"gamma":<table>,"base":<spec>,"terms":[...]} with term kinds
///   {"kind":"iterate","order":k,"scale":"s"}            scale * base^k
///   {"kind":"extension","choices":{"t":"expr"}}           solve_next term over the preceding terms
///   {"kind":"combination","parts":[{"scale":"s","term":<term>}, ...]}
/// An iterate term may carry its own "base".
struct SequenceDocument {
  RingPtr ring;
  DerivationSpec base;
  std::optional<GammaTable> gamma;
  DerivationSequence sequence;
};

SequenceDocument sequence_from_json(const json& j);
json to_json(const SequenceDocument& doc);

/// Parses one term in the context of a document whose terms so far form `prefix`.
MapPtr term_from_json(const json& j, const DerivationSpec& base, const std::optional<GammaTable>& gamma,
                      const DerivationSequence& prefix);
json term_to_json(const MapPtr& term, const DerivationSpec& base);

std::map<std::string, FieldElement> choices_from_json(const json& j, const RingPtr& ring);
json values_to_json(const std::vector<FieldElement>& values, const RingPtr& ring);

}  // namespace leibniz::io
