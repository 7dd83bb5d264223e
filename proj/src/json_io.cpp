#include "leibniz/json_io.hpp"

#include "leibniz/parse.hpp"

namespace leibniz::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

int integer_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

FieldElement expression_from_json(const json& j, const RingPtr& ring) {
  if (j.is_string()) return parse_expr(j.get<std::string>(), ring);
  if (j.is_number_integer()) return FieldElement(ring, Rational(j.get<long>()));
  throw SchemaError("expected an expression string");
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw SchemaError("expected a rational as \"p/q\" or an integer");
}

json to_json(const Rational& q) { return q.to_string(); }

RawTable raw_table_from_json(const json& j) {
  RawTable raw{integer_field(j, "n"), {}};
  const json& entries = j.contains("entries") ? j.at("entries") : json::array();
  if (!entries.is_array()) throw SchemaError("'entries' must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw SchemaError("each entry must be [i, j, value]");
    raw.entries.push_back({e[0].get<int>(), e[1].get<int>(), rational_from_json(e[2])});
  }
  return raw;
}

GammaTable table_from_json(const json& j) {
  const RawTable raw = raw_table_from_json(j);
  if (raw.n < 1) throw SchemaError("gamma table order must be at least 1");
  ValidationResult result = validate(raw.entries, raw.n);
  if (!result.ok()) {
    std::string message = "invalid gamma table:";
    for (const auto& v : result.violations)
      message += " " + to_string(v.kind) + "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
    throw SchemaError(message);
  }
  return std::move(*result.table);
}

json to_json(const GammaTable& table) {
  json entries = json::array();
  for (const auto& [i, j, value] : table.interior_entries()) entries.push_back(json::array({i, j, to_json(value)}));
  return {{"n", table.n()}, {"entries", std::move(entries)}};
}

GammaVector gamma_vector_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("gamma vector must be an array");
  std::vector<Rational> values;
  for (const auto& v : j) values.push_back(rational_from_json(v));
  return GammaVector(std::move(values));
}

json to_json(const GammaVector& gamma) {
  json out = json::array();
  for (const auto& v : gamma.values()) out.push_back(to_json(v));
  return out;
}

DerivationSpec spec_from_json(const json& j) {
  const json& gens = field(j, "generators");
  if (!gens.is_array()) throw SchemaError("'generators' must be an array of names");
  std::vector<std::string> names;
  for (const auto& g : gens) {
    if (!g.is_string()) throw SchemaError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  return spec_from_json(j, Ring::make(std::move(names)));
}

DerivationSpec spec_from_json(const json& j, const RingPtr& ring) {
  if (j.contains("generators")) {
    std::vector<std::string> names;
    for (const auto& g : j.at("generators")) names.push_back(g.get<std::string>());
    if (names != ring->generators()) throw SchemaError("derivation generators differ from the document's");
  }
  const json& values = field(j, "values");
  if (!values.is_object()) throw SchemaError("'values' must be an object");
  return DerivationSpec(ring, choices_from_json(values, ring));
}

json to_json(const DerivationSpec& spec) {
  return {{"generators", spec.ring()->generators()}, {"values", values_to_json(spec.values(), spec.ring())}};
}

std::map<std::string, FieldElement> choices_from_json(const json& j, const RingPtr& ring) {
  if (!j.is_object()) throw SchemaError("expected an object mapping generators to expressions");
  std::map<std::string, FieldElement> out;
  for (const auto& [name, value] : j.items()) out.emplace(name, expression_from_json(value, ring));
  return out;
}

json values_to_json(const std::vector<FieldElement>& values, const RingPtr& ring) {
  json out = json::object();
  for (std::size_t i = 0; i < values.size(); ++i) out[ring->generators()[i]] = values[i].to_string();
  return out;
}

MapPtr term_from_json(const json& j, const DerivationSpec& base, const std::optional<GammaTable>& gamma,
                      const DerivationSequence& prefix) {
  const json& kind_json = field(j, "kind");
  if (!kind_json.is_string()) throw SchemaError("'kind' must be a string");
  const std::string kind = kind_json.get<std::string>();
  const RingPtr& ring = base.ring();
  if (kind == "iterate") {
    const int order = integer_field(j, "order");
    if (order < 0) throw SchemaError("iterate order must be non-negative");
    const Rational scale = j.contains("scale") ? rational_from_json(j.at("scale")) : Rational(1);
    DerivationSpec d = j.contains("base") ? spec_from_json(j.at("base"), ring) : base;
    return make_iterate(scale, static_cast<unsigned>(order), std::move(d));
  }
  if (kind == "extension") {
    if (!gamma) throw SchemaError("extension terms need a document-level 'gamma'");
    const auto choices = j.contains("choices") ? choices_from_json(j.at("choices"), ring)
                                               : std::map<std::string, FieldElement>{};
    std::vector<FieldElement> values(ring->size(), FieldElement(ring));
    for (const auto& [name, value] : choices) {
      const int index = ring->index_of(name);
      if (index < 0) throw SchemaError("choice for unknown generator '" + name + "'");
      values[static_cast<std::size_t>(index)] = value;
    }
    return std::make_shared<ExtensionMap>(prefix, *gamma, std::move(values));
  }
  if (kind == "combination") {
    const json& parts = field(j, "parts");
    if (!parts.is_array()) throw SchemaError("'parts' must be an array");
    std::vector<CombinationMap::Part> out;
    for (const auto& p : parts)
      out.emplace_back(p.contains("scale") ? rational_from_json(p.at("scale")) : Rational(1),
                       term_from_json(field(p, "term"), base, gamma, prefix));
    return std::make_shared<CombinationMap>(std::move(out));
  }
  throw SchemaError("unknown term kind '" + kind + "'");
}

json term_to_json(const MapPtr& term, const DerivationSpec& base) {
  if (const auto* it = dynamic_cast<const IterateMap*>(term.get())) {
    json out = {{"kind", "iterate"}, {"order", it->order()}, {"scale", to_json(it->scale())}};
    if (!(it->base() == base)) out["base"] = to_json(it->base());
    return out;
  }
  if (const auto* ext = dynamic_cast<const ExtensionMap*>(term.get()))
    return {{"kind", "extension"}, {"choices", values_to_json(ext->generator_values(), base.ring())}};
  if (const auto* comb = dynamic_cast<const CombinationMap*>(term.get())) {
    json parts = json::array();
    for (const auto& [scale, f] : comb->parts())
      parts.push_back({{"scale", to_json(scale)}, {"term", term_to_json(f, base)}});
    return {{"kind", "combination"}, {"parts", std::move(parts)}};
  }
  if (dynamic_cast<const IdentityMap*>(term.get()))
    return {{"kind", "iterate"}, {"order", 0}, {"scale", "1"}};
  throw SchemaError("term has no JSON form");
}

SequenceDocument sequence_from_json(const json& j) {
  DerivationSpec base = spec_from_json(field(j, "base"));
  const RingPtr ring = base.ring();
  std::optional<GammaTable> gamma;
  if (j.contains("gamma")) gamma = table_from_json(j.at("gamma"));
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw SchemaError("'terms' must be an array");
  DerivationSequence sequence(ring);
  for (const auto& t : terms) sequence = sequence.extended(term_from_json(t, base, gamma, sequence));
  if (j.contains("n") && integer_field(j, "n") != sequence.order())
    throw SchemaError("'n' does not match the number of terms");
  return SequenceDocument{ring, std::move(base), std::move(gamma), std::move(sequence)};
}

json to_json(const SequenceDocument& doc) {
  json terms = json::array();
  for (int k = 1; k <= doc.sequence.order(); ++k) terms.push_back(term_to_json(doc.sequence.term(k), doc.base));
  json out = {{"n", doc.sequence.order()}, {"base", to_json(doc.base)}, {"terms", std::move(terms)}};
  if (doc.gamma) out["gamma"] = to_json(*doc.gamma);
  return out;
}

}  // namespace leibniz::io
