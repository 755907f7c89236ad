#pragma once

// Line-oriented catalog serialization: one JSON object per line, the
// documentation artifact regenerated from the builtin catalog. Importing a
// dump yields records equal to the originals.

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "batir/catalog.hpp"

namespace batir {

namespace detail {

inline nlohmann::ordered_json domain_to_json(const ParamDomain& dom) {
  using nlohmann::ordered_json;
  ordered_json j;
  if (const auto* s = std::get_if<SampleSet>(&dom)) {
    j["kind"] = "samples";
    j["name"] = s->name;
    ordered_json vals = ordered_json::array();
    for (const auto& v : s->values) vals.push_back(v.str());
    j["values"] = std::move(vals);
  } else if (const auto* t = std::get_if<SampleTuples>(&dom)) {
    j["kind"] = "tuples";
    j["names"] = t->names;
    ordered_json rows = ordered_json::array();
    for (const auto& row : t->rows) {
      ordered_json r = ordered_json::array();
      for (const auto& v : row) r.push_back(v.str());
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
  } else if (const auto* r = std::get_if<RandomRational>(&dom)) {
    j["kind"] = "random_rational";
    j["name"] = r->name;
  } else if (const auto* q = std::get_if<RandomSequence>(&dom)) {
    j["kind"] = "random_sequence";
    j["name"] = q->name;
    j["start"] = q->start;
    j["count"] = q->count;
  } else if (const auto* p = std::get_if<TransformPair>(&dom)) {
    j["kind"] = "transform_pair";
    j["sequence"] = p->seq_name;
    j["transform"] = p->sigma_name;
    j["count"] = p->count;
  } else if (const auto* ir = std::get_if<IntRange>(&dom)) {
    j["kind"] = "int_range";
    j["name"] = ir->name;
    j["lo"] = ir->lo;
    j["hi"] = ir->hi;
  }
  return j;
}

inline ParamDomain domain_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "samples") {
    SampleSet s;
    s.name = j.at("name").get<std::string>();
    for (const auto& v : j.at("values")) s.values.push_back(Rational::parse(v.get<std::string>()));
    return s;
  }
  if (kind == "tuples") {
    SampleTuples t;
    t.names = j.at("names").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(Rational::parse(v.get<std::string>()));
      t.rows.push_back(std::move(r));
    }
    return t;
  }
  if (kind == "random_rational") return RandomRational{j.at("name").get<std::string>()};
  if (kind == "random_sequence")
    return RandomSequence{j.at("name").get<std::string>(), j.at("start").get<std::int64_t>(),
                          j.at("count").get<std::string>()};
  if (kind == "transform_pair")
    return TransformPair{j.at("sequence").get<std::string>(), j.at("transform").get<std::string>(),
                         j.at("count").get<std::string>()};
  if (kind == "int_range")
    return IntRange{j.at("name").get<std::string>(), j.at("lo").get<std::string>(),
                    j.at("hi").get<std::string>()};
  throw std::invalid_argument("catalog import: unknown domain kind '" + kind + "'");
}

}  // namespace detail

inline std::string export_catalog(const std::vector<IdentityRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["lhs"] = r.lhs_text;
    j["rhs"] = r.rhs_text;
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    for (const auto& p : r.params) params.push_back(detail::domain_to_json(p));
    j["params"] = std::move(params);
    j["min_n"] = r.min_n;
    j["max_n_default"] = r.max_n_default;
    j["anchor"] = r.anchor;
    out += j.dump();
    out += '\n';
  }
  return out;
}

inline std::vector<IdentityRecord> import_catalog(const std::string& text) {
  std::vector<IdentityRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    IdentityRecord r;
    r.id = j.at("id").get<std::string>();
    r.title = j.at("title").get<std::string>();
    r.lhs_text = j.at("lhs").get<std::string>();
    r.rhs_text = j.at("rhs").get<std::string>();
    r.lhs = parse(r.lhs_text);
    r.rhs = parse(r.rhs_text);
    for (const auto& p : j.at("params")) r.params.push_back(detail::domain_from_json(p));
    r.min_n = j.at("min_n").get<std::int64_t>();
    r.max_n_default = j.at("max_n_default").get<std::int64_t>();
    r.anchor = j.at("anchor").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace batir
