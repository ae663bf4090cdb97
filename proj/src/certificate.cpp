#include "catmat/certificate.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "catmat/errors.hpp"

namespace catmat {

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw SchemaError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::size_t index_value(const json& v, const char* what) {
  if (!v.is_number_unsigned()) {
    throw SchemaError(std::string(what) + " must be a nonnegative integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> index_array(const json& v, const char* what) {
  if (!v.is_array()) {
    throw SchemaError(std::string(what) + " must be an array");
  }
  std::vector<std::size_t> out;
  for (const auto& x : v) {
    out.push_back(index_value(x, what));
  }
  return out;
}

std::pair<std::size_t, std::size_t> hom_key(const std::string& key) {
  const auto comma = key.find(',');
  try {
    if (comma == std::string::npos) {
      throw std::invalid_argument(key);
    }
    std::size_t used = 0;
    const auto i = std::stoul(key.substr(0, comma), &used);
    if (used != comma) {
      throw std::invalid_argument(key);
    }
    const auto rest = key.substr(comma + 1);
    const auto j = std::stoul(rest, &used);
    if (used != rest.size()) {
      throw std::invalid_argument(key);
    }
    return {i, j};
  } catch (const std::logic_error&) {
    throw SchemaError("hom key \"" + key + "\" is not of the form \"i,j\"");
  }
}

MorphId lookup(const FiniteCategory& c, const json& v) {
  if (!v.is_string()) {
    throw SchemaError("labels must be strings, got " + v.dump());
  }
  auto id = c.find(parse_label(v.get<std::string>()));
  if (!id) {
    throw SchemaError("unknown morphism label " + v.get<std::string>());
  }
  return *id;
}

json label_or_null(const FiniteCategory& c, MorphId f) {
  return f == kNoMorphism || f >= c.morphism_count() ? json(nullptr) : json(c.label_of(f));
}

}  // namespace

json matrix_json(const HomMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.order(); ++j) {
      row.push_back(m(i, j));
    }
    rows.push_back(std::move(row));
  }
  return {{"n", m.order()}, {"entries", std::move(rows)}};
}

json reduction_json(const ReductionMap& map) {
  return {{"class_of", map.class_of}, {"representative", map.representative}};
}

json partition_json(const Partition& p) {
  json classes = json::array();
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    json cls = {{"id", c},
                {"kind", std::string(1, kind_letter(p.kinds[c]))},
                {"members", p.classes[c]},
                {"basepoint", p.basepoints[c] ? json(*p.basepoints[c]) : json(nullptr)}};
    classes.push_back(std::move(cls));
  }
  json order = json::array();
  for (const auto& [lam, mu] : p.order) {
    order.push_back({lam, mu});
  }
  json hasse = json::array();
  for (const auto& [lam, mu] : p.hasse()) {
    hasse.push_back({lam, mu});
  }
  json conflicts = json::array();
  for (const auto& u : p.unit_conflicts) {
    conflicts.push_back({{"class", u.cls}, {"objects", u.objects}});
  }
  return {{"classes", std::move(classes)},
          {"order", std::move(order)},
          {"hasse", std::move(hasse)},
          {"unit_conflicts", std::move(conflicts)}};
}

json reason_json(const Reason& r) {
  json out = {{"kind", std::string(reason_name(r.kind))},
              {"objects", r.objects},
              {"lambda", r.lambda},
              {"mu", r.mu},
              {"i", r.local_i},
              {"j", r.local_j},
              {"required", r.required},
              {"actual", r.actual},
              {"description", describe(r)}};
  return out;
}

json verdict_json(const Verdict& v) {
  json out = {{"exists", v.exists},
              {"reason", v.reason ? reason_json(*v.reason) : json(nullptr)},
              {"reduced", matrix_json(v.reduction.reduced)},
              {"reduction", reduction_json(v.reduction.map)},
              {"partition", v.partition ? partition_json(*v.partition) : json(nullptr)}};
  if (!v.subset.empty()) {
    out["subset"] = v.subset;
  }
  return out;
}

json conditions_json(const std::vector<ConditionResult>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"id", r.id},
                   {"status", std::string(status_name(r.status))},
                   {"details", r.details}});
  }
  return out;
}

json report_json(const VerificationReport& r, const FiniteCategory& c) {
  json card = json::array();
  for (const auto& x : r.cardinality_mismatches) {
    card.push_back({{"i", x.i}, {"j", x.j}, {"expected", x.expected}, {"actual", x.actual}});
  }
  json ident = json::array();
  for (const auto& x : r.identity_failures) {
    ident.push_back({{"object", x.object},
                     {"morphism", label_or_null(c, x.morphism)},
                     {"side", x.left ? "left" : "right"}});
  }
  json closure = json::array();
  for (const auto& x : r.closure_failures) {
    closure.push_back({{"g", label_or_null(c, x.g)},
                       {"f", label_or_null(c, x.f)},
                       {"result", label_or_null(c, x.result)}});
  }
  json assoc = json::array();
  for (const auto& x : r.associativity_failures) {
    assoc.push_back({{"h", label_or_null(c, x.h)},
                     {"g", label_or_null(c, x.g)},
                     {"f", label_or_null(c, x.f)},
                     {"left", label_or_null(c, x.left)},
                     {"right", label_or_null(c, x.right)}});
  }
  return {{"passed", r.passed},
          {"triples_checked", r.triples_checked},
          {"failure_count", r.failure_count},
          {"cardinality_mismatches", std::move(card)},
          {"identity_failures", std::move(ident)},
          {"closure_failures", std::move(closure)},
          {"associativity_failures", std::move(assoc)}};
}

json write_certificate(const FiniteCategory& c, const HomMatrix& m, const ReductionMap& map) {
  const auto n = c.object_count();
  json objects = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    objects.push_back({{"id", x}, {"class", c.coords()[x].cls}, {"local_index", c.coords()[x].local}});
  }
  json homs = json::object();
  json identities = json::object();
  for (std::size_t x = 0; x < n; ++x) {
    identities[std::to_string(x)] = c.label_of(c.identity(x));
    for (std::size_t y = 0; y < n; ++y) {
      json labels = json::array();
      for (auto f : c.hom(x, y)) {
        labels.push_back(c.label_of(f));
      }
      homs[std::to_string(x) + "," + std::to_string(y)] = std::move(labels);
    }
  }
  json table = json::array();
  for (MorphId f = 0; f < c.morphism_count(); ++f) {
    for (auto g : c.out_of(c.morphism(f).target)) {
      table.push_back({c.label_of(g), c.label_of(f), label_or_null(c, c.compose(g, f))});
    }
  }
  return {{"matrix", matrix_json(m)},
          {"reduction", reduction_json(map)},
          {"objects", std::move(objects)},
          {"homs", std::move(homs)},
          {"identities", std::move(identities)},
          {"table", std::move(table)}};
}

Certificate read_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
  }
  Certificate out;
  try {
    out.matrix = parse_matrix(field(doc, "matrix").dump());
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(std::string("bad \"matrix\": ") + e.what());
  }

  const auto& red = field(doc, "reduction");
  out.reduction.class_of = index_array(field(red, "class_of"), "class_of");
  out.reduction.representative = index_array(field(red, "representative"), "representative");
  out.reduction.reduced_order = out.reduction.representative.size();

  const auto& objects = field(doc, "objects");
  if (!objects.is_array()) {
    throw SchemaError("\"objects\" must be an array");
  }
  const auto n = objects.size();
  std::vector<ObjectCoord> coords(n);
  std::vector<bool> seen(n, false);
  for (const auto& o : objects) {
    const auto id = index_value(field(o, "id"), "object id");
    if (id >= n || seen[id]) {
      throw SchemaError("object ids must be a permutation of 0.." + std::to_string(n - 1));
    }
    seen[id] = true;
    coords[id] = {index_value(field(o, "class"), "class"),
                  index_value(field(o, "local_index"), "local_index")};
  }

  const auto& homs = field(doc, "homs");
  if (!homs.is_object()) {
    throw SchemaError("\"homs\" must be an object");
  }
  std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::string>>> entries;
  for (const auto& [key, labels] : homs.items()) {
    const auto [i, j] = hom_key(key);
    if (i >= n || j >= n) {
      throw SchemaError("hom key \"" + key + "\" names a missing object");
    }
    if (!labels.is_array()) {
      throw SchemaError("hom \"" + key + "\" must be an array of labels");
    }
    std::vector<std::string> names;
    for (const auto& l : labels) {
      if (!l.is_string()) {
        throw SchemaError("labels must be strings, got " + l.dump());
      }
      names.push_back(l.get<std::string>());
    }
    entries.emplace_back(i, j, std::move(names));
  }
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  for (std::size_t e = 1; e < entries.size(); ++e) {
    if (std::get<0>(entries[e]) == std::get<0>(entries[e - 1]) &&
        std::get<1>(entries[e]) == std::get<1>(entries[e - 1])) {
      throw SchemaError("hom-set listed twice");
    }
  }
  std::vector<Morphism> morphisms;
  for (auto& [i, j, names] : entries) {
    for (auto& name : names) {
      morphisms.push_back({i, j, parse_label(name)});
    }
  }

  const auto& ids = field(doc, "identities");
  if (!ids.is_object()) {
    throw SchemaError("\"identities\" must be an object");
  }
  std::vector<MorphId> identities(n, kNoMorphism);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& name = field(ids, std::to_string(x).c_str());
    if (!name.is_string()) {
      throw SchemaError("identity labels must be strings");
    }
    const auto wanted = parse_label(name.get<std::string>());
    for (MorphId f = 0; f < morphisms.size(); ++f) {
      if (morphisms[f].label == wanted) {
        identities[x] = f;
      }
    }
    if (identities[x] == kNoMorphism) {
      throw SchemaError("identity of object " + std::to_string(x) + " is not listed in homs");
    }
  }

  try {
    out.category = FiniteCategory(n, std::move(morphisms), std::move(identities), coords);
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }

  const auto& table = field(doc, "table");
  if (!table.is_array()) {
    throw SchemaError("\"table\" must be an array");
  }
  std::set<std::pair<MorphId, MorphId>> filled;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != 3) {
      throw SchemaError("table rows must be [g, f, h], got " + row.dump());
    }
    const auto g = lookup(out.category, row[0]);
    const auto f = lookup(out.category, row[1]);
    const auto h = row[2].is_null() ? kNoMorphism : lookup(out.category, row[2]);
    if (out.category.morphism(f).target != out.category.morphism(g).source) {
      throw SchemaError("table row " + row.dump() + " composes non-composable morphisms");
    }
    if (!filled.emplace(g, f).second) {
      throw SchemaError("table row " + row.dump() + " repeats a composable pair");
    }
    out.category.set_composite(g, f, h);
  }
  return out;
}

}  // namespace catmat
