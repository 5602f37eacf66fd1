#include "perlef/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "perlef/errors.hpp"

namespace perlef::io {

json to_json(const BigInt& v) {
  if (fits_double_exactly(v)) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

BigInt bigint_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()), 10);
    return BigInt(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (std::isfinite(d) && std::floor(d) == d && std::fabs(d) <= 9007199254740992.0) return BigInt(d);
    throw MalformedInput(field, "not an integer");
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0) throw MalformedInput(field, "not a decimal integer");
    return v;
  }
  throw MalformedInput(field, "expected an integer");
}

GradedHomologyAction parse_action(const json& doc) {
  if (!doc.is_object()) throw MalformedInput("(root)", "expected a JSON object");
  if (!doc.contains("h")) throw MalformedInput("h", "missing homology table");
  const json& h = doc.at("h");
  if (!h.is_object()) throw MalformedInput("h", "expected an object keyed by degree");

  RawAction raw;
  for (const auto& [key, matrix] : h.items()) {
    const std::string field = "h." + key;
    if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos)
      throw MalformedInput(field, "degree keys must be decimal strings");
    const int degree = std::stoi(key);
    if (!matrix.is_array()) throw MalformedInput(field, "expected an array of rows");
    RawMatrix rows;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      const json& row = matrix[i];
      if (!row.is_array()) throw MalformedInput(field, "expected an array of rows");
      std::vector<RawEntry> entries;
      for (std::size_t jdx = 0; jdx < row.size(); ++jdx) {
        const json& e = row[jdx];
        if (e.is_number_unsigned()) {
          const auto u = e.get<std::uint64_t>();
          if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            entries.emplace_back(std::to_string(u));
          else
            entries.emplace_back(static_cast<std::int64_t>(u));
        } else if (e.is_number_integer()) {
          entries.emplace_back(e.get<std::int64_t>());
        } else if (e.is_number_float()) {
          entries.emplace_back(e.get<double>());
        } else if (e.is_string()) {
          entries.emplace_back(e.get<std::string>());
        } else {
          throw NonIntegerEntry(degree, i, jdx);
        }
      }
      rows.push_back(std::move(entries));
    }
    raw.emplace(degree, std::move(rows));
  }
  GradedHomologyAction action = validate_action(raw);
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw MalformedInput("name", "expected a string");
    action.set_name(doc.at("name").get<std::string>());
  }
  return action;
}

json serialize_action(const GradedHomologyAction& action) {
  json h = json::object();
  for (const auto& [k, m] : action.degree_matrices()) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
      rows.push_back(std::move(row));
    }
    h[std::to_string(k)] = std::move(rows);
  }
  json doc{{"h", std::move(h)}};
  if (!action.name().empty()) doc["name"] = action.name();
  return doc;
}

namespace {

Complex complex_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw MalformedInput(field, "expected a number or a [re, im] pair");
}

std::vector<Complex> coeffs_from_json(const json& doc, const std::string& field) {
  if (!doc.contains("coeffs") || !doc.at("coeffs").is_array() || doc.at("coeffs").empty())
    throw MalformedInput(field + "coeffs", "expected a non-empty coefficient array");
  std::vector<Complex> c;
  for (std::size_t k = 0; k < doc.at("coeffs").size(); ++k)
    c.push_back(complex_from_json(doc.at("coeffs")[k], field + "coeffs[" + std::to_string(k) + "]"));
  return c;
}

MapSpec parse_stage(const json& doc, const std::string& field) {
  if (!doc.is_object()) throw MalformedInput(field.empty() ? "(root)" : field, "expected an object");
  if (!doc.contains("family") || !doc.at("family").is_string())
    throw MalformedInput(field + "family", "missing map family");
  const auto family = doc.at("family").get<std::string>();
  if (family == "disk_poly") return MapSpec::polynomial(coeffs_from_json(doc, field));
  if (family == "disk_affine") {
    if (!doc.contains("a") || !doc.contains("b")) throw MalformedInput(field + "a", "affine map needs a and b");
    return MapSpec::affine(complex_from_json(doc.at("a"), field + "a"), complex_from_json(doc.at("b"), field + "b"));
  }
  if (family == "composition") {
    if (!doc.contains("maps") || !doc.at("maps").is_array() || doc.at("maps").empty())
      throw MalformedInput(field + "maps", "composition needs a non-empty map list");
    std::vector<MapSpec> parts;
    for (std::size_t k = 0; k < doc.at("maps").size(); ++k)
      parts.push_back(parse_stage(doc.at("maps")[k], field + "maps[" + std::to_string(k) + "]."));
    return MapSpec::composition(parts);
  }
  throw MalformedInput(field + "family", "unknown family '" + family + "'");
}

Domain parse_domain(const json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string())
    throw MalformedInput("domain.type", "missing domain type");
  const auto type = doc.at("type").get<std::string>();
  if (type == "unit_disk") return UnitDisk{};
  if (type == "disk") {
    Disk d;
    if (doc.contains("center")) d.center = complex_from_json(doc.at("center"), "domain.center");
    if (!doc.contains("radius") || !doc.at("radius").is_number())
      throw MalformedInput("domain.radius", "missing radius");
    d.radius = doc.at("radius").get<double>();
    return d;
  }
  if (type == "rectangle") {
    if (!doc.contains("min") || !doc.contains("max")) throw MalformedInput("domain.min", "rectangle needs min and max");
    const Complex lo = complex_from_json(doc.at("min"), "domain.min");
    const Complex hi = complex_from_json(doc.at("max"), "domain.max");
    return Rectangle{lo.real(), hi.real(), lo.imag(), hi.imag()};
  }
  throw MalformedInput("domain.type", "unknown domain type '" + type + "'");
}

}  // namespace

MapSpec parse_map(const json& doc) {
  MapSpec map = parse_stage(doc, "");
  if (doc.contains("domain")) map.domain = parse_domain(doc.at("domain"));
  if (doc.contains("action")) map.declared_action = parse_action(doc.at("action"));
  map.validate();
  return map;
}

json polynomial_coeffs(const IntPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json lefschetz_fragment(const LefschetzSequence& seq) {
  json a = json::array();
  for (const auto& v : seq.values) a.push_back(to_json(v));
  return {{"L", std::move(a)}};
}

json zeta_fragment(const RationalFunction& z) {
  return {{"zeta", {{"num", polynomial_coeffs(z.numerator)}, {"den", polynomial_coeffs(z.denominator)}}}};
}

json spectrum_fragment(const SpectrumSummary& s) {
  return {{"spectrum",
           {{"zero", s.zero_count},
            {"unity_orders", s.unity_orders},
            {"circle_non_torsion", s.circle_non_torsion_count},
            {"outside", s.outside_count},
            {"inside", s.inside_nonzero_count},
            {"radius_class", std::string(to_string(s.radius_class))}}}};
}

json classification_fragment(const ClassificationResult& r) {
  json j{{"verdict", std::string(to_string(r.verdict))},
         {"proof_case", std::string(to_string(r.proof_case))},
         {"narrative", r.narrative},
         {"period_set", period_set_statement(r).text}};
  if (r.witness_m) j["witness_m"] = *r.witness_m;
  if (r.witness_kind) j["witness_kind"] = std::string(to_string(*r.witness_kind));
  return j;
}

json verification_fragment(const VerificationReport& r) {
  json iterates = json::array();
  for (std::size_t i = 0; i < r.per_m.size(); ++i) {
    const auto& fp = r.per_m[i];
    json points = json::array();
    for (const auto& p : fp.points)
      points.push_back({{"z", {p.z.real(), p.z.imag()}}, {"residual", p.residual}});
    iterates.push_back({{"m", fp.m},
                        {"count", fp.count},
                        {"L", to_json(fp.lefschetz_value)},
                        {"bound_satisfied", fp.bound_satisfied},
                        {"exact_period", r.exact_period_counts[i]},
                        {"points", std::move(points)}});
  }
  return {{"harness",
           {{"passed", r.passed},
            {"strictly_inside", {{"ok", r.inside.strictly_inside}, {"margin", r.inside.margin}, {"samples", r.inside.samples}}},
            {"verdict", std::string(to_string(r.classification.verdict))},
            {"iterates", std::move(iterates)}}}};
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw MalformedInput(path, e.what());
  }
}

}  // namespace perlef::io
