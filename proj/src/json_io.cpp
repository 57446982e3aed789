#include "frev/json_io.hpp"

#include <fstream>
#include <sstream>

namespace frev {

namespace {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Parse, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("key '") + key + "': " + e.what());
  }
}

FieldSpec field_of(const json& j) {
  const int m = get_field<int>(j, "field_m");
  if (m < 1) fail(ErrorKind::Parse, "field_m must be positive");
  return FieldSpec::make(m);
}

int trunc_of(const json& j) {
  const int n = get_field<int>(j, "trunc");
  if (n < 0) fail(ErrorKind::Parse, "trunc must be non-negative");
  return n;
}

json optional_map(const std::optional<Map2>& f) { return f ? to_json(*f) : json(nullptr); }

}  // namespace

json to_json(const Series1& s) {
  json coeffs = json::array();
  for (const Scalar& c : s.coeffs()) coeffs.push_back(c.str());
  return {{"trunc", s.trunc()}, {"field_m", s.field().m()}, {"coeffs", coeffs}};
}

json to_json(const BiSeries& s) {
  json mons = json::array();
  for (const Term& t : s.terms()) mons.push_back(json::array({t.i, t.j, t.c.str()}));
  return {{"trunc", s.trunc()}, {"field_m", s.field().m()}, {"monomials", mons}};
}

json to_json(const Map2& f) { return {{"comp1", to_json(f.comp1)}, {"comp2", to_json(f.comp2)}}; }

json to_json(const CentElem& a) {
  return {{"parity", a.parity == Parity::Resonant ? "resonant" : "inverse"},
          {"phi", to_json(a.phi)},
          {"psi", to_json(a.psi)}};
}

json to_json(const Certificate& c) {
  return {{"verdict", c.verdict},   {"tag", c.tag},     {"degree", c.degree},
          {"witness", optional_map(c.witness)}, {"conjugator", optional_map(c.conjugator)}, {"notes", c.notes}};
}

json to_json(const Certificate1& c) {
  return {{"verdict", c.verdict},
          {"degree", c.degree},
          {"witness", c.witness ? to_json(*c.witness) : json(nullptr)},
          {"notes", c.notes}};
}

json to_json(const FactorBundle& b) {
  json factors = json::array();
  for (const Factor& f : b.factors) {
    factors.push_back({{"role", role_name(f.role)}, {"map", to_json(f.map)}, {"witness", optional_map(f.witness)}});
  }
  return {{"degree", b.degree}, {"factors", factors}, {"notes", b.notes}};
}

json to_json(const NormalFormTag& tag) {
  return {{"kind", kind_name(tag.kind)}, {"k", tag.k}, {"lambda", tag.lambda.str()}, {"field_m", tag.lambda.field().m()}};
}

Series1 series1_from_json(const json& j) {
  const FieldSpec field = field_of(j);
  const int n = trunc_of(j);
  const auto coeffs = get_field<std::vector<std::string>>(j, "coeffs");
  if (coeffs.size() > static_cast<std::size_t>(n) + 1) fail(ErrorKind::Parse, "more coefficients than trunc + 1");
  Series1 s(field, n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s[static_cast<int>(i)] = parse_scalar(field, coeffs[i]);
  return s;
}

BiSeries biseries_from_json(const json& j) {
  const FieldSpec field = field_of(j);
  const int n = trunc_of(j);
  if (!j.contains("monomials") || !j.at("monomials").is_array()) fail(ErrorKind::Parse, "missing monomials array");
  BiSeries s(field, n);
  for (const json& m : j.at("monomials")) {
    if (!m.is_array() || m.size() != 3 || !m[0].is_number_integer() || !m[1].is_number_integer() ||
        !m[2].is_string()) {
      fail(ErrorKind::Parse, "monomial must be [i, j, scalar]");
    }
    const int a = m[0].get<int>();
    const int b = m[1].get<int>();
    if (a < 0 || b < 0 || a + b > n) fail(ErrorKind::Parse, "monomial exponent out of range");
    s.add(a, b, parse_scalar(field, m[2].get<std::string>()));
  }
  return s;
}

Map2 map2_from_json(const json& j) {
  if (!j.is_object() || !j.contains("comp1") || !j.contains("comp2")) fail(ErrorKind::Parse, "Map2 needs comp1 and comp2");
  BiSeries c1 = biseries_from_json(j.at("comp1"));
  BiSeries c2 = biseries_from_json(j.at("comp2"));
  if (c1.trunc() != c2.trunc()) fail(ErrorKind::Parse, "components disagree on trunc");
  if (!(c1.field() == c2.field())) fail(ErrorKind::Parse, "components disagree on field_m");
  return Map2(std::move(c1), std::move(c2));
}

CentElem centelem_from_json(const json& j) {
  const auto parity = get_field<std::string>(j, "parity");
  if (parity != "resonant" && parity != "inverse") fail(ErrorKind::Parse, "parity must be resonant or inverse");
  return CentElem(series1_from_json(j.at("phi")), series1_from_json(j.at("psi")),
                  parity == "resonant" ? Parity::Resonant : Parity::Inverse);
}

FactorBundle bundle_from_json(const json& j) {
  FactorBundle b;
  b.degree = get_field<int>(j, "degree");
  if (!j.contains("factors") || !j.at("factors").is_array()) fail(ErrorKind::Parse, "missing factors array");
  for (const json& f : j.at("factors")) {
    Factor fac;
    const auto role = get_field<std::string>(f, "role");
    if (role == "reversible") {
      fac.role = FactorRole::Reversible;
    } else if (role == "involution") {
      fac.role = FactorRole::Involution;
    } else {
      fail(ErrorKind::Parse, "unknown role '" + role + "'");
    }
    fac.map = map2_from_json(f.at("map"));
    if (f.contains("witness") && !f.at("witness").is_null()) fac.witness = map2_from_json(f.at("witness"));
    b.factors.push_back(std::move(fac));
  }
  if (j.contains("notes")) b.notes = get_field<std::vector<std::string>>(j, "notes");
  return b;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace frev
