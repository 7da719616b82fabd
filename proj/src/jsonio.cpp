#include "qmod/jsonio.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "qmod/error.hpp"
#include "qmod/expr.hpp"

namespace qmod {

namespace {

using nlohmann::json;

std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c)
      row.push_back(json::array({m.at(r, c).real(), m.at(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json presentation_to_json(const ModulePresentation& pres) {
  json j;
  j["carrier"] = carrier_spec_string(pres.carrier());
  json gens = json::array();
  for (const StarElement& s : pres.generators()) gens.push_back(print_expression(s));
  j["generators"] = gens;
  return j;
}

ModulePresentation presentation_from_json(const json& j) {
  Carrier c = parse_carrier_spec(j.at("carrier").get<std::string>());
  std::vector<StarElement> gens;
  for (const auto& g : j.at("generators"))
    gens.push_back(parse_expression(g.get<std::string>(), c));
  return ModulePresentation(c, std::move(gens));
}

json certificate_to_json(const CertificateFile& cf) {
  json j;
  j["presentation"] = presentation_to_json(cf.pres);
  json terms = json::array();
  for (const CertTerm& t : cf.cert.terms) {
    json jt;
    jt["weight"] = rational_string(t.weight);
    jt["conjugator"] = print_expression(t.conjugator);
    jt["generator"] = t.generator;
    terms.push_back(jt);
  }
  j["terms"] = terms;
  json claims = json::object();
  if (cf.target) claims["target"] = print_expression(*cf.target);
  if (cf.norm_claim) {
    claims["element"] = print_expression(cf.norm_claim->first);
    claims["bound"] = rational_string(cf.norm_claim->second);
  }
  j["claims"] = claims;
  return j;
}

CertificateFile certificate_from_json(const json& j) {
  ModulePresentation pres = presentation_from_json(j.at("presentation"));
  Carrier c = pres.carrier();  // keep a copy; pres is moved below
  Certificate cert;
  for (const auto& jt : j.at("terms")) {
    Rational w = rational_from_string(jt.at("weight").get<std::string>());
    if (!(w > 0)) fail("json: certificate weight must be positive");
    size_t gi = jt.at("generator").get<size_t>();
    if (gi > pres.generator_count()) fail("json: generator index out of range");
    cert.terms.push_back(
        {std::move(w), parse_expression(jt.at("conjugator").get<std::string>(), c), gi});
  }
  CertificateFile cf{std::move(pres), std::move(cert), std::nullopt, std::nullopt};
  if (j.contains("claims")) {
    const json& claims = j.at("claims");
    if (claims.contains("target"))
      cf.target = parse_expression(claims.at("target").get<std::string>(), c);
    if (claims.contains("element")) {
      cf.norm_claim = std::make_pair(
          parse_expression(claims.at("element").get<std::string>(), c),
          rational_from_string(claims.at("bound").get<std::string>()));
    }
  }
  return cf;
}

json irreps_to_json(const IrrepSet& s) {
  json j;
  j["carrier"] = carrier_spec_string(s.carrier);
  j["seed"] = s.seed;
  json list = json::array();
  for (size_t k = 0; k < s.reps.size(); ++k) {
    json jr;
    jr["dimension"] = s.reps[k].dim();
    jr["multiplicity"] = s.multiplicities[k];
    json images = json::array();
    for (const ComplexMatrix& m : s.reps[k].images()) images.push_back(matrix_to_json(m));
    jr["images"] = images;
    json character = json::array();
    for (const cplx& z : s.character_table[k])
      character.push_back(json::array({z.real(), z.imag()}));
    jr["character"] = character;
    list.push_back(jr);
  }
  j["irreps"] = list;
  return j;
}

json form_to_json(const PositiveForm& f) {
  json j;
  j["carrier"] = carrier_spec_string(f.carrier());
  json values = json::object();
  for (size_t k = 0; k < f.basis().size(); ++k) {
    const cplx v = f.values()[k];
    if (v == cplx(0.0)) continue;
    values[print_word(f.carrier(), f.basis()[k])] = json::array({v.real(), v.imag()});
  }
  j["values"] = values;
  return j;
}

PositiveForm form_from_json(const json& j) {
  Carrier c = parse_carrier_spec(j.at("carrier").get<std::string>());
  std::vector<BasisWord> basis = enumerate_basis(c);
  std::vector<cplx> values(basis.size(), cplx(0.0));
  for (const auto& [key, val] : j.at("values").items()) {
    StarElement e = parse_expression(key, c);
    if (e.terms().size() != 1 || !(e.terms().begin()->second == GaussianRational(Rational(1))))
      fail("json: form key '" + key + "' is not a basis word");
    const BasisWord& w = e.terms().begin()->first;
    size_t idx = SIZE_MAX;
    for (size_t k = 0; k < basis.size(); ++k)
      if (basis[k] == w) {
        idx = k;
        break;
      }
    if (idx == SIZE_MAX) fail("json: form key '" + key + "' is outside the basis");
    values[idx] = cplx(val.at(0).get<double>(), val.at(1).get<double>());
  }
  return form_from_values(c, values);
}

json report_to_json(const AuditReport& rep) {
  json j;
  j["title"] = rep.title;
  j["passed"] = rep.passed();
  json checks = json::array();
  for (const AuditCheck& ch : rep.checks) {
    json jc;
    jc["name"] = ch.name;
    jc["status"] = ch.status;
    jc["residual"] = ch.residual;
    jc["tolerance"] = ch.tolerance;
    jc["witnesses"] = ch.witness;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  return j;
}

json norm_to_json(const StarElement& a, const NormEstimate& est) {
  json j;
  j["element"] = print_expression(a);
  j["lower"] = est.lower;
  if (std::isinf(est.upper))
    j["upper"] = "inf";
  else
    j["upper"] = est.upper;
  j["exact"] = est.exact;
  if (!est.note.empty()) j["note"] = est.note;
  if (est.upper_witness) j["bound"] = rational_string(est.upper_witness->bound);
  return j;
}

}  // namespace qmod
