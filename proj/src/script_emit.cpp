#include <json.hpp>

#include "script_internal.hpp"

namespace reeskit::script {

namespace {

using Json = nlohmann::ordered_json;

std::string joinPolys(const std::vector<Polynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].toString();
  return s;
}

std::vector<Polynomial> gbElements(const GroebnerBasis& g) {
  std::vector<Polynomial> out(g.elements().rbegin(), g.elements().rend());
  return out;
}

std::string weightedText(const std::vector<WeightedComponent>& cs) {
  std::string s = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ", ";
    s += "{" + std::to_string(cs[i].multiplicity) + ", " + cs[i].prime.toString() + "}";
    if (!cs[i].certified) s += " (unverified)";
  }
  return s + "}";
}

Json polyArray(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.toString());
  return a;
}

Json idealJson(const Ideal& I) {
  Json j;
  j["ring"] = I.ring()->describe();
  j["generators"] = polyArray(I.basis());
  return j;
}

Json matrixJson(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(polyArray(m.row(r)));
  return Json{{"ring", m.ring()->describe()}, {"rows", rows}};
}

Json toJson(const Value& v) {
  if (v.is<std::int64_t>()) return v.get<std::int64_t>();
  if (v.is<bool>()) return v.get<bool>();
  if (v.is<std::string>()) return v.get<std::string>();
  if (v.is<Infinity>()) return "INFINITY";
  if (v.is<FieldElement>()) {
    const FieldElement& f = v.get<FieldElement>();
    return Json{{"value", f.value()}, {"modulus", f.modulus()}};
  }
  if (v.is<Polynomial>()) return v.get<Polynomial>().toString();
  if (v.is<Ideal>()) return idealJson(v.get<Ideal>());
  if (v.is<Matrix>()) return matrixJson(v.get<Matrix>());
  if (v.is<GroebnerBasis>()) return polyArray(gbElements(v.get<GroebnerBasis>()));
  if (v.is<HilbertSeries>()) {
    const HilbertSeries& h = v.get<HilbertSeries>();
    return Json{{"numerator", h.numerator}, {"denominatorDegrees", h.denominatorDegrees}};
  }
  if (v.is<ReductionCertificate>()) {
    const ReductionCertificate& c = v.get<ReductionCertificate>();
    Json j{{"accepted", c.accepted}};
    if (c.accepted) j["r"] = c.witness;
    j["cap"] = c.cap;
    j["generators"] = polyArray(c.J.basis());
    return j;
  }
  if (v.is<FactorValue>()) {
    const FactorValue& f = v.get<FactorValue>();
    Json fs = Json::array();
    for (const auto& x : f.fac.factors) fs.push_back({{"factor", x.factor.toString()}, {"multiplicity", x.multiplicity}});
    return Json{{"unit", f.ring->field().toSigned(f.fac.unit)}, {"factors", fs}};
  }
  if (v.is<PrimeList>()) {
    Json a = Json::array();
    for (const auto& c : v.get<PrimeList>().items)
      a.push_back({{"generators", polyArray(c.prime.basis())}, {"certified", c.certified}});
    return a;
  }
  if (v.is<WeightedList>()) {
    Json a = Json::array();
    for (const auto& c : v.get<WeightedList>().items)
      a.push_back({{"m", c.multiplicity}, {"generators", polyArray(c.prime.basis())}, {"certified", c.certified}});
    return a;
  }
  if (v.is<List>()) {
    Json a = Json::array();
    for (const auto& x : v.get<List>().items) a.push_back(toJson(x));
    return a;
  }
  return renderText(v);
}

const char* statusName(Status s) {
  switch (s) {
    case Status::Ok:
      return "ok";
    case Status::AssertionFailed:
      return "assertion-failed";
    case Status::Error:
      return "error";
  }
  return "error";
}

}  // namespace

std::string renderText(const Value& v) {
  if (v.is<std::int64_t>()) return std::to_string(v.get<std::int64_t>());
  if (v.is<bool>()) return v.get<bool>() ? "true" : "false";
  if (v.is<std::string>()) return "\"" + v.get<std::string>() + "\"";
  if (v.is<Infinity>()) return "INFINITY";
  if (v.is<FieldElement>()) return v.get<FieldElement>().toString();
  if (v.is<Polynomial>()) return v.get<Polynomial>().toString();
  if (v.is<Ideal>()) return v.get<Ideal>().toString();
  if (v.is<Matrix>()) return v.get<Matrix>().toString();
  if (v.is<RingPtr>()) return v.get<RingPtr>()->describe();
  if (v.is<RingMap>()) {
    const RingMap& m = v.get<RingMap>();
    std::string s = "map[ ";
    for (std::size_t i = 0; i < m.images().size(); ++i)
      s += (i ? ", " : "") + m.source()->name(i) + " -> " + m.images()[i].toString();
    return s + " ]";
  }
  if (v.is<PresentedModule>()) {
    const PresentedModule& M = v.get<PresentedModule>();
    if (M.isIdeal()) return "module ideal[ " + joinPolys(*M.idealGenerators) + " ]";
    return "cokernel " + M.presentation.toString();
  }
  if (v.is<BlowupChart>()) return "blowup " + v.get<BlowupChart>().ring->describe();
  if (v.is<GroebnerBasis>()) return "gb[ " + joinPolys(gbElements(v.get<GroebnerBasis>())) + " ]";
  if (v.is<HilbertSeries>()) return v.get<HilbertSeries>().toString();
  if (v.is<ReductionCertificate>()) {
    const ReductionCertificate& c = v.get<ReductionCertificate>();
    if (c.accepted) return "reduction with r = " + std::to_string(c.witness);
    return "no reduction with r <= " + std::to_string(c.cap);
  }
  if (v.is<FactorValue>()) {
    const FactorValue& f = v.get<FactorValue>();
    std::string s = std::to_string(f.ring->field().toSigned(f.fac.unit));
    for (const auto& x : f.fac.factors) {
      s += " * (" + x.factor.toString() + ")";
      if (x.multiplicity != 1) s += "^" + std::to_string(x.multiplicity);
    }
    return s;
  }
  if (v.is<PrimeList>()) {
    std::string s = "{";
    const auto& items = v.get<PrimeList>().items;
    for (std::size_t i = 0; i < items.size(); ++i) {
      s += (i ? ", " : "") + items[i].prime.toString();
      if (!items[i].certified) s += " (unverified)";
    }
    return s + "}";
  }
  if (v.is<WeightedList>()) return weightedText(v.get<WeightedList>().items);
  if (v.is<List>()) {
    std::string s = "{";
    const auto& items = v.get<List>().items;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + renderText(items[i]);
    return s + "}";
  }
  return "?";
}

std::string renderJson(const Value& v) { return toJson(v).dump(); }

std::string emit(const ResultDocument& doc, OutputMode mode, const Config& config) {
  if (mode == OutputMode::Json) {
    Json j;
    j["schema"] = 1;
    j["seed"] = config.seed;
    j["status"] = statusName(doc.status);
    Json results = Json::array();
    for (const auto& e : doc.entries) {
      Json r;
      r["statement"] = e.statement;
      r["line"] = e.line;
      r["kind"] = e.kind;
      r["value"] = Json::parse(e.json);
      r["flags"] = e.flags;
      results.push_back(std::move(r));
    }
    j["results"] = std::move(results);
    if (doc.status != Status::Ok) j["error"] = doc.message;
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& e : doc.entries) {
    if (e.kind == "assertion") continue;
    out += e.text;
    for (std::size_t i = 0; i < e.flags.size(); ++i) out += (i ? ", " : "  -- ") + e.flags[i];
    out += "\n";
  }
  if (doc.status == Status::AssertionFailed) out += "assertion failed: " + doc.message + "\n";
  if (doc.status == Status::Error) out += "error: " + doc.message + "\n";
  return out;
}

}  // namespace reeskit::script
