#include "qramsey/report.hpp"

namespace qramsey {

Json to_json(const PosRational& q) { return q.str(); }
Json to_json(const NonnegRational& q) { return q.str(); }

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& e : v.entries()) a.push_back(e.str());
  return a;
}

Json to_json(const IndexSet& s) {
  Json a = Json::array();
  for (int e : s.elements()) a.push_back(e);
  return a;
}

Json to_json(const NFamily& fam) {
  Json a = Json::array();
  for (const auto& p : fam.parts()) a.push_back(to_json(p));
  return a;
}

Json to_json(const RatioWeights& w) {
  Json o = Json::object();
  for (std::size_t i = 0; i < w.omega().size(); ++i) {
    if (w.weights()[i].is_zero()) continue;
    o[w.omega()[i].str()] = w.weights()[i].str();
  }
  return o;
}

Json to_json(const Perturbation& p) {
  return Json{{"shift", to_json(p.shift.weights)},
              {"dilation", Json::array({p.dilation.q1.str(), p.dilation.q2.str()})}};
}

Json to_json(const StageTranscript& t) {
  return Json{{"stage", t.label},
              {"H_size", t.h_size},
              {"P_prime_size", t.p_prime_size},
              {"chosen", to_json(t.chosen)},
              {"verified", t.verified}};
}

Json to_json(const BuildStage& s) {
  Json q = Json::array();
  for (const auto& v : s.q_used) q.push_back(v.str());
  Json fams = Json::array();
  for (const auto& t : s.families) fams.push_back(to_json(t));
  return Json{{"ground", s.ground}, {"q_prime", q},       {"scale", s.scale.str()},
              {"x_prime", s.x_prime.str()}, {"rounds", s.rounds}, {"stages", fams}};
}

Json to_json(const HindmanWitness& w) {
  Json xs = Json::array();
  for (const auto& x : w.x) xs.push_back(x.str());
  Json vals = Json::array();
  for (const auto& pv : w.values)
    vals.push_back(Json{{"label", pv.label}, {"value", pv.value.str()}, {"color", pv.color}});
  return Json{{"x", xs}, {"values", vals}, {"color", w.color}, {"distinct", w.distinct}};
}

Json to_json(const PartialPattern& p) {
  Json xs = Json::array();
  for (const auto& x : p.x) xs.push_back(x.str());
  return Json{{"x", xs}, {"agreeing", p.agreeing}, {"total", p.total}};
}

PosRational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("report: rational must be an \"a/b\" string");
  return PosRational::parse(j.get<std::string>());
}

NFamily family_from_json(const Json& j, int ground) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("report: family must be a nonempty array");
  std::vector<IndexSet> parts;
  for (const auto& part : j) {
    std::vector<int> elems;
    for (const auto& e : part) elems.push_back(e.get<int>());
    parts.push_back(IndexSet::from_elements(elems));
  }
  return NFamily(ground, std::move(parts));
}

ReportBuilder::ReportBuilder(std::string command, Json params) {
  j_["schema_version"] = kReportSchemaVersion;
  j_["command"] = std::move(command);
  j_["params"] = std::move(params);
  j_["found"] = false;
  j_["witness"] = nullptr;
  j_["checks"] = Json::array();
  j_["stats"] = Json{{"candidates", 0}, {"elapsed_ms", 0}};
}

ReportBuilder& ReportBuilder::found(bool v) {
  j_["found"] = v;
  return *this;
}

ReportBuilder& ReportBuilder::witness(Json w) {
  j_["witness"] = std::move(w);
  return *this;
}

ReportBuilder& ReportBuilder::check(const std::string& name, bool pass) {
  j_["checks"].push_back(Json{{"name", name}, {"pass", pass}});
  return *this;
}

ReportBuilder& ReportBuilder::stats(long candidates, long elapsed_ms) {
  j_["stats"] = Json{{"candidates", candidates}, {"elapsed_ms", elapsed_ms}};
  return *this;
}

ReportBuilder& ReportBuilder::field(const std::string& key, Json value) {
  j_[key] = std::move(value);
  return *this;
}

bool ReportBuilder::all_checks_pass() const {
  for (const auto& c : j_["checks"])
    if (!c["pass"].get<bool>()) return false;
  return true;
}

std::string ReportBuilder::str() const { return emit_report(j_); }

std::string emit_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qramsey
