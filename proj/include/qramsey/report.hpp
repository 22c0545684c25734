#pragma once

// Canonical JSON reports: stable key order, schema version, every rational
// as an exact "a/b" string. No floating-point token ever appears.

#include "qramsey/coloring.hpp"
#include "qramsey/family.hpp"
#include "qramsey/perturbation.hpp"
#include "qramsey/pipeline.hpp"
#include "qramsey/stabilizer.hpp"

#include <string>

namespace qramsey {

inline constexpr int kReportSchemaVersion = 1;

Json to_json(const PosRational& q);
Json to_json(const NonnegRational& q);
Json to_json(const RatVector& v);
Json to_json(const IndexSet& s);          // array of elements
Json to_json(const NFamily& fam);         // array of arrays
Json to_json(const RatioWeights& w);      // {"A|B": "a/b", ...} nonzero entries
Json to_json(const Perturbation& p);
Json to_json(const StageTranscript& t);
Json to_json(const BuildStage& s);
Json to_json(const HindmanWitness& w);
Json to_json(const PartialPattern& p);

PosRational rational_from_json(const Json& j);
NFamily family_from_json(const Json& j, int ground);

class ReportBuilder {
public:
  ReportBuilder(std::string command, Json params);
  ReportBuilder& found(bool v);
  ReportBuilder& witness(Json w);
  ReportBuilder& check(const std::string& name, bool pass);
  ReportBuilder& stats(long candidates, long elapsed_ms);
  ReportBuilder& field(const std::string& key, Json value);
  const Json& json() const { return j_; }
  std::string str() const;
  bool all_checks_pass() const;

private:
  Json j_;
};

std::string emit_report(const Json& j);

}  // namespace qramsey
