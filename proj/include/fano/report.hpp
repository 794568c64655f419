#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "fano/exclusion.hpp"
#include "fano/germ.hpp"
#include "fano/lattice.hpp"

namespace fano {

inline constexpr const char* kReportSchema = "fanocheck-report-v1";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::json;

Json to_json(const Comparison& c);
Json to_json(const Certificate& c);
Json to_json(const CaseResult& c);
Json to_json(const RegularityReport& r);

// Line-delimited structured report: a schema-version header record, one
// record per item, one trailing record with the overall verdict. Contains no
// timing fields, so identical runs serialize byte for byte.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, bool structured, const Json& config_echo);

  void item(const Json& record);                 // structured form
  void human(const std::string& text);           // human form only
  void finish(const std::string& overall, int status);

 private:
  std::ostream& out_;
  bool structured_;
};

}  // namespace fano
