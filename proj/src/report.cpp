#include "fano/report.hpp"

#include <ostream>

namespace fano {

namespace {

Json rays_json(const std::vector<std::vector<long long>>& rays) {
  Json arr = Json::array();
  for (auto& r : rays) arr.push_back(r);
  return arr;
}

Json point_json(const std::vector<Rat>& x) {
  Json arr = Json::array();
  for (auto& v : x) arr.push_back(rat_str(v));
  return arr;
}

}  // namespace

Json to_json(const Comparison& c) {
  return Json{{"label", c.label},
              {"lhs", rat_str(c.lhs)},
              {"rel", c.rel},
              {"rhs", rat_str(c.rhs)},
              {"holds", c.holds},
              {"strict", c.strict}};
}

Json to_json(const Certificate& c) {
  Json j;
  j["claim"] = c.claim.id;
  j["bound"] = rat_str(c.claim.bound);
  j["strict"] = c.claim.strict;
  j["verdict"] = verdict_name(c.verdict);
  j["satisfied"] = c.satisfied;
  j["min_gap"] = rat_str(c.min_gap);
  if (!c.min_point.empty()) j["min_point"] = point_json(c.min_point);
  if (!c.violating_ray.empty()) j["violating_ray"] = c.violating_ray;
  if (!c.equality_rays.empty()) j["equality_rays"] = rays_json(c.equality_rays);
  if (c.ratio_min) {
    j["ratio_min"] = rat_str(*c.ratio_min);
    j["ratio_min_rays"] = rays_json(c.ratio_min_rays);
  }
  if (!c.den_zero_rays.empty()) j["den_zero_rays"] = rays_json(c.den_zero_rays);
  if (c.sos && c.sos->valid) {
    Json s;
    s["kind"] = c.sos->kind;
    Json sq = Json::array();
    for (auto& t : c.sos->squares) {
      Json lin = Json::array();
      for (auto& v : t.lin.c) lin.push_back(rat_str(v));
      sq.push_back(Json{{"coeff", rat_str(t.coeff)}, {"lin", lin}});
    }
    s["squares"] = sq;
    Json pr = Json::array();
    for (auto& t : c.sos->products)
      pr.push_back(Json{{"coeff", rat_str(t.coeff)}, {"i", t.i}, {"j", t.j}});
    s["products"] = pr;
    j["sos"] = s;
  }
  j["revalidated"] = c.revalidate();
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

Json to_json(const CaseResult& c) {
  Json j;
  j["case"] = c.case_id;
  j["params"] = c.params;
  j["outcome"] = outcome_name(c.outcome);
  j["experimental"] = c.experimental;
  if (!c.contradiction.empty()) j["contradiction"] = c.contradiction;
  if (!c.strictness_source.empty()) j["strictness_source"] = c.strictness_source;
  Json checks = Json::array();
  for (auto& ch : c.checks) checks.push_back(to_json(ch));
  j["checks"] = checks;
  Json certs = Json::array();
  for (auto& cert : c.certificates) certs.push_back(to_json(cert));
  j["certificates"] = certs;
  return j;
}

Json to_json(const RegularityReport& r) {
  auto cond = [](const ConditionResult& c) {
    Json j{{"verdict", verdict_name(c.verdict)}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
  };
  Json j;
  j["condition_i"] = cond(r.cond_i);
  j["condition_ii"] = cond(r.cond_ii);
  j["condition_iii"] = cond(r.cond_iii);
  if (r.def1.verdict != Verdict::NotApplicable) j["definition_1"] = cond(r.def1);
  j["passed"] = r.passed();
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ReportWriter::ReportWriter(std::ostream& out, bool structured, const Json& config_echo)
    : out_(out), structured_(structured) {
  if (structured_) {
    Json header;
    header["schema"] = kReportSchema;
    header["tool_version"] = kToolVersion;
    header["config"] = config_echo;
    out_ << header.dump() << "\n";
  }
}

void ReportWriter::item(const Json& record) {
  if (structured_) out_ << record.dump() << "\n";
}

void ReportWriter::human(const std::string& text) {
  if (!structured_) out_ << text << "\n";
}

void ReportWriter::finish(const std::string& overall, int status) {
  if (structured_) {
    Json j;
    j["overall"] = overall;
    j["status"] = status;
    out_ << j.dump() << "\n";
  } else {
    out_ << overall << "\n";
  }
}

}  // namespace fano
