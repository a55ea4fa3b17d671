#include "hankel/report.hpp"

#include <json.hpp>

namespace hankel {

using nlohmann::ordered_json;

std::string emit_report(const AnalysisReport& report) {
  ordered_json j;
  j["order"] = report.order;
  j["field"] = report.field;
  j["spectral_size"] = report.spectral_size;
  j["degenerate"] = report.degenerate;
  j["spectral_polynomial"] = report.spectral_polynomial;
  ordered_json dets = ordered_json::array();
  for (const auto& h : report.hankel_determinants) {
    ordered_json e;
    e["t"] = h.t;
    e["l"] = h.l;
    e["value"] = h.value;
    dets.push_back(std::move(e));
  }
  j["hankel_determinants"] = std::move(dets);
  j["oracle_agreement"] = report.oracle_agreement ? ordered_json(*report.oracle_agreement) : ordered_json(nullptr);
  j["notes"] = report.notes;
  return j.dump(2);
}

std::string emit_witness(const WitnessRecord& record) {
  ordered_json j;
  j["t"] = record.t;
  j["l"] = record.l;
  j["lhs"] = record.lhs;
  j["rhs"] = record.rhs;
  j["equal"] = record.equal;
  return j.dump();
}

}  // namespace hankel
