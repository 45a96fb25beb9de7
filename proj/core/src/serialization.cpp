#include "serialization_detail.hpp"

namespace rbfcub::detail {

using nlohmann::ordered_json;

ordered_json domain_to_json(const Rectangle& rect) {
  ordered_json j;
  j["dim"] = rect.dim;
  if (rect.dim == 1) {
    j["lo"] = {rect.lo[0]};
    j["hi"] = {rect.hi[0]};
  } else {
    j["lo"] = {rect.lo[0], rect.lo[1]};
    j["hi"] = {rect.hi[0], rect.hi[1]};
  }
  return j;
}

ordered_json rule_to_json(const CubatureRule& rule) {
  ordered_json j;
  ordered_json pts = ordered_json::array();
  for (const auto& p : rule.points.points) {
    if (rule.points.dim() == 1) {
      pts.push_back(p.x);
    } else {
      pts.push_back({p.x, p.y});
    }
  }
  j["points"] = std::move(pts);
  j["weights"] = std::vector<double>(rule.weights.begin(), rule.weights.end());
  j["aux"] = std::vector<double>(rule.aux.begin(), rule.aux.end());
  j["kernel"] = kernel_token(rule.kernel);
  j["degree"] = rule.degree;
  j["domain"] = domain_to_json(rule.domain);
  return j;
}

ordered_json report_to_json(const StabilityReport& report) {
  ordered_json j;
  j["sum_abs_weights"] = report.sum_abs_weights;
  j["cn_one"] = report.cn_one;
  j["i_norm"] = report.i_norm;
  j["min_weight"] = report.min_weight;
  j["lebesgue_estimate"] = report.lebesgue_estimate;
  j["cond_a"] = report.cond_a;
  j["is_stable"] = report.is_stable;
  return j;
}

}  // namespace rbfcub::detail
