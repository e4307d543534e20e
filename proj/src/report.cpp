#include "g2cal/report.hpp"

#include <cstdio>
#include <sstream>

namespace g2cal {

Json rational_json(const Rational& q) { return rational_str(q); }

Json ring_json(const RingElement& r) {
  if (r.is_constant() || r.is_zero())
    return rational_json(r.is_zero() ? Rational(0) : r.constant_value());
  Json out = Json::object();
  for (const auto& [k, c] : r.terms()) {
    std::string key = k == 0 ? "1" : (k == 1 ? "t" : "t^" + std::to_string(k));
    out[key] = rational_json(c);
  }
  return out;
}

Json form_json(const Form& f) {
  Json out = Json::object();
  for (const auto& [b, c] : f.terms()) out[b.str()] = ring_json(c);
  return out;
}

namespace {

Json classes_json(const std::set<std::string>& classes) {
  Json arr = Json::array();
  for (const auto& c : classes) arr.push_back(c);
  return arr;
}

}  // namespace

Json su3_report_json(const SU3TorsionReport& rep) {
  Json out;
  out["w1+"] = ring_json(rep.w1p);
  out["w1-"] = ring_json(rep.w1m);
  out["w2+"] = form_json(rep.w2p);
  out["w2-"] = form_json(rep.w2m);
  out["w3"] = form_json(rep.w3);
  out["w4"] = form_json(rep.w4);
  out["w5"] = form_json(rep.w5);
  out["rank_w12"] = rep.rank_w12;
  out["half_flat"] = rep.half_flat;
  out["self_dual"] = rep.self_dual;
  out["anti_self_dual"] = rep.anti_self_dual;
  out["classes"] = classes_json(rep.classes());
  return out;
}

Json g2_report_json(const G2TorsionReport& rep) {
  Json out;
  out["dphi_1"] = ring_json(rep.dphi_1);
  out["dphi_7"] = form_json(rep.dphi_7);
  out["dphi_27"] = form_json(rep.dphi_27);
  out["dstarphi_7"] = form_json(rep.dstarphi_7);
  out["dstarphi_14"] = form_json(rep.dstarphi_14);
  out["x1"] = ring_json(rep.x1);
  out["x4vec"] = form_json(rep.x4vec);
  out["calibrated"] = rep.calibrated;
  out["cocalibrated"] = rep.cocalibrated;
  out["nearly_parallel"] = rep.nearly_parallel;
  out["classes"] = classes_json(rep.classes());
  return out;
}

Json correspondence_json(const CorrespondenceReport& rep) {
  Json out;
  out["structure_equations"] = rep.structure_equations;
  out["x1_match"] = rep.x1_match;
  out["dphi1_match"] = rep.dphi1_match;
  out["x4_match"] = rep.x4_match;
  out["w2m_implies_calibrated"] = rep.w2m_implies_calibrated;
  out["calibrated_implications"] = rep.calibrated_implications;
  out["parallel_implications"] = rep.parallel_implications;
  out["ok"] = rep.ok();
  return out;
}

std::string flow_csv(const std::vector<FlowState>& states) {
  std::ostringstream out;
  out << "t";
  for (Blade b : flow_basis2()) out << ",omega_" << b.str();
  for (Blade b : flow_basis3()) out << ",psi+_" << b.str();
  out << ",lambda,compat_residual,closure_residual,lefschetz_residual\n";
  char buf[32];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << ',' << buf;
  };
  for (const auto& st : states) {
    std::snprintf(buf, sizeof buf, "%.17g", st.t);
    out << buf;
    for (double v : st.omega) emit(v);
    for (double v : st.psi_plus) emit(v);
    emit(st.lambda);
    emit(st.compat_residual);
    emit(st.closure_residual);
    emit(st.lefschetz_residual);
    out << '\n';
  }
  return out.str();
}

}  // namespace g2cal
