#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2cal/report.hpp"

using namespace g2cal;

namespace {

RingElement rat(long long p, long long q = 1) {
  return RingElement(make_rational(p, q));
}

}  // namespace

TEST_CASE("scalar serialization") {
  CHECK(rational_json(make_rational(-3, 4)) == Json("-3/4"));
  CHECK(rational_json(Rational(5)) == Json("5"));
  CHECK(ring_json(rat(7, 2)) == Json("7/2"));
  CHECK(ring_json(RingElement()) == Json("0"));
  Json mixed = ring_json(RingElement::monomial(-2, make_rational(1, 2)) +
                         RingElement(Rational(3)));
  CHECK(mixed.is_object());
  CHECK(mixed["1"] == Json("3"));
  CHECK(mixed["t^-2"] == Json("1/2"));
}

TEST_CASE("form serialization uses blade names") {
  Form f = Form::term(6, Blade({1, 2}), rat(2)) +
           Form::term(6, Blade({0, 3}), RingElement::monomial(1));
  Json j = form_json(f);
  CHECK(j["e12"] == Json("2"));
  CHECK(j["dt.e3"].is_object());
}

TEST_CASE("torsion reports serialize deterministically") {
  auto e = get_example("nil3step");
  auto rep = su3_torsion(*e.su3);
  Json a = su3_report_json(rep);
  Json b = su3_report_json(su3_torsion(*get_example("nil3step").su3));
  CHECK(a.dump() == b.dump());
  CHECK(a["w1-"] == Json("-1/6"));
  CHECK(a["half_flat"] == Json(true));
  CHECK(a["rank_w12"] == Json(1));
  auto cls = a["classes"];
  REQUIRE(cls.is_array());
  CHECK(cls.size() == 3);

  auto g = g2_report_json(g2_torsion(build_product(*e.su3)));
  CHECK(g["calibrated"] == Json(false));
  CHECK(g["dphi_1"] == Json("0"));
  CHECK(g["x1"] == Json("0"));

  auto c = correspondence_json(
      verify_correspondence(*e.su3, Form(6, 2), build_product(*e.su3)));
  CHECK(c["ok"] == Json(true));
}

TEST_CASE("flow csv has a stable header and matching rows") {
  FrameModel m = FrameModel::abelian(6);
  auto states = flow_run(m, standard_omega(), standard_psi_plus(), 1.0, 1.02,
                         0.01);
  std::string csv = flow_csv(states);
  std::istringstream in(csv);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header.rfind("t,", 0) == 0);
  CHECK(header.find("omega_e12") != std::string::npos);
  CHECK(header.find("psi+_e135") != std::string::npos);
  CHECK(header.find("lambda,compat_residual,closure_residual,"
                    "lefschetz_residual") != std::string::npos);
  std::size_t cols = std::count(header.begin(), header.end(), ',') + 1;
  CHECK(cols == 1 + 15 + 20 + 4);
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    CHECK(std::size_t(std::count(line.begin(), line.end(), ',') + 1) == cols);
    ++rows;
  }
  CHECK(rows == int(states.size()));
  // Deterministic output.
  CHECK(flow_csv(states) == csv);
}
