#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "revbound/instance_io.hpp"
#include "support.hpp"

using namespace revbound;

namespace {

nlohmann::json minimal_qubit_json() {
  return nlohmann::json::parse(R"({
    "dim": 2,
    "A": [[[0.0,0.0],[1.0,0.0]],[[1.0,0.0],[0.0,0.0]]],
    "B": [[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[-1.0,0.0]]],
    "phi": [[1.0,0.0],[0.0,0.0]]
  })");
}

}  // namespace

TEST_CASE("parse_instance: well-formed qubit file") {
  const InstanceSpec inst = parse_instance(minimal_qubit_json());
  CHECK(inst.dim == 2);
  CHECK(inst.provenance == Provenance::Explicit);
  CHECK_FALSE(inst.seed.has_value());
  CHECK(expectation(inst.b, inst.phi) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("parse_instance: non-Hermitian A is rejected naming the defect") {
  nlohmann::json j = minimal_qubit_json();
  j["A"][1][0] = {0.0, 0.0};
  try {
    (void)parse_instance(j);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("hermiticity defect") != std::string::npos);
  }
}

TEST_CASE("parse_instance: normalize flag") {
  nlohmann::json j = minimal_qubit_json();
  j["phi"] = {{3.0, 0.0}, {0.0, 4.0}};
  CHECK_THROWS_AS((void)parse_instance(j), InputError);
  j["normalize"] = true;
  const InstanceSpec inst = parse_instance(j);
  CHECK(std::abs(norm(inst.phi.vector()) - 1.0) <= 1e-14);
  CHECK(std::abs(inst.phi.vector()[0] - Complex(0.6)) <= 1e-14);
}

TEST_CASE("parse_instance: malformed shapes are input errors") {
  nlohmann::json j = minimal_qubit_json();
  j.erase("phi");
  CHECK_THROWS_AS((void)parse_instance(j), InputError);

  j = minimal_qubit_json();
  j["dim"] = 1;
  CHECK_THROWS_AS((void)parse_instance(j), InputError);

  j = minimal_qubit_json();
  j["A"][0].erase(1);
  CHECK_THROWS_AS((void)parse_instance(j), InputError);

  j = minimal_qubit_json();
  j["phi"][0] = {1.0};
  CHECK_THROWS_AS((void)parse_instance(j), InputError);

  j = minimal_qubit_json();
  j["provenance"] = "NOT_A_THING";
  CHECK_THROWS_AS((void)parse_instance(j), InputError);
}

TEST_CASE("instance JSON round-trips to bit-identical evaluations") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const InstanceSpec inst = haar_gue_instance(2 + seed % 5, seed);
    const nlohmann::json j = instance_to_json(inst);
    const InstanceSpec back = parse_instance(nlohmann::json::parse(j.dump()));

    CHECK(back.provenance == inst.provenance);
    CHECK(back.seed == inst.seed);
    const auto before = evaluate_all(inst.a, inst.b, inst.phi);
    const auto after = evaluate_all(back.a, back.b, back.phi);
    REQUIRE(before.size() == after.size());
    for (std::size_t k = 0; k < before.size(); ++k) {
      CHECK(before[k].defined == after[k].defined);
      CHECK(before[k].lhs == after[k].lhs);
      CHECK(before[k].rhs == after[k].rhs);
      CHECK(before[k].gap == after[k].gap);
      CHECK(before[k].holds == after[k].holds);
    }
  }
}

TEST_CASE("save_instance / load_instance through a file") {
  const InstanceSpec inst = orthogonal_deviation_instance(3, 99);
  const std::string path = "io_roundtrip_test.json";
  save_instance(inst, path);
  const InstanceSpec back = load_instance(path);
  for (std::size_t k = 0; k < 3; ++k) CHECK(back.phi.vector()[k] == inst.phi.vector()[k]);
  for (std::size_t k = 0; k < inst.a.matrix().entries().size(); ++k) {
    CHECK(back.a.matrix().entries()[k] == inst.a.matrix().entries()[k]);
  }
  std::remove(path.c_str());

  CHECK_THROWS_AS((void)load_instance("does_not_exist.json"), InputError);

  std::ofstream bad("io_bad_test.json");
  bad << "{ not json";
  bad.close();
  CHECK_THROWS_AS((void)load_instance("io_bad_test.json"), InputError);
  std::remove("io_bad_test.json");
}

TEST_CASE("verify_instance: qutrit report and exit predicate") {
  CMatrix ma(3), mb(3);
  ma.at(0, 1) = ma.at(1, 0) = 1.0;
  mb.at(0, 2) = mb.at(2, 0) = 1.0;
  CVector phi(3);
  phi[0] = 1.0;
  const InstanceSpec inst{3, Observable(ma, "A"), Observable(mb, "B"), State(phi),
                          Provenance::Explicit, std::nullopt};

  const VerifyReport report = verify_instance(inst);
  CHECK(all_defined_hold(report.records));
  CHECK(report.scalars.dphi_a == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(report.scalars.dphi_b == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(report.scalars.dphi_amb == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(report.scalars.cov) <= 1e-14);

  const std::string text = render_verify_text(inst, report);
  CHECK(text.find("REV_COV") != std::string::npos);
  CHECK(text.find("VIOLATED") == std::string::npos);

  const nlohmann::json j = verify_report_to_json(report);
  CHECK(j["all_defined_hold"].get<bool>());
  CHECK(j["relations"].size() == all_relations().size());

  // a corrupted record trips the exit predicate
  std::vector<EvalRecord> corrupted = report.records;
  corrupted[1].holds = false;
  CHECK_FALSE(all_defined_hold(corrupted));
}

TEST_CASE("verify_instance: eigenvector instance reports REV_DW as undefined") {
  const InstanceSpec inst = eigenstate_instance(3, 4);
  const VerifyReport report = verify_instance(inst);
  CHECK(all_defined_hold(report.records));
  bool saw_undefined = false;
  for (const EvalRecord& rec : report.records) {
    if (rec.relation == Relation::ReverseDw) {
      CHECK_FALSE(rec.defined);
      saw_undefined = true;
    }
  }
  CHECK(saw_undefined);
  const std::string text = render_verify_text(inst, report);
  CHECK(text.find("UNDEFINED") != std::string::npos);
}
