#include <doctest.h>

#include <set>

#include "tripos/checks.hpp"

using namespace tripos;

TEST_CASE("the gallery lists every checker exactly once") {
  std::vector<CheckInfo> infos = list_gallery();
  CHECK(infos.size() == 20);
  std::set<std::string> ids;
  for (const CheckInfo& info : infos) {
    CHECK(!info.id.empty());
    CHECK(!info.anchor.empty());
    CHECK(!info.summary.empty());
    ids.insert(info.id);
  }
  CHECK(ids.size() == infos.size());
  CHECK(ids.count("counterexample") == 1);
  CHECK(ids.count("weak-to-generic") == 1);
  CHECK(ids.count("ca") == 1);
}

TEST_CASE("run_check dispatches and reports") {
  CheckSpec spec;
  spec.check_id = "counterexample";
  spec.params["n"] = 2;
  spec.params["m"] = 3;
  Report r = run_check(spec);
  CHECK(r.check_id == "counterexample");
  CHECK(r.verdict == Verdict::HoldsWithinBounds);
  CHECK(r.witness["fiber-n"] == 16);
  CHECK(r.witness["fiber-m"] == 256);
  CHECK(r.witness["equivalent"] == false);
  CHECK(report_exit_code(r) == 0);

  CheckSpec unknown;
  unknown.check_id = "no-such-check";
  CHECK_THROWS_AS(run_check(unknown), std::invalid_argument);
}

TEST_CASE("structured reports are byte-identical across runs") {
  CheckSpec spec;
  spec.check_id = "ca";
  spec.flavor = "identity";
  spec.params["i"] = 2;
  spec.params["j"] = 2;
  Report a = run_check(spec);
  Report b = run_check(spec);
  CHECK(emit_structured(a) == emit_structured(b));
  // and the golden shape is pinned
  std::string expected = R"({
  "check": "ca",
  "anchor": "comprehension axiom: forall j. exists p. forall i. rho(i,j) <-> i eps p",
  "params": {
    "flavor": "identity",
    "i": 2,
    "j": 2
  },
  "bounds": "all rho over I x J",
  "verdict": "holds-within-bounds",
  "witness": {
    "rho-checked": 16,
    "power-index-size": 4
  }
}
)";
  CHECK(emit_structured(a) == expected);
}

TEST_CASE("text reports carry the verdict and timing") {
  CheckSpec spec;
  spec.check_id = "counterexample";
  Report r = run_check(spec);
  std::string text = emit_text(r);
  CHECK(text.find("verdict: holds-within-bounds") != std::string::npos);
  CHECK(text.find("wall:") != std::string::npos);
  // wall time must stay out of the structured format
  CHECK(emit_structured(r).find("wall") == std::string::npos);
}

TEST_CASE("exit codes follow the verdict contract") {
  CheckSpec found;
  found.check_id = "generic";
  found.flavor = "identity";
  found.params["sigma-max"] = 2;
  found.params["max-index"] = 2;
  CHECK(report_exit_code(run_check(found)) == 0);

  CheckSpec missed;
  missed.check_id = "generic";
  missed.flavor = "power:2";
  missed.params["sigma-max"] = 2;
  missed.params["max-index"] = 2;
  CHECK(report_exit_code(run_check(missed)) == 1);

  CheckSpec capped;
  capped.check_id = "ca";
  capped.flavor = "power:2";
  capped.params["i"] = 3;
  capped.params["j"] = 3;
  Report r = run_check(capped);
  CHECK(r.verdict == Verdict::CapExceeded);
  CHECK(report_exit_code(r) == 2);
}

TEST_CASE("instance_from_spec resolves flavors") {
  CheckSpec spec;
  spec.flavor = "identity";
  CHECK(instance_from_spec(spec).flavor_name() == "identity");
  spec.flavor = "power:3";
  CHECK(instance_from_spec(spec).flavor_name() == "power:3");
  spec.flavor = "chain3";
  CHECK(instance_from_spec(spec).flavor_name() == "implicative(|A|=3)");
  spec.flavor = "weird";
  CHECK_THROWS_AS(instance_from_spec(spec), std::invalid_argument);
  spec.flavor = "identity";
  spec.algebra_text = "elements [a b]\nleq [(a,b)]\n";
  CHECK(instance_from_spec(spec).flavor_name() == "implicative(|A|=2)");
}

TEST_CASE("skolem check handles both sweep and single-rho modes") {
  CheckSpec sweep;
  sweep.check_id = "skolem";
  sweep.flavor = "identity";
  sweep.params["i"] = 2;
  sweep.params["j"] = 2;
  Report all = run_check(sweep);
  CHECK(all.verdict == Verdict::HoldsWithinBounds);
  CHECK(all.witness["found"] == 16);

  sweep.params["rho"] = 5;
  Report single = run_check(sweep);
  CHECK(single.verdict == Verdict::HoldsWithinBounds);
  CHECK(single.witness["found"] == 1);
}
