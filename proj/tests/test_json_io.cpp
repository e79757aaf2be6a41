#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

#include "mpschain/json_io.hpp"

using namespace mpstest;

TEST_CASE("matrix round trip") {
  Rng rng(71);
  const ComplexMatrix m = random_matrix(rng, 3, 2);
  const ComplexMatrix back = matrix_from_json(to_json(m));
  check_matrix_close(back, m, 0.0);
}

TEST_CASE("matrix parse errors") {
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"rows": 2, "cols": 2})")),
                  ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(parse_json(
          R"({"rows": 2, "cols": 2, "entries": [[1, 0]]})")),
      ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(parse_json(
          R"({"rows": 0, "cols": 2, "entries": []})")),
      ParseError);
  CHECK_THROWS_AS(parse_json("not json"), ParseError);
}

TEST_CASE("family round trip preserves amplitudes") {
  Rng rng(72);
  const MPSFamily family = random_family(rng, 2, 3, 2);
  const MPSFamily back = family_from_json(to_json(family));
  CHECK_EQ(back.d(), family.d());
  CHECK_EQ(back.m(), family.m());
  CHECK_EQ(back.explicit_site_count(), family.explicit_site_count());
  for (int rep = 0; rep < 10; ++rep) {
    const std::vector<int> tuple = random_tuple(rng, 2, 4);
    CHECK_EQ(amplitude(back, tuple), amplitude(family, tuple));
  }
}

TEST_CASE("family parse validation") {
  CHECK_THROWS_AS(family_from_json(parse_json(R"({"d": 2, "m": 2})")),
                  ParseError);
  CHECK_THROWS_AS(
      family_from_json(parse_json(
          R"({"d": 2, "m": 2, "tail": "sometimes", "sites": []})")),
      ParseError);
  // Wrong tensor count for d surfaces as a parse error, not a crash.
  const std::string one_tensor = R"({
    "d": 2, "m": 1, "tail": "repeat_last",
    "sites": [{"matrices": [{"rows": 1, "cols": 1, "entries": [[1, 0]]}]}]
  })";
  CHECK_THROWS_AS(family_from_json(parse_json(one_tensor)), ParseError);
}

TEST_CASE("observable round trip, both forms") {
  Rng rng(73);
  const LocalObservable prod = random_product_observable(rng, 2, 3, false);
  const LocalObservable prod_back = observable_from_json(to_json(prod));
  CHECK_EQ(prod_back.form(), LocalObservable::Form::Product);
  CHECK_EQ(prod_back.n_sites(), 3);
  for (int k = 0; k < 3; ++k) {
    check_matrix_close(prod_back.factors()[static_cast<std::size_t>(k)],
                       prod.factors()[static_cast<std::size_t>(k)], 0.0);
  }

  const LocalObservable dense =
      LocalObservable::dense(2, 2, random_matrix(rng, 4, 4));
  const LocalObservable dense_back = observable_from_json(to_json(dense));
  CHECK_EQ(dense_back.form(), LocalObservable::Form::Dense);
  CHECK_EQ(dense_back.d(), 2);
  check_matrix_close(dense_back.matrix(), dense.matrix(), 0.0);
}

TEST_CASE("dense observable side must be a perfect power") {
  const std::string bad = R"({
    "form": "dense", "n_sites": 2,
    "matrix": {"rows": 3, "cols": 3,
               "entries": [[1,0],[0,0],[0,0],[0,0],[1,0],[0,0],[0,0],[0,0],[1,0]]}
  })";
  CHECK_THROWS_AS(observable_from_json(parse_json(bad)), ParseError);
}

TEST_CASE("dump_json: 17 significant digits, stable field order") {
  CHECK_EQ(dump_json(Json(0.1)), "0.10000000000000001");
  CHECK_EQ(dump_json(Json(0.5)), "0.5");
  CHECK_EQ(dump_json(Json(1.0 / std::sqrt(2.0))), "0.70710678118654746");

  Json obj;
  obj["zebra"] = 1;
  obj["alpha"] = Json::array({true, nullptr});
  CHECK_EQ(dump_json(obj), R"({"zebra":1,"alpha":[true,null]})");
  CHECK_EQ(dump_json(obj, true),
           "{\n  \"zebra\": 1,\n  \"alpha\": [\n    true,\n    null\n  ]\n}");

  // Round trip through text recovers the exact double.
  const double v = 1.0 / 3.0;
  const Json parsed = parse_json(dump_json(Json(v)));
  CHECK_EQ(parsed.get<double>(), v);
}

TEST_CASE("report serialization carries the documented fields") {
  const ConditionReport report = check_normalization(ghz_family());
  const Json j = to_json(report);
  CHECK_EQ(j.at("condition").get<std::string>(), "normalization");
  CHECK(j.at("pass").get<bool>());
  CHECK(j.contains("tolerance"));
  CHECK(j.contains("sites"));
  CHECK(j.contains("residuals"));
  CHECK(j.contains("notes"));

  const EvaluationReport eval{Complex{1.0, 0.0}, "naive", 2, 1.5};
  CHECK_FALSE(to_json(eval).contains("elapsed_ms"));
  CHECK(to_json(eval, true).contains("elapsed_ms"));
}
