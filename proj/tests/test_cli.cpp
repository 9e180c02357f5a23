#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "altq/checks.hpp"
#include "altq/generators.hpp"
#include "altq/parse.hpp"

using namespace altq;

TEST_CASE("scalar expression parser") {
  CHECK(parse_scalar("q^2") == RatFuncQ::q_power(2));
  CHECK(parse_scalar("-q^-1") == -RatFuncQ::q_power(-1));
  CHECK(parse_scalar("3/2") == RatFuncQ(mpq_class(3, 2)));
  CHECK(parse_scalar("s^2") == rf_q());
  CHECK(parse_scalar("(q + q^-1)^2") == rf_qplus() * rf_qplus());
  CHECK(parse_scalar("2*q - 1/2") == RatFuncQ(2) * rf_q() - RatFuncQ(mpq_class(1, 2)));
  CHECK(parse_scalar(" 1 ") == RatFuncQ(1));
  CHECK_THROWS_AS(parse_scalar("q^"), ParseError);
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}

TEST_CASE("spin parser") {
  CHECK(parse_two_j("1/2") == 1);
  CHECK(parse_two_j("1") == 2);
  CHECK(parse_two_j("3/2") == 3);
  CHECK_THROWS_AS(parse_two_j("1/3"), ParseError);
  CHECK_THROWS_AS(parse_two_j("-1"), ParseError);
}

TEST_CASE("config validation") {
  RunConfig c;
  c.order = 1;
  CHECK_THROWS_AS(c.validate(), ConfigInvalid);
  c.order = 3;
  c.groups = {"nonsense"};
  CHECK_THROWS_AS(c.validate(), ConfigInvalid);
  c.groups = {"ybe"};
  c.validate();
  CHECK(c.effective_dress_configs().size() == 3);
}

TEST_CASE("config file with zero k_plus is rejected before any check") {
  std::string path = "bad_config_test.json";
  {
    std::ofstream out(path);
    out << R"({"params": {"k_plus": "0"}})";
  }
  CHECK_THROWS_AS(load_config(path), ConfigInvalid);
  std::remove(path.c_str());
}

TEST_CASE("config file round trip") {
  std::string path = "ok_config_test.json";
  {
    std::ofstream out(path);
    out << R"({
      "order": 4, "k_max": 2, "p_max": 1, "max_degree": 6,
      "params": {"k_plus": "q^2", "k_minus": "-q^-1"},
      "dress_configs": [{"spins": ["1/2"], "v": ["1"]}],
      "groups": ["ybe", "pbw"]
    })";
  }
  RunConfig c = load_config(path);
  std::remove(path.c_str());
  CHECK(c.order == 4);
  CHECK(c.k_max == 2);
  CHECK(c.dress_configs.size() == 1);
  CHECK(c.dress_configs[0].twoj == std::vector<long>{1});
  CHECK(c.groups.size() == 2);
  auto reports = run(c);
  CHECK(all_passed(reports));
  // group filtering: only ybe and pbw checks appear.
  for (const auto& r : reports) {
    bool known = r.check_id.rfind("ybe.", 0) == 0 || r.check_id.rfind("pbw.", 0) == 0;
    CHECK(known);
  }
}

TEST_CASE("reports serialize deterministically") {
  RunConfig c;
  c.groups = {"dictionary", "pbw"};
  std::string a = reports_to_json(run(c));
  std::string b = reports_to_json(run(c));
  CHECK(a == b);
  CHECK(a.find("\"check_id\"") != std::string::npos);
}

TEST_CASE("golden text form of a generator polynomial") {
  GeneratorTable t = build_generators(1, FMParams::standard());
  CHECK(t.at(symG(1)).str() ==
        "[(1/2)*D1] + [(-s^-2)].W0.W1 + [(s^2)].W1.W0");
  CHECK(t.at(symWminus(1)).str() ==
        "[((1/2 - 1/2*s^4)/(1 + 2*s^4 + s^8))*D1].W0 + [(s^2/(1 + 2*s^4 + s^8))].W0.W0.W1 + "
        "[((-s^-2 - s^6)/(1 + 2*s^4 + s^8))].W0.W1.W0 + [(s^2/(1 + 2*s^4 + s^8))].W1.W0.W0");
}
