#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "rigcat/backend.hpp"
#include "rigcat/errors.hpp"
#include "rigcat/io.hpp"

using namespace rigcat;

TEST_CASE("morphismJson emits sorted keys and column-ordered entries") {
  ConcreteMorphism m(2, 3, 4);
  m.set(1, 0, 1);
  m.set(0, 2, 3);
  CHECK(morphismJson(m) ==
        R"({"entries":[[2,0,3],[0,1,1]],"phase_order":4,"source_dim":2,"target_dim":3})");

  ConcreteMorphism partial(2, 2, 1);
  partial.set(1, 1, 0);
  CHECK(morphismJson(partial) ==
        R"({"entries":[[1,1,0]],"phase_order":1,"source_dim":2,"target_dim":2})");
}

TEST_CASE("basisJson renders the enumeration in order") {
  Env e;
  e.bind("A", {Atom{"a0", 0}});
  e.bind("B", {Atom{"b0", 0}});
  BackendConfig cfg;
  CHECK(basisJson(denote(Shape::sum(Shape::var("A"), Shape::var("B")), e, cfg)) ==
        R"js(["L(a0)","R(b0)"])js");
}

TEST_CASE("env json round-trips including degrees") {
  Env e;
  e.bind("A", {Atom{"x", -2}, Atom{"y", 1}});
  e.bind("Zed", {});
  std::string text = envJson(e);
  CHECK(text == R"({"A":[{"degree":-2,"label":"x"},{"degree":1,"label":"y"}],"Zed":[]})");
  Env back = envFromJsonText(text);
  CHECK(back.at("A").size() == 2);
  CHECK(back.at("A")[0].degree == -2);
  CHECK(back.at("A")[1].label == "y");
  CHECK(back.at("Zed").empty());
  CHECK(envJson(back) == text);
}

TEST_CASE("envFromJsonText validates shape and labels") {
  CHECK_THROWS_AS(envFromJsonText("not json"), ParseError);
  CHECK_THROWS_AS(envFromJsonText(R"([1,2])"), ParseError);
  CHECK_THROWS_AS(envFromJsonText(R"({"A": 3})"), ParseError);
  CHECK_THROWS_AS(envFromJsonText(R"({"A": [{"degree": 0}]})"), ParseError);
  CHECK_THROWS_AS(envFromJsonText(R"({"A": [{"degree": "x", "label": "x"}]})"), ParseError);
  CHECK_THROWS_AS(envFromJsonText(R"({"A": [{"degree": 0, "label": "x"},
                                           {"degree": 1, "label": "x"}]})"),
                  ParseError);  // duplicate label
  // degree is optional and defaults to 0
  CHECK(envFromJsonText(R"({"A": [{"label": "x"}]})").at("A")[0].degree == 0);
}

TEST_CASE("envFromFile reads a file or reports it unreadable") {
  const char* path = "rigcat_test_env.json";
  {
    std::ofstream out(path);
    out << R"({"A":[{"degree":0,"label":"a0"}]})";
  }
  Env e = envFromFile(path);
  CHECK(e.at("A").size() == 1);
  std::remove(path);
  CHECK_THROWS_AS(envFromFile("definitely_missing_dir/nope.json"), ParseError);
}
