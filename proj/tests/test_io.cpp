#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "common.hpp"

using namespace tc;

TEST_CASE("parse_fincat reports locations") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_fincat(in, "t.fincat");
  };

  CHECK_THROWS_WITH_AS(parse("category c\nnonsense here\n"),
                       "t.fincat:2: unrecognized line", ParseError);
  CHECK_THROWS_AS(parse("category c\narrow a : x -> y\n"), ParseError);
  CHECK_THROWS_AS(parse("object x\n"), ParseError);  // missing header
  CHECK_THROWS_AS(parse("category c\nobject x\nobject x\n"), ParseError);
  // composite of non-composable arrows
  CHECK_THROWS_AS(
      parse("category c\nobject x\nobject y\narrow a : x -> y\n"
            "compose a . a = a\n"),
      ParseError);
}

TEST_CASE("parse_catfun requires a total map") {
  Standard s;
  CHECK_THROWS_AS(fun(s.ws, "functor f : terminal -> two\n"), ParseError);
  CHECK_THROWS_AS(
      fun(s.ws, "functor f : two -> terminal\nobject o0 |-> pt\nobject o1 |-> pt\n"),
      ParseError);  // u unmapped
  CHECK_THROWS_AS(fun(s.ws, "functor f : nowhere -> two\n"), ParseError);

  // identities are synthesized
  CatFunctor ok = fun(s.ws,
                      "functor f : two -> terminal\nobject o0 |-> pt\n"
                      "object o1 |-> pt\narrow u |-> id_pt\n");
  CHECK(validate_functor(ok).empty());
  CHECK(same_functor(ok, s.collapse()));
}

TEST_CASE("parse_setfun") {
  Standard s;
  CHECK_THROWS_AS(
      setf(s.ws,
           "setfunctor f on two\nobject o0 |-> { a, a }\nobject o1 |-> { }\n"),
      ParseError);
  CHECK_THROWS_AS(
      setf(s.ws,
           "setfunctor f on two\nobject o0 |-> { a }\nobject o1 |-> { b }\n"
           "arrow u |-> { a -> zz }\n"),
      ParseError);
  CHECK_THROWS_AS(
      setf(s.ws,
           "setfunctor f on two\nobject o0 |-> { a }\nobject o1 |-> { b }\n"),
      ParseError);  // u unmapped

  SetFunctor none = setf(s.ws,
                         "setfunctor f on two\nobject o0 |-> { }\n"
                         "object o1 |-> { }\narrow u |-> { }\n");
  CHECK(validate_setfunctor(none).empty());
}

TEST_CASE("emitters round-trip through the parsers") {
  Standard s;
  std::string text = emit_fincat(*s.par);
  std::istringstream in(text);
  FinCategory back = parse_fincat(in, "emitted");
  CHECK(same_category(back, *s.par));
  CHECK(emit_fincat(back) == text);

  SetFunctor pair = setf(s.ws,
                         "setfunctor pair on two\n"
                         "object o0 |-> { x, y }\nobject o1 |-> { z }\n"
                         "arrow u |-> { x -> z, y -> z }\n");
  std::string stext = emit_setfun(pair, "pair", "two");
  std::istringstream sin(stext);
  CHECK(same_setfunctor(parse_setfun(sin, "emitted", s.ws), pair));

  std::string ftext = emit_catfun(s.collapse(), "collapse", "two", "terminal");
  std::istringstream fin(ftext);
  CHECK(same_functor(parse_catfun(fin, "emitted", s.ws), s.collapse()));
}

TEST_CASE("identity display names") {
  Standard s;
  CHECK(morphism_display_name(*s.two, s.two->identity[0]) == "id_o0");
  CHECK(morphism_display_name(*s.two, s.two->require_morphism("u")) == "u");
}

TEST_CASE("workspace loads the sample corpus") {
  const char* dir = std::getenv("FLOWCAT_DATA_DIR");
  REQUIRE(dir != nullptr);

  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  for (const auto& e : fs::directory_iterator(dir)) paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  auto rank = [](const std::string& p) {
    if (p.ends_with(".fincat")) return 0;
    if (p.ends_with(".catfun")) return 1;
    if (p.ends_with(".setfun")) return 2;
    return 3;
  };
  std::stable_sort(paths.begin(), paths.end(),
                   [&](const auto& a, const auto& b) { return rank(a) < rank(b); });

  Workspace ws;
  for (const auto& p : paths) ws.load_file(p);
  CHECK(ws.categories.count("two"));
  CHECK(ws.functors.count("collapse"));
  CHECK(ws.setfunctors.count("coeq"));
  CHECK(ws.squares.count("point"));
  CHECK(validate_lax_square(ws.square("point")).empty());

  // duplicate names are rejected
  CHECK_THROWS_AS(ws.load_file(ws.provenance.at("two")), StructuralError);
  CHECK_THROWS_AS(ws.load_file("no-such-file.fincat"), StructuralError);
}
