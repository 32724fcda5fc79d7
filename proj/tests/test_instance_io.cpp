#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "mcs/instance_io.hpp"
#include "mcs/structural.hpp"

using namespace mcs;

namespace {

const char* kP3 =
    "p mcs 3 2 2\n"
    "v 1 1\n"
    "v 2 2\n"
    "v 3 1\n"
    "e 1 2\n"
    "e 2 3\n";

ErrorCode code_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse a well formed instance") {
  ColoredGraph g = parse_instance(kP3);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.color_count() == 2);
  CHECK(g.color_of(0) == 1);
  CHECK(g.color_of(1) == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
}

TEST_CASE("comments, blank lines and CR endings are tolerated") {
  std::string text =
      "# generated for a smoke run\r\n"
      "p mcs 2 1 2\r\n"
      "\r\n"
      "v 1 1\r\n"
      "v 2 2\r\n"
      "# edges\r\n"
      "e 1 2\r\n";
  ColoredGraph g = parse_instance(text);
  CHECK(g.vertex_count() == 2);
}

TEST_CASE("parse failures carry line information") {
  CHECK(code_of("") == ErrorCode::SyntaxError);
  CHECK(code_of("p mcs 2 1 2\nv 1 1\nv 2 2\n") == ErrorCode::CountMismatch);
  CHECK(code_of("p mcs 2 0 2\nv 1 1\n") == ErrorCode::CountMismatch);
  CHECK(code_of("p mcs 2 1 2\nv 1 1\nv 9 2\ne 1 2\n") ==
        ErrorCode::SyntaxError);
  CHECK(code_of("p mcs 2 1 2\nv 1 1\nv 2 5\ne 1 2\n") ==
        ErrorCode::SyntaxError);
  CHECK(code_of("p mcs 2 1 2\nq foo\n") == ErrorCode::SyntaxError);
  CHECK(code_of("v 1 1\n") == ErrorCode::SyntaxError);
  CHECK(code_of("p mcs 2 1 2\np mcs 2 1 2\n") == ErrorCode::SyntaxError);
  CHECK(code_of("p mcs 2 1 2\nv 1 1\nv 1 2\nv 2 2\ne 1 2\n") ==
        ErrorCode::SyntaxError);
  try {
    parse_instance("p mcs 2 1 2\nv 1 1\nbogus\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  // Validation failures surface from graph construction.
  CHECK(code_of("p mcs 2 1 2\nv 1 1\nv 2 2\ne 1 1\n") == ErrorCode::SelfLoop);
  CHECK(code_of("p mcs 3 1 2\nv 1 1\nv 2 2\nv 3 1\ne 1 2\n") ==
        ErrorCode::Disconnected);
}

TEST_CASE("canonical serialization") {
  ColoredGraph g = parse_instance(kP3);
  CHECK(serialize_instance(g) == kP3);
  // Scrambled input serializes to the same canonical bytes.
  std::string scrambled =
      "# scrambled\n"
      "p mcs 3 2 2\n"
      "e 2 3\n"
      "v 3 1\n"
      "v 1 1\n"
      "e 1 2\n"
      "v 2 2\n";
  CHECK(serialize_instance(parse_instance(scrambled)) == kP3);
}

TEST_CASE("round trips on generated instances") {
  for (std::uint64_t seed = 0; seed < 40; seed++) {
    ColoredGraph g = [&] {
      switch (seed % 3) {
        case 0: return generate_gnp_connected(10, 0.3, 3, seed);
        case 1: return generate_planted_vc(3, 11, 2, 0.3, seed);
        default: return generate_planted_nd({3, 4, 2}, 3, 0.5, seed);
      }
    }();
    std::string text = serialize_instance(g);
    ColoredGraph back = parse_instance(text);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.colors() == g.colors());
    CHECK(back.edges() == g.edges());
    CHECK(serialize_instance(back) == text);
  }
}

TEST_CASE("generators are deterministic") {
  CHECK(serialize_instance(generate_gnp_connected(10, 0.3, 3, 7)) ==
        serialize_instance(generate_gnp_connected(10, 0.3, 3, 7)));
  CHECK(serialize_instance(generate_planted_vc(2, 9, 2, 0.4, 3)) ==
        serialize_instance(generate_planted_vc(2, 9, 2, 0.4, 3)));
  CHECK(serialize_instance(generate_planted_nd({2, 3}, 2, 0.5, 11)) ==
        serialize_instance(generate_planted_nd({2, 3}, 2, 0.5, 11)));
  CHECK(serialize_instance(generate_gnp_connected(10, 0.3, 3, 7)) !=
        serialize_instance(generate_gnp_connected(10, 0.3, 3, 8)));
}

TEST_CASE("planted parameters are honored as upper bounds") {
  for (std::uint64_t seed = 0; seed < 50; seed++) {
    ColoredGraph vc = generate_planted_vc(3, 10, 2, 0.4, seed);
    CHECK(minimum_vertex_cover(vc).k <= 3);
    ColoredGraph nd = generate_planted_nd({3, 2, 4}, 3, 0.5, seed);
    CHECK(neighborhood_decomposition(nd).r <= 3);
  }
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(generate_gnp_connected(0, 0.5, 1, 0), Error);
  CHECK_THROWS_AS(generate_gnp_connected(5, 1.5, 1, 0), Error);
  CHECK_THROWS_AS(generate_planted_vc(0, 5, 1, 0.5, 0), Error);
  CHECK_THROWS_AS(generate_planted_vc(6, 5, 1, 0.5, 0), Error);
  CHECK_THROWS_AS(generate_planted_nd({}, 1, 0.5, 0), Error);
  CHECK_THROWS_AS(generate_planted_nd({0, 2}, 1, 0.5, 0), Error);
}
