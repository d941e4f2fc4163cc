#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "dyndom/graph.hpp"
#include "dyndom/trace.hpp"

using namespace dyndom;

namespace {
UpdateTrace parse_text(const std::string& s) {
  std::istringstream in(s);
  return parse_trace(in);
}

std::string parse_error_of(const std::string& s) {
  try {
    parse_text(s);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}
}  // namespace

TEST_CASE("round trip is byte exact on comment-free input") {
  const std::string text = "n 5\n+ 0 1\n+ 1 2\n- 0 1\n+ 3 4\n";
  const UpdateTrace t = parse_text(text);
  CHECK(t.n == 5);
  REQUIRE(t.events.size() == 4);
  CHECK(t.events[2] == UpdateEvent{EventKind::Delete, 0, 1});
  CHECK(serialize_trace(t) == text);
}

TEST_CASE("comments are skipped") {
  const UpdateTrace t = parse_text("# header comment\nn 3\n# mid\n+ 0 2\n");
  CHECK(t.n == 3);
  CHECK(t.events.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_of("n 3\n+ 0  1\n").find("line 2") != std::string::npos);
  CHECK(parse_error_of("+ 0 1\n").find("line 1") != std::string::npos);
  CHECK(parse_error_of("n 3\n+ 0 1").find("line 2") != std::string::npos);  // no newline
  CHECK(parse_error_of("n 3\n\n+ 0 1\n").find("blank") != std::string::npos);
  CHECK(parse_error_of("n 3\n+ 0 3\n").find("universe") != std::string::npos);
  CHECK(parse_error_of("n 3\n+ 1 1\n").find("SelfLoop") != std::string::npos);
  CHECK(parse_error_of("n 3\n+ 0 1\n+ 1 0\n").find("DuplicateEdge") != std::string::npos);
  CHECK(parse_error_of("n 3\n- 0 1\n").find("MissingEdge") != std::string::npos);
  CHECK(parse_error_of("n 3\n+ 01 2\n").find("bad integer") != std::string::npos);
  CHECK(parse_error_of("").find("empty") != std::string::npos);
}

TEST_CASE("replay preconditions are validated across the whole trace") {
  // delete of an edge removed earlier
  CHECK(parse_error_of("n 4\n+ 0 1\n- 0 1\n- 1 0\n").find("line 4") != std::string::npos);
  // reinsertion after deletion is fine
  const UpdateTrace t = parse_text("n 4\n+ 0 1\n- 0 1\n+ 0 1\n");
  CHECK(t.events.size() == 3);
}

TEST_CASE("generated traces replay cleanly and are deterministic") {
  const UpdateTrace a = generate_trace(9, 400, 0.4, 123);
  const UpdateTrace b = generate_trace(9, 400, 0.4, 123);
  CHECK(a == b);
  const UpdateTrace c = generate_trace(9, 400, 0.4, 124);
  CHECK(a.events != c.events);
  CHECK(a.events.size() == 400);

  DynGraph g(a.n);
  for (const auto& e : a.events) g.apply(e);  // throws on any precondition break

  // round trip through text
  const UpdateTrace back = parse_text(serialize_trace(a));
  CHECK(back == a);
}

TEST_CASE("insert-only generation saturates small graphs") {
  const UpdateTrace t = generate_trace(4, 6, 0.0, 5);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : t.events) {
    CHECK(e.kind == EventKind::Insert);
    seen.insert({e.u, e.v});
  }
  CHECK(seen.size() == 6);  // all of K4
}

TEST_CASE("forced moves at the boundaries") {
  // p_delete=1 on an empty graph must insert; saturation must delete
  const UpdateTrace t = generate_trace(3, 5, 1.0, 9);
  CHECK(t.events[0].kind == EventKind::Insert);
  DynGraph g(3);
  for (const auto& e : t.events) g.apply(e);
}
