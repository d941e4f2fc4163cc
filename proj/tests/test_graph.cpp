#include <functional>
#include <vector>

#include "doctest.h"
#include "dyndom/graph.hpp"

using namespace dyndom;

namespace {
Errc thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InternalInconsistency;
}
}  // namespace

TEST_CASE("fresh graph is empty") {
  DynGraph g(4);
  CHECK(g.num_vertices() == 4);
  CHECK(g.current_edges() == 0);
  CHECK(g.max_edges() == 0);
  CHECK(g.max_degree_seen() == 0);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.edges().empty());
}

TEST_CASE("insert and delete keep adjacency symmetric") {
  DynGraph g(5);
  g.insert_edge(0, 3);
  g.insert_edge(3, 1);
  CHECK(g.has_edge(3, 0));
  CHECK(g.has_edge(1, 3));
  CHECK(g.degree(3) == 2);
  CHECK(g.current_edges() == 2);
  g.delete_edge(1, 3);
  CHECK_FALSE(g.has_edge(3, 1));
  CHECK(g.degree(3) == 1);
  CHECK(g.current_edges() == 1);
}

TEST_CASE("edge preconditions raise precise errors") {
  DynGraph g(3);
  CHECK(thrown_code([&] { g.insert_edge(1, 1); }) == Errc::SelfLoop);
  g.insert_edge(0, 1);
  CHECK(thrown_code([&] { g.insert_edge(1, 0); }) == Errc::DuplicateEdge);
  CHECK(thrown_code([&] { g.delete_edge(0, 2); }) == Errc::MissingEdge);
  CHECK(thrown_code([&] { g.insert_edge(0, 3); }) == Errc::ParseError);
  CHECK(thrown_code([&] { g.insert_edge(-1, 0); }) == Errc::ParseError);
  CHECK(thrown_code([&] { DynGraph bad(0); }) == Errc::ParseError);
}

TEST_CASE("high-water marks survive deletions") {
  DynGraph g(4);
  g.insert_edge(0, 1);
  g.insert_edge(0, 2);
  g.insert_edge(0, 3);
  CHECK(g.max_degree_seen() == 3);
  CHECK(g.max_edges() == 3);
  g.delete_edge(0, 1);
  g.delete_edge(0, 2);
  CHECK(g.current_edges() == 1);
  CHECK(g.max_degree_seen() == 3);
  CHECK(g.max_edges() == 3);
}

TEST_CASE("edges lists each pair once, sorted") {
  DynGraph g(4);
  g.insert_edge(2, 1);
  g.insert_edge(3, 0);
  g.insert_edge(1, 0);
  const std::vector<std::pair<VertexId, VertexId>> want = {{0, 1}, {0, 3}, {1, 2}};
  CHECK(g.edges() == want);
}

TEST_CASE("apply dispatches on event kind") {
  DynGraph g(3);
  g.apply({EventKind::Insert, 0, 2});
  CHECK(g.has_edge(0, 2));
  g.apply({EventKind::Delete, 2, 0});
  CHECK_FALSE(g.has_edge(0, 2));
}
