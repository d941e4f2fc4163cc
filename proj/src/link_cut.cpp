#include "dyndom/link_cut.hpp"

#include <algorithm>

#include "dyndom/errors.hpp"

namespace dyndom {

struct PathForest::Node {
  Node* parent = nullptr;  // splay parent, or path-parent when splay root
  Node* child[2] = {nullptr, nullptr};
  VertexId id = -1;
  bool rev = false;
  std::int64_t add = 0;  // pending delta for the whole splay subtree below
  std::int64_t val = 0;
  std::int64_t mn = 0;
  int mn_count = 1;
  int size = 1;

  bool is_splay_root() const {
    return parent == nullptr || (parent->child[0] != this && parent->child[1] != this);
  }
};

namespace {

using Node = PathForest::Node;

void apply_add(Node* x, std::int64_t d) {
  x->val += d;
  x->mn += d;
  x->add += d;
}

void push(Node* x) {
  if (x->rev) {
    std::swap(x->child[0], x->child[1]);
    for (Node* c : x->child) {
      if (c) c->rev = !c->rev;
    }
    x->rev = false;
  }
  if (x->add != 0) {
    for (Node* c : x->child) {
      if (c) apply_add(c, x->add);
    }
    x->add = 0;
  }
}

void pull(Node* x) {
  x->size = 1;
  x->mn = x->val;
  x->mn_count = 1;
  for (Node* c : x->child) {
    if (!c) continue;
    x->size += c->size;
    if (c->mn < x->mn) {
      x->mn = c->mn;
      x->mn_count = c->mn_count;
    } else if (c->mn == x->mn) {
      x->mn_count += c->mn_count;
    }
  }
}

void rotate(Node* x) {
  Node* p = x->parent;
  Node* g = p->parent;
  const int dir = p->child[1] == x ? 1 : 0;
  Node* b = x->child[1 - dir];
  if (!p->is_splay_root()) (g->child[0] == p ? g->child[0] : g->child[1]) = x;
  x->parent = g;
  x->child[1 - dir] = p;
  p->parent = x;
  p->child[dir] = b;
  if (b) b->parent = p;
  pull(p);
  pull(x);
}

void splay(Node* x) {
  std::vector<Node*> stack{x};
  for (Node* y = x; !y->is_splay_root(); y = y->parent) stack.push_back(y->parent);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) push(*it);
  while (!x->is_splay_root()) {
    Node* p = x->parent;
    if (!p->is_splay_root()) {
      Node* g = p->parent;
      rotate((g->child[0] == p) == (p->child[0] == x) ? p : x);
    }
    rotate(x);
  }
}

}  // namespace

PathForest::PathForest(int n) : n_(n), nodes_(n) {
  if (n < 1) throw Error(Errc::ParseError, "vertex count must be positive");
  for (int v = 0; v < n; ++v) {
    nodes_[v] = new Node;
    nodes_[v]->id = v;
  }
}

PathForest::~PathForest() {
  for (Node* x : nodes_) delete x;
}

PathForest::Node* PathForest::node(VertexId v) const { return nodes_[v]; }

void PathForest::check(VertexId v) const {
  if (v < 0 || v >= n_) throw Error(Errc::ParseError, "vertex id out of range");
}

PathForest::Node* PathForest::access(Node* x) {
  Node* last = nullptr;
  for (Node* y = x; y != nullptr; y = y->parent) {
    splay(y);
    y->child[1] = last;
    pull(y);
    last = y;
  }
  splay(x);
  return last;
}

void PathForest::evert(Node* x) {
  access(x);
  x->rev = !x->rev;
  push(x);
}

PathForest::Node* PathForest::find_root(Node* x) {
  access(x);
  while (true) {
    push(x);
    if (!x->child[0]) break;
    x = x->child[0];
  }
  splay(x);
  return x;
}

void PathForest::link(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v || find_root(node(u)) == find_root(node(v)))
    throw Error(Errc::DuplicateEdge, "endpoints already share a tree");
  evert(node(u));
  node(u)->parent = node(v);
}

void PathForest::cut(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v || find_root(node(u)) != find_root(node(v)))
    throw Error(Errc::MissingEdge, "no such tree edge");
  evert(node(u));
  access(node(v));
  Node* y = node(v);
  push(y);
  if (!y->child[0] || y->child[0]->size != 1)
    throw Error(Errc::MissingEdge, "no such tree edge");
  y->child[0]->parent = nullptr;
  y->child[0] = nullptr;
  pull(y);
}

bool PathForest::connected(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v) return true;
  return find_root(node(u)) == find_root(node(v));
}

void PathForest::set_value(VertexId v, std::int64_t value) {
  check(v);
  access(node(v));
  node(v)->val = value;
  pull(node(v));
}

std::int64_t PathForest::get_value(VertexId v) {
  check(v);
  access(node(v));
  return node(v)->val;
}

void PathForest::path_add(VertexId u, VertexId v, std::int64_t delta) {
  check(u);
  check(v);
  if (!connected(u, v)) throw Error(Errc::Disconnected, "endpoints in different trees");
  evert(node(u));
  access(node(v));
  apply_add(node(v), delta);
}

PathForest::MinResult PathForest::path_min(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (!connected(u, v)) throw Error(Errc::Disconnected, "endpoints in different trees");
  evert(node(u));
  access(node(v));
  Node* x = node(v);
  MinResult r{x->mn, -1, x->mn_count};
  // Walk to the in-order-first occurrence of the minimum; in-order equals
  // path order from u after the evert.
  while (true) {
    push(x);
    if (x->child[0] && x->child[0]->mn == r.value) {
      x = x->child[0];
    } else if (x->val == r.value) {
      break;
    } else {
      x = x->child[1];
    }
  }
  r.argmin = x->id;
  splay(x);
  return r;
}

std::vector<VertexId> PathForest::path_vertices(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (!connected(u, v)) throw Error(Errc::Disconnected, "endpoints in different trees");
  evert(node(u));
  access(node(v));
  std::vector<VertexId> out;
  out.reserve(node(v)->size);
  std::vector<std::pair<Node*, bool>> stack{{node(v), false}};
  while (!stack.empty()) {
    auto [x, expanded] = stack.back();
    stack.pop_back();
    if (!x) continue;
    if (expanded) {
      out.push_back(x->id);
      continue;
    }
    push(x);
    stack.emplace_back(x->child[1], false);
    stack.emplace_back(x, true);
    stack.emplace_back(x->child[0], false);
  }
  return out;
}

int PathForest::path_length(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (!connected(u, v)) throw Error(Errc::Disconnected, "endpoints in different trees");
  evert(node(u));
  access(node(v));
  return node(v)->size;
}

VertexId PathForest::meet(VertexId u, VertexId v, VertexId x) {
  check(u);
  check(v);
  check(x);
  if (!connected(u, v) || !connected(u, x))
    throw Error(Errc::Disconnected, "query vertices in different trees");
  evert(node(u));
  access(node(v));
  Node* m = access(node(x));
  return m->id;
}

int PathForest::position_on_path(VertexId u, VertexId v, VertexId x) {
  VertexId m = meet(u, v, x);
  evert(node(u));
  access(node(m));
  return node(m)->size - 1;
}

}  // namespace dyndom
