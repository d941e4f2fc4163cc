#include <bit>
#include <cassert>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "dyndom/connectivity.hpp"
#include "dyndom/errors.hpp"

namespace dyndom {
namespace {

std::int64_t pack(VertexId a, VertexId b) {
  return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

std::int64_t pack_sorted(VertexId a, VertexId b) {
  return a < b ? pack(a, b) : pack(b, a);
}

/// One Euler-tour position: either the self-visit of a vertex ("loop") or a
/// directed traversal of a tree edge ("arc"). The tour of a k-vertex tree has
/// k loops and 2(k-1) arcs; rerooting is a rotation of the sequence.
struct Node {
  Node* parent = nullptr;
  Node* left = nullptr;
  Node* right = nullptr;
  VertexId u = -1, v = -1;  // loop: u == v
  bool own_nontree = false;     // loop nodes: vertex has a non-tree edge at this level
  bool own_tree_exact = false;  // arc nodes: the arc's edge lives exactly at this level
  int agg_loops = 0;
  bool agg_nontree = false;
  bool agg_tree_exact = false;

  bool is_loop() const { return u == v; }
};

void pull(Node* x) {
  x->agg_loops = x->is_loop() ? 1 : 0;
  x->agg_nontree = x->own_nontree;
  x->agg_tree_exact = x->own_tree_exact;
  for (Node* c : {x->left, x->right}) {
    if (!c) continue;
    x->agg_loops += c->agg_loops;
    x->agg_nontree = x->agg_nontree || c->agg_nontree;
    x->agg_tree_exact = x->agg_tree_exact || c->agg_tree_exact;
  }
}

void rotate(Node* x) {
  Node* p = x->parent;
  Node* g = p->parent;
  if (p->left == x) {
    p->left = x->right;
    if (x->right) x->right->parent = p;
    x->right = p;
  } else {
    p->right = x->left;
    if (x->left) x->left->parent = p;
    x->left = p;
  }
  p->parent = x;
  x->parent = g;
  if (g) (g->left == p ? g->left : g->right) = x;
  pull(p);
  pull(x);
}

void splay(Node* x) {
  while (x->parent) {
    Node* p = x->parent;
    Node* g = p->parent;
    if (g) rotate((g->left == p) == (p->left == x) ? p : x);
    rotate(x);
  }
}

Node* root_of(Node* x) {
  splay(x);
  return x;
}

Node* join(Node* a, Node* b) {
  if (!a) return b;
  if (!b) return a;
  while (a->right) a = a->right;
  splay(a);
  a->right = b;
  b->parent = a;
  pull(a);
  return a;
}

/// Splits the sequence around x into (before x, x and after).
std::pair<Node*, Node*> split_before(Node* x) {
  splay(x);
  Node* a = x->left;
  if (a) {
    a->parent = nullptr;
    x->left = nullptr;
    pull(x);
  }
  return {a, x};
}

/// Splits the sequence around x into (up to and including x, after x).
std::pair<Node*, Node*> split_after(Node* x) {
  splay(x);
  Node* b = x->right;
  if (b) {
    b->parent = nullptr;
    x->right = nullptr;
    pull(x);
  }
  return {x, b};
}

/// Detaches x from its sequence and rejoins the remainder.
void remove_node(Node* x) {
  splay(x);
  Node* a = x->left;
  Node* b = x->right;
  if (a) a->parent = nullptr;
  if (b) b->parent = nullptr;
  x->left = x->right = nullptr;
  pull(x);
  join(a, b);
}

Node* find_tree_exact(Node* t) {
  while (true) {
    if (t->left && t->left->agg_tree_exact) {
      t = t->left;
    } else if (t->own_tree_exact) {
      return t;
    } else {
      t = t->right;
    }
  }
}

Node* find_nontree(Node* t) {
  while (true) {
    if (t->left && t->left->agg_nontree) {
      t = t->left;
    } else if (t->own_nontree) {
      return t;
    } else {
      t = t->right;
    }
  }
}

/// Amortized-polylog connectivity: every edge carries a level; forests F_i
/// hold the tree edges of level >= i as Euler tours. Deleting a tree edge
/// searches for a replacement level by level, promoting the smaller side's
/// tree edges and failed non-tree candidates one level up so each edge is
/// inspected O(log n) times overall.
class LeveledConnectivity final : public DynamicConnectivity {
 public:
  explicit LeveledConnectivity(int n) : DynamicConnectivity(n) {
    max_level_ = std::bit_width(static_cast<unsigned>(n)) + 1;
    loops_.assign(max_level_ + 1, std::vector<Node*>(n, nullptr));
    arcs_.assign(max_level_ + 1, {});
    nt_adj_.assign(max_level_ + 1, std::unordered_map<VertexId, std::set<VertexId>>{});
  }

  ~LeveledConnectivity() override {
    for (auto& per_level : loops_) {
      for (Node* x : per_level) delete x;
    }
    for (auto& per_level : arcs_) {
      for (auto& [key, node] : per_level) delete node;
    }
  }

 protected:
  InsertResult do_insert(VertexId u, VertexId v) override {
    if (connected_at(0, u, v)) {
      set_nontree_level(u, v, 0);
      return InsertResult::NonTree;
    }
    tree_level_[pack_sorted(u, v)] = 0;
    link_tour(0, u, v, true);
    return InsertResult::BecameTree;
  }

  DeleteResult do_delete(VertexId u, VertexId v) override {
    DeleteResult r;
    const std::int64_t key = pack_sorted(u, v);
    if (auto it = nontree_level_.find(key); it != nontree_level_.end()) {
      clear_nontree_level(u, v, it->second);
      nontree_level_.erase(it);
      return r;
    }
    r.was_tree = true;
    auto lvl_it = tree_level_.find(key);
    assert(lvl_it != tree_level_.end());
    const int edge_level = lvl_it->second;
    tree_level_.erase(lvl_it);
    for (int i = 0; i <= edge_level; ++i) cut_tour(i, u, v);
    for (int i = edge_level; i >= 0; --i) {
      if (auto repl = search_level(i, u, v)) {
        r.replacement = repl;
        return r;
      }
    }
    r.split = true;
    return r;
  }

  bool do_connected(VertexId u, VertexId v) override { return connected_at(0, u, v); }

 private:
  Node* loop(int level, VertexId x) {
    Node*& slot = loops_[level][x];
    if (!slot) {
      slot = new Node;
      slot->u = slot->v = x;
      pull(slot);
    }
    return slot;
  }

  bool connected_at(int level, VertexId a, VertexId b) {
    if (a == b) return true;
    Node* la = loops_[level][a];
    Node* lb = loops_[level][b];
    if (!la || !lb) return false;
    splay(la);
    splay(lb);
    return la->parent != nullptr;
  }

  void reroot(int level, VertexId x) {
    auto [before, from] = split_before(loop(level, x));
    join(from, before);
  }

  void link_tour(int level, VertexId u, VertexId v, bool exact_here) {
    reroot(level, u);
    reroot(level, v);
    Node* uv = new Node;
    uv->u = u;
    uv->v = v;
    uv->own_tree_exact = exact_here;
    pull(uv);
    Node* vu = new Node;
    vu->u = v;
    vu->v = u;
    vu->own_tree_exact = exact_here;
    pull(vu);
    arcs_[level][pack(u, v)] = uv;
    arcs_[level][pack(v, u)] = vu;
    Node* t = join(root_of(loop(level, u)), uv);
    t = join(t, root_of(loop(level, v)));
    join(t, vu);
  }

  void cut_tour(int level, VertexId u, VertexId v) {
    reroot(level, u);
    auto uv_it = arcs_[level].find(pack(u, v));
    auto vu_it = arcs_[level].find(pack(v, u));
    assert(uv_it != arcs_[level].end() && vu_it != arcs_[level].end());
    Node* uv = uv_it->second;
    Node* vu = vu_it->second;
    arcs_[level].erase(uv_it);
    arcs_[level].erase(vu_it);
    // With the tour rooted at u, arc (u,v) precedes (v,u); between them lies
    // exactly v's subtree tour.
    auto [a, rest] = split_before(uv);
    auto [mid, c] = split_after(vu);
    (void)mid;
    join(a, c);
    remove_node(uv);
    remove_node(vu);
    delete uv;
    delete vu;
  }

  void set_nontree_level(VertexId u, VertexId v, int level) {
    nontree_level_[pack_sorted(u, v)] = level;
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      auto& bucket = nt_adj_[level][x];
      bucket.insert(y);
      if (bucket.size() == 1) flip_nontree_flag(level, x, true);
    }
  }

  void clear_nontree_level(VertexId u, VertexId v, int level) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      auto it = nt_adj_[level].find(x);
      assert(it != nt_adj_[level].end());
      it->second.erase(y);
      if (it->second.empty()) {
        nt_adj_[level].erase(it);
        flip_nontree_flag(level, x, false);
      }
    }
  }

  void flip_nontree_flag(int level, VertexId x, bool value) {
    Node* l = loop(level, x);
    splay(l);
    l->own_nontree = value;
    pull(l);
  }

  void clear_tree_exact(int level, VertexId u, VertexId v) {
    for (auto key : {pack(u, v), pack(v, u)}) {
      Node* arc = arcs_[level].at(key);
      splay(arc);
      arc->own_tree_exact = false;
      pull(arc);
    }
  }

  std::optional<std::pair<VertexId, VertexId>> search_level(int level, VertexId u, VertexId v) {
    // Identify the smaller side; promote its level-exact tree edges, then try
    // its level-exact non-tree edges as replacements.
    Node* ru = loops_[level][u] ? root_of(loops_[level][u]) : nullptr;
    Node* rv = loops_[level][v] ? root_of(loops_[level][v]) : nullptr;
    const int su = ru ? ru->agg_loops : 1;
    const int sv = rv ? rv->agg_loops : 1;
    VertexId small = u, big = v;
    if (su > sv) {
      small = v;
      big = u;
    }
    while (true) {
      Node* rs = loops_[level][small] ? root_of(loops_[level][small]) : nullptr;
      if (!rs || !rs->agg_tree_exact) break;
      Node* arc = find_tree_exact(rs);
      const VertexId a = arc->u, b = arc->v;
      clear_tree_exact(level, a, b);
      tree_level_[pack_sorted(a, b)] = level + 1;
      assert(level + 1 <= max_level_);
      link_tour(level + 1, a, b, true);
    }
    while (true) {
      Node* rs = loops_[level][small] ? root_of(loops_[level][small]) : nullptr;
      if (!rs || !rs->agg_nontree) break;
      Node* l = find_nontree(rs);
      const VertexId x = l->u;
      auto candidates = nt_adj_[level].at(x);  // copy: mutated below
      for (VertexId y : candidates) {
        clear_nontree_level(x, y, level);
        if (connected_at(level, y, big)) {
          // Replacement found: it becomes a tree edge at this level, linked
          // into every forest from here down to level 0.
          nontree_level_.erase(pack_sorted(x, y));
          tree_level_[pack_sorted(x, y)] = level;
          link_tour(level, x, y, true);
          for (int j = level - 1; j >= 0; --j) link_tour(j, x, y, false);
          return std::make_pair(x, y);
        }
        nontree_level_[pack_sorted(x, y)] = level + 1;
        assert(level + 1 <= max_level_);
        for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
          auto& bucket = nt_adj_[level + 1][p];
          bucket.insert(q);
          if (bucket.size() == 1) flip_nontree_flag(level + 1, p, true);
        }
      }
    }
    return std::nullopt;
  }

  int max_level_;
  std::vector<std::vector<Node*>> loops_;
  std::vector<std::unordered_map<std::int64_t, Node*>> arcs_;
  std::vector<std::unordered_map<VertexId, std::set<VertexId>>> nt_adj_;
  std::unordered_map<std::int64_t, int> tree_level_;
  std::unordered_map<std::int64_t, int> nontree_level_;
};

}  // namespace

namespace detail {
std::unique_ptr<DynamicConnectivity> make_leveled(int n) {
  return std::make_unique<LeveledConnectivity>(n);
}
}  // namespace detail

}  // namespace dyndom
