#include "dyndom/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "dyndom/errors.hpp"

namespace dyndom {

namespace detail {
std::unique_ptr<DynamicConnectivity> make_naive(int n);
std::unique_ptr<DynamicConnectivity> make_leveled(int n);
}  // namespace detail

DynamicConnectivity::DynamicConnectivity(int n)
    : n_(n), components_(n), adj_(n), f_adj_(n) {
  if (n < 1) throw Error(Errc::ParseError, "vertex count must be positive");
}

std::unique_ptr<DynamicConnectivity> DynamicConnectivity::make(ConnBackend backend, int n) {
  switch (backend) {
    case ConnBackend::Naive:
      return detail::make_naive(n);
    case ConnBackend::Leveled:
      return detail::make_leveled(n);
  }
  throw Error(Errc::ParseError, "unknown connectivity backend");
}

void DynamicConnectivity::check_pair(VertexId u, VertexId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw Error(Errc::ParseError, "vertex id out of range");
  if (u == v) throw Error(Errc::SelfLoop, "self loops are not supported");
}

DynamicConnectivity::InsertResult DynamicConnectivity::insert_edge(VertexId u, VertexId v) {
  check_pair(u, v);
  if (adj_[u].count(v)) throw Error(Errc::DuplicateEdge, "edge already tracked");
  InsertResult r = do_insert(u, v);
  adj_[u].insert(v);
  adj_[v].insert(u);
  if (r == InsertResult::BecameTree) {
    f_adj_[u].insert(v);
    f_adj_[v].insert(u);
    --components_;
  } else {
    non_tree_.insert(std::minmax(u, v));
  }
  return r;
}

DynamicConnectivity::DeleteResult DynamicConnectivity::delete_edge(VertexId u, VertexId v) {
  check_pair(u, v);
  if (!adj_[u].count(v)) throw Error(Errc::MissingEdge, "edge not tracked");
  const bool was_tree = f_adj_[u].count(v) != 0;
  adj_[u].erase(v);
  adj_[v].erase(u);
  if (was_tree) {
    f_adj_[u].erase(v);
    f_adj_[v].erase(u);
  } else {
    non_tree_.erase(std::minmax(u, v));
  }
  DeleteResult r = do_delete(u, v);
  assert(r.was_tree == was_tree);
  if (r.replacement) {
    const VertexId a = std::min(r.replacement->first, r.replacement->second);
    const VertexId b = std::max(r.replacement->first, r.replacement->second);
    r.replacement = std::make_pair(a, b);
    non_tree_.erase(std::make_pair(a, b));
    f_adj_[a].insert(b);
    f_adj_[b].insert(a);
  }
  if (r.split) ++components_;
  return r;
}

bool DynamicConnectivity::connected(VertexId u, VertexId v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw Error(Errc::ParseError, "vertex id out of range");
  if (u == v) return true;
  return do_connected(u, v);
}

bool DynamicConnectivity::has_edge(VertexId u, VertexId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return adj_[u].count(v) != 0;
}

bool DynamicConnectivity::is_tree_edge(VertexId u, VertexId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return f_adj_[u].count(v) != 0;
}

std::vector<VertexId> DynamicConnectivity::tree_path(VertexId u, VertexId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw Error(Errc::ParseError, "vertex id out of range");
  if (u == v) return {u};
  std::vector<VertexId> parent(n_, -1);
  std::deque<VertexId> queue{u};
  parent[u] = u;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (VertexId y : f_adj_[x]) {
      if (parent[y] != -1) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[v] == -1) throw Error(Errc::Disconnected, "vertices are in different components");
  std::vector<VertexId> path;
  for (VertexId x = v; x != u; x = parent[x]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<VertexId> DynamicConnectivity::component_vertices(VertexId v) const {
  if (v < 0 || v >= n_) throw Error(Errc::ParseError, "vertex id out of range");
  std::vector<VertexId> out{v};
  std::unordered_set<VertexId> seen{v};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (VertexId y : f_adj_[out[i]]) {
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Spanning forest with component labels; tree-edge deletion rebuilds one side
/// by search and scans the non-tree edges for a replacement.
class NaiveConnectivity final : public DynamicConnectivity {
 public:
  explicit NaiveConnectivity(int n) : DynamicConnectivity(n), label_(n), size_(n, 1) {
    for (int v = 0; v < n; ++v) label_[v] = v;
  }

 protected:
  InsertResult do_insert(VertexId u, VertexId v) override {
    if (label_[u] == label_[v]) return InsertResult::NonTree;
    VertexId from = label_[u], to = label_[v];
    if (size_[from] > size_[to]) std::swap(from, to);
    relabel(from, to);
    return InsertResult::BecameTree;
  }

  DeleteResult do_delete(VertexId u, VertexId v) override {
    // The base class already dropped the edge from f_adj_, so the searches
    // below see the post-delete forest. A non-tree removal leaves u and v
    // connected through the forest; a tree removal splits them apart until a
    // replacement is promoted.
    DeleteResult r;
    std::vector<VertexId> u_side = collect(u);
    std::unordered_set<VertexId> in_u_side(u_side.begin(), u_side.end());
    if (in_u_side.count(v)) return r;  // non-tree removal
    r.was_tree = true;
    for (const auto& [a, b] : non_tree_) {
      const bool a_in = in_u_side.count(a) != 0;
      const bool b_in = in_u_side.count(b) != 0;
      if (a_in != b_in) {
        r.replacement = std::make_pair(a, b);
        return r;
      }
    }
    r.split = true;
    // Relabel the side that does not contain the old label value, so the two
    // halves end up with distinct labels that are each a member of their half.
    const VertexId old_label = label_[u];
    std::vector<VertexId> relabel_side;
    VertexId fresh;
    if (in_u_side.count(old_label)) {
      relabel_side = collect(v);
      fresh = v;
    } else {
      relabel_side = std::move(u_side);
      fresh = u;
    }
    size_[old_label] -= static_cast<int>(relabel_side.size());
    for (VertexId x : relabel_side) label_[x] = fresh;
    size_[fresh] = static_cast<int>(relabel_side.size());
    return r;
  }

  bool do_connected(VertexId u, VertexId v) override { return label_[u] == label_[v]; }

 private:

  std::vector<VertexId> collect(VertexId v) const {
    std::vector<VertexId> out{v};
    std::unordered_set<VertexId> seen{v};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (VertexId y : f_adj_[out[i]]) {
        if (seen.insert(y).second) out.push_back(y);
      }
    }
    return out;
  }

  void relabel(VertexId from, VertexId to) {
    std::vector<VertexId> members;
    for (int x = 0; x < n_; ++x) {
      if (label_[x] == from) members.push_back(x);
    }
    for (VertexId x : members) label_[x] = to;
    size_[to] += size_[from];
    size_[from] = 0;
  }

  std::vector<VertexId> label_;
  std::vector<int> size_;
};

}  // namespace

namespace detail {
std::unique_ptr<DynamicConnectivity> make_naive(int n) {
  return std::make_unique<NaiveConnectivity>(n);
}
}  // namespace detail

}  // namespace dyndom
