#include "dyndom/graph.hpp"

#include <algorithm>
#include <string>

namespace dyndom {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::MissingEdge: return "MissingEdge";
    case Errc::ParseError: return "ParseError";
    case Errc::AlreadyMember: return "AlreadyMember";
    case Errc::StillNeeded: return "StillNeeded";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NoShortConnector: return "NoShortConnector";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

DynGraph::DynGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 1) throw Error(Errc::ParseError, "vertex universe must be at least 1");
}

VertexId DynGraph::check(VertexId v) const {
  if (v < 0 || v >= n_)
    throw Error(Errc::ParseError, "vertex id " + std::to_string(v) + " outside [0," +
                                      std::to_string(n_) + ")");
  return v;
}

bool DynGraph::has_edge(VertexId u, VertexId v) const {
  check(u);
  check(v);
  if (u == v) return false;
  return adj_[u].count(v) > 0;
}

void DynGraph::insert_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v)
    throw Error(Errc::SelfLoop, "insert (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (adj_[u].count(v))
    throw Error(Errc::DuplicateEdge,
                "insert (" + std::to_string(u) + "," + std::to_string(v) + ")");
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_current_;
  m_max_ = std::max(m_max_, m_current_);
  delta_max_ = std::max({delta_max_, degree(u), degree(v)});
}

void DynGraph::delete_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v)
    throw Error(Errc::SelfLoop, "delete (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (!adj_[u].count(v))
    throw Error(Errc::MissingEdge,
                "delete (" + std::to_string(u) + "," + std::to_string(v) + ")");
  adj_[u].erase(v);
  adj_[v].erase(u);
  --m_current_;
}

void DynGraph::apply(const UpdateEvent& e) {
  if (e.kind == EventKind::Insert)
    insert_edge(e.u, e.v);
  else
    delete_edge(e.u, e.v);
}

std::vector<std::pair<VertexId, VertexId>> DynGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(static_cast<std::size_t>(m_current_));
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dyndom
