#include "dyndom/trace.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace dyndom {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + why);
}

// Strict split on single spaces; rejects empty fields (doubled/leading/
// trailing spaces) so serialization stays bit-exact.
std::vector<std::string> split_strict(const std::string& s, std::size_t line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ') {
      if (cur.empty()) parse_fail(line, "malformed spacing");
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (cur.empty()) parse_fail(line, "malformed spacing");
  out.push_back(std::move(cur));
  return out;
}

long parse_int(const std::string& tok, std::size_t line) {
  if (tok.empty() || (tok.size() > 1 && tok[0] == '0'))
    parse_fail(line, "bad integer '" + tok + "'");
  for (char c : tok)
    if (c < '0' || c > '9') parse_fail(line, "bad integer '" + tok + "'");
  try {
    return std::stol(tok);
  } catch (const std::exception&) {
    parse_fail(line, "bad integer '" + tok + "'");
  }
}

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Uniform draw from [0, bound) by rejection; keeps generated traces identical
// across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

UpdateTrace parse_trace(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.empty()) parse_fail(1, "empty input");
  if (text.back() != '\n') {
    std::size_t lines = 1;
    for (char c : text)
      if (c == '\n') ++lines;
    parse_fail(lines, "missing trailing newline");
  }

  UpdateTrace t;
  std::set<std::uint64_t> present;
  bool saw_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) parse_fail(line_no, "blank line");
    auto tok = split_strict(line, line_no);
    if (!saw_header) {
      if (tok.size() != 2 || tok[0] != "n") parse_fail(line_no, "expected 'n <count>' header");
      long n = parse_int(tok[1], line_no);
      if (n < 1 || n > (1L << 30)) parse_fail(line_no, "vertex count out of range");
      t.n = static_cast<int>(n);
      saw_header = true;
      continue;
    }
    if (tok.size() != 3 || (tok[0] != "+" && tok[0] != "-"))
      parse_fail(line_no, "expected '+ u v' or '- u v'");
    long u = parse_int(tok[1], line_no);
    long v = parse_int(tok[2], line_no);
    if (u >= t.n || v >= t.n)
      parse_fail(line_no, "vertex id outside universe of size " + std::to_string(t.n));
    if (u == v) parse_fail(line_no, std::string(errc_name(Errc::SelfLoop)) + " (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
    const auto key = edge_key(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (tok[0] == "+") {
      if (!present.insert(key).second)
        parse_fail(line_no, std::string(errc_name(Errc::DuplicateEdge)) + " (" +
                                std::to_string(u) + "," + std::to_string(v) + ")");
      t.events.push_back({EventKind::Insert, static_cast<VertexId>(u), static_cast<VertexId>(v)});
    } else {
      if (present.erase(key) == 0)
        parse_fail(line_no, std::string(errc_name(Errc::MissingEdge)) + " (" +
                                std::to_string(u) + "," + std::to_string(v) + ")");
      t.events.push_back({EventKind::Delete, static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
  }
  if (!saw_header) parse_fail(line_no, "missing 'n <count>' header");
  return t;
}

UpdateTrace parse_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open trace file '" + path + "'");
  return parse_trace(in);
}

std::string serialize_trace(const UpdateTrace& t) {
  std::ostringstream out;
  out << "n " << t.n << "\n";
  for (const auto& e : t.events)
    out << (e.kind == EventKind::Insert ? '+' : '-') << ' ' << e.u << ' ' << e.v << "\n";
  return out.str();
}

void write_trace_file(const std::string& path, const UpdateTrace& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write trace file '" + path + "'");
  out << serialize_trace(t);
}

UpdateTrace generate_trace(int n, int steps, double p_delete, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::TooLarge, "trace generation needs n >= 2");
  if (p_delete < 0.0 || p_delete > 1.0)
    throw Error(Errc::ParseError, "p_delete outside [0,1]");
  std::mt19937_64 rng(seed);
  const std::uint64_t max_edges =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;

  UpdateTrace t;
  t.n = n;
  t.events.reserve(static_cast<std::size_t>(steps));

  std::vector<std::pair<VertexId, VertexId>> present;
  std::unordered_map<std::uint64_t, std::size_t> index;

  auto insert_random_absent = [&] {
    VertexId u, v;
    std::uint64_t key;
    do {
      u = static_cast<VertexId>(draw_below(rng, static_cast<std::uint64_t>(n)));
      v = static_cast<VertexId>(draw_below(rng, static_cast<std::uint64_t>(n)));
      key = edge_key(u, v);
    } while (u == v || index.count(key));
    if (u > v) std::swap(u, v);
    index.emplace(key, present.size());
    present.emplace_back(u, v);
    t.events.push_back({EventKind::Insert, u, v});
  };
  auto delete_random_present = [&] {
    const std::size_t i = static_cast<std::size_t>(draw_below(rng, present.size()));
    auto [u, v] = present[i];
    index.erase(edge_key(u, v));
    present[i] = present.back();
    if (i + 1 != present.size()) index[edge_key(present[i].first, present[i].second)] = i;
    present.pop_back();
    t.events.push_back({EventKind::Delete, u, v});
  };

  for (int s = 0; s < steps; ++s) {
    const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const bool want_delete = r < p_delete;
    if (want_delete ? !present.empty() : present.size() >= max_edges)
      delete_random_present();
    else
      insert_random_absent();
  }
  return t;
}

}  // namespace dyndom
