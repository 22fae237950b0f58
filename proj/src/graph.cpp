#include "graphtherm/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace graphtherm {

namespace {

[[noreturn]] void parse_fail(const std::string& text, const std::string& why) {
  throw std::invalid_argument("bad graph descriptor '" + text + "': " + why);
}

int parse_positive_int(const std::string& text, const std::string& field) {
  if (field.empty() || !std::all_of(field.begin(), field.end(),
                                    [](unsigned char c) { return std::isdigit(c); })) {
    parse_fail(text, "expected positive integer, got '" + field + "'");
  }
  long value = 0;
  try {
    value = std::stol(field);
  } catch (const std::exception&) {
    parse_fail(text, "integer out of range: '" + field + "'");
  }
  if (value <= 0 || value > 1000000) parse_fail(text, "size out of range: '" + field + "'");
  return static_cast<int>(value);
}

std::pair<int, int> parse_dims(const std::string& text, const std::string& field) {
  auto x = field.find('x');
  if (x == std::string::npos) parse_fail(text, "expected MxN, got '" + field + "'");
  return {parse_positive_int(text, field.substr(0, x)),
          parse_positive_int(text, field.substr(x + 1))};
}

Boundary parse_bc(const std::string& text, const std::string& field) {
  if (field == "obc") return Boundary::Open;
  if (field == "pbc") return Boundary::Periodic;
  parse_fail(text, "boundary must be obc or pbc, got '" + field + "'");
}

std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(':', start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string FamilySpec::to_string() const {
  switch (kind) {
    case FamilyKind::Complete: return "complete:" + std::to_string(a);
    case FamilyKind::Cycle: return "cycle:" + std::to_string(a);
    case FamilyKind::Path: return "path:" + std::to_string(a);
    case FamilyKind::CompleteBipartite:
      return "bipartite:" + std::to_string(a) + "," + std::to_string(b);
    case FamilyKind::Star: return "star:" + std::to_string(a);
    case FamilyKind::Grid:
      return "grid:" + std::to_string(a) + "x" + std::to_string(b) + ":obc";
    case FamilyKind::TorusGrid:
      return "torus:" + std::to_string(a) + "x" + std::to_string(b);
    case FamilyKind::Triangular:
      return "tri:" + std::to_string(a) + "x" + std::to_string(b) +
             (bc == Boundary::Open ? ":obc" : ":pbc");
    case FamilyKind::Honeycomb:
      return "honey:" + std::to_string(a) + "x" + std::to_string(b) +
             (bc == Boundary::Open ? ":obc" : ":pbc");
    case FamilyKind::TruncatedSquare:
      return "trsq:" + std::to_string(a) + "x" + std::to_string(b) +
             (bc == Boundary::Open ? ":obc" : ":pbc");
    case FamilyKind::Product:
      return "prod(" + (left ? left->to_string() : "?") + "," +
             (right ? right->to_string() : "?") + ")";
    case FamilyKind::Custom: return "custom";
  }
  return "custom";
}

FamilySpec parse_descriptor(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) parse_fail(text, "empty descriptor");

  if (s.rfind("prod(", 0) == 0) {
    if (s.back() != ')') parse_fail(text, "missing closing parenthesis");
    std::string inner = s.substr(5, s.size() - 6);
    int depth = 0;
    std::size_t comma = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      else if (inner[i] == ')') --depth;
      else if (inner[i] == ',' && depth == 0) { comma = i; break; }
    }
    if (comma == std::string::npos) parse_fail(text, "prod requires two factors");
    FamilySpec spec;
    spec.kind = FamilyKind::Product;
    spec.left = std::make_shared<FamilySpec>(parse_descriptor(inner.substr(0, comma)));
    spec.right = std::make_shared<FamilySpec>(parse_descriptor(inner.substr(comma + 1)));
    return spec;
  }

  auto parts = split_colon(s);
  const std::string& name = parts[0];
  FamilySpec spec;

  auto one_size = [&](FamilyKind kind) {
    if (parts.size() != 2) parse_fail(text, "expected " + name + ":N");
    spec.kind = kind;
    spec.a = parse_positive_int(text, parts[1]);
  };
  auto lattice = [&](FamilyKind kind, bool bc_allowed) {
    if (parts.size() < 2 || parts.size() > (bc_allowed ? 3u : 2u)) {
      parse_fail(text, "expected " + name + ":MxN" + (bc_allowed ? "[:obc|pbc]" : ""));
    }
    spec.kind = kind;
    std::tie(spec.a, spec.b) = parse_dims(text, parts[1]);
    spec.bc = (parts.size() == 3) ? parse_bc(text, parts[2]) : Boundary::Open;
  };

  if (name == "complete") one_size(FamilyKind::Complete);
  else if (name == "cycle") one_size(FamilyKind::Cycle);
  else if (name == "path") one_size(FamilyKind::Path);
  else if (name == "star") one_size(FamilyKind::Star);
  else if (name == "bipartite") {
    if (parts.size() != 2) parse_fail(text, "expected bipartite:N1,N2");
    auto comma = parts[1].find(',');
    if (comma == std::string::npos) parse_fail(text, "expected bipartite:N1,N2");
    spec.kind = FamilyKind::CompleteBipartite;
    spec.a = parse_positive_int(text, parts[1].substr(0, comma));
    spec.b = parse_positive_int(text, parts[1].substr(comma + 1));
  } else if (name == "grid") {
    lattice(FamilyKind::Grid, true);
    if (spec.bc == Boundary::Periodic) spec.kind = FamilyKind::TorusGrid;
  } else if (name == "torus") {
    lattice(FamilyKind::TorusGrid, false);
    spec.bc = Boundary::Periodic;
  } else if (name == "tri") lattice(FamilyKind::Triangular, true);
  else if (name == "honey") lattice(FamilyKind::Honeycomb, true);
  else if (name == "trsq") lattice(FamilyKind::TruncatedSquare, true);
  else parse_fail(text, "unknown family '" + name + "'");
  return spec;
}

Graph::Graph(int order, std::vector<std::pair<int, int>> edges,
             std::optional<FamilySpec> family)
    : order_(order), family_(std::move(family)) {
  if (order_ < 1) throw std::invalid_argument("graph order must be positive");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= order_ || v >= order_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  edges_ = std::move(edges);
  adjacency_.assign(order_, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= order_) throw std::invalid_argument("vertex out of range");
  return adjacency_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = neighbors(u);
  if (v < 0 || v >= order_) throw std::invalid_argument("vertex out of range");
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::string Graph::family_name() const {
  return family_ ? family_->to_string() : "custom";
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(order_, order_);
  for (const auto& [u, v] : edges_) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

Eigen::MatrixXd Graph::laplacian_matrix() const {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(order_, order_);
  for (const auto& [u, v] : edges_) {
    l(u, u) += 1.0;
    l(v, v) += 1.0;
    l(u, v) -= 1.0;
    l(v, u) -= 1.0;
  }
  return l;
}

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

void add_edge(EdgeSet& edges, int u, int v) {
  if (u == v) throw std::invalid_argument("lattice wrap produced a self-loop");
  edges.insert({std::min(u, v), std::max(u, v)});
}

std::vector<std::pair<int, int>> to_vector(const EdgeSet& edges) {
  return {edges.begin(), edges.end()};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Edge lists are materialized in memory, so the quadratic families get a
// budget rather than silently exhausting the machine.
constexpr long long kEdgeBudget = 20'000'000;

Graph build_complete(const FamilySpec& spec) {
  require(spec.a >= 2, "complete graph requires N >= 2");
  require(static_cast<long long>(spec.a) * (spec.a - 1) / 2 <= kEdgeBudget,
          "complete graph too large for the dense representation");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < spec.a; ++i)
    for (int j = i + 1; j < spec.a; ++j) edges.emplace_back(i, j);
  return Graph(spec.a, std::move(edges), spec);
}

Graph build_cycle(const FamilySpec& spec) {
  require(spec.a >= 3, "cycle graph requires N >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < spec.a; ++i) edges.emplace_back(i, (i + 1) % spec.a);
  return Graph(spec.a, std::move(edges), spec);
}

Graph build_path(const FamilySpec& spec) {
  require(spec.a >= 2, "path graph requires N >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < spec.a; ++i) edges.emplace_back(i, i + 1);
  return Graph(spec.a, std::move(edges), spec);
}

Graph build_bipartite(const FamilySpec& spec) {
  require(spec.a >= 1 && spec.b >= 1, "complete bipartite requires N1, N2 >= 1");
  require(static_cast<long long>(spec.a) * spec.b <= kEdgeBudget,
          "complete bipartite graph too large for the dense representation");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < spec.a; ++i)
    for (int j = 0; j < spec.b; ++j) edges.emplace_back(i, spec.a + j);
  return Graph(spec.a + spec.b, std::move(edges), spec);
}

// Star S_N is the complete bipartite graph K_{1,N-1} with the hub at vertex 0.
Graph build_star(const FamilySpec& spec) {
  require(spec.a >= 2, "star graph requires N >= 2");
  FamilySpec bip;
  bip.kind = FamilyKind::CompleteBipartite;
  bip.a = 1;
  bip.b = spec.a - 1;
  Graph g = build_bipartite(bip);
  return Graph(g.order(), g.edges(), spec);
}

void check_lattice_sides(const FamilySpec& spec) {
  if (spec.bc == Boundary::Periodic) {
    // Sides below 3 would wrap onto duplicate edges.
    require(spec.a >= 3 && spec.b >= 3, "periodic lattices require sides >= 3");
  } else {
    require(spec.a >= 2 && spec.b >= 2, "lattice sides must be >= 2");
  }
}

// Square lattice as the Cartesian product of two paths (OBC) or cycles (PBC).
Graph build_square_lattice(const FamilySpec& spec) {
  check_lattice_sides(spec);
  const int m = spec.a, n = spec.b;
  const bool pbc = spec.bc == Boundary::Periodic;
  EdgeSet edges;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      int v = r * n + c;
      if (pbc || c + 1 < n) add_edge(edges, v, r * n + (c + 1) % n);
      if (pbc || r + 1 < m) add_edge(edges, v, ((r + 1) % m) * n + c);
    }
  }
  return Graph(m * n, to_vector(edges), spec);
}

// Grid plus the anti-diagonal of every unit cell; interior degree 6.
Graph build_triangular(const FamilySpec& spec) {
  check_lattice_sides(spec);
  const int m = spec.a, n = spec.b;
  const bool pbc = spec.bc == Boundary::Periodic;
  EdgeSet edges;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      int v = r * n + c;
      if (pbc || c + 1 < n) add_edge(edges, v, r * n + (c + 1) % n);
      if (pbc || r + 1 < m) add_edge(edges, v, ((r + 1) % m) * n + c);
      if (pbc || (r + 1 < m && c + 1 < n)) {
        add_edge(edges, r * n + (c + 1) % n, ((r + 1) % m) * n + c);
      }
    }
  }
  return Graph(m * n, to_vector(edges), spec);
}

// Brick-wall embedding on an m x n vertex array: all horizontal edges, one
// vertical edge per vertex selected by the parity of r + c; interior degree 3.
Graph build_honeycomb(const FamilySpec& spec) {
  check_lattice_sides(spec);
  const int m = spec.a, n = spec.b;
  const bool pbc = spec.bc == Boundary::Periodic;
  if (pbc) {
    // Odd m breaks the vertical-edge parity pattern at the wrap seam.
    require(m % 2 == 0, "periodic honeycomb requires an even number of rows");
  }
  EdgeSet edges;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      int v = r * n + c;
      if (pbc || c + 1 < n) add_edge(edges, v, r * n + (c + 1) % n);
      if ((r + c) % 2 == 0 && (pbc || r + 1 < m)) {
        add_edge(edges, v, ((r + 1) % m) * n + c);
      }
    }
  }
  return Graph(m * n, to_vector(edges), spec);
}

// 4.8.8 tiling built from m x n square cells of four vertices each
// (top, right, bottom, left), linked right-to-left and bottom-to-top;
// interior degree 3.
Graph build_truncated_square(const FamilySpec& spec) {
  if (spec.bc == Boundary::Periodic) {
    require(spec.a >= 3 && spec.b >= 3, "periodic lattices require sides >= 3");
  } else {
    require(spec.a >= 2 && spec.b >= 2, "lattice sides must be >= 2");
  }
  const int m = spec.a, n = spec.b;
  const bool pbc = spec.bc == Boundary::Periodic;
  auto vid = [n](int r, int c, int k) { return 4 * (r * n + c) + k; };
  constexpr int kTop = 0, kRight = 1, kBottom = 2, kLeft = 3;
  EdgeSet edges;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      add_edge(edges, vid(r, c, kTop), vid(r, c, kRight));
      add_edge(edges, vid(r, c, kRight), vid(r, c, kBottom));
      add_edge(edges, vid(r, c, kBottom), vid(r, c, kLeft));
      add_edge(edges, vid(r, c, kLeft), vid(r, c, kTop));
      if (pbc || c + 1 < n) {
        add_edge(edges, vid(r, c, kRight), vid(r, (c + 1) % n, kLeft));
      }
      if (pbc || r + 1 < m) {
        add_edge(edges, vid(r, c, kBottom), vid((r + 1) % m, c, kTop));
      }
    }
  }
  return Graph(4 * m * n, to_vector(edges), spec);
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Complete: return build_complete(spec);
    case FamilyKind::Cycle: return build_cycle(spec);
    case FamilyKind::Path: return build_path(spec);
    case FamilyKind::CompleteBipartite: return build_bipartite(spec);
    case FamilyKind::Star: return build_star(spec);
    case FamilyKind::Grid: return build_square_lattice(spec);
    case FamilyKind::TorusGrid: {
      FamilySpec torus = spec;
      torus.bc = Boundary::Periodic;
      return build_square_lattice(torus);
    }
    case FamilyKind::Triangular: return build_triangular(spec);
    case FamilyKind::Honeycomb: return build_honeycomb(spec);
    case FamilyKind::TruncatedSquare: return build_truncated_square(spec);
    case FamilyKind::Product:
      require(spec.left && spec.right, "product descriptor missing factors");
      return cartesian_product(build_family(*spec.left), build_family(*spec.right));
    case FamilyKind::Custom:
      throw std::invalid_argument("cannot build a graph from a custom tag");
  }
  throw std::invalid_argument("unknown family kind");
}

Graph build_graph(const std::string& descriptor) {
  return build_family(parse_descriptor(descriptor));
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n1) * g2.edge_count() +
                static_cast<std::size_t>(n2) * g1.edge_count());
  for (int j = 0; j < n1; ++j) {
    for (const auto& [k, kp] : g2.edges()) {
      edges.emplace_back(j * n2 + k, j * n2 + kp);
    }
  }
  for (const auto& [j, jp] : g1.edges()) {
    for (int k = 0; k < n2; ++k) {
      edges.emplace_back(j * n2 + k, jp * n2 + k);
    }
  }
  std::optional<FamilySpec> family;
  if (g1.family() && g2.family()) {
    FamilySpec spec;
    spec.kind = FamilyKind::Product;
    spec.left = std::make_shared<FamilySpec>(*g1.family());
    spec.right = std::make_shared<FamilySpec>(*g2.family());
    family = std::move(spec);
  }
  return Graph(n1 * n2, std::move(edges), std::move(family));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.edge_count = g.edge_count();
  stats.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    stats.degrees[v] = d;
    stats.degree_sum += d;
    stats.degree_square_sum += static_cast<long long>(d) * d;
  }
  return stats;
}

bool is_circulant_labeled(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) {
    a[u][v] = true;
    a[v][u] = true;
  }
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a[i][j] != a[i + 1][(j + 1) % n]) return false;
    }
  }
  return true;
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == g.order();
}

Graph read_edge_list(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
  std::vector<std::pair<int, int>> edges;
  int u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
    edges.emplace_back(u, v);
  }
  if (!in.eof() && in.fail()) {
    throw std::invalid_argument("edge list: malformed line");
  }
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list file: " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace graphtherm
