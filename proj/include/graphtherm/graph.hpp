#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace graphtherm {

enum class Boundary { Open, Periodic };

enum class FamilyKind {
  Complete,
  Cycle,
  Path,
  CompleteBipartite,
  Star,
  Grid,
  TorusGrid,
  Triangular,
  Honeycomb,
  TruncatedSquare,
  Product,
  Custom,
};

/// Parsed form of a graph descriptor such as "cycle:8" or "tri:4x4:pbc".
/// Product descriptors keep their factors so spectra can be composed.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Custom;
  int a = 0;  // N, N1, or row count
  int b = 0;  // N2 or column count
  Boundary bc = Boundary::Open;
  std::shared_ptr<const FamilySpec> left;
  std::shared_ptr<const FamilySpec> right;

  std::string to_string() const;
};

/// Parses the descriptor mini-language:
///   complete:N  cycle:N  path:N  bipartite:N1,N2  star:N
///   grid:MxN:obc|pbc  torus:MxN  tri:MxN:obc|pbc  honey:MxN:obc|pbc
///   trsq:MxN:obc|pbc  prod(<desc>,<desc>)
/// Throws std::invalid_argument on malformed input.
FamilySpec parse_descriptor(const std::string& text);

/// Simple undirected graph on vertices 0..N-1, immutable after construction.
/// Rejects self-loops, duplicate edges, and out-of-range labels.
class Graph {
 public:
  Graph(int order, std::vector<std::pair<int, int>> edges,
        std::optional<FamilySpec> family = std::nullopt);

  int order() const { return order_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  const std::optional<FamilySpec>& family() const { return family_; }
  /// Canonical descriptor for built families, "custom" otherwise.
  std::string family_name() const;

  Eigen::MatrixXd adjacency_matrix() const;
  /// L = D - A, the walker Hamiltonian.
  Eigen::MatrixXd laplacian_matrix() const;

 private:
  int order_;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
  std::vector<std::vector<int>> adjacency_;
  std::optional<FamilySpec> family_;
};

struct DegreeStats {
  long long edge_count = 0;
  std::vector<int> degrees;
  long long degree_sum = 0;         // equals 2M (handshaking lemma)
  long long degree_square_sum = 0;  // enters the high-temperature formulas
};

Graph build_family(const FamilySpec& spec);
Graph build_graph(const std::string& descriptor);

/// Cartesian product: vertex (j,k) of G1 x G2 maps to index j*N2 + k;
/// (j,k) ~ (j',k') iff (j==j' and k~k') or (j~j' and k==k').
Graph cartesian_product(const Graph& g1, const Graph& g2);

DegreeStats degree_stats(const Graph& g);

/// True iff, under the given labeling, every adjacency-matrix row is the
/// right cyclic shift of the row above it. Labeling-dependent: no attempt
/// is made to search for a circulant relabeling.
bool is_circulant_labeled(const Graph& g);

bool is_connected(const Graph& g);

/// Edge-list file format: first line N, then one "u v" pair per line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace graphtherm
