#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "anc/bigmath.hpp"
#include "anc/perm.hpp"

namespace anc {

// Plane rooted tree; children listed left to right.
struct PlaneTree {
  std::vector<PlaneTree> children;

  int edge_count() const;
  bool is_even_tree() const;     // every node has an even number of children
  bool is_ternary_tree() const;  // every node has 0 or 3 children
  std::string str() const;       // nested parentheses
  bool operator==(const PlaneTree& o) const { return children == o.children; }
};

// Bicolored plane tree with a marked (root) edge.  Vertices are indices into
// `white`/`rot`; `rot[v]` lists the neighbours of v in clockwise order.
struct BicoloredPlaneTree {
  std::vector<bool> white;
  std::vector<std::vector<int>> rot;
  int root_white = 0;
  int root_black = 1;

  int vertex_count() const { return static_cast<int>(rot.size()); }
  int edge_count() const { return vertex_count() - 1; }
  void validate() const;  // throws MalformedTree
  std::vector<int> degree_distribution(bool white_side) const;
  std::string str() const;
  nlohmann::json to_json() const;
  std::string to_dot() const;
};

BicoloredPlaneTree phi(const Perm& x);
Perm phi_inverse(const BicoloredPlaneTree& t);

std::pair<PlaneTree, PlaneTree> onc_tree_pair(const Perm& x);
Perm onc_tree_pair_inverse(const PlaneTree& white_side,
                           const PlaneTree& black_side);

PlaneTree even_to_ternary(const PlaneTree& t);
PlaneTree ternary_to_even(const PlaneTree& t);

Int count_even_trees(int edges);
std::vector<PlaneTree> enumerate_plane_trees(int edges);
std::vector<PlaneTree> enumerate_even_trees(int edges);

}  // namespace anc
