#include "anc/trees.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "anc/noncrossing.hpp"
#include "anc/prefix.hpp"

namespace anc {

int PlaneTree::edge_count() const {
  int e = static_cast<int>(children.size());
  for (const auto& c : children) e += c.edge_count();
  return e;
}

bool PlaneTree::is_even_tree() const {
  if (children.size() % 2 != 0) return false;
  return std::all_of(children.begin(), children.end(),
                     [](const PlaneTree& c) { return c.is_even_tree(); });
}

bool PlaneTree::is_ternary_tree() const {
  if (!children.empty() && children.size() != 3) return false;
  return std::all_of(children.begin(), children.end(),
                     [](const PlaneTree& c) { return c.is_ternary_tree(); });
}

std::string PlaneTree::str() const {
  std::string s = "(";
  for (const auto& c : children) s += c.str();
  return s + ")";
}

void BicoloredPlaneTree::validate() const {
  int v = vertex_count();
  if (v < 2) throw Error("MalformedTree", "need at least one edge");
  if (static_cast<int>(white.size()) != v)
    throw Error("MalformedTree", "color table size mismatch");
  if (root_white < 0 || root_white >= v || root_black < 0 || root_black >= v ||
      !white[root_white] || white[root_black])
    throw Error("MalformedTree", "bad marked edge");
  long long edges = 0;
  for (int u = 0; u < v; ++u) {
    if (rot[u].empty()) throw Error("MalformedTree", "isolated vertex");
    for (int w : rot[u]) {
      if (w < 0 || w >= v || white[w] == white[u])
        throw Error("MalformedTree", "improper bicoloring");
      edges++;
      if (std::count(rot[w].begin(), rot[w].end(), u) != 1)
        throw Error("MalformedTree", "asymmetric adjacency");
    }
    // a tree has no multi-edges
    auto s = rot[u];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error("MalformedTree", "multi-edge");
  }
  if (edges != 2LL * (v - 1)) throw Error("MalformedTree", "not a tree");
  if (std::count(rot[root_white].begin(), rot[root_white].end(), root_black) !=
      1)
    throw Error("MalformedTree", "marked edge not present");
  // connectivity
  std::vector<char> seen(v, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : rot[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != v) throw Error("MalformedTree", "disconnected");
}

std::vector<int> BicoloredPlaneTree::degree_distribution(
    bool white_side) const {
  std::vector<int> d;
  for (int u = 0; u < vertex_count(); ++u)
    if (white[u] == white_side) d.push_back(static_cast<int>(rot[u].size()));
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

namespace {

// Children of v (entered from parent) in left-to-right plane order, which is
// counterclockwise from the parent edge given clockwise rotation lists.
std::vector<int> plane_children(const BicoloredPlaneTree& t, int v,
                                int parent) {
  const auto& r = t.rot[v];
  int deg = static_cast<int>(r.size());
  int pos = static_cast<int>(
      std::find(r.begin(), r.end(), parent) - r.begin());
  std::vector<int> out;
  for (int s = 1; s < deg; ++s) out.push_back(r[(pos - s + deg) % deg]);
  return out;
}

PlaneTree extract_subtree(const BicoloredPlaneTree& t, int v, int parent) {
  PlaneTree out;
  for (int c : plane_children(t, v, parent))
    out.children.push_back(extract_subtree(t, c, v));
  return out;
}

}  // namespace

std::string BicoloredPlaneTree::str() const {
  std::function<std::string(int, int)> rec = [&](int v, int parent) {
    std::string s = white[v] ? "(w" : "(b";
    for (int c : plane_children(*this, v, parent)) s += rec(c, v);
    return s + ")";
  };
  // the whole tree read from the white endpoint of the marked edge, with the
  // black endpoint as its first child
  std::string s = "(w";
  s += rec(root_black, root_white);
  for (int c : plane_children(*this, root_white, root_black)) s += rec(c, root_white);
  return s + ")";
}

nlohmann::json BicoloredPlaneTree::to_json() const {
  std::function<nlohmann::json(int, int)> rec = [&](int v, int parent) {
    nlohmann::json j;
    j["color"] = white[v] ? "white" : "black";
    j["children"] = nlohmann::json::array();
    for (int c : plane_children(*this, v, parent)) j["children"].push_back(rec(c, v));
    return j;
  };
  nlohmann::json j;
  j["edges"] = edge_count();
  j["color"] = "white";
  j["children"] = nlohmann::json::array();
  j["children"].push_back(rec(root_black, root_white));
  for (int c : plane_children(*this, root_white, root_black))
    j["children"].push_back(rec(c, root_white));
  return j;
}

std::string BicoloredPlaneTree::to_dot() const {
  std::ostringstream os;
  os << "graph tree {\n  node [shape=circle, label=\"\"];\n";
  for (int u = 0; u < vertex_count(); ++u)
    os << "  v" << u << " [style=filled, fillcolor="
       << (white[u] ? "white" : "black") << "];\n";
  for (int u = 0; u < vertex_count(); ++u)
    for (int w : rot[u])
      if (u < w)
        os << "  v" << u << " -- v" << w
           << ((u == root_white && w == root_black) ||
                       (u == root_black && w == root_white)
                   ? " [color=red, penwidth=2]"
                   : "")
           << ";\n";
  os << "}\n";
  return os.str();
}

BicoloredPlaneTree phi(const Perm& x) {
  int n = x.degree();
  std::vector<int> cfull(n);
  for (int i = 0; i < n; ++i) cfull[i] = i + 1;
  Perm c = Perm::from_cycles(n, {cfull});
  GenCtx two(n, Family::Transpositions);
  if (!two.is_below(Perm(n), x) || !two.is_below(x, c))
    throw Error("NotNoncrossing", x.str());
  Perm y = x.inverse() * c;

  auto wcyc = x.cycles(true);
  auto bcyc = y.cycles(true);
  int nw = static_cast<int>(wcyc.size());
  BicoloredPlaneTree t;
  t.white.assign(nw + bcyc.size(), false);
  for (int i = 0; i < nw; ++i) t.white[i] = true;
  std::vector<int> white_of(n + 1), black_of(n + 1);
  for (int i = 0; i < nw; ++i)
    for (int v : wcyc[i]) white_of[v] = i;
  for (std::size_t i = 0; i < bcyc.size(); ++i)
    for (int v : bcyc[i]) black_of[v] = nw + static_cast<int>(i);
  t.rot.resize(t.white.size());
  for (int i = 0; i < nw; ++i)
    for (int v : wcyc[i]) t.rot[i].push_back(black_of[v]);
  for (std::size_t i = 0; i < bcyc.size(); ++i)
    for (int v : bcyc[i]) t.rot[nw + i].push_back(white_of[v]);
  t.root_white = white_of[1];
  t.root_black = black_of[1];
  t.validate();
  return t;
}

Perm phi_inverse(const BicoloredPlaneTree& t) {
  t.validate();
  int n = t.edge_count();
  // Tour the tree: from each arrival edge depart along the next edge
  // clockwise; white-to-black traversals receive the labels 1..n in order.
  std::vector<std::vector<int>> label(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) label[v].assign(t.rot[v].size(), 0);
  int u = t.root_white, v = t.root_black;
  for (int next = 1; next <= n; ++next) {
    // label the white->black edge (u, v)
    const auto& r = t.rot[u];
    int pos = static_cast<int>(std::find(r.begin(), r.end(), v) - r.begin());
    label[u][pos] = next;
    if (next == n) break;
    // black vertex: continue clockwise, then cross back to the next white
    const auto& rb = t.rot[v];
    int bpos = static_cast<int>(std::find(rb.begin(), rb.end(), u) - rb.begin());
    int w = rb[(bpos + 1) % rb.size()];
    // now at white w, arrived from v
    const auto& rw = t.rot[w];
    int wpos = static_cast<int>(std::find(rw.begin(), rw.end(), v) - rw.begin());
    u = w;
    v = rw[(wpos + 1) % rw.size()];
  }
  std::vector<int> images(n);
  for (int w = 0; w < t.vertex_count(); ++w) {
    if (!t.white[w]) continue;
    int deg = static_cast<int>(t.rot[w].size());
    for (int i = 0; i < deg; ++i) {
      int a = label[w][i], b = label[w][(i + 1) % deg];
      if (a == 0 || b == 0) throw Error("MalformedTree", "tour did not cover");
      images[a - 1] = b;
    }
  }
  return Perm::from_images(images);
}

std::pair<PlaneTree, PlaneTree> onc_tree_pair(const Perm& x) {
  if (x.degree() % 2 == 0 || !onc_membership(x).member())
    throw Error("NotOnc", x.str());
  BicoloredPlaneTree t = phi(x);
  return {extract_subtree(t, t.root_white, t.root_black),
          extract_subtree(t, t.root_black, t.root_white)};
}

namespace {

// Rebuild clockwise rotations: left-to-right children become the
// counterclockwise order after the parent edge.
int attach(BicoloredPlaneTree& t, const PlaneTree& p, int parent, bool is_white) {
  int v = t.vertex_count();
  t.white.push_back(is_white);
  t.rot.emplace_back();
  t.rot[v].push_back(parent);
  std::vector<int> kids;
  for (const auto& c : p.children) kids.push_back(attach(t, c, v, !is_white));
  for (auto it = kids.rbegin(); it != kids.rend(); ++it) t.rot[v].push_back(*it);
  return v;
}

}  // namespace

Perm onc_tree_pair_inverse(const PlaneTree& white_side,
                           const PlaneTree& black_side) {
  if (!white_side.is_even_tree() || !black_side.is_even_tree())
    throw Error("WrongFlavor", "expected a pair of even trees");
  BicoloredPlaneTree t;
  t.white = {true, false};
  t.rot = {{1}, {0}};
  t.root_white = 0;
  t.root_black = 1;
  std::vector<int> wk, bk;
  for (const auto& c : white_side.children) wk.push_back(attach(t, c, 0, false));
  for (const auto& c : black_side.children) bk.push_back(attach(t, c, 1, true));
  for (auto it = wk.rbegin(); it != wk.rend(); ++it) t.rot[0].push_back(*it);
  for (auto it = bk.rbegin(); it != bk.rend(); ++it) t.rot[1].push_back(*it);
  return phi_inverse(t);
}

PlaneTree even_to_ternary(const PlaneTree& t) {
  if (!t.is_even_tree()) throw Error("WrongFlavor", "expected an even tree");
  std::function<PlaneTree(const std::vector<PlaneTree>&)> enc =
      [&](const std::vector<PlaneTree>& kids) {
        PlaneTree out;
        if (kids.empty()) return out;
        out.children.push_back(enc(kids[0].children));
        out.children.push_back(enc(kids[1].children));
        out.children.push_back(
            enc(std::vector<PlaneTree>(kids.begin() + 2, kids.end())));
        return out;
      };
  return enc(t.children);
}

PlaneTree ternary_to_even(const PlaneTree& t) {
  if (!t.is_ternary_tree())
    throw Error("WrongFlavor", "expected a ternary tree");
  std::function<std::vector<PlaneTree>(const PlaneTree&)> dec =
      [&](const PlaneTree& node) {
        std::vector<PlaneTree> kids;
        if (node.children.empty()) return kids;
        PlaneTree a;
        a.children = dec(node.children[0]);
        PlaneTree b;
        b.children = dec(node.children[1]);
        kids.push_back(std::move(a));
        kids.push_back(std::move(b));
        for (auto& rest : dec(node.children[2])) kids.push_back(std::move(rest));
        return kids;
      };
  PlaneTree out;
  out.children = dec(t);
  return out;
}

Int count_even_trees(int edges) {
  if (edges < 0) throw Error("ParameterOutOfRange", "edges >= 0");
  if (edges % 2 != 0) return 0;
  int m = edges / 2;
  return binomial(3 * m, m) / (2 * m + 1);
}

std::vector<PlaneTree> enumerate_plane_trees(int edges) {
  std::vector<std::vector<PlaneTree>> memo(edges + 1);
  memo[0] = {PlaneTree{}};
  for (int e = 1; e <= edges; ++e) {
    // root's first subtree has f edges, the rest of the root has e-1-f
    for (int f = 0; f + 1 <= e; ++f)
      for (const auto& first : memo[f])
        for (const auto& rest : memo[e - 1 - f]) {
          PlaneTree t;
          t.children.push_back(first);
          for (const auto& c : rest.children) t.children.push_back(c);
          memo[e].push_back(std::move(t));
        }
  }
  return memo[edges];
}

std::vector<PlaneTree> enumerate_even_trees(int edges) {
  std::vector<PlaneTree> out;
  for (auto& t : enumerate_plane_trees(edges))
    if (t.is_even_tree()) out.push_back(std::move(t));
  return out;
}

}  // namespace anc
