#include "lambdamaps/planar_maps.hpp"

#include <cctype>
#include <cstdio>
#include <queue>
#include <stdexcept>

#include "lambdamaps/error.hpp"

namespace lambdamaps {

namespace {

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

template <typename Next>
int count_cycles(int size, const Next& next) {
  std::vector<char> seen(size, 0);
  int cycles = 0;
  for (int h = 0; h < size; ++h) {
    if (seen[h]) continue;
    ++cycles;
    for (int g = h; !seen[g]; g = next(g)) seen[g] = 1;
  }
  return cycles;
}

bool transitive(const std::vector<int>& sigma) {
  const int size = static_cast<int>(sigma.size());
  std::vector<char> seen(size, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int h = stack.back();
    stack.pop_back();
    for (int g : {sigma[h], h ^ 1}) {
      if (seen[g]) continue;
      seen[g] = 1;
      ++reached;
      stack.push_back(g);
    }
  }
  return reached == size;
}

// Breadth-first relabeling from the root: the root pair gets 0/1, then every
// newly met sigma-successor gets the next pair, its partner the odd label.
std::vector<int> canonical_sigma(const std::vector<int>& sigma, int root) {
  const int size = static_cast<int>(sigma.size());
  std::vector<int> label(size, -1);
  std::vector<int> order;
  order.reserve(size);
  auto add_pair = [&](int h) {
    label[h] = static_cast<int>(order.size());
    order.push_back(h);
    label[h ^ 1] = static_cast<int>(order.size());
    order.push_back(h ^ 1);
  };
  add_pair(root);
  for (std::size_t k = 0; k < order.size(); ++k) {
    int s = sigma[order[k]];
    if (label[s] < 0) add_pair(s);
  }
  std::vector<int> out(size);
  for (int h = 0; h < size; ++h) out[label[h]] = label[sigma[h]];
  return out;
}

std::vector<int> outer_orbit(const RootedMap& m) {
  std::vector<int> orbit;
  if (m.empty()) return orbit;
  int h = 0;
  do {
    orbit.push_back(h);
    h = m.face_next(h);
  } while (h != 0);
  return orbit;
}

std::vector<int> vertex_cycle(const RootedMap& m, int start) {
  std::vector<int> cyc;
  int h = start;
  do {
    cyc.push_back(h);
    h = m.sigma(h);
  } while (h != start);
  return cyc;
}

}  // namespace

MapCheck validate_map(const RotationSystem& m) {
  MapCheck check;
  if (m.n < 0) {
    check.reason = "negative edge count";
    return check;
  }
  const int size = 2 * m.n;
  if (static_cast<int>(m.sigma.size()) != size) {
    check.reason = "sigma has " + std::to_string(m.sigma.size()) + " entries, expected " +
                   std::to_string(size);
    return check;
  }
  if (m.n == 0) {
    check.valid = true;
    return check;
  }
  std::vector<char> hit(size, 0);
  for (int s : m.sigma) {
    if (s < 0 || s >= size || hit[s]) {
      check.reason = "sigma is not a permutation";
      return check;
    }
    hit[s] = 1;
  }
  if (m.root < 0 || m.root >= size) {
    check.reason = "root half-edge out of range";
    return check;
  }
  if (!transitive(m.sigma)) {
    check.reason = "disconnected";
    return check;
  }
  const int v = count_cycles(size, [&](int h) { return m.sigma[h]; });
  const int f = count_cycles(size, [&](int h) { return m.sigma[h ^ 1]; });
  const int euler = v - m.n + f;
  if (euler != 2) {
    check.reason = "genus " + std::to_string((2 - euler) / 2);
    return check;
  }
  check.valid = true;
  return check;
}

RootedMap::RootedMap(const RotationSystem& m) {
  MapCheck check = validate_map(m);
  if (!check) throw InvalidMap("invalid map: " + check.reason);
  n_ = m.n;
  if (n_ > 0) sigma_ = canonical_sigma(m.sigma, m.root);
  inv_ = inverse(sigma_);
}

namespace {

class MapParser {
 public:
  explicit MapParser(std::string_view text) : text_(text) {}

  RotationSystem parse() {
    RotationSystem m;
    skip_space();
    expect("map");
    skip_space();
    expect("n=");
    m.n = parse_int();
    skip_space();
    if (m.n == 0 && done()) return m;
    const int size = 2 * m.n;
    m.sigma.assign(size, -1);
    expect("sigma=");
    while (pos_ < text_.size() && text_[pos_] == '(') parse_cycle(m.sigma);
    for (int h = 0; h < size; ++h) {
      if (m.sigma[h] < 0) m.sigma[h] = h;
    }
    skip_space();
    expect("root=");
    m.root = parse_int();
    skip_space();
    if (!done()) throw ParseError("trailing input", pos_);
    return m;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) {
      throw ParseError("expected '" + std::string(word) + "'", pos_);
    }
    pos_ += word.size();
  }

  int parse_int() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected number", start);
    if (pos_ - start > 9) throw ParseError("number too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void parse_cycle(std::vector<int>& sigma) {
    ++pos_;
    std::vector<std::pair<int, std::size_t>> cycle;
    while (true) {
      skip_space();
      if (done()) throw ParseError("unbalanced parenthesis", text_.size());
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      const std::size_t at = pos_;
      int h = parse_int();
      if (h >= static_cast<int>(sigma.size())) throw ParseError("half-edge out of range", at);
      cycle.emplace_back(h, at);
    }
    if (cycle.empty()) throw ParseError("empty cycle", pos_ - 1);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto [h, at] = cycle[i];
      if (sigma[h] >= 0) throw ParseError("repeated half-edge", at);
      sigma[h] = cycle[(i + 1) % cycle.size()].first;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RootedMap RootedMap::parse(std::string_view text) { return RootedMap(MapParser(text).parse()); }

std::vector<int> RootedMap::vertex_of() const {
  std::vector<int> vert(sigma_.size(), -1);
  int next = 0;
  for (int h = 0; h < half_edge_count(); ++h) {
    if (vert[h] >= 0) continue;
    for (int g = h; vert[g] < 0; g = sigma_[g]) vert[g] = next;
    ++next;
  }
  return vert;
}

int RootedMap::vertex_count() const {
  if (empty()) return 1;
  return count_cycles(half_edge_count(), [this](int h) { return sigma_[h]; });
}

int RootedMap::face_count() const {
  if (empty()) return 1;
  return count_cycles(half_edge_count(), [this](int h) { return face_next(h); });
}

std::string RootedMap::to_string() const {
  if (empty()) return "map n=0";
  std::string out = "map n=" + std::to_string(n_) + " sigma=";
  std::vector<char> seen(sigma_.size(), 0);
  for (int h = 0; h < half_edge_count(); ++h) {
    if (seen[h]) continue;
    out += '(';
    for (int g = h; !seen[g]; g = sigma_[g]) {
      if (g != h) out += ' ';
      out += std::to_string(g);
      seen[g] = 1;
    }
    out += ')';
  }
  return out + " root=0";
}

std::string RootedMap::canonical_form() const {
  std::string out;
  char buf[8];
  std::snprintf(buf, sizeof buf, "%04x", static_cast<unsigned>(n_));
  out += buf;
  for (int s : sigma_) {
    std::snprintf(buf, sizeof buf, "%04x", static_cast<unsigned>(s));
    out += buf;
  }
  return out;
}

std::string canonical_form(const RotationSystem& m) { return RootedMap(m).canonical_form(); }

int outv(const RootedMap& m) {
  if (m.empty()) return 1;
  const std::vector<int> vert = m.vertex_of();
  std::vector<char> seen(m.half_edge_count(), 0);
  int count = 0;
  for (int h : outer_orbit(m)) {
    if (!seen[vert[h]]) {
      seen[vert[h]] = 1;
      ++count;
    }
  }
  return count;
}

int outv_u(const RootedMap& u) { return outv(u) - 1; }

bool is_one_corner(const RootedMap& m) {
  if (m.empty()) return true;
  const std::vector<int> vert = m.vertex_of();
  int corners = 0;
  for (int h : outer_orbit(m)) corners += vert[h] == vert[0];
  return corners == 1;
}

MapStats map_stats(const RootedMap& m) {
  MapStats st;
  if (m.empty()) return st;
  const int size = m.half_edge_count();
  const std::vector<int> vert = m.vertex_of();
  const int nv = m.vertex_count();
  st.outv = outv(m);
  for (int h = 0; h < size; h += 2) {
    if (vert[h] == vert[h + 1]) st.loopless = false;
  }

  std::vector<std::vector<int>> adj(nv);
  for (int h = 0; h < size; ++h) adj[vert[h]].push_back(vert[h ^ 1]);
  std::vector<int> colour(nv, -1);
  std::queue<int> queue;
  colour[vert[0]] = 0;
  queue.push(vert[0]);
  while (!queue.empty() && st.bipartite) {
    int x = queue.front();
    queue.pop();
    for (int y : adj[x]) {
      if (colour[y] < 0) {
        colour[y] = 1 - colour[x];
        queue.push(y);
      } else if (colour[y] == colour[x]) {
        st.bipartite = false;
        break;
      }
    }
  }
  if (!st.bipartite) {
    st.white = st.black = 0;
    return st;
  }
  st.black = 0;
  for (int c : colour) (c == 0 ? st.black : st.white) += 1;

  std::vector<char> seen(size, 0);
  for (int h = 0; h < size; ++h) {
    if (seen[h]) continue;
    int len = 0;
    for (int g = h; !seen[g]; g = m.face_next(g)) {
      seen[g] = 1;
      ++len;
    }
    if (h == 0) {
      st.outdeg = len / 2;
    } else {
      ++st.face[len / 2];
    }
  }
  return st;
}

RootedMap pi(const RootedMap& u) {
  if (u.empty()) throw EmptyMap("pi: the empty map has no root edge");
  const int n = u.edge_count();
  if (n == 1) return RootedMap();
  auto skip = [&u](int s) {
    for (int t = 0; t < 3 && s < 2; ++t) s = u.sigma(s);
    return s;
  };
  const int root = skip(u.sigma(1));
  if (root < 2) throw WouldDisconnect("pi: the other end of the root edge becomes isolated");
  RotationSystem r;
  r.n = n - 1;
  r.sigma.resize(2 * r.n);
  for (int h = 2; h < 2 * n; ++h) r.sigma[h - 2] = skip(u.sigma(h)) - 2;
  r.root = root - 2;
  MapCheck check = validate_map(r);
  if (!check) throw WouldDisconnect("pi: deleting the root edge leaves " + check.reason);
  return RootedMap(r);
}

RootedMap attach_root_edge(const RootedMap& m, int i) {
  const int k = outv(m);
  if (i < 0 || i > k) {
    throw IndexOutOfRange("attach_root_edge: index " + std::to_string(i) + " outside 0.." +
                          std::to_string(k));
  }
  const int n = m.edge_count();
  if (n == 0) return RootedMap(RotationSystem{1, i == 0 ? std::vector<int>{1, 0} : std::vector<int>{0, 1}, 0});
  const int r = 2 * n;
  const int a = 2 * n + 1;
  std::vector<int> sig = m.rotation();
  sig.resize(2 * n + 2);
  sig[m.sigma_inv(0)] = a;
  sig[a] = 0;
  if (i == k) {
    sig[r] = r;
  } else {
    const std::vector<int> vert = m.vertex_of();
    std::vector<char> seen(2 * n, 0);
    int distinct = 0;
    int target = -1;
    for (int g : outer_orbit(m)) {
      if (seen[vert[g]]) continue;
      seen[vert[g]] = 1;
      if (++distinct == i + 1) {
        target = g;
        break;
      }
    }
    const int q = target == 0 ? a : m.sigma_inv(target);
    sig[q] = r;
    sig[r] = target;
  }
  return RootedMap(RotationSystem{n + 1, std::move(sig), r});
}

namespace {

// The part of m made of the root-vertex half-edges `seg` (in rotation
// order) and everything reachable from them without passing through the root
// vertex, rooted at seg.front().
RootedMap extract(const RootedMap& m, const std::vector<int>& vert, const std::vector<int>& seg) {
  const int size = m.half_edge_count();
  const int v0 = vert[0];
  std::vector<char> in(size, 0);
  std::vector<int> stack(seg.begin(), seg.end());
  for (int h : seg) in[h] = 1;
  while (!stack.empty()) {
    int h = stack.back();
    stack.pop_back();
    auto add = [&](int g) {
      if (in[g]) return;
      if (vert[g] == v0) throw std::logic_error("decompose: component reaches another root corner");
      in[g] = 1;
      stack.push_back(g);
    };
    add(h ^ 1);
    if (vert[h] != v0) {
      for (int g = m.sigma(h); g != h; g = m.sigma(g)) add(g);
    }
  }
  std::vector<int> id(size, -1);
  int edges = 0;
  for (int e = 0; 2 * e < size; ++e) {
    if (!in[2 * e]) continue;
    id[2 * e] = 2 * edges;
    id[2 * e + 1] = 2 * edges + 1;
    ++edges;
  }
  RotationSystem r;
  r.n = edges;
  r.sigma.resize(2 * edges);
  for (int h = 0; h < size; ++h) {
    if (in[h] && vert[h] != v0) r.sigma[id[h]] = id[m.sigma(h)];
  }
  for (std::size_t j = 0; j < seg.size(); ++j) r.sigma[id[seg[j]]] = id[seg[(j + 1) % seg.size()]];
  r.root = id[seg.front()];
  return RootedMap(r);
}

}  // namespace

std::vector<RootedMap> decompose(const RootedMap& m) {
  if (m.empty()) throw EmptyMap("decompose: the empty map has no corners");
  const std::vector<int> vert = m.vertex_of();
  std::vector<char> outer(m.half_edge_count(), 0);
  for (int h : outer_orbit(m)) outer[h] = 1;
  const std::vector<int> cyc = vertex_cycle(m, 0);
  std::vector<RootedMap> out;
  std::vector<int> seg;
  for (std::size_t j = 0; j <= cyc.size(); ++j) {
    if (j == cyc.size() || (j > 0 && outer[cyc[j]])) {
      out.push_back(extract(m, vert, seg));
      seg.clear();
    }
    if (j < cyc.size()) seg.push_back(cyc[j]);
  }
  return out;
}

VTree rho(const RootedMap& m) {
  if (m.empty()) return VTree();
  std::vector<LabeledTree> kids;
  for (const RootedMap& u : decompose(m)) {
    LabeledTree t = rho(pi(u));
    t.labels[0] = outv_u(u);
    kids.push_back(std::move(t));
  }
  return VTree(LabeledTree::graft(outv(m), kids));
}

namespace {

// Glues the root corners of one-corner components around a new vertex, in
// counter-clockwise order; the first component keeps the root.
RootedMap glue(const std::vector<RootedMap>& comps) {
  RotationSystem r;
  for (const RootedMap& u : comps) r.n += u.edge_count();
  r.sigma.resize(2 * r.n);
  std::vector<int> around;
  int offset = 0;
  for (const RootedMap& u : comps) {
    const std::vector<int> vert = u.vertex_of();
    for (int h = 0; h < u.half_edge_count(); ++h) {
      if (vert[h] != vert[0]) r.sigma[offset + h] = offset + u.sigma(h);
    }
    for (int h : vertex_cycle(u, 0)) around.push_back(offset + h);
    offset += u.half_edge_count();
  }
  for (std::size_t j = 0; j < around.size(); ++j) r.sigma[around[j]] = around[(j + 1) % around.size()];
  return RootedMap(r);
}

RootedMap build_map(const VTree& v, int w) {
  const auto& kids = v.tree.children(w);
  if (kids.empty()) return RootedMap();
  std::vector<RootedMap> comps;
  comps.reserve(kids.size());
  for (int c : kids) comps.push_back(attach_root_edge(build_map(v, c), v.labels[c]));
  return glue(comps);
}

}  // namespace

RootedMap rho_inv(const VTree& v) {
  if (!validate_vtree(v).valid) throw InvalidInput("rho_inv: " + v.to_string() + " is not a v-tree");
  return build_map(v, 0);
}

VTree rho_direct(const RootedMap& m) {
  if (m.empty()) return VTree();
  const int size = m.half_edge_count();
  std::vector<int> sigma = m.rotation();
  std::vector<int> inv(size);
  for (int h = 0; h < size; ++h) inv[sigma[h]] = h;
  std::vector<int> vert = m.vertex_of();
  int next_vertex = m.vertex_count();
  std::vector<char> visited(m.edge_count(), 0);
  // Label of the vertex entered through each half-edge.
  std::vector<int> label(size, -1);
  std::vector<int> stamp(size, -1);
  std::vector<int> vstamp(size + 2, -1);

  int h = 0;
  for (int step = 0; step < size; ++step) {
    if (!visited[h / 2]) {
      visited[h / 2] = 1;
      const int v = vert[h];
      for (int g = h; stamp[g] != step; g = sigma[g ^ 1]) stamp[g] = step;
      int c2 = sigma[h];
      while (stamp[c2] != step) c2 = sigma[c2];
      int count = 0;
      int g = h;
      do {
        if (vert[g] != v && vstamp[vert[g]] != step) {
          vstamp[vert[g]] = step;
          ++count;
        }
        g = sigma[g ^ 1];
      } while (g != c2);
      label[h ^ 1] = count;
      if (c2 != sigma[h]) {
        const int first = sigma[h];
        const int last = inv[c2];
        sigma[h] = c2;
        inv[c2] = h;
        sigma[last] = first;
        inv[first] = last;
        for (int g = first;; g = sigma[g]) {
          vert[g] = next_vertex;
          if (g == last) break;
        }
        ++next_vertex;
      }
    }
    h = sigma[h ^ 1];
  }
  for (char seen : visited) {
    if (!seen) throw std::logic_error("rho_direct: contour walk missed an edge");
  }

  // Children in counter-clockwise order after the entering half-edge; the
  // root starts at its root half-edge.
  auto subtree = [&](auto&& self, int entry, int tree_label) -> LabeledTree {
    std::vector<LabeledTree> kids;
    auto child = [&](int g) { kids.push_back(self(self, g ^ 1, label[g ^ 1])); };
    if (entry < 0) {
      int g = 0;
      do {
        child(g);
        g = sigma[g];
      } while (g != 0);
    } else {
      for (int g = sigma[entry]; g != entry; g = sigma[g]) child(g);
    }
    return LabeledTree::graft(tree_label, kids);
  };
  return VTree(subtree(subtree, -1, outv(m)));
}

}  // namespace lambdamaps
