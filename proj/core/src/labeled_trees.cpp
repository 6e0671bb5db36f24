#include "lambdamaps/labeled_trees.hpp"

#include <cctype>

#include "lambdamaps/error.hpp"

namespace lambdamaps {

PlaneTree::PlaneTree() : parent_{-1} { rebuild(); }

PlaneTree PlaneTree::graft(std::span<const PlaneTree> subtrees) {
  PlaneTree t;
  for (const PlaneTree& sub : subtrees) {
    const int offset = t.node_count();
    for (int v = 0; v < sub.node_count(); ++v) {
      t.parent_.push_back(v == 0 ? 0 : sub.parent_[v] + offset);
    }
  }
  t.rebuild();
  return t;
}

void PlaneTree::rebuild() {
  const int n = node_count();
  children_.assign(n, {});
  span_.assign(n, 1);
  for (int v = 1; v < n; ++v) children_[parent_[v]].push_back(v);
  for (int v = n - 1; v > 0; --v) span_[parent_[v]] += span_[v];
}

PlaneTree PlaneTree::subtree(int v) const {
  PlaneTree t;
  t.parent_.clear();
  for (int w = v; w < v + span_[v]; ++w) t.parent_.push_back(w == v ? -1 : parent_[w] - v);
  t.rebuild();
  return t;
}

LabeledTree LabeledTree::graft(int root_label, std::span<const LabeledTree> subtrees) {
  std::vector<PlaneTree> shapes;
  shapes.reserve(subtrees.size());
  std::vector<int> labels{root_label};
  for (const LabeledTree& sub : subtrees) {
    shapes.push_back(sub.tree);
    labels.insert(labels.end(), sub.labels.begin(), sub.labels.end());
  }
  return LabeledTree(PlaneTree::graft(shapes), std::move(labels));
}

LabeledTree LabeledTree::subtree(int v) const {
  PlaneTree t = tree.subtree(v);
  std::vector<int> l(labels.begin() + v, labels.begin() + v + t.node_count());
  return LabeledTree(std::move(t), std::move(l));
}

std::string LabeledTree::to_string() const {
  std::string out;
  auto emit = [&](auto&& self, int v) -> void {
    out += std::to_string(labels[v]);
    const auto& kids = tree.children(v);
    if (kids.empty()) return;
    out += '[';
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i > 0) out += ',';
      self(self, kids[i]);
    }
    out += ']';
  };
  emit(emit, 0);
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  LabeledTree parse() {
    LabeledTree t = parse_node();
    skip_space();
    if (pos_ < text_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int parse_label() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected label", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  LabeledTree parse_node() {
    int label = parse_label();
    std::vector<LabeledTree> kids;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ']') {
        ++pos_;
      } else {
        while (true) {
          kids.push_back(parse_node());
          skip_space();
          if (pos_ >= text_.size()) throw ParseError("unbalanced bracket", text_.size());
          if (text_[pos_] == ',') {
            ++pos_;
            continue;
          }
          if (text_[pos_] == ']') {
            ++pos_;
            break;
          }
          throw ParseError("expected ',' or ']'", pos_);
        }
      }
    }
    return LabeledTree::graft(label, kids);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LabeledTree LabeledTree::parse(std::string_view text) { return TreeParser(text).parse(); }

std::vector<int> node_labels_from_edge_labels(const PlaneTree& t, const EdgeLabeling& edge_labels) {
  const int n = t.node_count();
  if (static_cast<int>(edge_labels.size()) != n) {
    throw InvalidInput("edge labeling has " + std::to_string(edge_labels.size()) +
                       " entries for " + std::to_string(n) + " nodes");
  }
  // inner[v]: sum of edge labels of edges inside T_v.
  std::vector<int> inner(n, 0);
  for (int v = n - 1; v > 0; --v) inner[t.parent(v)] += inner[v] + edge_labels[v];
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = t.subtree_size(v) - inner[v];
  return labels;
}

namespace {

int s_value(const LabeledTree& d, int u) {
  int s = 0;
  for (int v : d.tree.children(u)) s += 1 + d.labels[v];
  return s;
}

}  // namespace

EdgeLabeling edge_labels_from_node_labels(const LabeledTree& d) {
  EdgeLabeling out(d.tree.node_count(), 0);
  for (int u = 0; u < d.tree.node_count(); ++u) {
    const auto& kids = d.tree.children(u);
    if (!kids.empty()) out[kids.front()] = s_value(d, u) - d.labels[u];
  }
  return out;
}

bool validate_degree_tree(const LabeledTree& d) {
  if (static_cast<int>(d.labels.size()) != d.tree.node_count()) return false;
  for (int u = 0; u < d.tree.node_count(); ++u) {
    const auto& kids = d.tree.children(u);
    if (kids.empty()) {
      if (d.labels[u] != 0) return false;
      continue;
    }
    const int s = s_value(d, u);
    if (d.labels[u] > s || d.labels[u] < s - d.labels[kids.front()]) return false;
  }
  return true;
}

VTreeCheck validate_vtree(const LabeledTree& v) {
  VTreeCheck check;
  if (static_cast<int>(v.labels.size()) != v.tree.node_count()) return check;
  bool positive = true;
  for (int u = 0; u < v.tree.node_count(); ++u) {
    const auto& kids = v.tree.children(u);
    int bound = 1;
    for (int w : kids) bound += v.labels[w];
    const int l = v.labels[u];
    if (u == 0) {
      if (l != bound) return check;
    } else if (kids.empty()) {
      if (l != 0 && l != 1) return check;
    } else if (l < 0 || l > bound) {
      return check;
    }
    if (l == 0) positive = false;
  }
  check.valid = true;
  check.positive = positive;
  return check;
}

}  // namespace lambdamaps
