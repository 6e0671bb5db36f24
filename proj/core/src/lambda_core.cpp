#include "lambdamaps/lambda_core.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "lambdamaps/error.hpp"

namespace lambdamaps {

TermPtr make_var(std::string name) {
  return std::make_shared<const Term>(Term{Var{std::move(name)}});
}

TermPtr make_app(TermPtr fun, TermPtr arg) {
  return std::make_shared<const Term>(Term{App{std::move(fun), std::move(arg)}});
}

TermPtr make_abs(std::string var, TermPtr body) {
  return std::make_shared<const Term>(Term{Abs{std::move(var), std::move(body)}});
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  TermPtr parse() {
    skip_space();
    TermPtr t = parse_expr();
    skip_space();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced parenthesis", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_lambda() const {
    if (pos_ >= text_.size()) return false;
    if (text_[pos_] == '\\') return true;
    return text_.substr(pos_, 2) == "\xCE\xBB";
  }

  // Offset reported for errors detected at the end of input: the last
  // non-blank character consumed.
  std::size_t end_offset() const {
    std::size_t i = text_.size();
    while (i > 0 && std::isspace(static_cast<unsigned char>(text_[i - 1]))) --i;
    return i == 0 ? 0 : i - 1;
  }

  std::string parse_identifier() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected identifier", end_offset());
    if (!std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected identifier", pos_);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  TermPtr parse_lambda() {
    pos_ += text_[pos_] == '\\' ? 1 : 2;
    std::string var = parse_identifier();
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected '.'", end_offset());
    if (text_[pos_] != '.') throw ParseError("expected '.'", pos_);
    ++pos_;
    skip_space();
    return make_abs(std::move(var), parse_expr());
  }

  TermPtr parse_expr() {
    skip_space();
    if (at_lambda()) return parse_lambda();
    TermPtr acc;
    auto push = [&acc](TermPtr t) { acc = acc ? make_app(acc, std::move(t)) : std::move(t); };
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (at_lambda()) {
        push(parse_lambda());
        break;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        push(make_var(parse_identifier()));
      } else if (c == '(') {
        ++pos_;
        TermPtr inner = parse_expr();
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unbalanced parenthesis", end_offset());
        if (text_[pos_] != ')') throw ParseError("expected ')'", pos_);
        ++pos_;
        push(std::move(inner));
      } else {
        break;
      }
    }
    if (!acc) {
      if (pos_ >= text_.size()) throw ParseError("expected term", end_offset());
      throw ParseError("expected term", pos_);
    }
    return acc;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_free(const Term& t, std::vector<std::string>& bound, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var>) {
          if (std::find(bound.begin(), bound.end(), n.name) == bound.end() &&
              std::find(out.begin(), out.end(), n.name) == out.end()) {
            out.push_back(n.name);
          }
        } else if constexpr (std::is_same_v<N, App>) {
          collect_free(*n.fun, bound, out);
          collect_free(*n.arg, bound, out);
        } else {
          bound.push_back(n.var);
          collect_free(*n.body, bound, out);
          bound.pop_back();
        }
      },
      t.node);
}

}  // namespace

ParsedTerm parse_term(std::string_view text) {
  ParsedTerm result{TermParser(text).parse(), {}};
  std::vector<std::string> bound;
  collect_free(*result.term, bound, result.free_variables);
  return result;
}

namespace {

void render(const Term& t, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var>) {
          out += n.name;
        } else if constexpr (std::is_same_v<N, Abs>) {
          out += '\\';
          out += n.var;
          out += '.';
          render(*n.body, out);
        } else {
          bool fun_parens = std::holds_alternative<Abs>(n.fun->node);
          if (fun_parens) out += '(';
          render(*n.fun, out);
          if (fun_parens) out += ')';
          out += ' ';
          bool arg_parens = !std::holds_alternative<Var>(n.arg->node);
          if (arg_parens) out += '(';
          render(*n.arg, out);
          if (arg_parens) out += ')';
        }
      },
      t.node);
}

void nameless(const Term& t, std::vector<std::string>& scope, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var>) {
          auto it = std::find(scope.rbegin(), scope.rend(), n.name);
          if (it == scope.rend()) {
            out += n.name;
          } else {
            out += '#';
            out += std::to_string(it - scope.rbegin());
          }
        } else if constexpr (std::is_same_v<N, Abs>) {
          out += "\\.";
          scope.push_back(n.var);
          nameless(*n.body, scope, out);
          scope.pop_back();
        } else {
          out += '(';
          nameless(*n.fun, scope, out);
          out += ' ';
          nameless(*n.arg, scope, out);
          out += ')';
        }
      },
      t.node);
}

}  // namespace

std::string render_term(const Term& t) {
  std::string out;
  render(t, out);
  return out;
}

std::string de_bruijn(const Term& t) {
  std::string out;
  std::vector<std::string> scope;
  nameless(t, scope, out);
  return out;
}

bool alpha_equivalent(const Term& a, const Term& b) { return de_bruijn(a) == de_bruijn(b); }

int term_size(const Term& t) {
  return std::visit(
      [](const auto& n) -> int {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var>) {
          return 1;
        } else if constexpr (std::is_same_v<N, App>) {
          return term_size(*n.fun) + term_size(*n.arg);
        } else {
          return term_size(*n.body);
        }
      },
      t.node);
}

bool has_redex(const Term& t) {
  return std::visit(
      [](const auto& n) -> bool {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var>) {
          return false;
        } else if constexpr (std::is_same_v<N, App>) {
          return std::holds_alternative<Abs>(n.fun->node) || has_redex(*n.fun) ||
                 has_redex(*n.arg);
        } else {
          return has_redex(*n.body);
        }
      },
      t.node);
}

// ---------------------------------------------------------------------------
// Skeleton

Skeleton Skeleton::leaf() {
  Skeleton s;
  s.nodes_.push_back({NodeKind::Leaf, -1, -1, -1});
  s.finalize();
  return s;
}

Skeleton Skeleton::unary(const Skeleton& child) {
  Skeleton s;
  s.nodes_.reserve(child.nodes_.size() + 1);
  s.nodes_.push_back({NodeKind::Unary, -1, 1, -1});
  s.append_shifted(child, 0);
  s.finalize();
  return s;
}

Skeleton Skeleton::binary(const Skeleton& left, const Skeleton& right) {
  Skeleton s;
  s.nodes_.reserve(left.nodes_.size() + right.nodes_.size() + 1);
  s.nodes_.push_back({NodeKind::Binary, -1, 1, 1 + left.node_count()});
  s.append_shifted(left, 0);
  s.append_shifted(right, 0);
  s.finalize();
  return s;
}

void Skeleton::append_shifted(const Skeleton& other, int parent) {
  int offset = node_count();
  for (const Node& n : other.nodes_) {
    Node copy = n;
    copy.parent = n.parent < 0 ? parent : n.parent + offset;
    if (copy.left >= 0) copy.left += offset;
    if (copy.right >= 0) copy.right += offset;
    nodes_.push_back(copy);
  }
}

void Skeleton::finalize() {
  const int count = node_count();
  leaves_.assign(count, 0);
  unaries_.assign(count, 0);
  chain_.assign(count, 0);
  for (int id = count - 1; id >= 0; --id) {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case NodeKind::Leaf:
        leaves_[id] = 1;
        break;
      case NodeKind::Unary:
        leaves_[id] = leaves_[n.left];
        unaries_[id] = unaries_[n.left] + 1;
        break;
      case NodeKind::Binary:
        leaves_[id] = leaves_[n.left] + leaves_[n.right];
        unaries_[id] = unaries_[n.left] + unaries_[n.right];
        break;
    }
  }
  for (int id = 1; id < count; ++id) {
    int p = nodes_[id].parent;
    chain_[id] = nodes_[p].kind == NodeKind::Unary ? chain_[p] + 1 : 0;
  }
}

int Skeleton::binary_count() const { return leaf_count() - 1; }

Skeleton Skeleton::subtree(int id) const {
  int span = 2 * leaves_[id] - 1 + unaries_[id];
  Skeleton s;
  s.nodes_.reserve(span);
  for (int i = id; i < id + span; ++i) {
    Node n = nodes_[i];
    n.parent = i == id ? -1 : n.parent - id;
    if (n.left >= 0) n.left -= id;
    if (n.right >= 0) n.right -= id;
    s.nodes_.push_back(n);
  }
  s.finalize();
  return s;
}

int Skeleton::first_non_unary() const {
  int id = 0;
  while (nodes_[id].kind == NodeKind::Unary) id = nodes_[id].left;
  return id;
}

std::string Skeleton::to_string() const {
  std::string out;
  std::function<void(int)> emit = [&](int id) {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case NodeKind::Leaf:
        out += 'L';
        break;
      case NodeKind::Unary:
        out += "U(";
        emit(n.left);
        out += ')';
        break;
      case NodeKind::Binary:
        out += "B(";
        emit(n.left);
        out += ',';
        emit(n.right);
        out += ')';
        break;
    }
  };
  emit(0);
  return out;
}

bool operator==(const Skeleton& a, const Skeleton& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    if (a.nodes_[i].kind != b.nodes_[i].kind) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Skeleton& a, const Skeleton& b) {
  return a.to_string() <=> b.to_string();
}

namespace {

class SkeletonParser {
 public:
  explicit SkeletonParser(std::string_view text) : text_(text) {}

  Skeleton parse() {
    Skeleton s = parse_node();
    skip_space();
    if (pos_ < text_.size()) throw ParseError("trailing input", pos_);
    return s;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "'", text_.size());
    if (text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Skeleton parse_node() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected skeleton node", text_.size());
    char c = text_[pos_++];
    if (c == 'L') return Skeleton::leaf();
    if (c == 'U') {
      expect('(');
      Skeleton child = parse_node();
      expect(')');
      return Skeleton::unary(child);
    }
    if (c == 'B') {
      expect('(');
      Skeleton left = parse_node();
      expect(',');
      Skeleton right = parse_node();
      expect(')');
      return Skeleton::binary(left, right);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_ - 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Skeleton Skeleton::parse(std::string_view text) { return SkeletonParser(text).parse(); }

Skeleton unary_chain(int k, const Skeleton& s) {
  Skeleton out = s;
  for (int i = 0; i < k; ++i) out = Skeleton::unary(out);
  return out;
}

Skeleton skeleton_of(const Term& t) {
  return std::visit(
      [](const auto& n) -> Skeleton {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var>) {
          return Skeleton::leaf();
        } else if constexpr (std::is_same_v<N, App>) {
          return Skeleton::binary(skeleton_of(*n.fun), skeleton_of(*n.arg));
        } else {
          return Skeleton::unary(skeleton_of(*n.body));
        }
      },
      t.node);
}

// ---------------------------------------------------------------------------
// Matching and diagrams

Matching planar_match(const Skeleton& s) {
  Matching m;
  m.binder_of_leaf.assign(s.node_count(), -1);
  m.leaf_of_binder.assign(s.node_count(), -1);
  std::vector<int> open;
  std::function<void(int)> visit = [&](int id) {
    const auto& n = s.node(id);
    switch (n.kind) {
      case NodeKind::Leaf: {
        if (open.empty()) {
          throw MatchFailure("leaf " + std::to_string(id) + " has no available binder");
        }
        int u = open.back();
        open.pop_back();
        m.binder_of_leaf[id] = u;
        m.leaf_of_binder[u] = id;
        break;
      }
      case NodeKind::Unary:
        open.push_back(id);
        visit(n.left);
        if (m.leaf_of_binder[id] < 0) {
          throw MatchFailure("unary node " + std::to_string(id) + " binds no leaf in its scope");
        }
        break;
      case NodeKind::Binary:
        visit(n.right);
        visit(n.left);
        break;
    }
  };
  visit(0);
  if (!open.empty()) throw MatchFailure("unmatched unary nodes remain");
  return m;
}

bool is_normal(const Skeleton& s) {
  for (int id = 0; id < s.node_count(); ++id) {
    const auto& n = s.node(id);
    if (n.kind == NodeKind::Binary && s.kind(n.left) == NodeKind::Unary) return false;
  }
  return true;
}

namespace {

std::string binder_name(int index) {
  static constexpr std::string_view kNames = "xyzwvutsrqponmkjihgfedcba";
  if (index < static_cast<int>(kNames.size())) return std::string(1, kNames[index]);
  return "x" + std::to_string(index);
}

}  // namespace

TermPtr term_of_skeleton(const Skeleton& s) {
  Matching m = planar_match(s);
  std::vector<std::string> names(s.node_count());
  int next = 0;
  for (int id = 0; id < s.node_count(); ++id) {
    if (s.kind(id) == NodeKind::Unary) names[id] = binder_name(next++);
  }
  std::function<TermPtr(int)> build = [&](int id) -> TermPtr {
    const auto& n = s.node(id);
    switch (n.kind) {
      case NodeKind::Leaf:
        return make_var(names[m.binder_of_leaf[id]]);
      case NodeKind::Unary:
        return make_abs(names[id], build(n.left));
      case NodeKind::Binary:
        return make_app(build(n.left), build(n.right));
    }
    return nullptr;
  };
  return build(0);
}

Diagram diagram_of(const Skeleton& s) {
  Matching m = planar_match(s);
  Diagram d;
  std::vector<int> vertex_of(s.node_count(), -1);
  for (int id = 0; id < s.node_count(); ++id) {
    if (s.kind(id) != NodeKind::Leaf) {
      vertex_of[id] = d.vertex_count++;
      d.node_of.push_back(id);
    }
  }
  for (int id = 1; id < s.node_count(); ++id) {
    if (s.kind(id) != NodeKind::Leaf) {
      d.edges.emplace_back(vertex_of[s.node(id).parent], vertex_of[id]);
    }
  }
  for (int id = 0; id < s.node_count(); ++id) {
    if (s.kind(id) == NodeKind::Leaf) {
      d.edges.emplace_back(vertex_of[s.node(id).parent], vertex_of[m.binder_of_leaf[id]]);
    }
  }
  d.root = 0;
  return d;
}

}  // namespace lambdamaps
