#pragma once

// Reference computations that share no code with the library: closed-form
// counts, planar terms from ordered typing contexts, and rotation systems
// counted by hand.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using u128 = unsigned __int128;

inline u128 factorial(int n) {
  u128 r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<u128>(i);
  return r;
}

inline u128 power(u128 b, int e) {
  u128 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Rooted planar maps with n edges: 2 3^n (2n)! / (n! (n+2)!).
inline long long planar_maps(int n) {
  return static_cast<long long>(2 * power(3, n) * factorial(2 * n) / (factorial(n) * factorial(n + 2)));
}

// Bipartite rooted planar maps: 3 2^(n-1) (2n)! / (n! (n+2)!), 1 for n = 0.
inline long long bipartite_maps(int n) {
  if (n == 0) return 1;
  return static_cast<long long>(3 * power(2, n - 1) * factorial(2 * n) / (factorial(n) * factorial(n + 2)));
}

// Loopless rooted planar maps: 2 (4n+1)! / ((n+1)! (3n+2)!).
inline long long loopless_maps(int n) {
  return static_cast<long long>(2 * factorial(4 * n + 1) / (factorial(n + 1) * factorial(3 * n + 2)));
}

// Closed normal terms in which variables are consumed in the order they were
// bound: an application splits its ordered context into a prefix for the
// function and a suffix for the argument. Fully parenthesized.
class PlanarTerms {
 public:
  explicit PlanarTerms(int n) { gen(n, {}, 0, false, out_); }
  const std::vector<std::string>& terms() const { return out_; }

 private:
  static std::string name(int depth) { return "v" + std::to_string(depth); }

  // Terms of size n using exactly the variables of ctx, in order. `depth`
  // counts enclosing binders for fresh names; `head` forbids abstractions.
  void gen(int n, const std::vector<std::string>& ctx, int depth, bool head, std::vector<std::string>& out) {
    const int k = static_cast<int>(ctx.size());
    if (k > n) return;
    if (n == 1 && k == 1) out.push_back(ctx[0]);
    if (!head) {
      std::vector<std::string> ext = ctx;
      ext.push_back(name(depth));
      std::vector<std::string> bodies;
      gen(n, ext, depth + 1, false, bodies);
      for (const auto& b : bodies) out.push_back("(\\" + name(depth) + "." + b + ")");
    }
    for (int n1 = 1; n1 < n; ++n1) {
      for (int split = 0; split <= k; ++split) {
        std::vector<std::string> left(ctx.begin(), ctx.begin() + split);
        std::vector<std::string> right(ctx.begin() + split, ctx.end());
        std::vector<std::string> funs, args;
        gen(n1, left, depth, true, funs);
        if (funs.empty()) continue;
        gen(n - n1, right, depth, false, args);
        for (const auto& f : funs) {
          for (const auto& a : args) out.push_back("(" + f + " " + a + ")");
        }
      }
    }
  }

  std::vector<std::string> out_;
};

struct MapCounts {
  long long all = 0;
  long long loopless = 0;
  long long bipartite = 0;
};

// Counts rooted planar maps with n edges from all permutations sigma of the
// 2n half-edges with alpha(h) = h ^ 1. Each rooted map arises from
// 2^n n! / (2n) labelled rotation systems with a fixed root half-edge.
inline MapCounts count_maps_by_permutation(int n) {
  MapCounts c;
  if (n == 0) {
    c.all = c.loopless = c.bipartite = 1;
    return c;
  }
  const int h = 2 * n;
  std::vector<int> sigma(h);
  std::iota(sigma.begin(), sigma.end(), 0);
  long long all = 0, loopless = 0, bipartite = 0;
  do {
    std::vector<int> vertex(h, -1), face(h, -1);
    int vertices = 0, faces = 0;
    for (int s = 0; s < h; ++s) {
      if (vertex[s] < 0) {
        for (int x = s; vertex[x] < 0; x = sigma[x]) vertex[x] = vertices;
        ++vertices;
      }
      if (face[s] < 0) {
        for (int x = s; face[x] < 0; x = sigma[x ^ 1]) face[x] = faces;
        ++faces;
      }
    }
    // Connectivity over vertices joined by edges.
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int components = vertices;
    for (int e = 0; e < n; ++e) {
      int a = find(vertex[2 * e]), b = find(vertex[2 * e + 1]);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components != 1 || vertices - n + faces != 2) continue;
    ++all;
    bool has_loop = false;
    for (int e = 0; e < n; ++e) has_loop = has_loop || vertex[2 * e] == vertex[2 * e + 1];
    if (!has_loop) ++loopless;
    bool even = true;
    for (int s = 0; s < h && even; ++s) {
      int len = 0;
      int x = s;
      do {
        ++len;
        x = sigma[x ^ 1];
      } while (x != s);
      even = len % 2 == 0;
    }
    if (even) ++bipartite;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  const long long per_map = static_cast<long long>(power(2, n) * factorial(n) / static_cast<u128>(2 * n));
  c.all = all / per_map;
  c.loopless = loopless / per_map;
  c.bipartite = bipartite / per_map;
  return c;
}

}  // namespace oracle
