#include "lambdamaps/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lambdamaps/bijections.hpp"
#include "lambdamaps/connectivity.hpp"
#include "lambdamaps/enumeration.hpp"
#include "lambdamaps/error.hpp"
#include "lambdamaps/labeled_trees.hpp"
#include "lambdamaps/lambda_core.hpp"
#include "lambdamaps/planar_maps.hpp"
#include "lambdamaps/series.hpp"

namespace lambdamaps {

namespace {

// Records the first failure; later failures only count.
class Recorder {
 public:
  void pass() { ++result_.checked; }
  void fail(const std::string& what) {
    ++result_.checked;
    if (result_.ok) result_.counterexample = what;
    result_.ok = false;
  }
  void expect(bool ok, const std::string& what) { ok ? pass() : fail(what); }
  // Runs `body`, turning exceptions into failures.
  template <typename Body>
  void guard(const std::string& what, const Body& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(what + ": " + e.what());
    }
  }
  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

std::vector<std::string> sorted_strings(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::string> tree_strings(const std::vector<LabeledTree>& trees) {
  std::vector<std::string> out;
  out.reserve(trees.size());
  for (const LabeledTree& t : trees) out.push_back(t.to_string());
  return sorted_strings(std::move(out));
}

std::string first_difference(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> only_a;
  std::vector<std::string> only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  if (!only_a.empty()) return "only in image: " + only_a.front();
  if (!only_b.empty()) return "missing from image: " + only_b.front();
  return "multiplicities differ";
}

bool tree_size_ok(int n) { return n >= 0 && n <= kMaxTreeSize; }
bool map_size_ok(int n) { return n >= 0 && n <= kMaxMapSize; }

}  // namespace

CheckResult check_phi_roundtrip(int n) {
  Recorder rec;
  for (const ReducedSkeleton& r : gen_reduced_skeletons(n)) {
    const std::string name = "phi on " + r.skeleton().to_string();
    rec.guard(name, [&] {
      DegreeTree d = phi(r);
      if (!validate_degree_tree(d) || d.size() != n - 2) {
        rec.fail(name + " gives " + d.to_string());
      } else {
        rec.expect(phi_inv(d) == r, name + " does not invert through " + d.to_string());
      }
    });
  }
  if (tree_size_ok(n - 2)) {
    for (const LabeledTree& t : gen_trees(n - 2, TreeKind::Degree)) {
      const std::string name = "phi_inv on " + t.to_string();
      rec.guard(name, [&] {
        DegreeTree d(t);
        ReducedSkeleton r = phi_inv(d);
        rec.expect(check_family(unreduce(r), TermFamily::ThreeConnected) && phi(r) == d,
                   name + " gives " + r.skeleton().to_string());
      });
    }
  }
  return rec.result();
}

CheckResult check_psi_roundtrip(int n) {
  Recorder rec;
  for (const Skeleton& s : gen_skeletons(n, TermFamily::Planar)) {
    const std::string name = "psi on " + s.to_string();
    rec.guard(name, [&] {
      VTree v = psi(s);
      if (!validate_vtree(v).valid || v.size() != n - 1) {
        rec.fail(name + " gives " + v.to_string());
      } else {
        rec.expect(psi_inv(v) == s, name + " does not invert through " + v.to_string());
      }
    });
  }
  if (tree_size_ok(n - 1)) {
    for (const LabeledTree& t : gen_trees(n - 1, TreeKind::VTree)) {
      const std::string name = "psi_inv on " + t.to_string();
      rec.guard(name, [&] {
        VTree v(t);
        Skeleton s = psi_inv(v);
        rec.expect(check_family(s, TermFamily::Planar) && psi(s) == v, name + " gives " + s.to_string());
      });
    }
  }
  return rec.result();
}

CheckResult check_rho_roundtrip(int n) {
  Recorder rec;
  for (const RootedMap& m : gen_maps(n)) {
    const std::string name = "rho on " + m.to_string();
    rec.guard(name, [&] {
      VTree v = rho(m);
      if (!validate_vtree(v).valid || v.size() != n) {
        rec.fail(name + " gives " + v.to_string());
      } else {
        rec.expect(rho_inv(v) == m, name + " does not invert through " + v.to_string());
      }
    });
  }
  if (tree_size_ok(n)) {
    for (const LabeledTree& t : gen_trees(n, TreeKind::VTree)) {
      const std::string name = "rho_inv on " + t.to_string();
      rec.guard(name, [&] {
        VTree v(t);
        RootedMap m = rho_inv(v);
        rec.expect(m.edge_count() == n && rho(m) == v, name + " gives " + m.to_string());
      });
    }
  }
  return rec.result();
}

CheckResult check_term_map_roundtrip(int n) {
  Recorder rec;
  for (const Skeleton& s : gen_skeletons(n, TermFamily::Planar)) {
    TermPtr term = term_of_skeleton(s);
    const std::string text = render_term(*term);
    rec.guard("term " + text, [&] {
      ParsedTerm parsed = parse_term(text);
      RootedMap m = rho_inv(psi(skeleton_of(*parsed.term)));
      RootedMap reread = RootedMap::parse(m.to_string());
      TermPtr back = term_of_skeleton(psi_inv(rho(reread)));
      rec.expect(alpha_equivalent(*back, *term), "term " + text + " comes back as " + render_term(*back));
    });
  }
  return rec.result();
}

CheckResult check_rho_direct(int n) {
  Recorder rec;
  for (const RootedMap& m : gen_maps(n)) {
    const std::string name = "map " + m.to_string();
    rec.guard(name, [&] {
      VTree direct = rho_direct(m);
      VTree recursive = rho(m);
      rec.expect(direct == recursive,
                 name + ": rho_direct " + direct.to_string() + ", rho " + recursive.to_string());
    });
  }
  return rec.result();
}

CheckResult check_root_label_law(int n) {
  Recorder rec;
  for (const RootedMap& m : gen_maps(n)) {
    rec.guard("map " + m.to_string(), [&] {
      VTree v = rho(m);
      rec.expect(v.root_label() == outv(m), "map " + m.to_string() + ": root label " +
                                                std::to_string(v.root_label()) + ", outv " +
                                                std::to_string(outv(m)));
    });
  }
  return rec.result();
}

CheckResult check_loopless_law(int n) {
  Recorder rec;
  std::vector<std::string> image;
  for (const RootedMap& m : gen_maps(n)) {
    rec.guard("map " + m.to_string(), [&] {
      VTree v = rho(m);
      const bool loopless = map_stats(m).loopless;
      if (loopless) image.push_back(v.to_string());
      rec.expect(loopless == validate_vtree(v).positive,
                 "map " + m.to_string() + (loopless ? " is" : " is not") + " loopless but rho gives " +
                     v.to_string());
    });
  }
  if (tree_size_ok(n)) {
    std::vector<std::string> positive = tree_strings(gen_trees(n, TreeKind::VTreePositive));
    image = sorted_strings(std::move(image));
    rec.expect(image == positive, "rho(loopless) vs positive v-trees: " + first_difference(image, positive));
  }
  return rec.result();
}

CheckResult check_psi_restriction(int n) {
  Recorder rec;
  std::vector<std::string> image;
  for (const Skeleton& s : gen_skeletons(n, TermFamily::Planar)) {
    rec.guard("skeleton " + s.to_string(), [&] {
      VTree v = psi(s);
      const bool two = check_family(s, TermFamily::TwoConnected);
      if (two) image.push_back(v.to_string());
      rec.expect(two == validate_vtree(v).positive,
                 "skeleton " + s.to_string() + (two ? " is" : " is not") + " 2-connected but psi gives " +
                     v.to_string());
    });
  }
  if (tree_size_ok(n - 1)) {
    std::vector<std::string> positive = tree_strings(gen_trees(n - 1, TreeKind::VTreePositive));
    image = sorted_strings(std::move(image));
    rec.expect(image == positive, "psi(2-connected) vs positive v-trees: " + first_difference(image, positive));
  }
  return rec.result();
}

CheckResult check_graph_oracle(int n) {
  Recorder rec;
  for (const Skeleton& s : gen_skeletons(n, TermFamily::Planar)) {
    rec.guard("skeleton " + s.to_string(), [&] {
      const ConnectivityClass c = edge_connectivity_class(diagram_of(s));
      const bool connected = c != ConnectivityClass::Disconnected;
      const bool two = c == ConnectivityClass::Two || c == ConnectivityClass::ThreePlus;
      // The identity term has a one-vertex diagram but is not counted as
      // 3-connected.
      const bool three = c == ConnectivityClass::ThreePlus && s.size() >= 2;
      const bool ok = connected && two == check_family(s, TermFamily::TwoConnected) &&
                      three == check_family(s, TermFamily::ThreeConnected);
      rec.expect(ok, "skeleton " + s.to_string() + " has edge connectivity " + to_string(c) +
                         ", characterization says level 2 " +
                         (check_family(s, TermFamily::TwoConnected) ? "yes" : "no") + ", level 3 " +
                         (check_family(s, TermFamily::ThreeConnected) ? "yes" : "no"));
    });
  }
  return rec.result();
}

CheckResult check_preimages(int n) {
  Recorder rec;
  std::map<RootedMap, std::set<RootedMap>> preimages;
  for (const RootedMap& u : gen_maps(n + 1)) {
    if (!is_one_corner(u)) continue;
    rec.guard("pi on " + u.to_string(), [&] {
      RootedMap m = pi(u);
      if (m.edge_count() != n) {
        rec.fail("pi on " + u.to_string() + " gives " + m.to_string());
      } else {
        preimages[m].insert(u);
      }
    });
  }
  for (const RootedMap& m : gen_maps(n)) {
    rec.guard("attach on " + m.to_string(), [&] {
      std::set<RootedMap> attached;
      const int k = outv(m);
      for (int i = 0; i <= k; ++i) {
        RootedMap u = attach_root_edge(m, i);
        if (!is_one_corner(u) || outv_u(u) != i || !(pi(u) == m)) {
          rec.fail("attach_root_edge(" + m.to_string() + ", " + std::to_string(i) + ") gives " + u.to_string());
          return;
        }
        attached.insert(u);
      }
      rec.expect(attached.size() == static_cast<std::size_t>(k + 1) && attached == preimages[m],
                 "map " + m.to_string() + " has " + std::to_string(preimages[m].size()) +
                     " one-corner preimages, attach_root_edge gives " + std::to_string(attached.size()));
    });
  }
  return rec.result();
}

CheckResult check_decomposition(int n) {
  Recorder rec;
  if (n == 0) return rec.result();
  for (const RootedMap& m : gen_maps(n)) {
    rec.guard("decompose " + m.to_string(), [&] {
      int edges = 0;
      int outer = 1;
      bool one_corner = true;
      for (const RootedMap& u : decompose(m)) {
        edges += u.edge_count();
        outer += outv_u(u);
        one_corner = one_corner && is_one_corner(u);
      }
      rec.expect(edges == n && outer == outv(m) && one_corner, "decompose " + m.to_string());
    });
  }
  return rec.result();
}

namespace {

std::vector<PlaneTree> plane_trees(int m) {
  if (m == 0) return {PlaneTree()};
  // Forests of total edge count m, each tree contributing its size + 1.
  std::vector<std::vector<PlaneTree>> forests;
  auto extend = [&](auto&& self, std::vector<PlaneTree>& prefix, int left) -> void {
    if (left == 0) {
      forests.push_back(prefix);
      return;
    }
    for (int first = 0; first < left; ++first) {
      for (const PlaneTree& t : plane_trees(first)) {
        prefix.push_back(t);
        self(self, prefix, left - first - 1);
        prefix.pop_back();
      }
    }
  };
  std::vector<PlaneTree> prefix;
  extend(extend, prefix, m);
  std::vector<PlaneTree> out;
  for (const auto& f : forests) out.push_back(PlaneTree::graft(f));
  return out;
}

// Every labeling of every plane tree with n edges by labels 0..n+1.
template <typename Keep>
std::vector<std::string> ambient_trees(int n, const Keep& keep) {
  std::vector<std::string> out;
  for (const PlaneTree& shape : plane_trees(n)) {
    const int nodes = shape.node_count();
    std::vector<int> labels(nodes, 0);
    while (true) {
      LabeledTree t(shape, labels);
      if (keep(t)) out.push_back(t.to_string());
      int i = 0;
      while (i < nodes && labels[i] == n + 1) labels[i++] = 0;
      if (i == nodes) break;
      ++labels[i];
    }
  }
  return sorted_strings(std::move(out));
}

}  // namespace

CheckResult check_generator_agreement(int n) {
  Recorder rec;
  const std::vector<Skeleton> ambient = gen_unary_binary_trees(n, n);
  for (TermFamily level : {TermFamily::Planar, TermFamily::TwoConnected, TermFamily::ThreeConnected}) {
    std::vector<Skeleton> filtered;
    for (const Skeleton& s : ambient) {
      if (check_family(s, level)) filtered.push_back(s);
    }
    rec.expect(filtered == gen_skeletons(n, level),
               "skeleton generator level " + std::to_string(static_cast<int>(level)) + " size " +
                   std::to_string(n) + " disagrees with the ambient scan");
  }
  auto compare = [&](TreeKind kind, const char* what, auto keep) {
    std::vector<std::string> scanned = ambient_trees(n, keep);
    std::vector<std::string> generated = tree_strings(gen_trees(n, kind));
    rec.expect(scanned == generated, std::string(what) + " generator size " + std::to_string(n) + ": " +
                                         first_difference(generated, scanned));
  };
  compare(TreeKind::Degree, "degree tree", [](const LabeledTree& t) { return validate_degree_tree(t); });
  compare(TreeKind::VTree, "v-tree", [](const LabeledTree& t) { return validate_vtree(t).valid; });
  compare(TreeKind::VTreePositive, "positive v-tree",
          [](const LabeledTree& t) { return validate_vtree(t).positive; });
  if (map_size_ok(n)) {
    for (const RootedMap& m : gen_maps(n)) {
      rec.expect(validate_map(m.rotation_system()).valid && RootedMap(m.rotation_system()) == m,
                 "generated map " + m.to_string() + " is not canonical");
    }
  }
  return rec.result();
}

CheckResult check_count_identities(int n) {
  Recorder rec;
  auto same = [&](const std::string& what, long long a, long long b) {
    rec.expect(a == b, what + ": " + std::to_string(a) + " vs " + std::to_string(b));
  };
  const long long s1 = family_count("s1", n);
  const long long s2 = family_count("s2", n);
  if (map_size_ok(n - 1)) {
    same("|S1_" + std::to_string(n) + "| vs maps", s1, family_count("map", n - 1));
    same("|S2_" + std::to_string(n) + "| vs loopless maps", s2, family_count("map-loopless", n - 1));
  }
  if (tree_size_ok(n - 1)) {
    same("|S1_" + std::to_string(n) + "| vs v-trees", s1, family_count("vtree", n - 1));
    same("|S2_" + std::to_string(n) + "| vs positive v-trees", s2, family_count("vtree-pos", n - 1));
  }
  if (n >= 2) {
    const long long s3 = family_count("s3", n);
    same("|S3_" + std::to_string(n) + "| vs reduced skeletons", s3, family_count("rs", n));
    if (tree_size_ok(n - 2)) same("|S3_" + std::to_string(n) + "| vs degree trees", s3, family_count("dtree", n - 2));
    if (map_size_ok(n - 2)) {
      same("|S3_" + std::to_string(n) + "| vs bipartite maps", s3, family_count("map-bipartite", n - 2));
    }
  }
  return rec.result();
}

CheckResult check_map_formulas(int n) {
  Recorder rec;
  auto same = [&](const std::string& family, const Rational& formula) {
    const long long count = family_count(family, n);
    rec.expect(Rational(count) == formula,
               family + " n=" + std::to_string(n) + ": " + std::to_string(count) + " vs " + to_string(formula));
  };
  same("map", planar_map_formula(n));
  same("map-loopless", loopless_map_formula(n));
  same("map-bipartite", bipartite_map_formula(n));
  return rec.result();
}

CheckResult check_stat_multisets(int n) {
  Recorder rec;
  rec.guard("statistics n=" + std::to_string(n), [&] {
    Comparison c = compare_stat_multisets(n);
    rec.expect(c.ok, "n=" + std::to_string(n) + ": " + c.detail);
  });
  return rec.result();
}

CheckResult check_abstraction_shift(int n_lo, int n_hi) {
  Recorder rec;
  std::optional<int> common;
  for (int n = n_lo; n <= n_hi; ++n) {
    std::optional<int> s = abstraction_shift(n);
    if (!s) {
      rec.fail("no constant shift at n=" + std::to_string(n));
      continue;
    }
    if (!common) common = s;
    rec.expect(*s == *common, "shift " + std::to_string(*s) + " at n=" + std::to_string(n) + " differs from " +
                                  std::to_string(*common));
  }
  return rec.result();
}

CheckResult check_gf(int n_max) {
  Recorder rec;
  rec.guard("generating functions", [&] {
    GfReport report = check_gf_relation(n_max);
    rec.expect(report.relation_holds, report.first_difference);
  });
  return rec.result();
}

namespace {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) { result_.name = std::move(name); }

  void add(const std::string& label, const CheckResult& r) {
    if (r.ok) {
      result_.lines.push_back("PASS " + label + " (" + std::to_string(r.checked) + " checks)");
    } else {
      result_.passed = false;
      result_.lines.push_back("FAIL " + label + ": " + r.counterexample);
    }
  }
  void info(const std::string& line) { result_.lines.push_back("INFO " + line); }
  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

std::string at(const char* what, int n) { return std::string(what) + " n=" + std::to_string(n); }

SuiteResult roundtrip_suite(int max_size) {
  SuiteBuilder b("roundtrip");
  for (int n = 2; n <= std::min(max_size + 1, kMaxSkeletonSize); ++n) b.add(at("phi", n), check_phi_roundtrip(n));
  for (int n = 1; n <= std::min(max_size + 1, kMaxSkeletonSize); ++n) b.add(at("psi", n), check_psi_roundtrip(n));
  for (int n = 0; n <= std::min(max_size, kMaxMapSize); ++n) b.add(at("rho", n), check_rho_roundtrip(n));
  for (int n = 1; n <= std::min(max_size + 1, kMaxMapSize + 1); ++n) {
    b.add(at("term-map", n), check_term_map_roundtrip(n));
  }
  return b.result();
}

SuiteResult oracle_suite(int max_size) {
  SuiteBuilder b("oracle");
  const int maps = std::min(max_size, kMaxMapSize);
  for (int n = 0; n <= maps; ++n) b.add(at("rho_direct", n), check_rho_direct(n));
  for (int n = 0; n <= maps; ++n) b.add(at("root label", n), check_root_label_law(n));
  for (int n = 0; n <= maps; ++n) b.add(at("loopless", n), check_loopless_law(n));
  for (int n = 1; n <= maps; ++n) b.add(at("decompose", n), check_decomposition(n));
  for (int n = 0; n <= std::min(max_size - 1, 4); ++n) b.add(at("preimages", n), check_preimages(n));
  const int skeletons = std::min(max_size + 1, kMaxSkeletonSize);
  for (int n = 1; n <= skeletons; ++n) b.add(at("psi 2-connected", n), check_psi_restriction(n));
  for (int n = 1; n <= skeletons; ++n) b.add(at("graph oracle", n), check_graph_oracle(n));
  for (int n = 1; n <= std::min(max_size, 3); ++n) b.add(at("generators", n), check_generator_agreement(n));
  return b.result();
}

SuiteResult stats_suite(int max_size) {
  SuiteBuilder b("stats");
  for (int n = 1; n <= std::min(max_size - 1, 4); ++n) b.add(at("statistics", n), check_stat_multisets(n));
  const int hi = std::min(max_size + 1, kMaxSkeletonSize);
  if (hi >= 3) {
    b.add("abstraction shift n=3.." + std::to_string(hi), check_abstraction_shift(3, hi));
    if (auto s = abstraction_shift(3)) b.info("leading abstractions = outdeg + " + std::to_string(*s));
  }
  return b.result();
}

SuiteResult counts_suite(int max_size) {
  SuiteBuilder b("counts");
  for (int n = 1; n <= std::min(max_size + 1, kMaxMapSize + 1); ++n) b.add(at("identities", n), check_count_identities(n));
  for (int n = 0; n <= std::min(max_size, kMaxMapSize); ++n) b.add(at("formulas", n), check_map_formulas(n));
  return b.result();
}

SuiteResult gf_suite(int max_size) {
  SuiteBuilder b("gf");
  const int n_max = std::min(max_size + 1, kMaxMapSize + 2);
  if (n_max < 2) return b.result();
  b.add("f_RS = t^2 x f_B up to t^" + std::to_string(n_max), check_gf(n_max));
  GfReport report = check_gf_relation(n_max);
  b.info("printed f_B formula: " + std::to_string(report.cells.size() - report.formula_mismatches) + " of " +
         std::to_string(report.cells.size()) + " coefficients match enumeration");
  return b.result();
}

}  // namespace

std::vector<SuiteResult> run_suite(const std::string& name, int max_size) {
  if (name == "all") {
    std::vector<SuiteResult> out;
    for (const std::string& s : suite_names()) out.push_back(run_suite(s, max_size).front());
    return out;
  }
  if (name == "roundtrip") return {roundtrip_suite(max_size)};
  if (name == "oracle") return {oracle_suite(max_size)};
  if (name == "stats") return {stats_suite(max_size)};
  if (name == "counts") return {counts_suite(max_size)};
  if (name == "gf") return {gf_suite(max_size)};
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace lambdamaps
