#include "lambdamaps/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lambdamaps/bijections.hpp"
#include "lambdamaps/connectivity.hpp"
#include "lambdamaps/enumeration.hpp"
#include "lambdamaps/error.hpp"
#include "lambdamaps/labeled_trees.hpp"
#include "lambdamaps/lambda_core.hpp"
#include "lambdamaps/planar_maps.hpp"
#include "lambdamaps/series.hpp"
#include "lambdamaps/verify.hpp"

namespace lambdamaps::cli {
namespace {

const std::vector<std::string> kFamilies{"s1",  "s2",           "s3",          "rs",    "map",
                                         "map-loopless", "map-bipartite", "dtree", "vtree", "vtree-pos"};
const std::vector<std::string> kFormats{"term", "skeleton", "vtree", "dtree", "map"};
const std::vector<std::string> kKinds{"term", "skeleton", "rs", "dtree", "vtree", "map"};
const std::vector<std::string> kSeries{"bipartite", "reduced", "formula"};

struct UsageError : Error {
  using Error::Error;
};

std::string read_input(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) {
    if (!inline_text.empty()) throw UsageError("give the input inline or with --file, not both");
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
  }
  if (inline_text.empty()) throw UsageError("missing input object");
  return inline_text;
}

// Skeleton of a closed planar linear normal term.
Skeleton planar_skeleton(const std::string& text) {
  ParsedTerm parsed = parse_term(text);
  if (!parsed.closed()) throw InvalidInput("term has free variable " + parsed.free_variables.front());
  Skeleton s = skeleton_of(*parsed.term);
  if (!check_family(s, TermFamily::Planar)) throw InvalidInput("not a planar linear normal term");
  if (!alpha_equivalent(*term_of_skeleton(s), *parsed.term)) throw InvalidInput("not a planar linear normal term");
  return s;
}

Skeleton checked_skeleton(const std::string& text) {
  Skeleton s = Skeleton::parse(text);
  if (!check_family(s, TermFamily::Planar)) throw InvalidInput("not a planar linear normal skeleton");
  return s;
}

// Every format is converted through the skeleton of the term.
Skeleton to_skeleton(const std::string& format, const std::string& text) {
  if (format == "term") return planar_skeleton(text);
  if (format == "skeleton") return checked_skeleton(text);
  if (format == "vtree") return psi_inv(VTree(LabeledTree::parse(text)));
  if (format == "dtree") return unreduce(phi_inv(DegreeTree(LabeledTree::parse(text))));
  return psi_inv(rho(RootedMap::parse(text)));
}

std::string from_skeleton(const std::string& format, const Skeleton& s) {
  if (format == "term") return render_term(*term_of_skeleton(s));
  if (format == "skeleton") return s.to_string();
  if (format == "vtree") return psi(s).to_string();
  if (format == "dtree") {
    if (!check_family(s, TermFamily::ThreeConnected)) throw InvalidInput("term is not 3-connected");
    return phi(reduce_skeleton(s)).to_string();
  }
  return rho_inv(psi(s)).to_string();
}

std::string convert(const std::string& from, const std::string& to, const std::string& text) {
  if (from == to) {
    if (from == "map") return RootedMap::parse(text).to_string();
    if (from == "vtree") {
      VTree v(LabeledTree::parse(text));
      if (!validate_vtree(v).valid) throw InvalidInput("not a v-tree");
      return v.to_string();
    }
    if (from == "dtree") {
      DegreeTree d(LabeledTree::parse(text));
      if (!validate_degree_tree(d)) throw InvalidInput("not a degree tree");
      return d.to_string();
    }
  }
  // Maps and v-trees are in bijection without going through terms.
  if (from == "map" && to == "vtree") return rho(RootedMap::parse(text)).to_string();
  if (from == "vtree" && to == "map") return rho_inv(VTree(LabeledTree::parse(text))).to_string();
  return from_skeleton(to, to_skeleton(from, text));
}

std::vector<std::string> listing(const std::string& family, int n) {
  std::vector<std::string> lines;
  auto skeletons = [&](TermFamily f) {
    for (const Skeleton& s : gen_skeletons(n, f)) lines.push_back(render_term(*term_of_skeleton(s)));
  };
  auto maps = [&](MapFamily f) {
    for (const RootedMap& m : gen_maps(n, f)) lines.push_back(m.to_string());
  };
  auto trees = [&](TreeKind k) {
    for (const LabeledTree& t : gen_trees(n, k)) lines.push_back(t.to_string());
  };
  if (family == "s1") skeletons(TermFamily::Planar);
  else if (family == "s2") skeletons(TermFamily::TwoConnected);
  else if (family == "s3") skeletons(TermFamily::ThreeConnected);
  else if (family == "rs") {
    for (const ReducedSkeleton& r : gen_reduced_skeletons(n)) lines.push_back(r.skeleton().to_string());
  } else if (family == "map") maps(MapFamily::All);
  else if (family == "map-loopless") maps(MapFamily::Loopless);
  else if (family == "map-bipartite") maps(MapFamily::Bipartite);
  else if (family == "dtree") trees(TreeKind::Degree);
  else if (family == "vtree") trees(TreeKind::VTree);
  else trees(TreeKind::VTreePositive);
  return lines;
}

std::string guess_kind(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t");
  if (i == std::string::npos) throw InvalidInput("empty object");
  if (text.compare(i, 3, "map") == 0) return "map";
  char c = text[i];
  if (c == '-' || (c >= '0' && c <= '9')) return "tree";
  if ((c == 'L' || c == 'U' || c == 'B') && text.find('.') == std::string::npos) return "skeleton";
  return "term";
}

void print_skeleton_stats(std::ostream& out, const Skeleton& s) {
  ConnectivityClass graph = edge_connectivity_class(diagram_of(s));
  int level = check_family(s, TermFamily::ThreeConnected) ? 3 : check_family(s, TermFamily::TwoConnected) ? 2 : 1;
  out << "kind=term\n"
      << "size=" << s.size() << '\n'
      << "unary=" << s.unary_count() << '\n'
      << "binary=" << s.binary_count() << '\n'
      << "term=" << render_term(*term_of_skeleton(s)) << '\n'
      << "skeleton=" << s.to_string() << '\n'
      << "family=s" << level << '\n'
      << "edge_connectivity=" << to_string(graph) << '\n';
  if (level == 3) {
    ReducedSkeleton r = reduce_skeleton(s);
    SkeletonStats st = skeleton_stats(r);
    out << "reduced=" << r.skeleton().to_string() << '\n'
        << "ex=" << st.ex << '\n'
        << "applv=" << st.applv << '\n'
        << "appla=" << st.appla << '\n'
        << "uc=" << to_string(st.uc) << '\n';
  }
}

void print_stats(std::ostream& out, std::string kind, const std::string& text) {
  if (kind.empty()) kind = guess_kind(text);
  if (kind == "term") return print_skeleton_stats(out, planar_skeleton(text));
  if (kind == "skeleton") return print_skeleton_stats(out, checked_skeleton(text));
  if (kind == "rs") {
    ReducedSkeleton r(Skeleton::parse(text));
    if (!check_reduced(r.skeleton())) throw InvalidInput("not a reduced skeleton");
    SkeletonStats st = skeleton_stats(r);
    out << "kind=rs\n"
        << "size=" << r.skeleton().size() << '\n'
        << "ex=" << st.ex << '\n'
        << "applv=" << st.applv << '\n'
        << "appla=" << st.appla << '\n'
        << "uc=" << to_string(st.uc) << '\n';
    return;
  }
  if (kind == "map") {
    RootedMap m = RootedMap::parse(text);
    MapStats st = map_stats(m);
    out << "kind=map\n"
        << "edges=" << m.edge_count() << '\n'
        << "vertices=" << m.vertex_count() << '\n'
        << "faces=" << m.face_count() << '\n'
        << "outv=" << st.outv << '\n'
        << "one_corner=" << (is_one_corner(m) ? "yes" : "no") << '\n'
        << "loopless=" << (st.loopless ? "yes" : "no") << '\n'
        << "bipartite=" << (st.bipartite ? "yes" : "no") << '\n';
    if (st.bipartite) {
      out << "white=" << st.white << '\n'
          << "black=" << st.black << '\n'
          << "outdeg=" << st.outdeg << '\n'
          << "face=" << to_string(st.face) << '\n';
    }
    out << "canonical=" << m.canonical_form() << '\n';
    return;
  }
  LabeledTree t = LabeledTree::parse(text);
  if (kind == "tree") kind = validate_degree_tree(t) ? "dtree" : "vtree";
  if (kind == "dtree") {
    if (!validate_degree_tree(t)) throw InvalidInput("not a degree tree");
    DegreeTreeStats st = degree_tree_stats(DegreeTree(t));
    out << "kind=dtree\n"
        << "size=" << t.size() << '\n'
        << "rlabel=" << st.rlabel << '\n'
        << "lnode=" << st.lnode << '\n'
        << "znode=" << st.znode << '\n'
        << "edge=" << to_string(st.edge) << '\n';
    return;
  }
  VTreeCheck check = validate_vtree(t);
  if (!check.valid) throw InvalidInput("labeled tree is neither a degree tree nor a v-tree");
  out << "kind=vtree\n"
      << "size=" << t.size() << '\n'
      << "root_label=" << t.root_label() << '\n'
      << "positive=" << (check.positive ? "yes" : "no") << '\n';
}

int verify(std::ostream& out, const std::string& suite, int max_size) {
  int failed = 0;
  std::vector<SuiteResult> results = run_suite(suite, max_size);
  for (const SuiteResult& r : results) {
    for (const std::string& line : r.lines) out << r.name << ": " << line << '\n';
    if (!r.passed) ++failed;
  }
  out << (results.size() - failed) << " of " << results.size() << " suites passed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

std::string gf(const std::string& series, int n, int k) {
  if (series == "bipartite") return bipartite_series(n, k).to_tsv();
  if (series == "reduced") return reduced_skeleton_series(n, k).to_tsv();
  return f_bipartite(n, k).to_tsv();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar lambda terms, labeled trees and rooted planar maps", "lambdamaps"};
  app.require_subcommand(1);

  std::string family;
  int size = 0;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List or count the objects of a family");
  enumerate->add_option("--family", family, "Family")->required()->check(CLI::IsMember(kFamilies));
  enumerate->add_option("--size", size, "Size")->required();
  enumerate->add_flag("--count", count_only, "Print only the number of objects");

  std::string from, to, input, file;
  auto* conv = app.add_subcommand("convert", "Convert an object between encodings");
  conv->add_option("--from", from, "Input format")->required()->check(CLI::IsMember(kFormats));
  conv->add_option("--to", to, "Output format")->required()->check(CLI::IsMember(kFormats));
  conv->add_option("input", input, "Object");
  conv->add_option("--file", file, "Read the object from a file");

  std::string suite = "all";
  int max_size = 5;
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", suite, "Suite")->check(CLI::IsMember(suites));
  ver->add_option("--max-size", max_size, "Largest size checked")->check(CLI::Range(1, 7));

  std::string kind;
  auto* stats = app.add_subcommand("stats", "Print the statistics of an object");
  stats->add_option("object", input, "Object");
  stats->add_option("--file", file, "Read the object from a file");
  stats->add_option("--as", kind, "Object kind, guessed by default")->check(CLI::IsMember(kKinds));

  int table_max = 6;
  auto* table = app.add_subcommand("table", "Count table against closed forms");
  table->add_option("--max-size", table_max, "Largest size")->check(CLI::Range(0, kMaxSkeletonSize));

  int gf_n = 4, gf_k = 0;
  std::string series = "bipartite";
  auto* gfc = app.add_subcommand("gf", "Truncated series coefficients");
  gfc->add_option("--N", gf_n, "Truncation order in t")->check(CLI::Range(0, kMaxSkeletonSize));
  gfc->add_option("--K", gf_k, "Number of face variables, N by default")->check(CLI::Range(1, 16));
  gfc->add_option("--series", series, "bipartite, reduced or formula")->check(CLI::IsMember(kSeries));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) {
      if (count_only) {
        out << family_count(family, size) << '\n';
      } else {
        for (const std::string& line : listing(family, size)) out << line << '\n';
      }
      return kExitOk;
    }
    if (*conv) {
      out << convert(from, to, read_input(input, file)) << '\n';
      return kExitOk;
    }
    if (*ver) return verify(out, suite, max_size);
    if (*stats) {
      print_stats(out, kind, read_input(input, file));
      return kExitOk;
    }
    if (*table) {
      out << format_count_table(count_table(table_max));
      return kExitOk;
    }
    if (*gfc) {
      out << gf(series, gf_n, gf_k > 0 ? gf_k : std::max(1, gf_n));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lambdamaps::cli
