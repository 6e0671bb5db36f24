#pragma once

// Exhaustive checks of the bijections and identities, grouped into suites.

#include <string>
#include <vector>

namespace lambdamaps {

struct CheckResult {
  bool ok = true;
  long long checked = 0;
  // First counterexample when !ok.
  std::string counterexample;
};

// Round trips over all objects of the given size.
CheckResult check_phi_roundtrip(int n);          // reduced skeletons of size n and degree trees of size n-2
CheckResult check_psi_roundtrip(int n);          // planar skeletons of size n and v-trees of size n-1
CheckResult check_rho_roundtrip(int n);          // maps and v-trees with n edges
CheckResult check_term_map_roundtrip(int n);     // terms of size n through maps with n-1 edges

CheckResult check_rho_direct(int n);             // rho_direct == rho on maps with n edges
CheckResult check_root_label_law(int n);         // root label of rho(M) == outv(M)
CheckResult check_loopless_law(int n);           // rho(loopless maps) == positive v-trees, exactly
CheckResult check_psi_restriction(int n);        // psi(2-connected, size n) == positive v-trees of size n-1
CheckResult check_graph_oracle(int n);           // check_family against edge connectivity, size n
CheckResult check_preimages(int n);              // attach_root_edge outputs == one-corner pi-preimages
CheckResult check_decomposition(int n);          // edge and outv conservation of decompose
CheckResult check_generator_agreement(int n);    // generators against ambient scans

// |S1_n| = |M_{n-1}| = |V_{n-1}|, |S2_n| = loopless = positive v-trees,
// |S3_n| = |RS_n| = |T_{n-2}| = |B_{n-2}|, for skeleton size n.
CheckResult check_count_identities(int n);
// Enumerated map, loopless and bipartite counts against closed forms.
CheckResult check_map_formulas(int n);

CheckResult check_stat_multisets(int n);         // bipartite maps with n edges
CheckResult check_abstraction_shift(int n_lo, int n_hi);
CheckResult check_gf(int n_max);

struct SuiteResult {
  std::string name;
  bool passed = true;
  // One line per check: `PASS label (k objects)` or `FAIL label: ...`.
  std::vector<std::string> lines;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "oracle", "stats", "counts", "gf"};
  return names;
}

// Throws InvalidInput for an unknown suite. `all` runs every suite.
std::vector<SuiteResult> run_suite(const std::string& name, int max_size);

}  // namespace lambdamaps
