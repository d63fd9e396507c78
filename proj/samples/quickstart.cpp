#include <iostream>

#include "turanlab/turanlab.hpp"

using namespace turanlab;

int main() {
  const Graph g = build(turan_spec(6, 3));
  std::cout << "T(6,3) = " << serialize_graph6(g) << " with " << g.edge_count() << " edges\n";

  const MatchingProfile p = matching_profile(build(cycle_spec(9)));
  std::cout << "matchings of C9:";
  for (Count c : p.counts) std::cout << ' ' << c;
  std::cout << '\n';

  const ExtremalResult r = ex_brute(6, build(matching_spec(2)), graph_from_source("2P3"));
  std::cout << "ex(6, M2, 2P3) = " << r.value << " over " << r.searched << " graphs\n";
  for (const auto& g6 : r.extremal) std::cout << "  " << g6 << '\n';

  if (const auto w = berge_tutte_witness(build(star_spec(5)), 2))
    std::cout << "S5 is M2-free, partition value " << w->value << '\n';
}
