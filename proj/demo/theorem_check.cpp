// Builds the predicted extremal graph for B(6,0) on 9 vertices, confirms it
// is broom-free, and compares it with the exhaustive optimum.
#include <iostream>

#include "bturan/bturan.hpp"

int main() {
  using namespace bturan;
  const BroomSpec spec(6, 0);
  const int n = 9;
  auto [family, graph] = predicted_extremal(spec, n);
  std::cout << family.name() << " = " << graph6_encode(graph) << "\n"
            << "  broom-free: " << (is_broom_free(graph, spec) ? "yes" : "no") << "\n"
            << "  e_2 = " << degree_power_sum(graph, 2) << "\n";

  const ExtremalReport rep = extremal_search(spec, n, 2, Objective::DegreePowers);
  std::cout << "exhaustive optimum over B(6,0)-free graphs on " << n << " vertices: " << rep.optimum << "\n";
  for (const auto& g6 : rep.optimizer_graph6()) std::cout << "  optimizer " << g6 << "\n";
  std::cout << (rep.unique_and_matches ? "predicted family is the unique optimizer\n"
                                       : "optimum differs from the prediction at this n\n");
}
