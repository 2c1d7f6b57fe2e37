// Builds a strong box representation for a small cyclic graph, then runs a
// stealth attack on a bridge of a gain network.

#include <iostream>

#include "minorkit/io.hpp"
#include "minorkit/minorkit.hpp"

using namespace minorkit;

int main() {
  // A 5-cycle with one chord: n = 5, m = 6, so the spanning-tree pipeline
  // lands in dimension 2 + (m - n + 1) = 4.
  const Graph g = Graph::from_pairs(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}});
  const ConstructionTrace trace = build_via_spanning_tree(g);
  const Verification check = verify(g, trace.final);
  std::cout << "dimension " << trace.final.dim << ", verified " << std::boolalpha << check.ok() << "\n";

  // Two triangles joined by the edge (3,4).
  const Graph net(6, {{1, 2, Rational(1)}, {2, 3, Rational(2)}, {1, 3, Rational(1)}, {3, 4, Rational(3, 2)},
                      {4, 5, Rational(1)}, {5, 6, Rational(1)}, {4, 6, Rational(2)}});
  const Feasibility feas = feasibility(net, {*net.find_edge(3, 4)});
  const StealthAttack attack = build_stealth(net, feas.spec, assemble_gain_matrix(net), Rational(1, 2));
  std::cout << "stealth vector " << io::to_json(attack.s).dump() << "\n";
  std::cout << "attack support " << io::json(attack.support).dump() << "\n";
}
