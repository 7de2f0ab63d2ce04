#ifndef LIEC_GENERATORS_HPP
#define LIEC_GENERATORS_HPP

#include <cstdint>

#include "liec/graph.hpp"

namespace liec::gen {

// Two triangles sharing one vertex: n=5, m=6, degrees (4,2,2,2,2).
Graph bowtie();

// Member of the non-colorable triangle family: start from K3, then `steps`
// random growth operations (even path at a degree-2 triangle vertex, or a
// triangle reached by an odd path). Path lengths are capped by max_len.
Graph triangle_family_member(std::uint64_t seed, int steps, int max_len = 6);

// Random tree on n vertices by random attachment.
Graph random_tree(int n, std::uint64_t seed);

// Connected cactus with exactly `cycles` cycles on exactly n vertices: grow a
// tree, then graft cycles out of fresh vertices. Throws std::invalid_argument
// when n < 1 + 2*cycles.
Graph random_cactus(int n, int cycles, std::uint64_t seed);

} // namespace liec::gen

#endif
