#pragma once

#include <cstdint>

#include "atlas/graph.hpp"
#include "atlas/poset.hpp"

namespace atlas {

// Standard example S_m: minimals a1..am, maximals b1..bm, a_i < b_j iff i != j.
Poset standard_example(int m);

// The 6-element crown {a,b,c} below {ab,bc,ac}; same poset as standard_example(3).
Poset crown();

Poset chain(int n);
Poset antichain(int n);

// Ground set V(G) then E(G); v < e iff v is an endpoint of e.
// Element ids: vertex v -> v, edge index j -> |V| + j.
Poset incidence_poset(const Graph& G);

int incidence_vertex_id(int v);
int incidence_edge_id(const Graph& G, int edge_index);

// Transitive closure of a random DAG over a random linear order;
// bit-exact reproducible per seed.
Poset random_poset(int n, double p, uint64_t seed);

} // namespace atlas
