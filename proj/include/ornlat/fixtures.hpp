#pragma once

#include <string>
#include <vector>

#include "ornlat/digraph.hpp"

namespace ornlat {

// Pinned instance catalog used across checks and the CLI.
namespace fixtures {

Digraph increasing_path(int n);  // I_n: 1 -> 2 -> ... -> n
Digraph x_graph();               // {(1,3),(2,3),(3,4),(3,5)}, the smallest starred tree
Digraph diamond();               // {(1,2),(1,3),(2,4),(3,4)}
Digraph r_graph();               // {(1,3),(1,5),(2,4),(2,5),(3,4)}

std::vector<std::string> names();
Digraph by_name(const std::string& name);  // also broom(m,n) / comb(n) spellings

// All increasing trees on [n] (every labeled tree, oriented small -> large).
std::vector<Digraph> increasing_trees(int n);
// The same list with digraph-isomorphic duplicates removed.
std::vector<Digraph> increasing_trees_up_to_iso(int n);

bool digraph_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace fixtures

}  // namespace ornlat
