#pragma once

#include <cstdint>

#include "ornlat/report.hpp"

namespace ornlat {

// Completion suite: for every directed tree on <= max_n vertices (one per
// isomorphism class), the biclosed reorientation lattice completes AReori and
// the ornamentation lattice completes ASour.
VerificationReport verify_macneille(int max_n);

// Unstarred-tree suite: R -> orn{R} is a lattice map and every ornamentation
// is acyclic, for every unstarred tree on <= max_n vertices.
VerificationReport verify_quotient(int max_n);

// Lattice characterization sweep over every intreeval hypergraph of every
// increasing tree on <= max_n vertices (seeded sampling above 16 paths).
VerificationReport verify_intreeval(int max_n, std::size_t sample = 0,
                                    std::uint64_t seed = 0);

// Polytopal checks for all increasing trees on <= max_n vertices.
VerificationReport verify_realization(int max_n);

// Eight-way equivalence of the starred-tree characterizations on every
// directed tree on <= max_n vertices.
VerificationReport verify_starred(int max_n);

// Semidistributivity and irreducibles of Orn(T) for every directed tree on
// <= max_n vertices.
VerificationReport verify_semidistributivity(int max_n);

VerificationReport verify_all(int max_n, std::uint64_t seed = 0);

}  // namespace ornlat
