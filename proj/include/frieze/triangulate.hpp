#pragma once

#include <utility>
#include <vector>

#include "frieze/frieze_pattern.hpp"

namespace frieze {

/// Triangulation of the convex polygon with vertices 0..n_gon-1:
/// n_gon - 3 pairwise non-crossing diagonals.
struct Triangulation {
    int n_gon;
    std::vector<std::pair<int, int>> diagonals;  // each (u, v) with u < v, sorted

    bool operator==(const Triangulation& o) const = default;
};

/// Strict interior crossing of two chords, by index arithmetic.
bool chords_cross(std::pair<int, int> a, std::pair<int, int> b);

bool is_valid_triangulation(const Triangulation& t);

/// All triangulations of the N-gon, deterministically ordered
/// (lexicographic by diagonal set); there are Catalan(N-2) of them.
/// 3 <= N <= 14.
std::vector<Triangulation> enumerate_triangulations(int n_gon);

/// Incident-triangle count per vertex; a quiddity cycle over the positive
/// integers of length N.
QuiddityCycle quiddity_of_triangulation(const Triangulation& t);

/// Inverse of the Conway-Coxeter map, by repeated ear removal (the smallest
/// vertex whose quiddity entry is 1 goes first). Requires a Conway-Coxeter
/// frieze.
Triangulation triangulation_of_cc_frieze(const FriezePattern& f);

}  // namespace frieze
