#pragma once

#include <cstdint>
#include <random>

#include "cubering/cubical.hpp"
#include "cubering/picture.hpp"

namespace cubering::shapes {

/// Solid a x b x c block.
Picture3D box(int a, int b, int c);
/// n x n x n block without its central voxel (n odd).
Picture3D box_minus_center(int n);
/// 3 x 3 x 1 slab without its central voxel.
Picture3D solid_torus();

/// Square ring of side 7, one voxel thick. Ring i starts at x = 4i; even
/// rings lie in the plane z = 3, odd rings in the plane y = 3, so
/// consecutive rings pass once through each other.
void draw_ring(Picture3D& p, int i, int x_offset);
/// Two rings passing once through each other.
Picture3D linked_rings();
/// The same two rings moved apart.
Picture3D unlinked_rings();
/// n rings, each linked with the next one.
Picture3D ring_chain(int n);

/// Random foreground in an n x n x n box with the given fill probability.
Picture3D random_picture(std::mt19937_64& rng, int n, double fill);

/// Abstract hollow torus: 3 x 3 grid with opposite sides glued. Vertex labels
/// v0..v8 are (0,0),(1,0),(2,0),(0,1),(0,2),(1,1),(2,1),(1,2),(2,2); the
/// square (v0,v2,v4,v8) is added last.
AbstractCubicalComplex abstract_torus();

/// Random 2-complex made of squares of an m x n grid (glued into a torus
/// when `wrap`), with randomized edge and square insertion order. Uses at
/// least `min_squares` and at most `max_squares` squares and keeps vertices
/// in lexicographic order, so P1 holds.
AbstractCubicalComplex random_grid_complex(std::mt19937_64& rng, int m, int n, bool wrap, std::size_t max_squares,
                                           std::size_t min_squares = 1);

/// Surface of an a x b x c box as an abstract 2-complex (lexicographic
/// vertex order), with a random subset of its squares removed.
AbstractCubicalComplex random_box_surface(std::mt19937_64& rng, int a, int b, int c, double keep);

}  // namespace cubering::shapes
