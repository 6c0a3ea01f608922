#pragma once

#include "hypuni/metric_graph.hpp"

namespace hypuni {

// Rooted tree with unit edges: every vertex above the last level has
// `branching` children, leaves sit at graph distance `depth` from the
// root. Base = root, frontier = leaves.
MetricGraph gen_tree(int branching, int depth);

// Horizontal spine from x = 0 to x = n_teeth + 1 with a vertical tooth of
// length n attached at x = n. All segments are discretized every
// `resolution`, which must evenly divide 1. Base = spine origin,
// frontier = spine far end plus all tooth tips.
MetricGraph gen_comb(int n_teeth, double resolution);

// Polar discretization of a hyperbolic disk of radius R_max: a center
// vertex plus n_rings rings of n_sectors vertices. Radial edges have
// length R_max / n_rings; the edges around the ring at radius R split a
// circle of length (pi/2) (e^{2R} - e^{-2R}) evenly. Base = center,
// frontier = outer ring.
MetricGraph gen_hyperbolic_grid(double R_max, int n_rings, int n_sectors);

double hyperbolic_circle_length(double R);

}  // namespace hypuni
