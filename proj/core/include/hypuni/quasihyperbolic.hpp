#pragma once

#include <utility>
#include <vector>

#include "hypuni/boundary.hpp"
#include "hypuni/sampling.hpp"
#include "hypuni/uniformize.hpp"

namespace hypuni {

// Shortest-path metric for ds_eps / delta_eps. Edge weights use the
// midpoint-free harmonic rule  w_k(e) = len_eps(e) * 2 / (delta(u) + delta(v)).
class QuasihyperbolicMetric {
public:
    QuasihyperbolicMetric(const UniformizedGraph& ug, const BoundaryDistance& bd);

    double dist(VertexId u, VertexId v) const { return dist_k_[u][v]; }
    double edge_weight(int edge_index) const { return weight_[edge_index]; }

private:
    std::vector<double> weight_;
    std::vector<std::vector<double>> dist_k_;
};

// Ratio band of quasihyperbolic to graph distance over sampled pairs at
// graph distance >= 1. The asserted band is bilipschitz_factor(eps, M)^2
// times exp(eps * w_max) times the declared tolerance. The exponential term
// covers the harmonic edge rule: across one edge of length w the density can
// swing by e^{eps w}, so a single coarse edge moves the per-edge ratio that
// far even when the two-sided vertex bounds are tight.
struct BiLipschitzReport {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    std::pair<VertexId, VertexId> witness_min{-1, -1};
    std::pair<VertexId, VertexId> witness_max{-1, -1};
    double bound = 0.0;      ///< allowed max_ratio / min_ratio
    double tolerance = 0.0;  ///< multiplicative slack included in bound
    bool within_bound = false;
    long pairs_checked = 0;
};

BiLipschitzReport bilipschitz_report(const UniformizedGraph& ug, const BoundaryDistance& bd,
                                     const QuasihyperbolicMetric& k, double M,
                                     const PairSpec& pairs, double tolerance = 0.10);

}  // namespace hypuni
