#pragma once

#include <vector>

#include "zolab/graph.hpp"
#include "zolab/probseq.hpp"
#include "zolab/rng.hpp"

namespace zolab {

enum class ModelKind { Line, Circle };

// Positive-probability distances of a (seq, n, kind) triple, resolved once so
// repeated sampling does not re-evaluate the sequence.
class SamplingPlan {
public:
    SamplingPlan(const ProbSeq& seq, int n, ModelKind kind);

    int n() const noexcept { return n_; }
    ModelKind kind() const noexcept { return kind_; }
    // Edge probability of the pair {v, w} in this model.
    double pair_probability(Vertex v, Vertex w) const;

    Graph sample(const RngStream& rng) const;

private:
    struct Distance {
        int d;
        double p;
    };

    int n_;
    ModelKind kind_;
    std::vector<Distance> support_;  // ascending d, p > 0
    std::vector<double> by_distance_;
    bool dense_;
};

// Each pair {v, w} is an edge with probability p(|v - w|), independently.
Graph sample_line(const ProbSeq& seq, int n, const RngStream& rng);

// Circle distance min(|v - w|, n - |v - w|).
Graph sample_circle(const ProbSeq& seq, int n, const RngStream& rng);

// One step of the midpoint-insertion chain: G on [n] -> G' on [n+1] with
// h = floor(n/2):
//   v < w < h          keep {v, w}
//   h < v < w <= n+1   copy {v-1, w-1}
//   otherwise          resample with probability p(w - v)
Graph markov_step(const Graph& g, const ProbSeq& seq, const RngStream& rng);

}  // namespace zolab
