#include "zolab/sampler.hpp"

#include <algorithm>

#include "zolab/error.hpp"

namespace zolab {

namespace {

int model_distance(Vertex v, Vertex w, int n, ModelKind kind) {
    int d = v < w ? w - v : v - w;
    return kind == ModelKind::Circle ? std::min(d, n - d) : d;
}

}  // namespace

SamplingPlan::SamplingPlan(const ProbSeq& seq, int n, ModelKind kind) : n_(n), kind_(kind) {
    if (n < 1) throw InvalidArgument("n must be at least 1");
    const int max_d = kind == ModelKind::Line ? n - 1 : n / 2;
    by_distance_.assign(static_cast<std::size_t>(max_d) + 1, 0.0);
    if (max_d >= 1)
        for (Index d : support_upto(seq, max_d)) {
            double p = seq(d);
            support_.push_back({static_cast<int>(d), p});
            by_distance_[static_cast<std::size_t>(d)] = p;
        }
    dense_ = 2 * support_.size() > static_cast<std::size_t>(max_d);
}

double SamplingPlan::pair_probability(Vertex v, Vertex w) const {
    if (v == w) return 0.0;
    return by_distance_[static_cast<std::size_t>(model_distance(v, w, n_, kind_))];
}

Graph SamplingPlan::sample(const RngStream& rng) const {
    EdgeList edges;
    auto trial = [&](Vertex v, Vertex w, double p) {
        if (v > w) std::swap(v, w);
        if (rng.pair_uniform(static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(w)) < p)
            edges.emplace_back(v, w);
    };
    if (dense_) {
        for (Vertex v = 1; v <= n_; ++v)
            for (Vertex w = v + 1; w <= n_; ++w) {
                double p = pair_probability(v, w);
                if (p > 0.0) trial(v, w, p);
            }
    } else if (kind_ == ModelKind::Line) {
        for (auto [d, p] : support_)
            for (Vertex v = 1; v + d <= n_; ++v) trial(v, v + d, p);
    } else {
        for (auto [d, p] : support_) {
            // Pairs at circle distance d: {v, v+d} plus the wrapped {v, v+n-d};
            // when 2d = n these coincide and are visited once.
            for (Vertex v = 1; v + d <= n_; ++v) trial(v, v + d, p);
            if (2 * d != n_)
                for (Vertex v = 1; v + (n_ - d) <= n_; ++v) trial(v, v + n_ - d, p);
        }
    }
    return Graph(n_, std::move(edges));
}

Graph sample_line(const ProbSeq& seq, int n, const RngStream& rng) {
    return SamplingPlan(seq, n, ModelKind::Line).sample(rng);
}

Graph sample_circle(const ProbSeq& seq, int n, const RngStream& rng) {
    return SamplingPlan(seq, n, ModelKind::Circle).sample(rng);
}

Graph markov_step(const Graph& g, const ProbSeq& seq, const RngStream& rng) {
    const int n = g.n();
    if (n < 2) throw InvalidArgument("markov_step needs at least two vertices");
    const int h = n / 2;
    EdgeList edges;
    for (auto [v, w] : g.edges()) {
        if (w < h) edges.emplace_back(v, w);
        else if (v >= h) edges.emplace_back(v + 1, w + 1);
    }
    for (Vertex v = 1; v <= h; ++v)
        for (Vertex w = std::max(h, v + 1); w <= n + 1; ++w) {
            double p = seq(w - v);
            if (p > 0.0 && rng.pair_uniform(static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(w)) < p)
                edges.emplace_back(v, w);
        }
    return Graph(n + 1, std::move(edges));
}

}  // namespace zolab
