#include "zolab/efgame.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "zolab/error.hpp"

namespace zolab {

namespace {

void require_same_vocab(const LabeledModel& m1, const LabeledModel& m2) {
    if (m1.vocab() != m2.vocab())
        throw VocabularyError("models use different vocabularies: " + std::string(to_string(m1.vocab())) + " and " +
                              std::string(to_string(m2.vocab())));
}

std::vector<Vertex> constant_picks(const LabeledModel& m) {
    if (!has_constants(m.vocab())) return {};
    return {1, m.n()};
}

void require_in_range(const LabeledModel& m, Vertex v) {
    if (v < 1 || v > m.n()) throw InvalidArgument("pick " + std::to_string(v) + " outside the model");
}

// Relations between the last pick and every pick (itself included) agree.
bool last_pick_agrees(const LabeledModel& m1, const LabeledModel& m2, const std::vector<Vertex>& p1,
                      const std::vector<Vertex>& p2) {
    const Vocabulary vocab = m1.vocab();
    const std::size_t t = p1.size() - 1;
    const Vertex a = p1[t], b = p2[t];
    for (std::size_t j = 0; j <= t; ++j) {
        const Vertex x = p1[j], y = p2[j];
        if ((a == x) != (b == y)) return false;
        if (m1.adj(a, x) != m2.adj(b, y)) return false;
        if (has_successor(vocab) && (m1.succ(a, x) != m2.succ(b, y) || m1.succ(x, a) != m2.succ(y, b)))
            return false;
        if (has_order(vocab) && (m1.le(a, x) != m2.le(b, y) || m1.le(x, a) != m2.le(y, b))) return false;
    }
    // cw is invariant under rotation, so triples with the new pick first
    // cover every triple that contains it.
    if (has_clockwise(vocab)) {
        for (std::size_t j = 0; j <= t; ++j)
            for (std::size_t l = 0; l <= t; ++l)
                if (m1.cw(a, p1[j], p1[l]) != m2.cw(b, p2[j], p2[l])) return false;
    }
    return true;
}

bool full_agreement(const LabeledModel& m1, const LabeledModel& m2, const std::vector<Vertex>& p1,
                    const std::vector<Vertex>& p2) {
    std::vector<Vertex> q1, q2;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        q1.push_back(p1[i]);
        q2.push_back(p2[i]);
        if (!last_pick_agrees(m1, m2, q1, q2)) return false;
    }
    return true;
}

void check_budget(const LabeledModel& m1, const LabeledModel& m2, int rounds, double budget) {
    const double size = std::pow(static_cast<double>(m1.n()) * m2.n(), rounds);
    if (size > budget)
        throw BudgetExceeded("game on models of sizes " + std::to_string(m1.n()) + " and " + std::to_string(m2.n()) +
                             " with " + std::to_string(rounds) + " rounds exceeds the budget");
}

Metric game_metric(Vocabulary vocab) {
    if (!has_successor(vocab)) return Metric::Plain;
    return is_circular(vocab) ? Metric::Cycle : Metric::Path;
}

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
        return boost::hash_range(key.begin(), key.end());
    }
};

class Game {
public:
    Game(const LabeledModel& m1, const LabeledModel& m2, bool restricted, bool memoize, GameStats& stats)
        : m_{&m1, &m2}, restricted_(restricted), memoize_(memoize), stats_(stats) {
        picks_[0] = constant_picks(m1);
        picks_[1] = constant_picks(m2);
        fixed_ = picks_[0].size();
        if (restricted_) {
            dist_[0].resize(static_cast<std::size_t>(m1.n()) + 1);
            dist_[1].resize(static_cast<std::size_t>(m2.n()) + 1);
        }
    }

    // Appends a pick pair; false (and nothing appended) when it breaks the
    // partial isomorphism.
    bool push(Vertex a, Vertex b) {
        picks_[0].push_back(a);
        picks_[1].push_back(b);
        if (last_pick_agrees(*m_[0], *m_[1], picks_[0], picks_[1])) return true;
        pop();
        return false;
    }
    void pop() {
        picks_[0].pop_back();
        picks_[1].pop_back();
    }

    bool wins(int rounds_left) {
        if (rounds_left == 0) return true;
        std::vector<std::uint64_t> key;
        if (memoize_) {
            key = position_key(rounds_left);
            auto it = memo_.find(key);
            if (it != memo_.end()) {
                ++stats_.memo_hits;
                return it->second;
            }
        }
        ++stats_.nodes;
        const bool result = evaluate(rounds_left);
        if (memoize_) {
            memo_.emplace(std::move(key), result);
            stats_.memo_entries = memo_.size();
        }
        return result;
    }

private:
    bool evaluate(int rounds_left) {
        const std::vector<Vertex> moves[2] = {allowed(0, rounds_left), allowed(1, rounds_left)};
        for (int side = 0; side < 2; ++side) {
            const int other = 1 - side;
            for (Vertex a : moves[side]) {
                // A repeated pick is answered by its partner and leaves the
                // same position with fewer rounds, which cannot help the
                // spoiler in the unrestricted game.
                if (memoize_ && !restricted_ && already_picked(side, a)) continue;
                bool answered = false;
                for (Vertex b : moves[other]) {
                    const Vertex x = side == 0 ? a : b, y = side == 0 ? b : a;
                    if (!push(x, y)) continue;
                    answered = wins(rounds_left - 1);
                    pop();
                    if (answered) break;
                }
                if (!answered) return false;
            }
        }
        return true;
    }

    bool already_picked(int side, Vertex v) const {
        const auto& p = picks_[side];
        return std::find(p.begin(), p.end(), v) != p.end();
    }

    std::vector<Vertex> allowed(int side, int rounds_left) {
        const LabeledModel& m = *m_[side];
        std::vector<Vertex> out;
        if (!restricted_) {
            out.resize(static_cast<std::size_t>(m.n()));
            for (Vertex v = 1; v <= m.n(); ++v) out[static_cast<std::size_t>(v - 1)] = v;
            return out;
        }
        // Move i = k - rounds_left + 1 uses radius 3^(k - i) = 3^(rounds_left - 1).
        long long radius = 1;
        for (int i = 1; i < rounds_left && radius <= m.n(); ++i) radius *= 3;
        for (Vertex w = 1; w <= m.n(); ++w) {
            for (std::size_t j = fixed_; j < picks_[side].size(); ++j) {
                const int d = distances(side, picks_[side][j])[static_cast<std::size_t>(w)];
                if (d >= 0 && d <= radius) {
                    out.push_back(w);
                    break;
                }
            }
        }
        return out;
    }

    const std::vector<int>& distances(int side, Vertex v) {
        auto& slot = dist_[side][static_cast<std::size_t>(v)];
        if (slot.empty()) slot = distances_from(m_[side]->graph(), v, game_metric(m_[side]->vocab()));
        return slot;
    }

    std::vector<std::uint64_t> position_key(int rounds_left) const {
        std::vector<std::uint64_t> key;
        for (std::size_t j = fixed_; j < picks_[0].size(); ++j)
            key.push_back(static_cast<std::uint64_t>(picks_[0][j]) << 32 | static_cast<std::uint32_t>(picks_[1][j]));
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        key.push_back(static_cast<std::uint64_t>(rounds_left));
        return key;
    }

    const LabeledModel* m_[2];
    bool restricted_;
    bool memoize_;
    GameStats& stats_;
    std::vector<Vertex> picks_[2];
    std::size_t fixed_ = 0;
    std::vector<std::vector<int>> dist_[2];
    std::unordered_map<std::vector<std::uint64_t>, bool, KeyHash> memo_;
};

bool reference_wins(const LabeledModel& m1, const LabeledModel& m2, std::vector<Vertex>& p1, std::vector<Vertex>& p2,
                    int rounds_left) {
    if (!full_agreement(m1, m2, p1, p2)) return false;
    if (rounds_left == 0) return true;
    for (int side = 0; side < 2; ++side) {
        const int ns = side == 0 ? m1.n() : m2.n();
        const int no = side == 0 ? m2.n() : m1.n();
        for (Vertex a = 1; a <= ns; ++a) {
            bool answered = false;
            for (Vertex b = 1; b <= no && !answered; ++b) {
                p1.push_back(side == 0 ? a : b);
                p2.push_back(side == 0 ? b : a);
                answered = reference_wins(m1, m2, p1, p2, rounds_left - 1);
                p1.pop_back();
                p2.pop_back();
            }
            if (!answered) return false;
        }
    }
    return true;
}

}  // namespace

bool partial_iso(const LabeledModel& m1, const LabeledModel& m2, const std::vector<Vertex>& picks1,
                 const std::vector<Vertex>& picks2) {
    require_same_vocab(m1, m2);
    if (picks1.size() != picks2.size()) throw InvalidArgument("pick lists differ in length");
    for (Vertex v : picks1) require_in_range(m1, v);
    for (Vertex v : picks2) require_in_range(m2, v);
    std::vector<Vertex> p1 = constant_picks(m1), p2 = constant_picks(m2);
    p1.insert(p1.end(), picks1.begin(), picks1.end());
    p2.insert(p2.end(), picks2.begin(), picks2.end());
    return full_agreement(m1, m2, p1, p2);
}

bool th_k_equal(const LabeledModel& m1, const LabeledModel& m2, int k, const GameOptions& options, GameStats* stats) {
    require_same_vocab(m1, m2);
    if (k < 0) throw InvalidArgument("k must be non-negative");
    check_budget(m1, m2, k, options.budget);
    GameStats local;
    Game game(m1, m2, false, options.memoize, stats ? *stats : local);
    if (!partial_iso(m1, m2, {}, {})) return false;
    return game.wins(k);
}

bool th_k_equal_reference(const LabeledModel& m1, const LabeledModel& m2, int k) {
    require_same_vocab(m1, m2);
    if (k < 0) throw InvalidArgument("k must be non-negative");
    std::vector<Vertex> p1 = constant_picks(m1), p2 = constant_picks(m2);
    return reference_wins(m1, m2, p1, p2, k);
}

bool pointed_equiv(const LabeledModel& m1, Vertex v1, const LabeledModel& m2, Vertex v2, int k,
                   const GameOptions& options, GameStats* stats) {
    require_same_vocab(m1, m2);
    if (k < 1) throw InvalidArgument("the restricted game has at least one move");
    require_in_range(m1, v1);
    require_in_range(m2, v2);
    check_budget(m1, m2, k - 1, options.budget);
    GameStats local;
    Game game(m1, m2, true, options.memoize, stats ? *stats : local);
    if (!partial_iso(m1, m2, {}, {})) return false;
    if (!game.push(v1, v2)) return false;
    return game.wins(k - 1);
}

std::optional<Graph> fact4_search(const std::vector<Graph>& candidates, const std::vector<Graph>& h_set, int k,
                                  Fact4Mode mode, std::optional<Vocabulary> vocab, const GameOptions& options,
                                  GameStats* stats) {
    if (candidates.empty()) throw InvalidArgument("fact4_search needs at least one candidate");
    Vocabulary v = Vocabulary::L;
    switch (mode) {
        case Fact4Mode::Sum:
            v = vocab.value_or(Vocabulary::L);
            if (v != Vocabulary::L) throw InvalidArgument("the sum mode uses vocabulary L");
            break;
        case Fact4Mode::ConcatBothEnds:
            v = vocab.value_or(Vocabulary::L_PLUS);
            if (v != Vocabulary::L_PLUS && v != Vocabulary::L_LE)
                throw InvalidArgument("the two-sided concatenation mode uses L_PLUS or L_LE");
            break;
        case Fact4Mode::ConcatRight:
            v = vocab.value_or(Vocabulary::LC_LE);
            if (v != Vocabulary::LC_LE) throw InvalidArgument("the right concatenation mode uses LC_LE");
            break;
    }
    for (const Graph& g : candidates) {
        const LabeledModel base(g, v);
        bool qualifies = true;
        for (const Graph& h : h_set) {
            const Graph combined = mode == Fact4Mode::Sum              ? disjoint_sum(g, h)
                                   : mode == Fact4Mode::ConcatRight    ? concat_sum(g, h)
                                                                       : concat_sum(concat_sum(g, h), g);
            if (!th_k_equal(base, LabeledModel(combined, v), k, options, stats)) {
                qualifies = false;
                break;
            }
        }
        if (qualifies) return g;
    }
    return std::nullopt;
}

}  // namespace zolab
