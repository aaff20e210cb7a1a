// Chain decomposition of the task graph. Schedulers only ever need to
// look at the least unfinished element of each chain, so the per-chain
// cursor below is the whole dispatch frontier.
#pragma once

#include "tgsched/taskgraph.hpp"

#include <vector>

namespace tgsched {

struct ChainDecomposition {
    std::vector<std::vector<int>> chains; // each chain listed in dependency order
    std::vector<int> chain_of;            // task id -> chain index
    std::vector<int> pos_in_chain;        // task id -> position within its chain

    int chain_count() const { return static_cast<int>(chains.size()); }
};

// Greedy chain cover: topologically sort, then repeatedly grow a chain
// from the first unplaced node, always stepping to the unplaced successor
// with the fewest outstanding predecessors (ties to the smallest id).
// Quadratic in the number of tasks; the result need not be a minimum
// cover, which loses nothing for scheduling.
ChainDecomposition chain_cover(const TaskGraph& graph);

// Per-chain position of the next unscheduled element. Small value type,
// copied freely per search node.
class ChainCursor {
public:
    ChainCursor() = default;
    explicit ChainCursor(const ChainDecomposition& dec)
        : dec_(&dec), index_(dec.chains.size(), 0) {}

    const ChainDecomposition& decomposition() const { return *dec_; }
    const std::vector<int>& indices() const { return index_; }

    // Next unscheduled task of chain c, or -1 when the chain is exhausted.
    int head(int c) const {
        const auto& chain = dec_->chains[static_cast<size_t>(c)];
        int i = index_[static_cast<size_t>(c)];
        return i < static_cast<int>(chain.size()) ? chain[static_cast<size_t>(i)] : -1;
    }

    // Current least element of every non-exhausted chain, in chain order.
    std::vector<int> least_elements() const;

    bool exhausted() const;
    bool is_least_element(int task) const;

    // True for every task the cursor has already stepped past.
    bool passed(int task) const {
        return dec_->pos_in_chain[static_cast<size_t>(task)] <
               index_[static_cast<size_t>(dec_->chain_of[static_cast<size_t>(task)])];
    }

    // Throws std::invalid_argument("not-least-element: ...") if the task is
    // not at the head of its chain.
    ChainCursor advanced(int task) const;
    void advance_in_place(int task);

    bool operator==(const ChainCursor& other) const { return index_ == other.index_; }

private:
    const ChainDecomposition* dec_ = nullptr;
    std::vector<int> index_;
};

} // namespace tgsched
