#include "tgsched/chains.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace tgsched {

ChainDecomposition chain_cover(const TaskGraph& graph) {
    const int n = graph.size();
    std::vector<int> pred_count(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        pred_count[static_cast<size_t>(i)] = static_cast<int>(graph.predecessors(i).size());

    std::vector<bool> placed(static_cast<size_t>(n), false);
    ChainDecomposition dec;
    dec.chain_of.assign(static_cast<size_t>(n), -1);
    dec.pos_in_chain.assign(static_cast<size_t>(n), -1);

    // Visit: place the node, decrement each successor's outstanding
    // predecessor count, then follow the unplaced successor with the
    // smallest count (smallest id on ties) until the chain dead-ends.
    for (int start : graph.topological_order()) {
        if (placed[static_cast<size_t>(start)])
            continue;
        std::vector<int> chain;
        int node = start;
        while (node != -1) {
            placed[static_cast<size_t>(node)] = true;
            chain.push_back(node);
            int next = -1;
            int best = std::numeric_limits<int>::max();
            for (int s : graph.successors(node)) {
                --pred_count[static_cast<size_t>(s)];
                if (!placed[static_cast<size_t>(s)] &&
                    (pred_count[static_cast<size_t>(s)] < best ||
                     (pred_count[static_cast<size_t>(s)] == best && s < next))) {
                    best = pred_count[static_cast<size_t>(s)];
                    next = s;
                }
            }
            node = next;
        }
        const int c = dec.chain_count();
        for (size_t i = 0; i < chain.size(); ++i) {
            dec.chain_of[static_cast<size_t>(chain[i])] = c;
            dec.pos_in_chain[static_cast<size_t>(chain[i])] = static_cast<int>(i);
        }
        dec.chains.push_back(std::move(chain));
    }
    return dec;
}

std::vector<int> ChainCursor::least_elements() const {
    std::vector<int> out;
    out.reserve(index_.size());
    for (int c = 0; c < static_cast<int>(index_.size()); ++c) {
        int h = head(c);
        if (h != -1)
            out.push_back(h);
    }
    return out;
}

bool ChainCursor::exhausted() const {
    for (int c = 0; c < static_cast<int>(index_.size()); ++c)
        if (head(c) != -1)
            return false;
    return true;
}

bool ChainCursor::is_least_element(int task) const {
    return head(dec_->chain_of[static_cast<size_t>(task)]) == task;
}

ChainCursor ChainCursor::advanced(int task) const {
    ChainCursor next = *this;
    next.advance_in_place(task);
    return next;
}

void ChainCursor::advance_in_place(int task) {
    int c = dec_->chain_of[static_cast<size_t>(task)];
    if (head(c) != task)
        throw std::invalid_argument("not-least-element: task " + std::to_string(task) +
                                    " is not at the head of its chain");
    ++index_[static_cast<size_t>(c)];
}

} // namespace tgsched
