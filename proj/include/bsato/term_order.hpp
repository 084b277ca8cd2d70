#pragma once

#include <vector>

#include "bsato/mpoly.hpp"
#include "bsato/weyl.hpp"

namespace bsato {

/// Global (well-ordered) term order on commutative monomials over a fixed
/// symbol set: an optional non-negative weight prefix followed by blocks of
/// symbol indices, each compared degree-reverse-lexicographically. Block
/// elimination orders put the dropped symbols in a front block.
class TermOrder {
public:
    static TermOrder degrevlex(std::size_t nsym);
    /// Front block > everything else; degrevlex inside each block.
    static TermOrder block_elim(std::vector<int> front, std::size_t nsym);
    /// Weighted degree first (weights must be >= 0), degrevlex tiebreak.
    static TermOrder weighted(std::vector<long> weights);

    /// Three-way compare: negative when a < b, 0 when equal, positive when a > b.
    int cmp(const Mono& a, const Mono& b) const;
    bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }

    /// A global order is admissible for a Weyl ring when weight(x_i) +
    /// weight(d_i) >= 0 for every paired position/derivation; with
    /// non-negative weights this always holds, so this mainly guards
    /// hand-built weight vectors.
    bool admissible_for(const WeylRing& ring) const;

    const std::vector<long>& weights() const { return weights_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

private:
    std::vector<long> weights_;             // empty when unused
    std::vector<std::vector<int>> blocks_;  // partition of [0, nsym)
};

}  // namespace bsato
