#include "bsato/term_order.hpp"

#include <numeric>
#include <stdexcept>

namespace bsato {

TermOrder TermOrder::degrevlex(std::size_t nsym) {
    TermOrder o;
    std::vector<int> all(nsym);
    std::iota(all.begin(), all.end(), 0);
    o.blocks_.push_back(std::move(all));
    return o;
}

TermOrder TermOrder::block_elim(std::vector<int> front, std::size_t nsym) {
    TermOrder o;
    std::vector<bool> in_front(nsym, false);
    for (int i : front) {
        if (i < 0 || static_cast<std::size_t>(i) >= nsym)
            throw std::invalid_argument("block_elim: symbol index out of range");
        in_front[static_cast<std::size_t>(i)] = true;
    }
    std::vector<int> back;
    for (std::size_t i = 0; i < nsym; ++i)
        if (!in_front[i]) back.push_back(static_cast<int>(i));
    if (!front.empty()) o.blocks_.push_back(std::move(front));
    if (!back.empty()) o.blocks_.push_back(std::move(back));
    return o;
}

TermOrder TermOrder::weighted(std::vector<long> weights) {
    for (long w : weights)
        if (w < 0) throw std::invalid_argument("weighted order requires non-negative weights");
    TermOrder o = degrevlex(weights.size());
    o.weights_ = std::move(weights);
    return o;
}

int TermOrder::cmp(const Mono& a, const Mono& b) const {
    if (!weights_.empty()) {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            wa += weights_[i] * a[i];
            wb += weights_[i] * b[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
    }
    for (const auto& blk : blocks_) {
        long da = 0, db = 0;
        for (int i : blk) {
            da += a[static_cast<std::size_t>(i)];
            db += b[static_cast<std::size_t>(i)];
        }
        if (da != db) return da < db ? -1 : 1;
        // degrevlex: last differing exponent in the block, smaller wins
        for (auto it = blk.rbegin(); it != blk.rend(); ++it) {
            std::uint16_t ea = a[static_cast<std::size_t>(*it)];
            std::uint16_t eb = b[static_cast<std::size_t>(*it)];
            if (ea != eb) return ea > eb ? -1 : 1;
        }
    }
    return 0;
}

bool TermOrder::admissible_for(const WeylRing& ring) const {
    if (weights_.empty()) return true;
    for (std::size_t i = 0; i < ring.npos(); ++i)
        if (weights_[ring.pos_index(i)] + weights_[ring.der_index(i)] < 0) return false;
    return true;
}

}  // namespace bsato
