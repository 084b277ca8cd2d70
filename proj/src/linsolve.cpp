#include "bsato/linsolve.hpp"

#include <algorithm>
#include <map>

namespace bsato {

namespace {

// dst += c * src, sparse merge
SparseVec axpy(const SparseVec& dst, const Rat& c, const SparseVec& src) {
    SparseVec out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() && j < src.size()) {
        if (dst[i].first < src[j].first) {
            out.push_back(dst[i++]);
        } else if (dst[i].first > src[j].first) {
            Rat v = c * src[j].second;
            if (v != 0) out.emplace_back(src[j].first, std::move(v));
            ++j;
        } else {
            Rat v = dst[i].second + c * src[j].second;
            if (v != 0) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < dst.size(); ++i) out.push_back(dst[i]);
    for (; j < src.size(); ++j) {
        Rat v = c * src[j].second;
        if (v != 0) out.emplace_back(src[j].first, std::move(v));
    }
    return out;
}

void normalize(SparseVec& row) {
    if (row.empty()) return;
    Rat inv = Rat(1) / row.front().second;
    if (inv == 1) return;
    for (auto& [c, v] : row) v *= inv;
}

const Rat* find_col(const SparseVec& row, long col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& p, long c) { return p.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

RrefResult finish(std::vector<SparseVec> pivots, std::vector<long> pivot_col, long ncols) {
    // backward pass: clear later pivot columns out of earlier rows
    for (std::size_t r = pivots.size(); r-- > 0;) {
        for (std::size_t k = r + 1; k < pivots.size(); ++k) {
            if (const Rat* v = find_col(pivots[r], pivot_col[k]))
                pivots[r] = axpy(pivots[r], -*v, pivots[k]);
        }
    }
    RrefResult res;
    res.rows = std::move(pivots);
    res.pivot_col = std::move(pivot_col);
    res.pivot_row_of_col.assign(static_cast<std::size_t>(ncols), -1);
    for (std::size_t r = 0; r < res.pivot_col.size(); ++r)
        res.pivot_row_of_col[static_cast<std::size_t>(res.pivot_col[r])] =
            static_cast<long>(r);
    res.rank = static_cast<long>(res.rows.size());
    return res;
}

}  // namespace

RrefResult rref(SparseMat m) {
    // bucket active rows by leading column
    std::map<long, std::vector<std::size_t>> buckets;
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        if (!m.rows[r].empty()) buckets[m.rows[r].front().first].push_back(r);

    std::vector<SparseVec> pivots;
    std::vector<long> pivot_col;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        long col = it->first;
        std::vector<std::size_t> rows = std::move(it->second);
        buckets.erase(it);
        // deterministic pivot: sparsest row, lowest index on ties
        std::size_t piv = rows.front();
        for (std::size_t r : rows)
            if (m.rows[r].size() < m.rows[piv].size() ||
                (m.rows[r].size() == m.rows[piv].size() && r < piv))
                piv = r;
        SparseVec prow = std::move(m.rows[piv]);
        normalize(prow);

        std::vector<std::size_t> rest;
        rest.reserve(rows.size() - 1);
        for (std::size_t r : rows)
            if (r != piv) rest.push_back(r);

#pragma omp parallel for schedule(dynamic, 8)
        for (long k = 0; k < static_cast<long>(rest.size()); ++k) {
            std::size_t r = rest[static_cast<std::size_t>(k)];
            const Rat& lead = m.rows[r].front().second;
            m.rows[r] = axpy(m.rows[r], -lead, prow);
        }
        for (std::size_t r : rest)
            if (!m.rows[r].empty()) buckets[m.rows[r].front().first].push_back(r);

        pivots.push_back(std::move(prow));
        pivot_col.push_back(col);
    }
    return finish(std::move(pivots), std::move(pivot_col), m.ncols);
}

RrefResult rref_serial(SparseMat m) {
    std::vector<SparseVec> pivots;
    std::vector<long> pivot_col;
    std::vector<bool> used(m.rows.size(), false);
    for (long col = 0; col < m.ncols; ++col) {
        // sparsest unused row with leading entry at col, lowest index on ties
        long piv = -1;
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            if (used[r] || m.rows[r].empty() || m.rows[r].front().first != col) continue;
            if (piv < 0 || m.rows[r].size() < m.rows[static_cast<std::size_t>(piv)].size())
                piv = static_cast<long>(r);
        }
        if (piv < 0) continue;
        used[static_cast<std::size_t>(piv)] = true;
        SparseVec prow = std::move(m.rows[static_cast<std::size_t>(piv)]);
        normalize(prow);
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            if (used[r] || m.rows[r].empty()) continue;
            if (m.rows[r].front().first == col)
                m.rows[r] = axpy(m.rows[r], -m.rows[r].front().second, prow);
        }
        pivots.push_back(std::move(prow));
        pivot_col.push_back(col);
    }
    return finish(std::move(pivots), std::move(pivot_col), m.ncols);
}

std::vector<std::vector<Rat>> nullspace_basis(SparseMat m) {
    long n = m.ncols;
    RrefResult r = rref(std::move(m));
    std::vector<std::vector<Rat>> basis;
    for (long col = 0; col < n; ++col) {
        if (r.pivot_row_of_col[static_cast<std::size_t>(col)] >= 0) continue;
        std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
        v[static_cast<std::size_t>(col)] = 1;
        for (std::size_t row = 0; row < r.rows.size(); ++row) {
            if (const Rat* x = find_col(r.rows[row], col))
                v[static_cast<std::size_t>(r.pivot_col[row])] = -*x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace bsato
