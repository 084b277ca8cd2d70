#include "bsato/ansatz.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "bsato/linsolve.hpp"

namespace bsato {

FsExpr b_times_fs(const MPoly& f, const UniPoly& b) {
    auto xs = xs_ring_of(f.ring());
    MPoly b_xs(xs);
    for (std::size_t e = 0; e < b.coeffs().size(); ++e) {
        if (b.coeffs()[e] == 0) continue;
        Mono m(xs->size(), 0);
        m[xs->size() - 1] = static_cast<std::uint16_t>(e);
        b_xs.add_term(m, b.coeffs()[e]);
    }
    return FsExpr::power(f, 0).scaled(b_xs);
}

bool verify_certificate(const MPoly& f, const Certificate& cert) {
    const auto& R = cert.P.ring();
    if (!R || R->positions() != f.ring()->vars() || R->npar() != 1 || R->naux() != 0)
        throw std::invalid_argument("verify_certificate: ring mismatch");
    return apply_to_power(cert.P, f, 1).equals(b_times_fs(f, cert.b));
}

namespace {

std::vector<Mono> monomials_up_to(std::size_t n, int d) {
    std::vector<Mono> out;
    Mono cur(n, 0);
    // lexicographic enumeration of exponent vectors with total degree <= d
    auto rec = [&](auto&& self, std::size_t k, int rem) -> void {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[k] = static_cast<std::uint16_t>(e);
            self(self, k + 1, rem - e);
        }
        cur[k] = 0;
    };
    rec(rec, 0, d);
    return out;
}

// applied[beta] = { j -> q_j } with d^beta f^{s+1} = sum_j q_j(x,s) f^{s+1-j}
using Applied = std::map<int, MPoly>;

std::map<Mono, Applied> applied_derivatives(const MPoly& f, const PolyRingPtr& xs, int maxord) {
    std::size_t n = f.ring()->size();
    std::vector<MPoly> df;
    for (std::size_t i = 0; i < n; ++i) {
        MPoly d = f.diff(i);
        MPoly lifted(xs);
        for (const auto& [m, c] : d.terms()) {
            Mono mm = m;
            mm.push_back(0);
            lifted.add_term(mm, c);
        }
        df.push_back(std::move(lifted));
    }
    MPoly s_var = MPoly::variable(xs, n);

    std::map<Mono, Applied> out;
    Mono zero(n, 0);
    Applied base;
    base.emplace(0, MPoly(xs, Rat(1)));
    out.emplace(zero, std::move(base));

    std::vector<Mono> level{zero};
    for (int step = 0; step < maxord; ++step) {
        std::vector<Mono> next;
        for (const auto& beta : level) {
            const Applied& cur = out.at(beta);
            for (std::size_t i = 0; i < n; ++i) {
                Mono bb = beta;
                ++bb[i];
                if (out.count(bb)) continue;
                Applied res;
                for (const auto& [j, q] : cur) {
                    MPoly dq = q.diff(i);
                    if (!dq.is_zero()) {
                        auto it = res.find(j);
                        if (it == res.end())
                            res.emplace(j, dq);
                        else
                            it->second = it->second + dq;
                    }
                    // (s + 1 - j) q df_i at slot j+1
                    MPoly t = q * (s_var + MPoly(xs, Rat(1 - j))) * df[i];
                    if (!t.is_zero()) {
                        auto it = res.find(j + 1);
                        if (it == res.end())
                            res.emplace(j + 1, t);
                        else
                            it->second = it->second + t;
                    }
                }
                for (auto it = res.begin(); it != res.end();)
                    it = it->second.is_zero() ? res.erase(it) : std::next(it);
                out.emplace(bb, std::move(res));
                next.push_back(bb);
            }
        }
        level = std::move(next);
    }
    return out;
}

std::vector<bool> flip_symmetries(const MPoly& f) {
    std::size_t n = f.ring()->size();
    std::vector<bool> sym(n, true);
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] % 2 == 1) sym[i] = false;
    return sym;
}

struct ColumnKey {
    Mono coeff;  // x^a
    Mono deriv;  // d^beta
    int s_pow;
};

}  // namespace

std::optional<Certificate> search(const MPoly& f, const AnsatzBounds& bounds) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("search: f must be nonconstant");
    std::size_t n = f.ring()->size();
    auto xs = xs_ring_of(f.ring());
    int J = bounds.max_derivation_order;
    int S = bounds.max_s_degree;

    auto applied = applied_derivatives(f, xs, J);
    std::vector<MPoly> fpow;  // lifted powers of f in (x, s)
    {
        MPoly flift(xs);
        for (const auto& [m, c] : f.terms()) {
            Mono mm = m;
            mm.push_back(0);
            flift.add_term(mm, c);
        }
        MPoly acc(xs, Rat(1));
        for (int k = 0; k <= J; ++k) {
            fpow.push_back(acc);
            acc = acc * flift;
        }
    }

    auto flips = flip_symmetries(f);
    auto derivs = monomials_up_to(n, J);
    auto coeffs = monomials_up_to(n, bounds.max_coeff_degree);

    // columns: operator monomials first, then the b coefficients
    std::vector<ColumnKey> op_cols;
    std::map<Mono, MPoly> cleared_cache;  // per beta: sum_j q_j f^{J-j}
    for (const auto& beta : derivs) {
        MPoly cleared(xs);
        for (const auto& [j, q] : applied.at(beta))
            cleared = cleared + q * fpow[static_cast<std::size_t>(J - j)];
        cleared_cache.emplace(beta, std::move(cleared));
        for (const auto& a : coeffs) {
            bool keep = true;
            for (std::size_t i = 0; i < n; ++i)
                if (flips[i] && (a[i] + beta[i]) % 2 == 1) keep = false;
            if (!keep) continue;
            for (int e = 0; e <= S; ++e) op_cols.push_back({a, beta, e});
        }
    }
    long ncols = static_cast<long>(op_cols.size()) + (S + 1);
    long b_col0 = static_cast<long>(op_cols.size());

    // rows keyed by monomials of (x, s); build column-wise then transpose
    std::map<Mono, SparseVec> row_map;
    auto add_entry = [&row_map](const Mono& key, long col, const Rat& v) {
        row_map[key].emplace_back(col, v);
    };
    for (long ci = 0; ci < static_cast<long>(op_cols.size()); ++ci) {
        const auto& key = op_cols[static_cast<std::size_t>(ci)];
        const MPoly& cleared = cleared_cache.at(key.deriv);
        Mono shift = key.coeff;
        shift.push_back(static_cast<std::uint16_t>(key.s_pow));
        for (const auto& [m, c] : cleared.terms()) add_entry(mono_mul(m, shift), ci, c);
    }
    for (int e = 0; e <= S; ++e) {
        Mono shift(xs->size(), 0);
        shift[n] = static_cast<std::uint16_t>(e);
        for (const auto& [m, c] : fpow[static_cast<std::size_t>(J - 1)].terms())
            add_entry(mono_mul(m, shift), b_col0 + e, -c);
    }

    SparseMat mat;
    mat.ncols = ncols;
    mat.rows.reserve(row_map.size());
    for (auto& [key, row] : row_map) {
        std::sort(row.begin(), row.end());
        // entries for one column may repeat; merge
        SparseVec merged;
        for (auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second += v;
            else
                merged.emplace_back(c, v);
        }
        std::erase_if(merged, [](const auto& p) { return p.second == 0; });
        if (!merged.empty()) mat.rows.push_back(std::move(merged));
    }

    RrefResult rr = rref(std::move(mat));

    // rows with pivot in the b block constrain b alone
    std::vector<std::vector<Rat>> constraints;
    for (std::size_t r = 0; r < rr.rows.size(); ++r) {
        if (rr.pivot_col[r] < b_col0) continue;
        std::vector<Rat> c(static_cast<std::size_t>(S + 1), Rat(0));
        for (const auto& [col, v] : rr.rows[r]) c[static_cast<std::size_t>(col - b_col0)] = v;
        constraints.push_back(std::move(c));
    }
    // solution space for b = nullspace of the tiny constraint system
    SparseMat tiny;
    tiny.ncols = S + 1;
    for (const auto& c : constraints) {
        SparseVec row;
        for (long j = 0; j <= S; ++j)
            if (c[static_cast<std::size_t>(j)] != 0)
                row.emplace_back(j, c[static_cast<std::size_t>(j)]);
        tiny.rows.push_back(std::move(row));
    }
    auto bspace = nullspace_basis(std::move(tiny));
    if (bspace.empty()) return std::nullopt;

    // echelonize on the highest coordinate first; the minimal top index wins
    std::vector<std::vector<Rat>> es = bspace;
    std::vector<std::pair<int, std::vector<Rat>>> echelon;  // (top degree, vector)
    for (int d = S; d >= 0; --d) {
        int found = -1;
        for (std::size_t k = 0; k < es.size(); ++k) {
            bool top = es[k][static_cast<std::size_t>(d)] != 0;
            for (int dd = d + 1; dd <= S && top; ++dd)
                if (es[k][static_cast<std::size_t>(dd)] != 0) top = false;
            if (top) {
                found = static_cast<int>(k);
                break;
            }
        }
        if (found < 0) continue;
        std::vector<Rat> piv = es[static_cast<std::size_t>(found)];
        Rat inv = Rat(1) / piv[static_cast<std::size_t>(d)];
        for (auto& v : piv) v *= inv;
        for (auto& vec : es) {
            if (&vec == &es[static_cast<std::size_t>(found)]) continue;
            Rat c = vec[static_cast<std::size_t>(d)];
            if (c == 0) continue;
            for (int j = 0; j <= S; ++j)
                vec[static_cast<std::size_t>(j)] -= c * piv[static_cast<std::size_t>(j)];
        }
        es.erase(es.begin() + found);
        echelon.emplace_back(d, std::move(piv));
    }
    if (echelon.empty()) return std::nullopt;
    auto& [bdeg, bvec] = echelon.back();  // lowest top degree

    UniPoly b(std::vector<Rat>(bvec.begin(), bvec.begin() + bdeg + 1));
    b = b.monic();

    // back-substitute an operator: free columns zero, pivots forced by b
    std::vector<Rat> beta_full(static_cast<std::size_t>(S + 1), Rat(0));
    for (int j = 0; j <= bdeg; ++j) beta_full[static_cast<std::size_t>(j)] = b.coeffs()[static_cast<std::size_t>(j)];
    auto R = weyl_over(f.ring(), true);
    WeylElem P(R);
    for (std::size_t r = 0; r < rr.rows.size(); ++r) {
        long pc = rr.pivot_col[r];
        if (pc >= b_col0) continue;
        Rat val(0);
        for (const auto& [col, v] : rr.rows[r])
            if (col >= b_col0) val -= v * beta_full[static_cast<std::size_t>(col - b_col0)];
        if (val == 0) continue;
        const auto& key = op_cols[static_cast<std::size_t>(pc)];
        Mono m(R->nsym(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            m[R->pos_index(i)] = key.coeff[i];
            m[R->der_index(i)] = key.deriv[i];
        }
        m[R->par_index(0)] = static_cast<std::uint16_t>(key.s_pow);
        P.add_term(m, val);
    }
    Certificate cert{std::move(b), std::move(P)};
    if (!verify_certificate(f, cert))
        throw std::logic_error("ansatz: reconstructed certificate failed verification");
    return cert;
}

std::optional<Certificate> search_deepening(const MPoly& f, const AnsatzBounds& start,
                                            long wall_ms) {
    auto t0 = std::chrono::steady_clock::now();
    AnsatzBounds b = start;
    int turn = 0;
    for (;;) {
        if (auto cert = search(f, b)) return cert;
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (wall_ms > 0 && ms > static_cast<double>(wall_ms)) return std::nullopt;
        switch (turn % 3) {
            case 0: ++b.max_derivation_order; break;
            case 1: ++b.max_coeff_degree; break;
            default: ++b.max_s_degree; break;
        }
        ++turn;
    }
}

}  // namespace bsato
