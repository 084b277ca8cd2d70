#include "bsato/bfunction.hpp"

#include <algorithm>

#include "bsato/fs_expr.hpp"

namespace bsato {

std::string ExtRat::to_string() const { return infinite ? "inf" : rat_to_string(value); }

BFunction BFunction::from_poly(const UniPoly& p) {
    BFunction b;
    b.poly = p.monic();
    auto ext = rational_roots(b.poly);
    b.roots = std::move(ext.roots);
    b.residual = std::move(ext.residual);
    return b;
}

Rat BFunction::largest_root() const {
    if (roots.empty()) throw internal_inconsistency("b-function has no rational roots");
    return roots.front().first;
}

bool BFunction::has_root(const Rat& r) const {
    for (const auto& [root, mult] : roots)
        if (root == r) return true;
    return false;
}

BFunction BFunction::divided_by_root(const Rat& r) const {
    if (!has_root(r))
        throw internal_inconsistency("expected root " + rat_to_string(r) + " of " +
                                     poly.to_string());
    return from_poly(poly.div_exact(UniPoly::linear_shift(-r)));
}

namespace {

// (-1)^i (s+1)(s+2)...(s+i) as a UniPoly
UniPoly balanced_substitution(unsigned i) {
    UniPoly p = UniPoly::constant(Rat(1));
    for (unsigned k = 1; k <= i; ++k) p = p * UniPoly::linear_shift(Rat(static_cast<long>(k)));
    if (i % 2 == 1) p = p * Rat(-1);
    return p;
}

}  // namespace

DIdeal ann_fs(const MPoly& f, const Budget& budget, BudgetUse* use) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("ann_fs: f must be nonconstant");
    const auto& xring = f.ring();
    std::size_t n = xring->size();

    // graph ring: positions (x.., t), derivations (dx.., dt), auxiliaries u, v
    std::vector<std::string> pos = xring->vars();
    pos.push_back("@t");
    std::vector<std::string> der;
    for (const auto& v : xring->vars()) der.push_back("d" + v);
    der.push_back("@dt");
    auto W = make_weyl_ring(pos, der, {"@u", "@v"}, {});
    std::size_t T = W->pos_index(n), DT = W->der_index(n);
    std::size_t U = W->aux_index(0), V = W->aux_index(1);

    auto embed = [&](const MPoly& p, std::initializer_list<std::pair<std::size_t, int>> extra) {
        WeylElem e(W);
        for (const auto& [m, c] : p.terms()) {
            Mono mm(W->nsym(), 0);
            for (std::size_t i = 0; i < n; ++i) mm[W->pos_index(i)] = m[i];
            for (const auto& [sym, pow] : extra)
                mm[sym] = static_cast<std::uint16_t>(mm[sym] + pow);
            e.add_term(mm, c);
        }
        return e;
    };

    DIdeal graph;
    graph.ring = W;
    graph.gens.push_back(WeylElem::symbol(W, T) - embed(f, {{U, 1}}));
    {
        Mono uv(W->nsym(), 0);
        uv[U] = 1;
        uv[V] = 1;
        graph.gens.push_back(WeylElem::monomial(W, uv, Rat(1)) - WeylElem(W, Rat(1)));
    }
    for (std::size_t i = 0; i < n; ++i)
        graph.gens.push_back(WeylElem::symbol(W, W->der_index(i)) +
                             embed(f.diff(i), {{U, 1}, {DT, 1}}));

    auto kept = eliminate(graph, {"@u", "@v"}, budget, use);

    // weight-normalize in (t, dt) and substitute s = -dt t
    auto out_ring = weyl_over(xring, true);
    std::size_t S = out_ring->par_index(0);
    DIdeal ann;
    ann.ring = out_ring;

    for (const auto& g : kept) {
        long w = 0;
        bool first = true;
        for (const auto& [m, c] : g.terms()) {
            long tw = static_cast<long>(m[T]) - static_cast<long>(m[DT]);
            if (first) {
                w = tw;
                first = false;
            } else if (tw != w) {
                throw internal_inconsistency("annihilator element is not weight homogeneous");
            }
        }
        WeylElem balanced(W);
        if (w > 0) {
            // g = t^w * T0; strip the left factor monomial-wise
            for (const auto& [m, c] : g.terms()) {
                Mono mm = m;
                mm[T] = static_cast<std::uint16_t>(mm[T] - w);
                balanced.add_term(mm, c);
            }
        } else if (w < 0) {
            // solve dt^{|w|} * T0 = g by triangular elimination on the t-degree
            unsigned mu = static_cast<unsigned>(-w);
            Mono dt_mu(W->nsym(), 0);
            dt_mu[DT] = static_cast<std::uint16_t>(mu);
            WeylElem dt_pow = WeylElem::monomial(W, dt_mu, Rat(1));
            WeylElem rem = g;
            while (!rem.is_zero()) {
                // largest remaining term by t-exponent, then map order
                auto best = rem.terms().begin();
                for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
                    if (it->first[T] > best->first[T]) best = it;
                const Mono& m = best->first;
                if (m[DT] < mu || m[DT] - mu != m[T])
                    throw internal_inconsistency("weight-strip failed on annihilator element");
                Mono tau = m;
                tau[DT] = static_cast<std::uint16_t>(m[T]);
                WeylElem tau_e = WeylElem::monomial(W, tau, best->second);
                balanced = balanced + tau_e;
                rem = rem - weyl_mul(dt_pow, tau_e);
            }
        } else {
            balanced = g;
        }
        // substitute t^i dt^i -> (-1)^i (s+1)...(s+i)
        WeylElem res(out_ring);
        for (const auto& [m, c] : balanced.terms()) {
            unsigned i = m[T];
            if (m[DT] != i) throw internal_inconsistency("unbalanced term after weight strip");
            UniPoly sub = balanced_substitution(i);
            for (std::size_t e = 0; e < sub.coeffs().size(); ++e) {
                if (sub.coeffs()[e] == 0) continue;
                Mono mm(out_ring->nsym(), 0);
                for (std::size_t k = 0; k < n; ++k) {
                    mm[out_ring->pos_index(k)] = m[W->pos_index(k)];
                    mm[out_ring->der_index(k)] = m[W->der_index(k)];
                }
                mm[S] = static_cast<std::uint16_t>(e);
                res.add_term(mm, c * sub.coeffs()[e]);
            }
        }
        if (!res.is_zero()) ann.gens.push_back(res);
    }

    // exact check: every generator annihilates f^s
    for (const auto& g : ann.gens)
        if (!apply_to_power(g, f, 0).is_zero())
            throw internal_inconsistency("annihilator generator does not kill f^s");
    return ann;
}

namespace {

struct Stage2 {
    DIdeal ideal;                // Ann f^s + D[s] f
    std::vector<std::string> drop;  // all x_i, d_i
};

Stage2 stage2_ideal(const MPoly& f, const DIdeal& ann) {
    Stage2 s2;
    s2.ideal.ring = ann.ring;
    s2.ideal.gens = ann.gens;
    s2.ideal.gens.push_back(lift_poly(f, ann.ring));
    const auto& R = *ann.ring;
    for (std::size_t i = 0; i < R.npos(); ++i) {
        s2.drop.push_back(R.positions()[i]);
        s2.drop.push_back(R.derivations()[i]);
    }
    return s2;
}

UniPoly to_unipoly(const WeylElem& e, std::size_t s_index) {
    std::vector<Rat> coeffs;
    for (const auto& [m, c] : e.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != s_index && m[i] != 0)
                throw internal_inconsistency("expected a pure s-polynomial");
        std::size_t deg = m[s_index];
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
        coeffs[deg] = c;
    }
    return UniPoly(std::move(coeffs));
}

BFunction validate_bpoly(const UniPoly& bp) {
    BFunction b = BFunction::from_poly(bp);
    if (!b.residual.is_one())
        throw internal_inconsistency("b-function has a non-rational factor: " +
                                     b.residual.to_string());
    for (const auto& [r, mult] : b.roots)
        if (r >= 0) throw internal_inconsistency("b-function has a non-negative root");
    if (!b.has_root(Rat(-1)))
        throw internal_inconsistency("b-function is not divisible by (s+1)");
    return b;
}

}  // namespace

BFunction bfunction(const MPoly& f, const Budget& budget, BudgetUse* use) {
    BudgetUse local{};
    DIdeal ann = ann_fs(f, budget, &local);
    Stage2 s2 = stage2_ideal(f, ann);
    BudgetUse stage2_use{};
    auto sonly = eliminate(s2.ideal, s2.drop, budget, &stage2_use);
    local.pairs += stage2_use.pairs;
    local.max_degree = std::max(local.max_degree, stage2_use.max_degree);
    if (use) *use = local;
    if (sonly.size() != 1)
        throw internal_inconsistency("expected a single Q[s] generator, got " +
                                     std::to_string(sonly.size()));
    std::size_t S = ann.ring->par_index(0);
    return validate_bpoly(to_unipoly(sonly.front(), S));
}

CertifiedBFunction bfunction_certified(const MPoly& f, const Budget& budget, BudgetUse* use) {
    DIdeal ann = ann_fs(f, budget, use);
    Stage2 s2 = stage2_ideal(f, ann);
    const auto& R = *ann.ring;
    std::vector<int> front;
    for (std::size_t i = 0; i < R.npos(); ++i) {
        front.push_back(static_cast<int>(R.pos_index(i)));
        front.push_back(static_cast<int>(R.der_index(i)));
    }
    std::sort(front.begin(), front.end());
    TermOrder ord = TermOrder::block_elim(front, R.nsym());
    TrackedBasis tb = buchberger_tracked(s2.ideal, ord, budget);

    std::vector<WeylElem> sonly;
    for (const auto& g : tb.basis) {
        bool free = true;
        for (const auto& [m, c] : g.terms())
            for (int idx : front)
                if (m[static_cast<std::size_t>(idx)] != 0) free = false;
        if (free) sonly.push_back(g);
    }
    if (sonly.size() != 1)
        throw internal_inconsistency("expected a single Q[s] generator, got " +
                                     std::to_string(sonly.size()));
    std::size_t S = R.par_index(0);
    BFunction b = validate_bpoly(to_unipoly(sonly.front(), S));

    // re-derive P with P f^{s+1} = b(s) f^s: divide b against the tracked
    // basis; the coordinate of the generator f collects P.
    WeylElem b_elem(ann.ring);
    for (std::size_t e = 0; e < b.poly.coeffs().size(); ++e) {
        if (b.poly.coeffs()[e] == 0) continue;
        Mono m(R.nsym(), 0);
        m[S] = static_cast<std::uint16_t>(e);
        b_elem.add_term(m, b.poly.coeffs()[e]);
    }
    TrackedNF nf = reduce_tracked(b_elem, tb.basis, ord);
    if (!nf.nf.is_zero())
        throw internal_inconsistency("b-function does not reduce to zero against its basis");
    std::size_t f_index = s2.ideal.gens.size() - 1;
    WeylElem P(ann.ring);
    for (std::size_t k = 0; k < tb.basis.size(); ++k) {
        if (nf.quotients[k].is_zero()) continue;
        P = P + weyl_mul(nf.quotients[k], tb.rep[k][f_index]);
    }
    // exact verification
    FsExpr lhs = apply_to_power(P, f, 1);
    auto xs = xs_ring_of(f.ring());
    MPoly b_xs(xs);
    for (std::size_t e = 0; e < b.poly.coeffs().size(); ++e) {
        if (b.poly.coeffs()[e] == 0) continue;
        Mono m(xs->size(), 0);
        m[xs->size() - 1] = static_cast<std::uint16_t>(e);
        b_xs.add_term(m, b.poly.coeffs()[e]);
    }
    FsExpr rhs = FsExpr::power(f, 0).scaled(b_xs);
    if (!lhs.equals(rhs))
        throw internal_inconsistency("certificate verification failed for the b-function");
    return CertifiedBFunction{std::move(b), std::move(P)};
}

BFunction reduce_by_s_plus_1(const BFunction& b) { return b.divided_by_root(Rat(-1)); }

BFunction reduced_bfunction(const MPoly& f, const Budget& budget, BudgetUse* use) {
    return reduce_by_s_plus_1(bfunction(f, budget, use));
}

ExtRat min_exponent_of(const BFunction& b) {
    BFunction reduced = reduce_by_s_plus_1(b);
    if (reduced.is_one()) return ExtRat::inf();
    return ExtRat::finite(-reduced.largest_root());
}

ExtRat min_exponent_hyp(const MPoly& f, const Budget& budget, BudgetUse* use) {
    return min_exponent_of(bfunction(f, budget, use));
}

Rat lct_hyp(const MPoly& f, const Budget& budget, BudgetUse* use) {
    ExtRat a = min_exponent_hyp(f, budget, use);
    ExtRat one = ExtRat::finite(Rat(1));
    return min(a, one).value;
}

}  // namespace bsato
