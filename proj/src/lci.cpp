#include "bsato/lci.hpp"

#include <algorithm>
#include <sstream>

namespace bsato {

void validate_shape(const LciScheme& L) {
    if (!L.ring) throw std::invalid_argument("scheme has no ambient ring");
    if (L.gens.empty() || L.gens.size() > L.ring->size())
        throw std::invalid_argument("need 1 <= r <= n generators");
    for (const auto& f : L.gens) {
        if (f.is_zero() || f.is_constant())
            throw std::invalid_argument("generators must be nonzero and nonconstant");
        if (!(*f.ring() == *L.ring))
            throw std::invalid_argument("generator ring does not match the scheme ring");
    }
}

bool validate_codim(const LciScheme& L, const Budget& budget) {
    validate_shape(L);
    return codim_check(L.gens, static_cast<int>(L.r()), budget);
}

namespace {

// lift p into a larger ring whose first vars coincide with p's ring
MPoly lift_front(const MPoly& p, const PolyRingPtr& big) {
    MPoly out(big);
    for (const auto& [m, c] : p.terms()) {
        Mono mm(big->size(), 0);
        std::copy(m.begin(), m.end(), mm.begin());
        out.add_term(mm, c);
    }
    return out;
}

}  // namespace

MPoly build_g(const LciScheme& L) {
    validate_shape(L);
    std::vector<std::string> vars = L.ring->vars();
    for (std::size_t i = 1; i <= L.r(); ++i) vars.push_back("@y" + std::to_string(i));
    auto big = make_ring(std::move(vars));
    MPoly g(big);
    for (std::size_t i = 0; i < L.r(); ++i) {
        MPoly yi = MPoly::variable(big, L.n() + i);
        g = g + lift_front(L.gens[i], big) * yi;
    }
    return g;
}

std::vector<MPoly> chart_polys(const LciScheme& L) {
    validate_shape(L);
    std::size_t r = L.r();
    std::vector<std::string> vars = L.ring->vars();
    for (std::size_t j = 1; j + 1 <= r; ++j) vars.push_back("@w" + std::to_string(j));
    auto big = make_ring(std::move(vars));
    std::vector<MPoly> charts;
    for (std::size_t i = 0; i < r; ++i) {
        MPoly h = lift_front(L.gens[i], big);
        std::size_t w = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (j == i) continue;
            MPoly wj = MPoly::variable(big, L.n() + w);
            ++w;
            h = h + lift_front(L.gens[j], big) * wj;
        }
        charts.push_back(std::move(h));
    }
    return charts;
}

std::vector<ExtRat> chart_exponents(const LciScheme& L, const Budget& budget) {
    auto charts = chart_polys(L);
    std::vector<std::optional<ExtRat>> results(charts.size());
    std::vector<std::exception_ptr> errors(charts.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(charts.size()); ++i) {
        try {
            results[static_cast<std::size_t>(i)] =
                min_exponent_hyp(charts[static_cast<std::size_t>(i)], budget);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (std::size_t i = 0; i < charts.size(); ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    std::vector<ExtRat> out;
    out.reserve(results.size());
    for (auto& r : results) out.push_back(*r);
    return out;
}

ExtRat min_exponent(const LciScheme& L, const Budget& budget) {
    auto exps = chart_exponents(L, budget);
    ExtRat m = ExtRat::inf();
    for (const auto& e : exps) m = min(m, e);
    return m;
}

BFunction bernstein_sato(const LciScheme& L, const Budget& budget) {
    BFunction bg = bfunction(build_g(L), budget);
    return reduce_by_s_plus_1(bg);
}

Rat lct(const LciScheme& L, const Budget& budget) {
    ExtRat alpha = min_exponent(L, budget);
    Rat cap = Rat(static_cast<long>(L.r()));
    Rat via_alpha = min(alpha, ExtRat::finite(cap)).value;
    BFunction bz = bernstein_sato(L, budget);
    Rat via_root = -bz.largest_root();
    if (via_alpha != via_root)
        throw internal_inconsistency("lct mismatch: min{alpha,r} = " + rat_to_string(via_alpha) +
                                     " but -max root b_Z = " + rat_to_string(via_root));
    return via_alpha;
}

ExtRat gamma_tilde(const LciScheme& L, const Budget& budget) {
    BFunction bz = bernstein_sato(L, budget);
    Rat minus_r = Rat(-static_cast<long>(L.r()));
    if (bz.poly.eval(minus_r) != 0)
        throw internal_inconsistency("b_Z(-r) != 0");
    BFunction q = bz.divided_by_root(minus_r);
    if (q.is_one()) return ExtRat::inf();
    return ExtRat::finite(-q.largest_root());
}

HodgeLevel hodge_level_of(const ExtRat& alpha, long r) {
    if (alpha.infinite) return HodgeLevel{true, 0};
    long fl = static_cast<long>(rat_floor(alpha.value).get_si());
    return HodgeLevel{false, std::max(fl - r, -1L)};
}

HodgeLevel hodge_level(const LciScheme& L, const Budget& budget) {
    return hodge_level_of(min_exponent(L, budget), static_cast<long>(L.r()));
}

namespace {

MPoly det_recursive(const std::vector<std::vector<MPoly>>& m, std::vector<std::size_t> cols,
                    std::size_t row, const PolyRingPtr& ring) {
    if (cols.empty()) return MPoly(ring, Rat(1));
    MPoly acc(ring);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        MPoly sub = det_recursive(m, rest, row + 1, ring);
        MPoly term = m[row][cols[k]] * sub;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<MPoly> jacobian_minors(const LciScheme& L) {
    std::size_t r = L.r(), n = L.n();
    std::vector<std::vector<MPoly>> J(r, std::vector<MPoly>(n, MPoly(L.ring)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) J[i][j] = L.gens[i].diff(j);
    std::vector<MPoly> minors;
    std::vector<std::size_t> cols;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cols.size() == r) {
            minors.push_back(det_recursive(J, cols, 0, L.ring));
            return;
        }
        for (std::size_t c = start; c < n; ++c) {
            cols.push_back(c);
            self(self, c + 1);
            cols.pop_back();
        }
    };
    rec(rec, 0);
    return minors;
}

}  // namespace

bool is_smooth(const LciScheme& L, const Budget& budget) {
    validate_shape(L);
    std::vector<MPoly> gens = L.gens;
    for (auto& m : jacobian_minors(L))
        if (!m.is_zero()) gens.push_back(std::move(m));
    return is_trivial_ideal(gens, budget);
}

bool is_rational(const LciScheme& L, const Budget& budget) {
    return min_exponent(L, budget) > ExtRat::finite(Rat(static_cast<long>(L.r())));
}

bool is_du_bois(const LciScheme& L, const Budget& budget) {
    return min_exponent(L, budget) >= ExtRat::finite(Rat(static_cast<long>(L.r())));
}

bool InvariantReport::all_checks_pass() const {
    for (const auto& c : checks)
        if (c.status == CheckResult::Status::fail || c.status == CheckResult::Status::error)
            return false;
    return true;
}

namespace {

template <typename F>
void guarded(InvariantReport& rep, const std::string& field, F&& fn) {
    try {
        fn();
    } catch (const budget_exceeded& e) {
        rep.errors.push_back(field + ": budget exceeded (" + e.what() + ")");
    } catch (const std::exception& e) {
        rep.errors.push_back(field + ": " + e.what());
    }
}

void add_check(InvariantReport& rep, const std::string& name, bool pass,
               const std::string& detail = "") {
    rep.checks.push_back({name,
                          pass ? CheckResult::Status::pass : CheckResult::Status::fail,
                          detail});
}

void skip_check(InvariantReport& rep, const std::string& name, const std::string& why) {
    rep.checks.push_back({name, CheckResult::Status::skipped, why});
}

}  // namespace

InvariantReport invariants(const LciScheme& L, const Budget& budget,
                           const InvariantOptions& opts) {
    validate_shape(L);
    InvariantReport rep;
    bool codim_ok = false;
    guarded(rep, "codim", [&] { codim_ok = validate_codim(L, budget); });
    if (!codim_ok) {
        if (!opts.force_unvalidated)
            throw std::invalid_argument(
                "generators do not define a pure codimension-r subscheme "
                "(use force to compute anyway)");
        rep.checks.push_back(
            {"codim_validated", CheckResult::Status::fail, "unvalidated hypothesis"});
    } else {
        add_check(rep, "codim_validated", true);
    }

    long r = static_cast<long>(L.r());
    guarded(rep, "alpha", [&] {
        rep.chart_exps = chart_exponents(L, budget);
        ExtRat m = ExtRat::inf();
        for (const auto& e : rep.chart_exps) m = min(m, e);
        rep.alpha = m;
    });
    guarded(rep, "bz", [&] { rep.bz = bernstein_sato(L, budget); });
    guarded(rep, "smooth", [&] { rep.smooth = is_smooth(L, budget); });

    if (rep.alpha) {
        rep.p_level = hodge_level_of(*rep.alpha, r);
        rep.rational = *rep.alpha > ExtRat::finite(Rat(r));
        rep.du_bois = *rep.alpha >= ExtRat::finite(Rat(r));
        rep.lct_value = min(*rep.alpha, ExtRat::finite(Rat(r))).value;
    }

    // identity battery
    if (rep.bz) {
        add_check(rep, "bz_at_minus_r_is_zero", rep.bz->poly.eval(Rat(-r)) == 0,
                  "b_Z(-r) = 0");
        if (rep.lct_value)
            add_check(rep, "lct_equals_neg_largest_root",
                      -rep.bz->largest_root() == *rep.lct_value,
                      "lct = -max root of b_Z = min{alpha, r}");
        guarded(rep, "gamma", [&] {
            if (rep.bz->poly.eval(Rat(-r)) != 0)
                throw internal_inconsistency("b_Z(-r) != 0");
            BFunction q = rep.bz->divided_by_root(Rat(-r));
            rep.gamma = q.is_one() ? ExtRat::inf() : ExtRat::finite(-q.largest_root());
        });
    } else {
        skip_check(rep, "bz_at_minus_r_is_zero", "b_Z unavailable");
        skip_check(rep, "lct_equals_neg_largest_root", "b_Z unavailable");
    }
    if (rep.alpha && rep.gamma) {
        add_check(rep, "alpha_ge_gamma", *rep.gamma <= *rep.alpha, "alpha >= gamma");
        ExtRat cap = ExtRat::finite(Rat(r + 1));
        add_check(rep, "min_with_r_plus_one", min(*rep.alpha, cap) == min(*rep.gamma, cap),
                  "min{alpha, r+1} = min{gamma, r+1}");
    } else {
        skip_check(rep, "alpha_ge_gamma", "alpha or gamma unavailable");
        skip_check(rep, "min_with_r_plus_one", "alpha or gamma unavailable");
    }
    if (rep.alpha && rep.smooth)
        add_check(rep, "smooth_iff_alpha_infinite", rep.alpha->infinite == *rep.smooth,
                  "alpha = inf exactly for smooth Z");
    if (rep.alpha) {
        long k = -1;
        bool at_origin = true;
        for (const auto& f : L.gens) {
            long ord = f.order_at_origin();
            if (ord == 0) at_origin = false;  // nonzero constant term
            if (k < 0 || ord < k) k = ord;
        }
        if (at_origin && k >= 2) {
            Rat bound = make_rat(static_cast<long>(L.n()), k);
            add_check(rep, "multiplicity_bound",
                      !rep.alpha->infinite && rep.alpha->value <= bound,
                      "alpha <= n/k for generators of order >= k at 0");
        } else {
            skip_check(rep, "multiplicity_bound", "generators not all in m_0^2");
        }
        add_check(rep, "hodge_level_formula",
                  *rep.p_level == hodge_level_of(*rep.alpha, r),
                  "p = max{floor(alpha) - r, -1}");
    }
    if (opts.permutation_spot_check && L.r() > 1 && rep.alpha && rep.bz) {
        guarded(rep, "permutation_check", [&] {
            LciScheme perm = L;
            std::reverse(perm.gens.begin(), perm.gens.end());
            ExtRat alpha2 = min_exponent(perm, budget);
            BFunction bz2 = bernstein_sato(perm, budget);
            add_check(rep, "generator_permutation_invariance",
                      alpha2 == *rep.alpha && bz2.poly == rep.bz->poly,
                      "alpha and b_Z invariant under reversing the generators");
        });
    } else if (opts.permutation_spot_check) {
        skip_check(rep, "generator_permutation_invariance",
                   L.r() <= 1 ? "single generator" : "prerequisite field unavailable");
    }
    return rep;
}

bool ambient_shift_check(const LciScheme& L, int m, const Budget& budget) {
    if (m < 1) throw std::invalid_argument("ambient_shift_check: m >= 1 required");
    ExtRat base = min_exponent(L, budget);
    std::vector<std::string> vars = L.ring->vars();
    for (int j = 1; j <= m; ++j) vars.push_back("@z" + std::to_string(j));
    auto big = make_ring(std::move(vars));
    LciScheme shifted;
    shifted.ring = big;
    for (const auto& f : L.gens) shifted.gens.push_back(lift_front(f, big));
    for (int j = 0; j < m; ++j)
        shifted.gens.push_back(MPoly::variable(big, L.n() + static_cast<std::size_t>(j)));
    ExtRat lifted = min_exponent(shifted, budget);
    return lifted == base + Rat(m);
}

RestrictionOutcome restriction_check(const LciScheme& L, const std::string& var, const Rat& c,
                                     const Budget& budget) {
    int idx = L.ring->index_of(var);
    if (idx < 0) throw std::invalid_argument("restriction_check: unknown variable " + var);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < L.n(); ++i)
        if (i != static_cast<std::size_t>(idx)) vars.push_back(L.ring->vars()[i]);
    auto small = make_ring(std::move(vars));
    LciScheme slice;
    slice.ring = small;
    for (const auto& f : L.gens) {
        MPoly g = f.substitute(static_cast<std::size_t>(idx), c, small);
        if (g.is_zero() || g.is_constant()) return RestrictionOutcome::skipped;
        slice.gens.push_back(std::move(g));
    }
    if (!codim_check(slice.gens, static_cast<int>(slice.r()), budget))
        return RestrictionOutcome::skipped;
    ExtRat a_slice = min_exponent(slice, budget);
    if (a_slice.infinite) return RestrictionOutcome::skipped;  // misses the singular locus
    ExtRat a_full = min_exponent(L, budget);
    return a_slice <= a_full ? RestrictionOutcome::pass : RestrictionOutcome::fail;
}

}  // namespace bsato
