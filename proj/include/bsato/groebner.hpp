#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsato/term_order.hpp"
#include "bsato/weyl.hpp"

namespace bsato {

/// Resource caps for Groebner computations. Exceeding one raises
/// budget_exceeded; there is no silent truncation.
struct Budget {
    long pair_limit = 50000;
    long degree_cap = 40;
    long wall_ms = 0;  // 0 = no wall-clock cap

    /// Budget with every cap read from the environment when set
    /// (BSATO_PAIR_LIMIT, BSATO_DEGREE_CAP, BSATO_WALL_MS).
    static Budget from_env();
};

struct BudgetUse {
    long pairs = 0;
    long max_degree = 0;
    double wall_ms = 0;
};

struct budget_exceeded : std::runtime_error {
    BudgetUse use;
    budget_exceeded(const std::string& what, BudgetUse u)
        : std::runtime_error(what), use(u) {}
};

/// Raised when a structural guarantee fails (e.g. a b-function with a
/// non-rational factor); always an implementation bug, never user error.
struct internal_inconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

/// Left ideal in a Weyl algebra, given by generators.
struct DIdeal {
    WeylRingPtr ring;
    std::vector<WeylElem> gens;
};

/// Normal form of e against the basis: no monomial of the result is
/// divisible by a basis leading monomial, and e - result lies in the left
/// ideal generated by the basis. Deterministic given the basis ordering.
WeylElem reduce(const WeylElem& e, std::span<const WeylElem> basis, const TermOrder& ord);

/// Reduced (auto-reduced, monic) left Groebner basis. Deterministic and
/// independent of generator input order. S-pair selection is by minimal
/// lcm degree; chain criterion applied throughout, product criterion only
/// on commutative rings (it is unsound when conjugate pairs meet: the
/// S-polynomial of x and d is a nonzero constant).
std::vector<WeylElem> buchberger(const DIdeal& ideal, const TermOrder& ord,
                                 const Budget& budget = {}, BudgetUse* use = nullptr);

/// Members of the reduced Groebner basis (block elimination order) free of
/// the dropped symbols; they generate the intersection with the subalgebra.
/// Dropped position symbols must be dropped together with their derivations.
std::vector<WeylElem> eliminate(const DIdeal& ideal, const std::vector<std::string>& drop,
                                const Budget& budget = {}, BudgetUse* use = nullptr);

/// Groebner basis together with division-tracking data: basis[k] equals
/// sum_i rep[k][i] * gens[i] exactly.
struct TrackedBasis {
    std::vector<WeylElem> basis;
    std::vector<std::vector<WeylElem>> rep;
};

TrackedBasis buchberger_tracked(const DIdeal& ideal, const TermOrder& ord,
                                const Budget& budget = {}, BudgetUse* use = nullptr);

/// Tracked normal form: e = sum_k quotients[k] * basis[k] + nf.
struct TrackedNF {
    WeylElem nf;
    std::vector<WeylElem> quotients;
};

TrackedNF reduce_tracked(const WeylElem& e, std::span<const WeylElem> basis,
                         const TermOrder& ord);

/// True iff 1 lies in the commutative ideal (Groebner basis {1}); over Q
/// this certifies the complex zero set is empty.
bool is_trivial_ideal(const std::vector<MPoly>& gens, const Budget& budget = {});

/// Krull dimension of the quotient by a commutative ideal, computed from
/// the leading-term monomial ideal via maximal independent variable sets.
/// Returns -1 for the unit ideal.
long ideal_dimension(const std::vector<MPoly>& gens, const Budget& budget = {});

/// True iff dim Q[x]/(f_1..f_r) == n - r (n = ring size, r = #generators).
bool codim_check(const std::vector<MPoly>& gens, int r, const Budget& budget = {});

/// Commutative polynomials as an ideal in an auxiliary-only Weyl ring.
DIdeal commutative_ideal(const std::vector<MPoly>& gens);

}  // namespace bsato
