#pragma once

#include <optional>

#include "bsato/bfunction.hpp"

namespace bsato {

/// A complete-intersection subscheme Z of A^n cut out by r polynomials.
struct LciScheme {
    PolyRingPtr ring;         // ambient coordinates
    std::vector<MPoly> gens;  // f_1..f_r, all nonzero and nonconstant

    std::size_t n() const { return ring->size(); }
    std::size_t r() const { return gens.size(); }
};

/// Throws std::invalid_argument unless 1 <= r <= n and every generator is
/// nonzero and nonconstant.
void validate_shape(const LciScheme& L);

/// True iff the generators cut out a subscheme of pure dimension n - r
/// (leading-term dimension check).
bool validate_codim(const LciScheme& L, const Budget& budget = {});

/// g = sum f_i y_i over the ambient ring extended by fresh y-coordinates.
MPoly build_g(const LciScheme& L);

/// The r chart hypersurfaces h_i = f_i + sum_{j != i} f_j w_j in n+r-1
/// variables: on the chart y_i != 0 the hypersurface g = 0 is the product
/// of V(h_i) with a torus factor, which leaves the minimal exponent
/// unchanged.
std::vector<MPoly> chart_polys(const LciScheme& L);

/// alpha~(Z) = min_i alpha~(h_i); infinity iff every chart is smooth.
/// Chart computations run concurrently.
ExtRat min_exponent(const LciScheme& L, const Budget& budget = {});
std::vector<ExtRat> chart_exponents(const LciScheme& L, const Budget& budget = {});

/// b_Z(s) = b_g(s)/(s+1) via the full-space hypersurface g.
BFunction bernstein_sato(const LciScheme& L, const Budget& budget = {});

/// min{alpha~, r}; computed by both available routes (alpha~ cap and the
/// largest root of b_Z) and compared; a mismatch raises
/// internal_inconsistency rather than being silently reconciled.
Rat lct(const LciScheme& L, const Budget& budget = {});

/// Negative of the largest root of b_Z(s)/(s+r); infinity when the quotient
/// is 1. Raises internal_inconsistency when b_Z(-r) != 0.
ExtRat gamma_tilde(const LciScheme& L, const Budget& budget = {});

struct HodgeLevel {
    bool infinite = false;
    long value = -1;  // >= -1 when finite

    bool operator==(const HodgeLevel& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

/// p(Z) = max{floor(alpha~) - r, -1}; infinity for smooth Z.
HodgeLevel hodge_level(const LciScheme& L, const Budget& budget = {});
HodgeLevel hodge_level_of(const ExtRat& alpha, long r);

/// Jacobian criterion: true iff the ideal (f_1..f_r, all r x r minors of
/// d f_i / d x_j) is trivial.
bool is_smooth(const LciScheme& L, const Budget& budget = {});

/// alpha~ > r (infinity counts as greater).
bool is_rational(const LciScheme& L, const Budget& budget = {});

/// lct = r, evaluated through the alpha~ route (min{alpha~, r} = r).
bool is_du_bois(const LciScheme& L, const Budget& budget = {});

struct CheckResult {
    enum class Status { pass, fail, skipped, error };
    std::string name;
    Status status;
    std::string detail;
};

struct InvariantReport {
    std::optional<ExtRat> alpha;
    std::optional<BFunction> bz;
    std::optional<Rat> lct_value;
    std::optional<ExtRat> gamma;
    std::optional<HodgeLevel> p_level;
    std::optional<bool> smooth, rational, du_bois;
    std::vector<ExtRat> chart_exps;
    std::vector<CheckResult> checks;
    std::vector<std::string> errors;

    bool all_checks_pass() const;
};

struct InvariantOptions {
    bool permutation_spot_check = true;
    bool force_unvalidated = false;  // compute even when the codim check fails
};

/// Runs every invariant and the full identity battery. Sub-errors (budget
/// exhaustion in one route) are recorded per field and the report is still
/// emitted. Throws std::invalid_argument when the codimension validation
/// fails and force_unvalidated is not set.
InvariantReport invariants(const LciScheme& L, const Budget& budget = {},
                           const InvariantOptions& opts = {});

/// Appends m fresh ambient coordinates and the generators z_1..z_m, and
/// verifies alpha~ grows by exactly m (infinity stays infinity).
bool ambient_shift_check(const LciScheme& L, int m, const Budget& budget = {});

enum class RestrictionOutcome { pass, fail, skipped };

/// Slices the scheme along var = c and verifies alpha~ of the slice does not
/// exceed alpha~ of Z. The check is skipped when the slice drops
/// codimension, degenerates, or misses the singular locus (smooth slice).
RestrictionOutcome restriction_check(const LciScheme& L, const std::string& var, const Rat& c,
                                     const Budget& budget = {});

}  // namespace bsato
