#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bsato/mpoly.hpp"
#include "bsato/rat.hpp"

namespace bsato {

/// Symbol layout for a Weyl algebra D<x_1..x_n, d_1..d_n>[aux][par]:
/// paired position/derivation variables, then plain commutative auxiliaries,
/// then central parameters. Exponent vectors index this flat layout.
class WeylRing {
public:
    WeylRing(std::vector<std::string> pos, std::vector<std::string> der,
             std::vector<std::string> aux, std::vector<std::string> par);

    std::size_t npos() const { return pos_.size(); }
    std::size_t naux() const { return aux_.size(); }
    std::size_t npar() const { return par_.size(); }
    std::size_t nsym() const { return 2 * npos() + naux() + npar(); }

    std::size_t pos_index(std::size_t i) const { return i; }
    std::size_t der_index(std::size_t i) const { return npos() + i; }
    std::size_t aux_index(std::size_t i) const { return 2 * npos() + i; }
    std::size_t par_index(std::size_t i) const { return 2 * npos() + naux() + i; }

    bool is_derivation(std::size_t sym) const { return sym >= npos() && sym < 2 * npos(); }
    bool is_position(std::size_t sym) const { return sym < npos(); }

    const std::string& symbol_name(std::size_t sym) const;
    const std::vector<std::string>& positions() const { return pos_; }
    const std::vector<std::string>& derivations() const { return der_; }
    const std::vector<std::string>& auxiliaries() const { return aux_; }
    const std::vector<std::string>& parameters() const { return par_; }
    /// -1 when unknown.
    int index_of(const std::string& name) const;

    bool operator==(const WeylRing& o) const;

private:
    std::vector<std::string> pos_, der_, aux_, par_;
};

using WeylRingPtr = std::shared_ptr<const WeylRing>;

WeylRingPtr make_weyl_ring(std::vector<std::string> pos, std::vector<std::string> der,
                           std::vector<std::string> aux = {}, std::vector<std::string> par = {});

/// Weyl ring over the variables of a commutative ring, derivation names
/// prefixed with "d", with central parameter s appended by default.
WeylRingPtr weyl_over(const PolyRingPtr& ring, bool with_s = true);

/// Normally ordered element of the Weyl algebra: every stored monomial has
/// all position factors to the left of all derivation factors; auxiliaries
/// and parameters commute with everything. No zero coefficients stored.
class WeylElem {
public:
    WeylElem() = default;
    explicit WeylElem(WeylRingPtr ring) : ring_(std::move(ring)) {}
    WeylElem(WeylRingPtr ring, const Rat& c);

    static WeylElem symbol(const WeylRingPtr& ring, std::size_t sym, int power = 1);
    static WeylElem monomial(const WeylRingPtr& ring, const Mono& m, const Rat& c);

    const WeylRingPtr& ring() const { return ring_; }
    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Mono& m, const Rat& c);

    WeylElem operator-() const;
    WeylElem operator+(const WeylElem& o) const;
    WeylElem operator-(const WeylElem& o) const;
    WeylElem operator*(const Rat& c) const;
    bool operator==(const WeylElem& o) const;
    bool operator!=(const WeylElem& o) const { return !(*this == o); }

    /// Max total degree in the derivation symbols; -1 when zero.
    long derivation_order() const;
    /// Max total degree over all symbols; -1 when zero.
    long total_degree() const;

    std::string to_string() const;

private:
    WeylRingPtr ring_;
    std::map<Mono, Rat> terms_;
};

/// Normally ordered product. Implements d_i^b x_i^c =
/// sum_k k! C(b,k) C(c,k) x_i^{c-k} d_i^{b-k}; auxiliaries and parameters
/// commute through. Throws std::invalid_argument on ring mismatch.
WeylElem weyl_mul(const WeylElem& a, const WeylElem& b);

WeylElem weyl_pow(const WeylElem& a, unsigned k);

/// Commutative polynomial lifted into the Weyl ring. The map sends each
/// variable of p's ring to the Weyl symbol of the same name (position or
/// auxiliary); throws if some variable is missing.
WeylElem lift_poly(const MPoly& p, const WeylRingPtr& ring);

/// Result of the operator-identity self checks.
struct IdentityReport {
    struct Item {
        std::string name;
        bool pass;
    };
    std::vector<Item> items;
    bool all_pass() const;
};

/// Checks the operator identities underpinning the s-calculus, for all
/// 1 <= m <= m_max and a deterministic battery of test polynomials P of
/// degree <= 3 (random rational coefficients, fixed seed), with s realized
/// as the element -d_t t:
///   [d,t^m] = m t^{m-1}
///   [t,d^m] = -m d^{m-1}
///   d^m t^m = (-1)^m s(s-1)...(s-m+1)
///   P(s) d^m = d^m P(s+m)
///   P(s) t^m = t^m P(s-m)
IdentityReport verify_appendix_identities(int m_max, int battery_size = 20);

}  // namespace bsato
