#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "bsato/rat.hpp"

namespace bsato {

/// Exponent vector, one entry per ring symbol. Lexicographic operator< makes
/// it usable as an ordered-map key; term orders live elsewhere.
using Mono = std::vector<std::uint16_t>;

inline std::uint32_t mono_degree(const Mono& m) {
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// b / a, valid only when mono_divides(a, b).
inline Mono mono_quotient(const Mono& b, const Mono& a) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(b[i] - a[i]);
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

/// Ordered variable registry for a commutative polynomial ring.
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    /// -1 when the name is unknown.
    int index_of(const std::string& name) const;

    bool operator==(const PolyRing& o) const { return vars_ == o.vars_; }

private:
    std::vector<std::string> vars_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_ring(std::vector<std::string> vars);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no stored zero coefficient; all monomials sized to the ring.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}
    MPoly(PolyRingPtr ring, const Rat& c);  // constant

    static MPoly variable(const PolyRingPtr& ring, std::size_t index, int power = 1);

    const PolyRingPtr& ring() const { return ring_; }
    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    long degree() const;

    void add_term(const Mono& m, const Rat& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(unsigned k) const;

    /// Formal partial derivative with respect to ring variable v.
    MPoly diff(std::size_t v) const;

    /// Value at the point fixing variable v to c, as a polynomial in the
    /// remaining variables of the smaller ring (variable v removed).
    MPoly substitute(std::size_t v, const Rat& c, const PolyRingPtr& smaller) const;

    /// Order of vanishing at the origin (min total degree of a term);
    /// -1 for the zero polynomial.
    long order_at_origin() const;

    /// Canonical text form; reparses to an equal polynomial.
    std::string to_string() const;

private:
    PolyRingPtr ring_;
    std::map<Mono, Rat> terms_;
};

/// Parse a polynomial in the grammar documented in the README: identifiers,
/// integer and p/q literals, + - * ^, parentheses, no implicit
/// multiplication. Throws ParseError with a character position.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

MPoly mpoly_parse(const std::string& text, const PolyRingPtr& ring);

}  // namespace bsato
