#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bsato/rat.hpp"

namespace bsato {

/// Dense univariate polynomial in s over Q, coefficients lowest degree
/// first. Leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(const Rat& c);
    /// s + c
    static UniPoly linear_shift(const Rat& c);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Rat eval(const Rat& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& c) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly monic() const;
    /// s -> s + k
    UniPoly shift(const Rat& k) const;
    /// Exact division; throws std::domain_error when the remainder is nonzero.
    UniPoly div_exact(const UniPoly& d) const;
    /// Quotient and remainder.
    std::pair<UniPoly, UniPoly> div_rem(const UniPoly& d) const;

    std::string to_string(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// All rational roots with multiplicities, and the rational-root-free
/// residual factor: b = residual * prod (s - root)^mult. Roots are found by
/// clearing to a primitive integer polynomial and testing divisor candidates,
/// each deflated to full multiplicity. Throws std::domain_error on zero input.
/// The root list is sorted descending (largest root first).
struct RootExtraction {
    std::vector<std::pair<Rat, int>> roots;
    UniPoly residual;
};

RootExtraction rational_roots(const UniPoly& b);

}  // namespace bsato
