#include "bsato/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bsato {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) {
    UniPoly p;
    if (c != 0) p.c_ = {c};
    return p;
}

UniPoly UniPoly::linear_shift(const Rat& c) {
    UniPoly p;
    p.c_ = {c, Rat(1)};
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& c) const {
    if (c == 0) return UniPoly();
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= c;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    return *this * (Rat(1) / c_.back());
}

UniPoly UniPoly::shift(const Rat& k) const {
    // Horner in (s + k)
    UniPoly acc;
    UniPoly sk;
    sk.c_ = {k, Rat(1)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * sk + UniPoly::constant(*it);
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::div_rem(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem = c_;
    long dd = d.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<Rat> quot(c_.size() - d.c_.size() + 1, Rat(0));
    for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] / d.c_.back();
        quot[i - dd] = q;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::div_exact(const UniPoly& d) const {
    auto [q, r] = div_rem(d);
    if (!r.is_zero()) throw std::domain_error("inexact univariate division");
    return q;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rat& a = c_[i];
        if (a == 0) continue;
        Rat v = a;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (i == 0 || v != 1) {
            os << rat_to_string(v);
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

std::vector<Int> positive_divisors(const Int& n) {
    Int a = abs(n);
    std::vector<Int> out;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RootExtraction rational_roots(const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
    RootExtraction out;
    UniPoly cur = b;

    // deflate roots at 0 first
    {
        std::size_t k = 0;
        while (k < cur.coeffs().size() && cur.coeffs()[k] == 0) ++k;
        if (k > 0) {
            out.roots.emplace_back(Rat(0), static_cast<int>(k));
            std::vector<Rat> c(cur.coeffs().begin() + k, cur.coeffs().end());
            cur = UniPoly(std::move(c));
        }
    }
    if (cur.degree() >= 1) {
        // clear denominators to a primitive integer polynomial
        Int lcm_den = 1;
        for (const auto& c : cur.coeffs()) {
            Int g;
            mpz_lcm(g.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
            lcm_den = g;
        }
        std::vector<Int> ic;
        ic.reserve(cur.coeffs().size());
        Int content = 0;
        for (const auto& c : cur.coeffs()) {
            Rat scaled = c * Rat(lcm_den);
            ic.push_back(scaled.get_num());
            Int g;
            mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), ic.back().get_mpz_t());
            content = g;
        }
        if (content > 1)
            for (auto& c : ic) c /= content;

        // rational-root theorem: candidates p/q, p | ic[0], q | ic.back()
        auto ps = positive_divisors(ic.front());
        auto qs = positive_divisors(ic.back());
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                for (int sign : {1, -1}) {
                    if (cur.degree() < 1) break;
                    Rat cand = make_rat(sign * p, q);
                    int mult = 0;
                    while (cur.degree() >= 1 && cur.eval(cand) == 0) {
                        cur = cur.div_exact(UniPoly::linear_shift(-cand));
                        ++mult;
                    }
                    if (mult > 0) out.roots.emplace_back(cand, mult);
                }
            }
        }
    }
    out.residual = cur;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b2) { return a.first > b2.first; });
    return out;
}

}  // namespace bsato
