#include "bsato/fs_expr.hpp"

#include <sstream>
#include <stdexcept>

namespace bsato {

PolyRingPtr xs_ring_of(const PolyRingPtr& x_ring) {
    std::vector<std::string> vars = x_ring->vars();
    vars.push_back("s");
    return make_ring(std::move(vars));
}

FsExpr::FsExpr(MPoly f, PolyRingPtr xs_ring) : f_(std::move(f)), xs_ring_(std::move(xs_ring)) {}

FsExpr FsExpr::power(const MPoly& f, long k) {
    FsExpr e(f, xs_ring_of(f.ring()));
    e.terms_.emplace(k, MPoly(e.xs_ring_, Rat(1)));
    return e;
}

void FsExpr::add_term(long m, const MPoly& q) {
    if (q.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, q);
    } else {
        it->second = it->second + q;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FsExpr FsExpr::operator+(const FsExpr& o) const {
    FsExpr r = *this;
    if (r.xs_ring_ == nullptr) return o;
    for (const auto& [m, q] : o.terms_) r.add_term(m, q);
    return r;
}

FsExpr FsExpr::operator-(const FsExpr& o) const {
    FsExpr r = *this;
    if (r.xs_ring_ == nullptr) {
        r = o;
        r.terms_.clear();
    }
    for (const auto& [m, q] : o.terms_) r.add_term(m, -q);
    return r;
}

FsExpr FsExpr::scaled(const MPoly& q) const {
    FsExpr r(f_, xs_ring_);
    for (const auto& [m, p] : terms_) r.add_term(m, p * q);
    return r;
}

namespace {

// f lifted into the (x, s) ring: same exponents, s-exponent zero
MPoly lift_to_xs(const MPoly& f, const PolyRingPtr& xs) {
    MPoly out(xs);
    for (const auto& [m, c] : f.terms()) {
        Mono mm = m;
        mm.push_back(0);
        out.add_term(mm, c);
    }
    return out;
}

}  // namespace

std::pair<MPoly, long> FsExpr::cleared() const {
    if (terms_.empty()) return {MPoly(xs_ring_), 0};
    long m0 = terms_.begin()->first;
    MPoly fx = lift_to_xs(f_, xs_ring_);
    MPoly acc(xs_ring_);
    for (const auto& [m, q] : terms_) {
        MPoly t = q;
        for (long j = 0; j < m - m0; ++j) t = t * fx;
        acc = acc + t;
    }
    return {acc, m0};
}

bool FsExpr::is_zero() const { return cleared().first.is_zero(); }

bool FsExpr::equals(const FsExpr& o) const {
    if (!(f_ == o.f_)) return false;
    return (*this - o).is_zero();
}

std::string FsExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")*f^(s";
        if (it->first > 0) os << "+" << it->first;
        if (it->first < 0) os << it->first;
        os << ")";
    }
    return os.str();
}

namespace {

struct ApplyContext {
    const MPoly& f;
    PolyRingPtr xs;
    std::vector<MPoly> df;  // lifted partials, one per x-variable
    MPoly s_var;

    ApplyContext(const MPoly& f_, const PolyRingPtr& xs_) : f(f_), xs(xs_) {
        for (std::size_t i = 0; i < f.ring()->size(); ++i)
            df.push_back(lift_to_xs(f.diff(i), xs));
        s_var = MPoly::variable(xs, xs->size() - 1);
    }

    // d_i applied to sum q_m f^{s+m}
    void derive(std::map<long, MPoly>& terms, std::size_t i) const {
        std::map<long, MPoly> out;
        auto add = [&out](long m, const MPoly& q) {
            if (q.is_zero()) return;
            auto it = out.find(m);
            if (it == out.end())
                out.emplace(m, q);
            else {
                it->second = it->second + q;
                if (it->second.is_zero()) out.erase(it);
            }
        };
        for (const auto& [m, q] : terms) {
            add(m, q.diff(i));
            MPoly sm = s_var + MPoly(xs, Rat(m));
            add(m - 1, q * sm * df[i]);
        }
        terms = std::move(out);
    }
};

}  // namespace

FsExpr apply_operator(const WeylElem& P, const FsExpr& e) {
    const auto& R = P.ring();
    const auto& xvars = e.f().ring()->vars();
    if (!R || R->positions() != xvars || R->naux() != 0 || R->npar() != 1)
        throw std::invalid_argument(
            "apply_to_power: operator ring must be the Weyl ring over f's variables "
            "with a single central parameter");

    FsExpr total(e.f(), e.xs_ring());
    std::size_t n = xvars.size();
    for (const auto& [mono, coef] : P.terms()) {
        std::map<long, MPoly> terms = e.terms();
        ApplyContext ctx(e.f(), e.xs_ring());
        // derivations first (rightmost factors act first)
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned k = 0; k < mono[R->der_index(i)]; ++k) ctx.derive(terms, i);
        // then position and parameter multiplication
        Mono mm(e.xs_ring()->size(), 0);
        for (std::size_t i = 0; i < n; ++i) mm[i] = mono[R->pos_index(i)];
        mm[n] = mono[R->par_index(0)];
        MPoly monoPoly(e.xs_ring());
        monoPoly.add_term(mm, coef);
        for (const auto& [m, q] : terms) total.add_term(m, q * monoPoly);
    }
    return total;
}

FsExpr apply_to_power(const WeylElem& P, const MPoly& f, long k) {
    return apply_operator(P, FsExpr::power(f, k));
}

}  // namespace bsato
