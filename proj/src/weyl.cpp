#include "bsato/weyl.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bsato {

WeylRing::WeylRing(std::vector<std::string> pos, std::vector<std::string> der,
                   std::vector<std::string> aux, std::vector<std::string> par)
    : pos_(std::move(pos)), der_(std::move(der)), aux_(std::move(aux)), par_(std::move(par)) {
    if (pos_.size() != der_.size())
        throw std::invalid_argument("position and derivation lists must have equal length");
    std::vector<std::string> all;
    for (const auto* v : {&pos_, &der_, &aux_, &par_})
        all.insert(all.end(), v->begin(), v->end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("Weyl ring symbol names must be distinct");
}

const std::string& WeylRing::symbol_name(std::size_t sym) const {
    if (sym < npos()) return pos_[sym];
    if (sym < 2 * npos()) return der_[sym - npos()];
    if (sym < 2 * npos() + naux()) return aux_[sym - 2 * npos()];
    return par_[sym - 2 * npos() - naux()];
}

int WeylRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < nsym(); ++i)
        if (symbol_name(i) == name) return static_cast<int>(i);
    return -1;
}

bool WeylRing::operator==(const WeylRing& o) const {
    return pos_ == o.pos_ && der_ == o.der_ && aux_ == o.aux_ && par_ == o.par_;
}

WeylRingPtr make_weyl_ring(std::vector<std::string> pos, std::vector<std::string> der,
                           std::vector<std::string> aux, std::vector<std::string> par) {
    return std::make_shared<const WeylRing>(std::move(pos), std::move(der), std::move(aux),
                                            std::move(par));
}

WeylRingPtr weyl_over(const PolyRingPtr& ring, bool with_s) {
    std::vector<std::string> der;
    der.reserve(ring->size());
    for (const auto& v : ring->vars()) der.push_back("d" + v);
    std::vector<std::string> par;
    if (with_s) par.push_back("s");
    return make_weyl_ring(ring->vars(), std::move(der), {}, std::move(par));
}

WeylElem::WeylElem(WeylRingPtr ring, const Rat& c) : ring_(std::move(ring)) {
    if (c != 0) terms_.emplace(Mono(ring_->nsym(), 0), c);
}

WeylElem WeylElem::symbol(const WeylRingPtr& ring, std::size_t sym, int power) {
    WeylElem e(ring);
    Mono m(ring->nsym(), 0);
    m[sym] = static_cast<std::uint16_t>(power);
    e.terms_.emplace(std::move(m), Rat(1));
    return e;
}

WeylElem WeylElem::monomial(const WeylRingPtr& ring, const Mono& m, const Rat& c) {
    WeylElem e(ring);
    e.add_term(m, c);
    return e;
}

void WeylElem::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WeylElem WeylElem::operator-() const {
    WeylElem r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

WeylElem WeylElem::operator+(const WeylElem& o) const {
    WeylElem r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

WeylElem WeylElem::operator-(const WeylElem& o) const {
    WeylElem r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

WeylElem WeylElem::operator*(const Rat& c) const {
    WeylElem r(ring_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

bool WeylElem::operator==(const WeylElem& o) const {
    bool ring_eq = (ring_ == o.ring_) || (ring_ && o.ring_ && *ring_ == *o.ring_);
    return ring_eq && terms_ == o.terms_;
}

long WeylElem::derivation_order() const {
    long d = -1;
    std::size_t np = ring_->npos();
    for (const auto& [m, c] : terms_) {
        long o = 0;
        for (std::size_t i = 0; i < np; ++i) o += m[ring_->der_index(i)];
        d = std::max(d, o);
    }
    return d;
}

long WeylElem::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(mono_degree(m)));
    return d;
}

std::string WeylElem::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat v = c;
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
        bool has_sym = mono_degree(m) > 0;
        if (v != 1 || !has_sym) {
            os << rat_to_string(v);
            if (has_sym) os << "*";
        }
        bool symfirst = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!symfirst) os << "*";
            symfirst = false;
            os << ring_->symbol_name(i);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

namespace {

Int binom(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// expand the product of two normally ordered terms into `out`
void term_mul_into(WeylElem& out, const WeylRing& R, const Mono& m1, const Rat& c1,
                   const Mono& m2, const Rat& c2) {
    std::size_t np = R.npos();
    // collect indices where a derivation of m1 meets its own position in m2
    std::vector<std::size_t> cross;
    for (std::size_t i = 0; i < np; ++i)
        if (m1[R.der_index(i)] > 0 && m2[R.pos_index(i)] > 0) cross.push_back(i);

    Mono base = mono_mul(m1, m2);
    if (cross.empty()) {
        out.add_term(base, c1 * c2);
        return;
    }
    // d^b x^c = sum_k k! C(b,k) C(c,k) x^{c-k} d^{b-k}, per crossing index
    std::vector<unsigned> k(cross.size(), 0);
    for (;;) {
        Rat coef = c1 * c2;
        Mono m = base;
        for (std::size_t j = 0; j < cross.size(); ++j) {
            std::size_t i = cross[j];
            unsigned b = m1[R.der_index(i)], c = m2[R.pos_index(i)], kk = k[j];
            if (kk) {
                coef *= Rat(factorial(kk) * binom(b, kk) * binom(c, kk));
                m[R.pos_index(i)] = static_cast<std::uint16_t>(m[R.pos_index(i)] - kk);
                m[R.der_index(i)] = static_cast<std::uint16_t>(m[R.der_index(i)] - kk);
            }
        }
        out.add_term(m, coef);
        // next multi-index k, bounded by min(b, c) per crossing
        std::size_t j = 0;
        for (; j < cross.size(); ++j) {
            std::size_t i = cross[j];
            unsigned lim = std::min<unsigned>(m1[R.der_index(i)], m2[R.pos_index(i)]);
            if (k[j] < lim) {
                ++k[j];
                break;
            }
            k[j] = 0;
        }
        if (j == cross.size()) break;
    }
}

}  // namespace

WeylElem weyl_mul(const WeylElem& a, const WeylElem& b) {
    if (!a.ring() || !b.ring() || !(*a.ring() == *b.ring()))
        throw std::invalid_argument("weyl_mul: ring mismatch");
    WeylElem out(a.ring());
    const WeylRing& R = *a.ring();
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms()) term_mul_into(out, R, m1, c1, m2, c2);
    return out;
}

WeylElem weyl_pow(const WeylElem& a, unsigned k) {
    WeylElem r(a.ring(), Rat(1));
    WeylElem base = a;
    while (k) {
        if (k & 1) r = weyl_mul(r, base);
        if (k >>= 1) base = weyl_mul(base, base);
    }
    return r;
}

WeylElem lift_poly(const MPoly& p, const WeylRingPtr& ring) {
    const auto& vars = p.ring()->vars();
    std::vector<std::size_t> map(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        int idx = ring->index_of(vars[i]);
        if (idx < 0 || ring->is_derivation(static_cast<std::size_t>(idx)))
            throw std::invalid_argument("lift_poly: variable '" + vars[i] +
                                        "' is not a commuting symbol of the Weyl ring");
        map[i] = static_cast<std::size_t>(idx);
    }
    WeylElem out(ring);
    for (const auto& [m, c] : p.terms()) {
        Mono mm(ring->nsym(), 0);
        for (std::size_t i = 0; i < vars.size(); ++i) mm[map[i]] = m[i];
        out.add_term(mm, c);
    }
    return out;
}

bool IdentityReport::all_pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

namespace {

// evaluate a univariate polynomial (given as rational coefficient list,
// lowest first) at a Weyl element
WeylElem eval_at(const std::vector<Rat>& coeffs, const WeylElem& x) {
    WeylElem acc(x.ring());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = weyl_mul(acc, x) + WeylElem(x.ring(), *it);
    return acc;
}

// coeffs of P(s + shift) from coeffs of P(s)
std::vector<Rat> shift_coeffs(const std::vector<Rat>& coeffs, long shift) {
    std::vector<Rat> out(coeffs.size(), Rat(0));
    // Horner in (s + shift)
    std::vector<Rat> acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] += acc[i] * Rat(shift);
        }
        next[0] += *it;
        acc = std::move(next);
    }
    acc.resize(coeffs.size(), Rat(0));
    return acc;
}

}  // namespace

IdentityReport verify_appendix_identities(int m_max, int battery_size) {
    IdentityReport rep;
    auto R = make_weyl_ring({"t"}, {"dt"});
    WeylElem t = WeylElem::symbol(R, R->pos_index(0));
    WeylElem dt = WeylElem::symbol(R, R->der_index(0));
    WeylElem s = -weyl_mul(dt, t);  // sign convention fixed globally

    std::mt19937_64 rng(0x5eed);
    auto rand_rat = [&rng]() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
        return make_rat(num(rng), den(rng));
    };
    std::vector<std::vector<Rat>> battery;
    for (int i = 0; i < battery_size; ++i) {
        int deg = i % 4;
        std::vector<Rat> c(deg + 1);
        for (auto& x : c) x = rand_rat();
        if (c.back() == 0) c.back() = Rat(1);
        battery.push_back(std::move(c));
    }

    for (int m = 1; m <= m_max; ++m) {
        WeylElem tm = weyl_pow(t, m);
        WeylElem dtm = weyl_pow(dt, m);

        // [d, t^m] = m t^{m-1}
        {
            WeylElem lhs = weyl_mul(dt, tm) - weyl_mul(tm, dt);
            WeylElem rhs = weyl_pow(t, m - 1) * Rat(m);
            rep.items.push_back({"commutator_d_t^" + std::to_string(m), lhs == rhs});
        }
        // [t, d^m] = -m d^{m-1}
        {
            WeylElem lhs = weyl_mul(t, dtm) - weyl_mul(dtm, t);
            WeylElem rhs = weyl_pow(dt, m - 1) * Rat(-m);
            rep.items.push_back({"commutator_t_d^" + std::to_string(m), lhs == rhs});
        }
        // d^m t^m = (-1)^m s(s-1)...(s-m+1)
        {
            WeylElem lhs = weyl_mul(dtm, tm);
            WeylElem rhs(R, Rat(1));
            for (int j = 0; j < m; ++j) rhs = weyl_mul(rhs, s - WeylElem(R, Rat(j)));
            rhs = rhs * Rat((m % 2 == 0) ? 1 : -1);
            rep.items.push_back({"falling_factorial_m" + std::to_string(m), lhs == rhs});
        }
        // P(s) d^m = d^m P(s+m) and P(s) t^m = t^m P(s-m)
        for (std::size_t bi = 0; bi < battery.size(); ++bi) {
            const auto& P = battery[bi];
            WeylElem Ps = eval_at(P, s);
            bool ok1 = weyl_mul(Ps, dtm) == weyl_mul(dtm, eval_at(shift_coeffs(P, m), s));
            bool ok2 = weyl_mul(Ps, tm) == weyl_mul(tm, eval_at(shift_coeffs(P, -m), s));
            rep.items.push_back(
                {"shift_past_d^" + std::to_string(m) + "_P" + std::to_string(bi), ok1});
            rep.items.push_back(
                {"shift_past_t^" + std::to_string(m) + "_P" + std::to_string(bi), ok2});
        }
    }
    return rep;
}

}  // namespace bsato
