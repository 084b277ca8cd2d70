#include "bsato/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace bsato {

PolyRing::PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw std::invalid_argument("duplicate ring variable: " + vars_[i]);
}

int PolyRing::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

PolyRingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(std::move(vars));
}

MPoly::MPoly(PolyRingPtr ring, const Rat& c) : ring_(std::move(ring)) {
    if (c != 0) terms_.emplace(Mono(ring_->size(), 0), c);
}

MPoly MPoly::variable(const PolyRingPtr& ring, std::size_t index, int power) {
    MPoly p(ring);
    Mono m(ring->size(), 0);
    m[index] = static_cast<std::uint16_t>(power);
    if (power != 0 || true) p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
}

long MPoly::degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(mono_degree(m)));
    return d;
}

void MPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    bool ring_eq = (ring_ == o.ring_) || (ring_ && o.ring_ && *ring_ == *o.ring_);
    return ring_eq && terms_ == o.terms_;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly r(ring_, Rat(1));
    MPoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

MPoly MPoly::diff(std::size_t v) const {
    MPoly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Mono mm = m;
        --mm[v];
        r.add_term(mm, c * Rat(static_cast<long>(m[v])));
    }
    return r;
}

MPoly MPoly::substitute(std::size_t v, const Rat& c, const PolyRingPtr& smaller) const {
    MPoly r(smaller);
    for (const auto& [m, coef] : terms_) {
        Rat factor = coef;
        for (unsigned k = 0; k < m[v]; ++k) factor *= c;
        Mono mm;
        mm.reserve(m.size() - 1);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != v) mm.push_back(m[i]);
        r.add_term(mm, factor);
    }
    return r;
}

long MPoly::order_at_origin() const {
    long d = -1;
    for (const auto& [m, c] : terms_) {
        long md = static_cast<long>(mono_degree(m));
        if (d < 0 || md < d) d = md;
    }
    return d;
}

namespace {

// display order: degree descending, then lexicographic on exponents descending
bool display_less(const Mono& a, const Mono& b) {
    auto da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return a < b;
}

}  // namespace

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Mono, Rat>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [](auto* a, auto* b) { return display_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = mono_degree(m) > 0;
        if (a != 1 || !has_var) {
            os << rat_to_string(a);
            if (has_var) os << "*";
        }
        bool varfirst = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!varfirst) os << "*";
            varfirst = false;
            os << ring_->vars()[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser. Grammar (see README):
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | base ('^' NAT)?
//   base    := IDENT | LITERAL | '(' expr ')'
//   LITERAL := NAT ('/' NAT)?
// Implicit multiplication is a syntax error; '/' outside a literal too.

namespace {

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
};

constexpr unsigned kMaxExponent = 200;

class Parser {
public:
    Parser(const std::string& text, const PolyRingPtr& ring) : lex_{text}, ring_(ring) {}

    MPoly run() {
        MPoly p = expr();
        lex_.skip_ws();
        if (lex_.pos != lex_.src.size())
            throw ParseError("unexpected trailing input", lex_.pos);
        return p;
    }

private:
    Lexer lex_;
    const PolyRingPtr& ring_;

    MPoly expr() {
        MPoly p = term();
        for (;;) {
            char c = lex_.peek();
            if (c == '+') {
                ++lex_.pos;
                p = p + term();
            } else if (c == '-') {
                ++lex_.pos;
                p = p - term();
            } else {
                return p;
            }
        }
    }

    MPoly term() {
        MPoly p = factor();
        for (;;) {
            char c = lex_.peek();
            if (c == '*') {
                ++lex_.pos;
                p = p * factor();
            } else if (c == '/') {
                throw ParseError("division is not allowed outside rational literals", lex_.pos);
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
                throw ParseError("implicit multiplication is not allowed; write '*'", lex_.pos);
            } else {
                return p;
            }
        }
    }

    MPoly factor() {
        char c = lex_.peek();
        if (c == '-') {
            ++lex_.pos;
            return -factor();
        }
        MPoly b = base();
        if (lex_.peek() == '^') {
            ++lex_.pos;
            unsigned e = natural("exponent");
            if (e > kMaxExponent)
                throw ParseError("exponent exceeds supported maximum", lex_.pos);
            return b.pow(e);
        }
        return b;
    }

    MPoly base() {
        char c = lex_.peek();
        std::size_t at = lex_.pos;
        if (c == '(') {
            ++lex_.pos;
            MPoly p = expr();
            if (lex_.peek() != ')') throw ParseError("expected ')'", lex_.pos);
            ++lex_.pos;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer("number");
            if (lex_.peek() == '/') {
                ++lex_.pos;
                std::size_t dpos = lex_.pos;
                Int den = integer("denominator");
                if (den == 0) throw ParseError("zero denominator", dpos);
                return MPoly(ring_, make_rat(num, den));
            }
            return MPoly(ring_, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = ident();
            int idx = ring_->index_of(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
            return MPoly::variable(ring_, static_cast<std::size_t>(idx));
        }
        throw ParseError("expected variable, number or '('", lex_.pos);
    }

    std::string ident() {
        lex_.skip_ws();
        std::size_t start = lex_.pos;
        while (lex_.pos < lex_.src.size()) {
            char c = lex_.src[lex_.pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++lex_.pos;
            else
                break;
        }
        return lex_.src.substr(start, lex_.pos - start);
    }

    Int integer(const char* what) {
        lex_.skip_ws();
        std::size_t start = lex_.pos;
        while (lex_.pos < lex_.src.size() &&
               std::isdigit(static_cast<unsigned char>(lex_.src[lex_.pos])))
            ++lex_.pos;
        if (start == lex_.pos)
            throw ParseError(std::string("expected ") + what, lex_.pos);
        return Int(lex_.src.substr(start, lex_.pos - start));
    }

    unsigned natural(const char* what) {
        Int v = integer(what);
        if (v < 0 || v > kMaxExponent) return kMaxExponent + 1;
        return static_cast<unsigned>(v.get_ui());
    }
};

}  // namespace

MPoly mpoly_parse(const std::string& text, const PolyRingPtr& ring) {
    return Parser(text, ring).run();
}

}  // namespace bsato
