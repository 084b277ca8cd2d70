#include "bsato/rat.hpp"

namespace bsato {

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rat> parse_rat(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rat(Int(text));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Int d(den);
        if (d == 0) return std::nullopt;
        Rat r(Int(num), d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

}  // namespace bsato
