#include "bsato/json_io.hpp"

namespace bsato {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
    auto parsed = parse_rat(j.get<std::string>());
    if (!parsed) throw std::invalid_argument("malformed rational: " + j.dump());
    return *parsed;
}

Json extrat_json(const ExtRat& e) { return e.infinite ? Json("inf") : rat_json(e.value); }

ExtRat extrat_from_json(const Json& j) {
    if (j.get<std::string>() == "inf") return ExtRat::inf();
    return ExtRat::finite(rat_from_json(j));
}

Json unipoly_json(const UniPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rat_json(c));
    return coeffs;
}

UniPoly unipoly_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_json(c));
    return UniPoly(std::move(coeffs));
}

Json bfunction_json(const BFunction& b) {
    Json out;
    out["poly"] = unipoly_json(b.poly);
    out["display"] = b.poly.to_string();
    Json roots = Json::array();
    for (const auto& [r, mult] : b.roots) roots.push_back(Json::array({rat_json(r), mult}));
    out["roots"] = roots;
    out["residual"] = unipoly_json(b.residual);
    return out;
}

Json weyl_elem_json(const WeylElem& e) {
    const auto& R = e.ring();
    Json terms = Json::array();
    for (const auto& [m, c] : e.terms()) {
        Json t;
        t["c"] = rat_json(c);
        Json pos = Json::array(), der = Json::array();
        for (std::size_t i = 0; i < R->npos(); ++i) {
            pos.push_back(m[R->pos_index(i)]);
            der.push_back(m[R->der_index(i)]);
        }
        t["pos"] = pos;
        t["der"] = der;
        if (R->npar() > 0) t["s"] = m[R->par_index(0)];
        terms.push_back(t);
    }
    return terms;
}

WeylElem weyl_elem_from_json(const Json& j, const WeylRingPtr& ring) {
    WeylElem e(ring);
    for (const auto& t : j) {
        Mono m(ring->nsym(), 0);
        const auto& pos = t.at("pos");
        const auto& der = t.at("der");
        if (pos.size() != ring->npos() || der.size() != ring->npos())
            throw std::invalid_argument("operator term arity mismatch");
        for (std::size_t i = 0; i < ring->npos(); ++i) {
            m[ring->pos_index(i)] = pos[i].get<std::uint16_t>();
            m[ring->der_index(i)] = der[i].get<std::uint16_t>();
        }
        if (t.contains("s")) {
            if (ring->npar() == 0) throw std::invalid_argument("operator has s but ring does not");
            m[ring->par_index(0)] = t["s"].get<std::uint16_t>();
        }
        e.add_term(m, rat_from_json(t.at("c")));
    }
    return e;
}

Json certificate_json(const MPoly& f, const Certificate& cert) {
    Json out;
    out["schema"] = kCertificateSchema;
    out["vars"] = f.ring()->vars();
    out["f"] = f.to_string();
    out["b"] = unipoly_json(cert.b);
    out["b_display"] = cert.b.to_string();
    out["P"] = weyl_elem_json(cert.P);
    return out;
}

LoadedCertificate certificate_from_json(const Json& j) {
    if (!j.contains("schema") || j["schema"].get<std::string>() != kCertificateSchema)
        throw std::invalid_argument("unknown certificate schema");
    LoadedCertificate out;
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    out.ring = make_ring(vars);
    out.f = mpoly_parse(j.at("f").get<std::string>(), out.ring);
    out.cert.b = unipoly_from_json(j.at("b"));
    out.cert.P = weyl_elem_from_json(j.at("P"), weyl_over(out.ring, true));
    return out;
}

Json hodge_level_json(const HodgeLevel& h) {
    return h.infinite ? Json("inf") : Json(h.value);
}

Json check_json(const CheckResult& c) {
    Json out;
    out["name"] = c.name;
    switch (c.status) {
        case CheckResult::Status::pass: out["status"] = "pass"; break;
        case CheckResult::Status::fail: out["status"] = "fail"; break;
        case CheckResult::Status::skipped: out["status"] = "skipped"; break;
        case CheckResult::Status::error: out["status"] = "error"; break;
    }
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
}

Json invariant_report_json(const InvariantReport& rep) {
    Json out;
    out["alpha"] = rep.alpha ? extrat_json(*rep.alpha) : Json(nullptr);
    out["b_z"] = rep.bz ? bfunction_json(*rep.bz) : Json(nullptr);
    out["lct"] = rep.lct_value ? rat_json(*rep.lct_value) : Json(nullptr);
    out["gamma"] = rep.gamma ? extrat_json(*rep.gamma) : Json(nullptr);
    out["p_level"] = rep.p_level ? hodge_level_json(*rep.p_level) : Json(nullptr);
    out["smooth"] = rep.smooth ? Json(*rep.smooth) : Json(nullptr);
    out["rational"] = rep.rational ? Json(*rep.rational) : Json(nullptr);
    out["du_bois"] = rep.du_bois ? Json(*rep.du_bois) : Json(nullptr);
    Json chart = Json::array();
    for (const auto& e : rep.chart_exps) chart.push_back(extrat_json(e));
    out["chart_exponents"] = chart;
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back(check_json(c));
    out["checks"] = checks;
    out["errors"] = rep.errors;
    return out;
}

}  // namespace bsato
