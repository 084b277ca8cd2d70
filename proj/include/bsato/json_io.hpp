#pragma once

#include <json.hpp>

#include "bsato/ansatz.hpp"
#include "bsato/lci.hpp"

namespace bsato {

/// Deterministic JSON (insertion-ordered keys, exact "p/q" rationals).
using Json = nlohmann::ordered_json;

Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json extrat_json(const ExtRat& e);
ExtRat extrat_from_json(const Json& j);

Json unipoly_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json bfunction_json(const BFunction& b);

Json weyl_elem_json(const WeylElem& e);
WeylElem weyl_elem_from_json(const Json& j, const WeylRingPtr& ring);

inline constexpr const char* kCertificateSchema = "bsato.certificate/1";

Json certificate_json(const MPoly& f, const Certificate& cert);

struct LoadedCertificate {
    PolyRingPtr ring;
    MPoly f;
    Certificate cert;
};
LoadedCertificate certificate_from_json(const Json& j);

Json hodge_level_json(const HodgeLevel& h);
Json check_json(const CheckResult& c);
Json invariant_report_json(const InvariantReport& rep);

}  // namespace bsato
