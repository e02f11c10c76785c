#ifndef DPOLY_JSON_IO_HPP
#define DPOLY_JSON_IO_HPP

#include <json.hpp>

#include "dpoly/certifier.hpp"
#include "dpoly/kolchin.hpp"

namespace dpoly {

/// Stable, versioned certificate schema. Polynomials and relations are
/// canonical strings; reduction steps are embedded in full.
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json kolchin_to_json(const KolchinWitness& w);

}  // namespace dpoly

#endif
