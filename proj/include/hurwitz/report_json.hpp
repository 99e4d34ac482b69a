#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "hurwitz/classify.hpp"
#include "hurwitz/datum.hpp"
#include "hurwitz/extension.hpp"
#include "hurwitz/orbit.hpp"

namespace hurwitz {

// All emission goes through ordered_json with a fixed field order, so a
// fixed invocation produces byte-identical output.
using json = nlohmann::ordered_json;

json group_json(const PermGroup& g);
std::shared_ptr<const PermGroup> group_from_json(
    const json& j, std::size_t order_cap = PermGroup::kDefaultOrderCap);

json datum_json(const Datum& d);
Datum datum_from_json(const json& j,
                      std::size_t order_cap = PermGroup::kDefaultOrderCap);

json signature_json(const BranchSignature& s);
json check_json(const Datum::Check& c);
json orbit_json(const Orbit& o);
json type_reports_json(const std::vector<TypeReport>& reports);
json extension_json(const ExtensionReport& r);
json minimal_extension_json(const MinimalExtension& m);
json abelian_certificate_json(const AbelianCertificate& c);

std::string dump(const json& j);  // two-space indent plus trailing newline

}  // namespace hurwitz
