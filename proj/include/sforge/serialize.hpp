#pragma once

#include <json.hpp>

#include "sforge/constructions.hpp"

namespace sforge {

using nlohmann::json;

/// Elements serialize as their little-endian base-p coefficient vectors so
/// reports stay readable independently of the packing.
json elem_to_json(const FieldCtx& ctx, Elem x);
Elem elem_from_json(const FieldCtx& ctx, const json& j);

json field_to_json(const FieldCtx& ctx);
json linmap_to_json(const FieldCtx& ctx, const LinearizedMap& m);
LinearizedMap linmap_from_json(const FieldCtx& ctx, const json& j);

json presemifield_to_json(const Presemifield& s);
json triple_to_json(const FieldCtx& ctx, const IsotopismTriple& t);
json nuclei_to_json(const NucleiReport& r);
json certificate_to_json(const FieldCtx& ctx, const StrongIsoCertificate& c);

} // namespace sforge
