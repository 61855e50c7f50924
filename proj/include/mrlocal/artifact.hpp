// Code-artifact files: a JSON document carrying params, field specs, layout
// metadata, the point grid and every parity entry as coefficient lists, plus
// a content hash over the semantic fields. Loading validates the hash and
// re-serialization of a loaded artifact is byte-identical.

#ifndef MRLOCAL_ARTIFACT_HPP
#define MRLOCAL_ARTIFACT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "mrlocal/construction.hpp"

namespace mrlocal {

using json = nlohmann::ordered_json;

json instance_to_json(const CodeInstance& inst);
CodeInstance instance_from_json(const json& doc);

void save_artifact(const std::string& path, const CodeInstance& inst);
CodeInstance load_artifact(const std::string& path);

/// FNV-1a over the canonical serialization of the semantic fields.
uint64_t artifact_hash(const CodeInstance& inst);

/// Recomputes the heavy rows from the stored layout and points; equal to
/// inst.parity for any intact artifact.
FMatrix rebuild_parity(const CodeInstance& inst);

std::string render_artifact(const CodeInstance& inst);  // exact file bytes

}  // namespace mrlocal

#endif
