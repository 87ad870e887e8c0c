#pragma once

#include <filesystem>
#include <string>

#include "bpc/model.hpp"
#include "json.hpp"

namespace bpc::harness {

/// Instance JSON:
///   {"items": [{"id": 7, "size": "3/20"}, ...], "edges": [[7, 9], ...],
///    "class_hint": "bipartite" | null}
/// Sizes are fraction strings, decimal strings or numbers. File ids map to
/// dense ids in order of appearance and are kept as labels.
[[nodiscard]] ConflictInstance instance_from_json(const nlohmann::json& doc);
[[nodiscard]] nlohmann::json instance_to_json(const ConflictInstance& instance);

/// Packing JSON: {"bins": [[7, 9], [8]]} using the instance's file ids.
/// Ids that the instance does not know are kept as unknown items so that
/// validation reports them.
[[nodiscard]] Packing packing_from_json(const nlohmann::json& doc, const ConflictInstance& instance);
[[nodiscard]] nlohmann::json packing_to_json(const Packing& packing, const ConflictInstance& instance);

/// File helpers. ParameterError on unreadable files or malformed JSON.
[[nodiscard]] nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
void write_text(const std::filesystem::path& path, const std::string& text);

[[nodiscard]] ConflictInstance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const ConflictInstance& instance);

}  // namespace bpc::harness
