#include "bpc/harness/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bpc/errors.hpp"

namespace bpc::harness {
namespace {

using nlohmann::json;

Rational parse_size(const json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_number()) return Rational::from_double(value.get<double>());
  throw ParameterError("item size must be a string or a number");
}

std::int64_t parse_id(const json& value) {
  if (!value.is_number_integer()) throw ParameterError("item ids must be integers");
  return value.get<std::int64_t>();
}

// File id per dense id: the labels when they are distinct integers, else the
// dense ids themselves.
std::vector<std::int64_t> file_ids(const ConflictInstance& instance) {
  std::vector<std::int64_t> out;
  std::set<std::int64_t> seen;
  for (ItemId v : instance.ids()) {
    const std::string label = instance.label(v);
    std::int64_t id = 0;
    const auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), id);
    if (ec != std::errc() || ptr != label.data() + label.size() || !seen.insert(id).second) {
      out.assign(instance.ids().begin(), instance.ids().end());
      return out;
    }
    out.push_back(id);
  }
  return out;
}

}  // namespace

ConflictInstance instance_from_json(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("items")) throw ParameterError("instance JSON needs an \"items\" array");
    std::vector<Rational> sizes;
    std::vector<std::string> labels;
    std::map<std::int64_t, ItemId> dense;
    for (const auto& item : doc.at("items")) {
      const std::int64_t id = item.contains("id") ? parse_id(item.at("id")) : static_cast<std::int64_t>(sizes.size());
      if (!dense.emplace(id, static_cast<ItemId>(sizes.size())).second) {
        throw ParameterError("duplicate item id " + std::to_string(id));
      }
      if (!item.contains("size")) throw ParameterError("item " + std::to_string(id) + " has no size");
      sizes.push_back(parse_size(item.at("size")));
      labels.push_back(std::to_string(id));
    }
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParameterError("edges must be [u, v] pairs");
        int ends[2];
        for (std::size_t k = 0; k < 2; ++k) {
          const auto id = parse_id(e[k]);
          const auto it = dense.find(id);
          if (it == dense.end()) throw ParameterError("edge names unknown item " + std::to_string(id));
          ends[k] = it->second;
        }
        edges.emplace_back(ends[0], ends[1]);
      }
    }
    std::optional<std::string> hint;
    if (doc.contains("class_hint") && !doc.at("class_hint").is_null()) hint = doc.at("class_hint").get<std::string>();
    return ConflictInstance::create(std::move(sizes), edges, std::move(hint), std::move(labels));
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed instance JSON: ") + e.what());
  }
}

json instance_to_json(const ConflictInstance& instance) {
  const auto ids = file_ids(instance);
  json items = json::array();
  for (int l = 0; l < instance.size(); ++l) {
    items.push_back({{"id", ids[static_cast<std::size_t>(l)]}, {"size", instance.size_at(l).str()}});
  }
  json edges = json::array();
  for (const auto& [u, v] : instance.graph().edges()) {
    edges.push_back({ids[static_cast<std::size_t>(u)], ids[static_cast<std::size_t>(v)]});
  }
  json doc;
  doc["items"] = std::move(items);
  doc["edges"] = std::move(edges);
  doc["class_hint"] = instance.class_hint() ? json(*instance.class_hint()) : json(nullptr);
  return doc;
}

Packing packing_from_json(const json& doc, const ConflictInstance& instance) {
  try {
    if (!doc.is_object() || !doc.contains("bins")) throw ParameterError("packing JSON needs a \"bins\" array");
    const auto ids = file_ids(instance);
    std::map<std::int64_t, ItemId> dense;
    for (int l = 0; l < instance.size(); ++l) dense.emplace(ids[static_cast<std::size_t>(l)], instance.id(l));
    ItemId next_unknown = instance.ids().empty() ? 0 : instance.ids().back() + 1;
    std::map<std::int64_t, ItemId> unknown;
    Packing out;
    for (const auto& bin : doc.at("bins")) {
      if (!bin.is_array()) throw ParameterError("each bin must be an array of item ids");
      ItemSet items;
      for (const auto& v : bin) {
        const auto id = parse_id(v);
        if (const auto it = dense.find(id); it != dense.end()) {
          items.push_back(it->second);
        } else {
          const auto [u, fresh] = unknown.emplace(id, next_unknown);
          if (fresh) ++next_unknown;
          items.push_back(u->second);
        }
      }
      out.bins.push_back(std::move(items));
    }
    if (doc.contains("source") && doc.at("source").is_string()) out.source = doc.at("source").get<std::string>();
    return out;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed packing JSON: ") + e.what());
  }
}

json packing_to_json(const Packing& packing, const ConflictInstance& instance) {
  const auto ids = file_ids(instance);
  json bins = json::array();
  for (const auto& bin : packing.bins) {
    json b = json::array();
    for (ItemId v : bin) {
      const int l = instance.local(v);
      b.push_back(l >= 0 ? ids[static_cast<std::size_t>(l)] : static_cast<std::int64_t>(v));
    }
    bins.push_back(std::move(b));
  }
  json doc;
  doc["bins"] = std::move(bins);
  if (!packing.source.empty()) doc["source"] = packing.source;
  return doc;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParameterError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path.string());
  out << text;
}

void write_json(const std::filesystem::path& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

ConflictInstance read_instance(const std::filesystem::path& path) { return instance_from_json(read_json(path)); }

void write_instance(const std::filesystem::path& path, const ConflictInstance& instance) {
  write_json(path, instance_to_json(instance));
}

}  // namespace bpc::harness
