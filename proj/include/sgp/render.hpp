#pragma once

// Text, JSON and CSV renderings of character tables, classification reports
// and audits, plus the per-(family, n) atlas documents.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sgp/character.hpp"
#include "sgp/gelfand.hpp"

namespace sgp {

enum class Format { Text, Json, Csv };

Format parse_format(std::string_view name);

std::string render_table(const CharacterTable& table, Format format);
std::string render_classification(const ClassificationReport& report, Format format);
std::string render_audit(const AuditReport& report, Format format);

struct TableDoc {
  std::string group;
  std::vector<std::string> classes;  // representative labels
  std::vector<int> class_sizes;
  struct Row {
    std::string name;
    std::vector<std::string> values;
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::vector<Row> rows;

  friend bool operator==(const TableDoc&, const TableDoc&) = default;
};

struct WitnessDoc {
  std::string psi;
  std::string chi;
  long mult = 0;
  friend bool operator==(const WitnessDoc&, const WitnessDoc&) = default;
};

struct SubgroupDoc {
  std::string desc;
  int order = 1;
  std::vector<std::string> members;
  bool gelfand = false;
  bool strong_gelfand = false;
  std::optional<WitnessDoc> witness;
  bool predicted_strong_gelfand = false;
  friend bool operator==(const SubgroupDoc&, const SubgroupDoc&) = default;
};

struct DiscrepancyDoc {
  std::size_t subgroup = 0;  // index into subgroups
  std::string desc;
  bool predicted = false;
  bool computed = false;
  friend bool operator==(const DiscrepancyDoc&, const DiscrepancyDoc&) = default;
};

struct SummaryDoc {
  int total = 0;
  int agree = 0;
  int disagree = 0;
  friend bool operator==(const SummaryDoc&, const SummaryDoc&) = default;
};

inline constexpr int kAtlasSchemaVersion = 1;

struct AtlasFile {
  int schema_version = kAtlasSchemaVersion;
  std::string family;
  int n = 1;
  std::string group;
  TableDoc table;
  std::vector<SubgroupDoc> subgroups;
  std::vector<DiscrepancyDoc> discrepancies;
  SummaryDoc summary;

  friend bool operator==(const AtlasFile&, const AtlasFile&) = default;
};

TableDoc table_doc(const CharacterTable& table);
AtlasFile atlas_file(const AuditEntry& entry, const CharacterTable& table);

std::string to_json(const AtlasFile& file);
/// Throws ParseError on malformed input or a missing/unknown schema_version.
AtlasFile atlas_from_json(const std::string& text);

struct ManifestEntry {
  std::string file;
  std::string sha256;
};

std::string sha256_hex(const std::string& bytes);

/// Writes <family>_<n>.json for every n plus manifest.json into `dir`.
std::vector<ManifestEntry> write_atlas(Family family, const std::vector<int>& ns, const std::filesystem::path& dir,
                                       int max_order = kDefaultMaxOrder);
std::string render_manifest(const std::vector<ManifestEntry>& manifest);

}  // namespace sgp
