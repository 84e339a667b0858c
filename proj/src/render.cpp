#include "sgp/render.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sgp {

using Json = nlohmann::ordered_json;

namespace {

// Width in code points; every label and value we print is one column per code point.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* sgp_flag(bool b) { return b ? "SGP" : "not-SGP"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> member_labels(const Subgroup& h) {
  std::vector<std::string> out;
  for (int x : h.members()) out.push_back(h.parent()->label(x));
  return out;
}

std::string witness_text(const std::optional<WitnessDoc>& w) {
  if (!w) return "-";
  return "(" + w->psi + ", " + w->chi + ", " + std::to_string(w->mult) + ")";
}

SubgroupDoc subgroup_doc(const SubgroupRecord& r, bool predicted) {
  SubgroupDoc d{r.descriptor.to_string(), r.subgroup.order(), member_labels(r.subgroup), r.gelfand, r.strong_gelfand,
                std::nullopt, predicted};
  if (r.witness) d.witness = WitnessDoc{r.witness->psi, r.witness->chi, r.witness->multiplicity};
  return d;
}

AtlasFile entry_doc(const AuditEntry& entry) {
  AtlasFile f;
  f.family = family_name(entry.family);
  f.n = entry.n;
  f.group = entry.report.group->name();
  for (std::size_t i = 0; i < entry.report.records.size(); ++i) {
    f.subgroups.push_back(subgroup_doc(entry.report.records[i], entry.predicted.at(i)));
  }
  for (const auto& d : entry.discrepancies) {
    f.discrepancies.push_back({d.record, f.subgroups.at(d.record).desc, d.predicted, d.computed});
  }
  f.summary = {entry.total(), entry.agree(), entry.disagree()};
  return f;
}

Json witness_json(const WitnessDoc& w) { return Json{{"psi", w.psi}, {"chi", w.chi}, {"mult", w.mult}}; }

Json subgroup_json(const SubgroupDoc& s, bool with_prediction) {
  Json j{{"desc", s.desc}, {"order", s.order}, {"members", s.members}, {"gelfand", s.gelfand},
         {"strong_gelfand", s.strong_gelfand}};
  if (s.witness) j["witness"] = witness_json(*s.witness);
  if (with_prediction) j["predicted_strong_gelfand"] = s.predicted_strong_gelfand;
  return j;
}

Json table_json(const TableDoc& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(Json{{"name", r.name}, {"values", r.values}});
  return Json{{"group", t.group}, {"classes", t.classes}, {"class_sizes", t.class_sizes}, {"rows", rows}};
}

Json entry_json(const AtlasFile& f, bool atlas) {
  Json j;
  if (atlas) j["schema_version"] = f.schema_version;
  j["family"] = f.family;
  j["n"] = f.n;
  j["group"] = f.group;
  if (atlas) j["table"] = table_json(f.table);
  Json subs = Json::array();
  for (const auto& s : f.subgroups) subs.push_back(subgroup_json(s, true));
  j["subgroups"] = subs;
  Json disc = Json::array();
  for (const auto& d : f.discrepancies) {
    disc.push_back(Json{{"subgroup", d.subgroup}, {"desc", d.desc}, {"predicted", d.predicted}, {"computed", d.computed}});
  }
  j["discrepancies"] = disc;
  j["summary"] = Json{{"total", f.summary.total}, {"agree", f.summary.agree}, {"disagree", f.summary.disagree}};
  return j;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

TableDoc table_doc(const CharacterTable& table) {
  const auto& g = *table.group;
  TableDoc t{g.name(), {}, g.classes().sizes, {}};
  for (int rep : g.classes().reps) t.classes.push_back(g.label(rep));
  for (const auto& row : table.irreducibles) {
    TableDoc::Row r{row.name, {}};
    for (const auto& v : row.values) r.values.push_back(v.to_string());
    t.rows.push_back(std::move(r));
  }
  return t;
}

std::string render_table(const CharacterTable& table, Format format) {
  const TableDoc t = table_doc(table);
  if (format == Format::Json) return table_json(t).dump(2) + "\n";
  if (format == Format::Csv) {
    std::vector<std::string> header{"character"};
    header.insert(header.end(), t.classes.begin(), t.classes.end());
    std::string out = csv_line(header);
    for (const auto& r : t.rows) {
      std::vector<std::string> line{r.name};
      line.insert(line.end(), r.values.begin(), r.values.end());
      out += csv_line(line);
    }
    return out;
  }
  std::vector<std::size_t> widths(t.classes.size() + 1, 0);
  for (const auto& r : t.rows) widths[0] = std::max(widths[0], display_width(r.name));
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    widths[c + 1] = display_width(t.classes[c]);
    for (const auto& r : t.rows) widths[c + 1] = std::max(widths[c + 1], display_width(r.values[c]));
  }
  auto line = [&](const std::string& first, const std::vector<std::string>& cells) {
    std::string out = pad(first, widths[0]);
    for (std::size_t c = 0; c < cells.size(); ++c) out += "  " + pad(cells[c], widths[c + 1]);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line("", t.classes);
  for (const auto& r : t.rows) out += line(r.name, r.values);
  return out;
}

std::string render_classification(const ClassificationReport& report, Format format) {
  std::vector<SubgroupDoc> docs;
  for (const auto& r : report.records) docs.push_back(subgroup_doc(r, false));
  const int g_order = report.group->order();

  if (format == Format::Json) {
    Json subs = Json::array();
    for (const auto& d : docs) subs.push_back(subgroup_json(d, false));
    return Json{{"group", report.group->name()}, {"subgroups", subs}}.dump(2) + "\n";
  }
  if (format == Format::Csv) {
    std::string out = csv_line({"desc", "order", "index", "gelfand", "strong_gelfand", "witness_psi", "witness_chi",
                                "witness_mult", "members"});
    for (const auto& d : docs) {
      out += csv_line({d.desc, std::to_string(d.order), std::to_string(g_order / d.order), yes_no(d.gelfand),
                       yes_no(d.strong_gelfand), d.witness ? d.witness->psi : "", d.witness ? d.witness->chi : "",
                       d.witness ? std::to_string(d.witness->mult) : "", "{" + join(d.members, ", ") + "}"});
    }
    return out;
  }
  std::size_t w = 0;
  for (const auto& d : docs) w = std::max(w, display_width(d.desc));
  std::string out;
  for (const auto& d : docs) {
    out += pad(d.desc, w) + "  order=" + std::to_string(d.order) + " index=" + std::to_string(g_order / d.order) +
           " gelfand=" + yes_no(d.gelfand) + " strong=" + yes_no(d.strong_gelfand) +
           " witness=" + witness_text(d.witness) + " members={" + join(d.members, ", ") + "}\n";
  }
  return out;
}

std::string render_audit(const AuditReport& report, Format format) {
  std::vector<AtlasFile> docs;
  for (const auto& e : report.entries) docs.push_back(entry_doc(e));

  if (format == Format::Json) {
    Json all = Json::array();
    for (const auto& d : docs) all.push_back(entry_json(d, false));
    return all.dump(2) + "\n";
  }
  if (format == Format::Csv) {
    std::string out = csv_line({"kind", "family", "n", "group", "total", "agree", "disagree", "desc", "members",
                                "predicted", "computed", "witness_psi", "witness_chi", "witness_mult"});
    for (const auto& d : docs) {
      out += csv_line({"summary", d.family, std::to_string(d.n), d.group, std::to_string(d.summary.total),
                       std::to_string(d.summary.agree), std::to_string(d.summary.disagree), "", "", "", "", "", "",
                       ""});
      for (const auto& x : d.discrepancies) {
        const auto& s = d.subgroups[x.subgroup];
        out += csv_line({"discrepancy", d.family, std::to_string(d.n), d.group, "", "", "", s.desc,
                         "{" + join(s.members, ", ") + "}", sgp_flag(x.predicted), sgp_flag(x.computed),
                         s.witness ? s.witness->psi : "", s.witness ? s.witness->chi : "",
                         s.witness ? std::to_string(s.witness->mult) : ""});
      }
    }
    return out;
  }
  std::string out;
  for (const auto& d : docs) {
    out += d.family + " n=" + std::to_string(d.n) + " " + d.group + " subgroups=" + std::to_string(d.summary.total) +
           " agree=" + std::to_string(d.summary.agree) + " disagree=" + std::to_string(d.summary.disagree) + "\n";
    for (const auto& x : d.discrepancies) {
      const auto& s = d.subgroups[x.subgroup];
      out += "  " + s.desc + " {" + join(s.members, ", ") + "} predicted=" + sgp_flag(x.predicted) +
             " computed=" + sgp_flag(x.computed) + " witness=" + witness_text(s.witness) + "\n";
    }
  }
  return out;
}

AtlasFile atlas_file(const AuditEntry& entry, const CharacterTable& table) {
  AtlasFile f = entry_doc(entry);
  f.table = table_doc(table);
  return f;
}

std::string to_json(const AtlasFile& file) { return entry_json(file, true).dump(2) + "\n"; }

AtlasFile atlas_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    if (!j.contains("schema_version")) throw ParseError("atlas file has no schema_version");
    AtlasFile f;
    f.schema_version = j.at("schema_version").get<int>();
    if (f.schema_version != kAtlasSchemaVersion) {
      throw ParseError("unsupported atlas schema_version " + std::to_string(f.schema_version));
    }
    f.family = j.at("family").get<std::string>();
    f.n = j.at("n").get<int>();
    f.group = j.at("group").get<std::string>();
    const auto& t = j.at("table");
    f.table.group = t.at("group").get<std::string>();
    f.table.classes = t.at("classes").get<std::vector<std::string>>();
    f.table.class_sizes = t.at("class_sizes").get<std::vector<int>>();
    for (const auto& r : t.at("rows")) {
      f.table.rows.push_back({r.at("name").get<std::string>(), r.at("values").get<std::vector<std::string>>()});
    }
    for (const auto& s : j.at("subgroups")) {
      SubgroupDoc d;
      d.desc = s.at("desc").get<std::string>();
      d.order = s.at("order").get<int>();
      d.members = s.at("members").get<std::vector<std::string>>();
      d.gelfand = s.at("gelfand").get<bool>();
      d.strong_gelfand = s.at("strong_gelfand").get<bool>();
      if (s.contains("witness")) {
        const auto& w = s.at("witness");
        d.witness = WitnessDoc{w.at("psi").get<std::string>(), w.at("chi").get<std::string>(), w.at("mult").get<long>()};
      }
      d.predicted_strong_gelfand = s.at("predicted_strong_gelfand").get<bool>();
      f.subgroups.push_back(std::move(d));
    }
    for (const auto& d : j.at("discrepancies")) {
      f.discrepancies.push_back({d.at("subgroup").get<std::size_t>(), d.at("desc").get<std::string>(),
                                 d.at("predicted").get<bool>(), d.at("computed").get<bool>()});
    }
    const auto& s = j.at("summary");
    f.summary = {s.at("total").get<int>(), s.at("agree").get<int>(), s.at("disagree").get<int>()};
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed atlas file: ") + e.what());
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalConsistencyError("sha256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string render_manifest(const std::vector<ManifestEntry>& manifest) {
  Json all = Json::array();
  for (const auto& m : manifest) all.push_back(Json{{"file", m.file}, {"sha256", m.sha256}});
  return all.dump(2) + "\n";
}

namespace {

void write_bytes(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace

std::vector<ManifestEntry> write_atlas(Family family, const std::vector<int>& ns, const std::filesystem::path& dir,
                                       int max_order) {
  const AuditReport report = audit(family, ns, max_order);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  std::vector<ManifestEntry> manifest;
  for (const auto& entry : report.entries) {
    const std::string bytes = to_json(atlas_file(entry, family_table(entry.report.group)));
    const std::string name = family_name(family) + "_" + std::to_string(entry.n) + ".json";
    write_bytes(dir / name, bytes);
    manifest.push_back({name, sha256_hex(bytes)});
  }
  write_bytes(dir / "manifest.json", render_manifest(manifest));
  return manifest;
}

}  // namespace sgp
