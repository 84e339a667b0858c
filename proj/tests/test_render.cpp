#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sgp/render.hpp"

using namespace sgp;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("sgp_render_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("table renderings") {
  const auto t = family_table(FiniteGroup::dihedral(5));
  const auto text = lines(render_table(t, Format::Text));
  REQUIRE(text.size() == 5);
  CHECK(text[0].find("1  a") != std::string::npos);
  CHECK(text[1].rfind("χ_1", 0) == 0);
  CHECK(text[4].rfind("ψ_2", 0) == 0);

  const auto one = lines(render_table(family_table(FiniteGroup::cyclic(1)), Format::Text));
  REQUIRE(one.size() == 2);
  CHECK(one[1] == "μ_0  1");

  const auto j = nlohmann::json::parse(render_table(family_table(FiniteGroup::dicyclic(3)), Format::Json));
  CHECK(j.at("group") == "Dic12");
  std::vector<std::string> names;
  for (const auto& r : j.at("rows")) names.push_back(r.at("name"));
  CHECK(names == std::vector<std::string>{"θ_1", "θ_2", "θ_3", "θ_4", "π_1", "γ_1"});
  CHECK(j.at("classes").size() == 6);
  for (const auto& r : j.at("rows")) CHECK(r.at("values").size() == 6);

  const auto csv = lines(render_table(family_table(FiniteGroup::dihedral(5)), Format::Csv));
  CHECK(csv.size() == 5);
  CHECK(csv[0] == "character,1,a,a^2,b");
}

TEST_CASE("classification renderings carry the same records") {
  const auto g = FiniteGroup::dihedral(6);
  const auto report = classify_subgroups(g);
  const auto text = lines(render_classification(report, Format::Text));
  const auto csv = lines(render_classification(report, Format::Csv));
  const auto j = nlohmann::json::parse(render_classification(report, Format::Json));
  CHECK(text.size() == report.records.size());
  CHECK(csv.size() == report.records.size() + 1);
  CHECK(j.at("subgroups").size() == report.records.size());
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& rec = report.records[i];
    const std::string members = rec.subgroup.to_string();
    CHECK(text[i].find("members=" + members) != std::string::npos);
    CHECK(csv[i + 1].find(members) != std::string::npos);
    CHECK(j.at("subgroups")[i].at("strong_gelfand") == rec.strong_gelfand);
    CHECK(j.at("subgroups")[i].contains("witness") == rec.witness.has_value());
  }
  const auto triv = lines(render_classification(classify_subgroups(FiniteGroup::dihedral(5)), Format::Text));
  CHECK(triv.size() == 8);
  CHECK(triv[0].find("strong=no witness=(μ_0, ψ_1, 2)") != std::string::npos);
}

TEST_CASE("audit renderings") {
  const auto report = audit(Family::Dihedral, {3, 4});
  const auto text = lines(render_audit(report, Format::Text));
  REQUIRE(text.size() == 3);
  CHECK(text[0] == "dihedral n=3 D6 subgroups=6 agree=6 disagree=0");
  CHECK(text[1] == "dihedral n=4 D8 subgroups=10 agree=9 disagree=1");
  CHECK(text[2] == "  C2 {1, a^2} predicted=SGP computed=not-SGP witness=(μ_1, ψ_1, 2)");

  const auto j = nlohmann::json::parse(render_audit(report, Format::Json));
  REQUIRE(j.is_array());
  for (const auto& e : j) {
    for (const char* key : {"family", "n", "subgroups", "discrepancies", "summary"}) CHECK(e.contains(key));
    for (const auto& s : e.at("subgroups")) {
      for (const char* key : {"desc", "order", "gelfand", "strong_gelfand", "predicted_strong_gelfand"})
        CHECK(s.contains(key));
      if (s.contains("witness")) {
        CHECK(s.at("witness").contains("psi"));
        CHECK(s.at("witness").contains("chi"));
        CHECK(s.at("witness").at("mult").get<long>() >= 2);
      }
    }
  }
  CHECK(j[1].at("summary").at("disagree") == 1);

  const auto csv = lines(render_audit(report, Format::Csv));
  CHECK(csv.size() == 4);
  CHECK(csv[3].rfind("discrepancy,dihedral,4,D8", 0) == 0);
}

TEST_CASE("atlas round trip") {
  for (int n : {1, 2, 3, 4, 7}) {
    for (Family f : {Family::Dihedral, Family::Dicyclic, Family::Cyclic}) {
      const auto entry = audit_one(f, n);
      const auto file = atlas_file(entry, family_table(entry.report.group));
      const std::string bytes = to_json(file);
      const AtlasFile back = atlas_from_json(bytes);
      CHECK(back == file);
      CHECK(to_json(back) == bytes);
      CHECK(back.schema_version == kAtlasSchemaVersion);
    }
  }
  CHECK_THROWS_AS(atlas_from_json("{"), ParseError);
  CHECK_THROWS_AS(atlas_from_json("{\"family\": \"dihedral\"}"), ParseError);
  CHECK_THROWS_AS(atlas_from_json("{\"schema_version\": 99}"), ParseError);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("atlas files on disk") {
  const auto dir = scratch("dicyclic");
  const auto manifest = write_atlas(Family::Dicyclic, {2, 3, 4, 5, 6}, dir);
  REQUIRE(manifest.size() == 5);
  for (const auto& m : manifest) {
    const std::string bytes = slurp(dir / m.file);
    CHECK(sha256_hex(bytes) == m.sha256);
    const auto f = atlas_from_json(bytes);
    // <b^2> is never strong Gelfand
    bool seen = false;
    for (const auto& s : f.subgroups) {
      if (s.members.size() == 2 && s.members[1] == "b^2") {
        seen = true;
        CHECK_FALSE(s.strong_gelfand);
        REQUIRE(s.witness.has_value());
        CHECK(s.witness->mult >= 2);
      }
    }
    CHECK(seen);
  }
  const auto listed = nlohmann::json::parse(slurp(dir / "manifest.json"));
  REQUIRE(listed.size() == 5);
  CHECK(listed[0].at("file") == "dicyclic_2.json");

  const auto before = slurp(dir / "dicyclic_4.json");
  write_atlas(Family::Dicyclic, {2, 3, 4, 5, 6}, dir);
  CHECK(slurp(dir / "dicyclic_4.json") == before);

  CHECK_THROWS_AS(write_atlas(Family::Dihedral, {3}, "/proc/sgp-no-such-dir/x"), IoError);
  fs::remove_all(dir);
}
