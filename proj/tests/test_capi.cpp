#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "sgp/sgp.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sgp_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("group handles") {
  sgp_group* g = nullptr;
  REQUIRE(sgp_group_create(SGP_FAMILY_DIHEDRAL, 5, 0, &g) == SGP_OK);
  CHECK(sgp_group_order(g) == 10);
  CHECK(sgp_group_class_count(g) == 4);
  char* name = nullptr;
  REQUIRE(sgp_group_name(g, &name) == SGP_OK);
  CHECK(take(name) == "D10");
  sgp_group_destroy(g);

  CHECK(sgp_group_create(SGP_FAMILY_DIHEDRAL, 0, 0, &g) == SGP_ERR_USAGE);
  CHECK(g == nullptr);
  CHECK(std::string(sgp_last_error()).find("n") != std::string::npos);
  CHECK(sgp_group_create(SGP_FAMILY_DICYCLIC, 65, 0, &g) == SGP_ERR_SIZE_LIMIT);
  CHECK(sgp_group_create(SGP_FAMILY_DICYCLIC, 65, 260, &g) == SGP_OK);
  sgp_group_destroy(g);
  CHECK(sgp_group_create(static_cast<sgp_family>(9), 3, 0, &g) == SGP_ERR_USAGE);
  CHECK(sgp_group_create(SGP_FAMILY_CYCLIC, 3, 0, nullptr) == SGP_ERR_USAGE);
  sgp_group_destroy(nullptr);
  CHECK(sgp_group_order(nullptr) == -1);
}

TEST_CASE("parsing names") {
  sgp_family f{};
  CHECK(sgp_parse_family("dicyclic", &f) == SGP_OK);
  CHECK(f == SGP_FAMILY_DICYCLIC);
  CHECK(sgp_parse_family("product", &f) == SGP_ERR_USAGE);
  CHECK(sgp_parse_family("quaternion", &f) == SGP_ERR_USAGE);
  sgp_format fmt{};
  CHECK(sgp_parse_format("csv", &fmt) == SGP_OK);
  CHECK(fmt == SGP_FORMAT_CSV);
  CHECK(sgp_parse_format("xml", &fmt) == SGP_ERR_USAGE);
}

TEST_CASE("rendering through the C API") {
  sgp_group* g = nullptr;
  REQUIRE(sgp_group_create(SGP_FAMILY_DICYCLIC, 3, 0, &g) == SGP_OK);
  char* out = nullptr;
  REQUIRE(sgp_render_table(g, SGP_FORMAT_JSON, &out) == SGP_OK);
  const std::string table = take(out);
  CHECK(table.find("\"θ_3\"") != std::string::npos);
  REQUIRE(sgp_render_classification(g, SGP_FORMAT_TEXT, &out) == SGP_OK);
  const std::string first = take(out);
  REQUIRE(sgp_render_classification(g, SGP_FORMAT_TEXT, &out) == SGP_OK);
  CHECK(take(out) == first);
  CHECK(first.find("Dic12") != std::string::npos);
  sgp_group_destroy(g);
}

TEST_CASE("audit and atlas through the C API") {
  char* out = nullptr;
  size_t disc = 99;
  REQUIRE(sgp_audit(SGP_FAMILY_DIHEDRAL, 3, 7, 0, SGP_FORMAT_TEXT, &out, &disc) == SGP_OK);
  CHECK(disc == 1);
  CHECK(take(out).find("dihedral n=7") != std::string::npos);
  CHECK(sgp_audit(SGP_FAMILY_DIHEDRAL, 5, 3, 0, SGP_FORMAT_TEXT, &out, &disc) == SGP_ERR_USAGE);
  CHECK(sgp_audit(SGP_FAMILY_DIHEDRAL, 0, 3, 0, SGP_FORMAT_TEXT, &out, nullptr) == SGP_ERR_USAGE);
  CHECK(sgp_audit(SGP_FAMILY_DIHEDRAL, 3, 200, 0, SGP_FORMAT_TEXT, &out, nullptr) == SGP_ERR_SIZE_LIMIT);

  const auto dir = std::filesystem::temp_directory_path() / "sgp_capi_atlas";
  std::filesystem::remove_all(dir);
  REQUIRE(sgp_write_atlas(SGP_FAMILY_DIHEDRAL, 3, 5, 0, dir.c_str(), &out) == SGP_OK);
  const std::string manifest = take(out);
  CHECK(manifest.find("dihedral_5.json") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "manifest.json"));
  CHECK(sgp_write_atlas(SGP_FAMILY_DIHEDRAL, 3, 3, 0, "/proc/sgp-no-such-dir", nullptr) == SGP_ERR_IO);
  std::filesystem::remove_all(dir);
}

TEST_CASE("last error is per thread") {
  sgp_group* g = nullptr;
  CHECK(sgp_group_create(SGP_FAMILY_DIHEDRAL, 0, 0, &g) == SGP_ERR_USAGE);
  std::string other;
  std::thread([&] { other = sgp_last_error(); }).join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(sgp_last_error()).empty());
  CHECK(std::string(sgp_version()) == "1.0.0");
}
