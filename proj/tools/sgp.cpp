// sgp: character tables, strong Gelfand classification, audits and atlases
// for the cyclic, dihedral and dicyclic families.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sgp/sgp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitValidation = 3;

int exit_code(sgp_status s) {
  switch (s) {
    case SGP_OK: return kExitOk;
    case SGP_ERR_INTERNAL: return kExitInternal;
    case SGP_ERR_VALIDATION: return kExitValidation;
    case SGP_ERR_USAGE:
    case SGP_ERR_IO:
    case SGP_ERR_SIZE_LIMIT:
    case SGP_ERR_UNSUPPORTED: return kExitUsage;
  }
  return kExitInternal;
}

int fail(sgp_status s) {
  std::cerr << "sgp: " << sgp_last_error() << "\n";
  return exit_code(s);
}

struct Range {
  int first = 0;
  int last = 0;
};

std::optional<int> parse_positive(const std::string& s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  const int v = std::stoi(s);
  if (v < 1) return std::nullopt;
  return v;
}

std::optional<Range> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    auto n = parse_positive(s);
    if (!n) return std::nullopt;
    return Range{*n, *n};
  }
  auto a = parse_positive(s.substr(0, dots));
  auto b = parse_positive(s.substr(dots + 2));
  if (!a || !b || *b < *a) return std::nullopt;
  return Range{*a, *b};
}

struct Options {
  std::string command;
  std::string family;
  std::string range;
  std::string format = "text";
  std::string out;
  bool fail_on_discrepancy = false;
  int max_order = 0;
};

int emit(const char* text, const std::string& out) {
  if (out.empty()) {
    std::fputs(text, stdout);
    return kExitOk;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) {
    std::cerr << "sgp: cannot write " << out << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong Gelfand pairs of cyclic, dihedral and dicyclic groups"};
  app.set_version_flag("--version", std::string(sgp_version()));
  Options o;
  app.add_option("command", o.command, "table | classify | audit | atlas")
      ->required()
      ->check(CLI::IsMember({"table", "classify", "audit", "atlas"}));
  app.add_option("family", o.family, "cyclic | dihedral | dicyclic")
      ->required()
      ->check(CLI::IsMember({"cyclic", "dihedral", "dicyclic"}));
  app.add_option("n", o.range, "n or an inclusive range a..b")->required();
  app.add_option("--format", o.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", o.out, "output file (atlas: output directory)");
  app.add_flag("--fail-on-discrepancy", o.fail_on_discrepancy, "audit: exit 3 when any discrepancy is found");
  app.add_option("--max-order", o.max_order, "bound on |G| (default: $SGP_MAX_ORDER or 256)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (o.max_order == 0) {
    if (const char* env = std::getenv("SGP_MAX_ORDER"); env && *env) {
      auto v = parse_positive(env);
      if (!v) {
        std::cerr << "sgp: SGP_MAX_ORDER must be a positive integer\n";
        return kExitUsage;
      }
      o.max_order = *v;
    }
  }

  const auto range = parse_range(o.range);
  if (!range) {
    std::cerr << "sgp: '" << o.range << "' is not n >= 1 or a nonempty range a..b\n";
    return kExitUsage;
  }
  sgp_family family{};
  sgp_format format{};
  if (auto s = sgp_parse_family(o.family.c_str(), &family); s != SGP_OK) return fail(s);
  if (auto s = sgp_parse_format(o.format.c_str(), &format); s != SGP_OK) return fail(s);

  char* text = nullptr;
  int rc = kExitOk;

  if (o.command == "table" || o.command == "classify") {
    if (range->first != range->last) {
      std::cerr << "sgp: " << o.command << " takes a single n\n";
      return kExitUsage;
    }
    sgp_group* g = nullptr;
    if (auto s = sgp_group_create(family, range->first, o.max_order, &g); s != SGP_OK) return fail(s);
    const sgp_status s = o.command == "table" ? sgp_render_table(g, format, &text)
                                              : sgp_render_classification(g, format, &text);
    sgp_group_destroy(g);
    if (s != SGP_OK) return fail(s);
    rc = emit(text, o.out);
  } else if (o.command == "audit") {
    std::size_t discrepancies = 0;
    if (auto s = sgp_audit(family, range->first, range->last, o.max_order, format, &text, &discrepancies);
        s != SGP_OK) {
      return fail(s);
    }
    rc = emit(text, o.out);
    if (rc == kExitOk && o.fail_on_discrepancy && discrepancies > 0) {
      std::cerr << "sgp: " << discrepancies << " discrepanc" << (discrepancies == 1 ? "y" : "ies") << "\n";
      rc = kExitValidation;
    }
  } else {
    const std::string dir = o.out.empty() ? "atlas" : o.out;
    if (auto s = sgp_write_atlas(family, range->first, range->last, o.max_order, dir.c_str(), &text); s != SGP_OK) {
      return fail(s);
    }
    std::fputs(text, stdout);
  }
  sgp_string_free(text);
  return rc;
}
