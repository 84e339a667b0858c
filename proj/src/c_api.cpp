#include "sgp/sgp.h"

#include <cstring>
#include <memory>
#include <new>
#include <numeric>

#include "sgp/render.hpp"

struct sgp_group {
  sgp::GroupPtr group;
  int max_order = sgp::kDefaultMaxOrder;
  std::unique_ptr<sgp::GelfandAnalyzer> analyzer;
};

namespace {

thread_local std::string last_error;

sgp_status status_for(const std::string& kind) {
  if (kind == "internal-consistency" || kind == "integrality" || kind == "oracle-failure") return SGP_ERR_INTERNAL;
  if (kind == "size-limit") return SGP_ERR_SIZE_LIMIT;
  if (kind == "unsupported") return SGP_ERR_UNSUPPORTED;
  if (kind == "io") return SGP_ERR_IO;
  if (kind == "invalid-parameter" || kind == "invalid-order" || kind == "parse") return SGP_ERR_USAGE;
  return SGP_ERR_INTERNAL;
}

template <class F>
sgp_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const sgp::Error& e) {
    last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return SGP_ERR_INTERNAL;
}

sgp_status usage(const char* message) {
  last_error = message;
  return SGP_ERR_USAGE;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sgp::Family family_of(sgp_family f) {
  switch (f) {
    case SGP_FAMILY_CYCLIC: return sgp::Family::Cyclic;
    case SGP_FAMILY_DIHEDRAL: return sgp::Family::Dihedral;
    case SGP_FAMILY_DICYCLIC: return sgp::Family::Dicyclic;
  }
  throw sgp::InvalidParameter("unknown family code " + std::to_string(static_cast<int>(f)));
}

sgp::Format format_of(sgp_format f) {
  switch (f) {
    case SGP_FORMAT_TEXT: return sgp::Format::Text;
    case SGP_FORMAT_JSON: return sgp::Format::Json;
    case SGP_FORMAT_CSV: return sgp::Format::Csv;
  }
  throw sgp::InvalidParameter("unknown format code " + std::to_string(static_cast<int>(f)));
}

int bound(int max_order) { return max_order > 0 ? max_order : sgp::kDefaultMaxOrder; }

std::vector<int> range(int first, int last) {
  if (first < 1 || last < first) {
    throw sgp::InvalidParameter("range " + std::to_string(first) + ".." + std::to_string(last) +
                                " is empty or starts below 1");
  }
  std::vector<int> ns(static_cast<std::size_t>(last - first + 1));
  std::iota(ns.begin(), ns.end(), first);
  return ns;
}

}  // namespace

extern "C" {

const char* sgp_version(void) { return "1.0.0"; }

const char* sgp_last_error(void) { return last_error.c_str(); }

void sgp_string_free(char* s) { std::free(s); }

sgp_status sgp_parse_family(const char* name, sgp_family* out) {
  if (!name || !out) return usage("null argument");
  return guarded([&] {
    const sgp::Family f = sgp::parse_family(name);
    if (f == sgp::Family::Product) throw sgp::ParseError("products are not available here");
    *out = f == sgp::Family::Cyclic ? SGP_FAMILY_CYCLIC : f == sgp::Family::Dihedral ? SGP_FAMILY_DIHEDRAL
                                                                                   : SGP_FAMILY_DICYCLIC;
    return SGP_OK;
  });
}

sgp_status sgp_parse_format(const char* name, sgp_format* out) {
  if (!name || !out) return usage("null argument");
  return guarded([&] {
    switch (sgp::parse_format(name)) {
      case sgp::Format::Text: *out = SGP_FORMAT_TEXT; break;
      case sgp::Format::Json: *out = SGP_FORMAT_JSON; break;
      case sgp::Format::Csv: *out = SGP_FORMAT_CSV; break;
    }
    return SGP_OK;
  });
}

sgp_status sgp_group_create(sgp_family family, int n, int max_order, sgp_group** out) {
  if (!out) return usage("null argument");
  *out = nullptr;
  return guarded([&] {
    const sgp::Family f = family_of(family);
    if (n < 1) throw sgp::InvalidParameter("n must be at least 1");
    const int limit = bound(max_order);
    if (sgp::family_order(f, n) > limit) {
      throw sgp::SizeLimitError("|G| = " + std::to_string(sgp::family_order(f, n)) + " exceeds the order bound " +
                                std::to_string(limit));
    }
    auto g = std::make_unique<sgp_group>();
    g->group = sgp::FiniteGroup::construct(f, n);
    g->max_order = limit;
    *out = g.release();
    return SGP_OK;
  });
}

void sgp_group_destroy(sgp_group* group) { delete group; }

int sgp_group_order(const sgp_group* group) { return group ? group->group->order() : -1; }

int sgp_group_class_count(const sgp_group* group) { return group ? group->group->classes().count() : -1; }

sgp_status sgp_group_name(const sgp_group* group, char** out) {
  if (!group || !out) return usage("null argument");
  return guarded([&] {
    *out = dup(group->group->name());
    return SGP_OK;
  });
}

sgp_status sgp_render_table(const sgp_group* group, sgp_format format, char** out) {
  if (!group || !out) return usage("null argument");
  *out = nullptr;
  return guarded([&] {
    const sgp::CharacterTable table = sgp::family_table(group->group);
    const sgp::ValidationReport report = sgp::validate_table(table);
    if (!report.ok()) {
      last_error = "character table of " + group->group->name() + " failed validation: " + report.failures.front();
      return SGP_ERR_VALIDATION;
    }
    *out = dup(sgp::render_table(table, format_of(format)));
    return SGP_OK;
  });
}

sgp_status sgp_render_classification(sgp_group* group, sgp_format format, char** out) {
  if (!group || !out) return usage("null argument");
  *out = nullptr;
  return guarded([&] {
    if (!group->analyzer) group->analyzer = std::make_unique<sgp::GelfandAnalyzer>(group->group);
    *out = dup(sgp::render_classification(group->analyzer->classify(group->max_order), format_of(format)));
    return SGP_OK;
  });
}

sgp_status sgp_audit(sgp_family family, int first, int last, int max_order, sgp_format format, char** out,
                     size_t* discrepancies) {
  if (!out) return usage("null argument");
  *out = nullptr;
  return guarded([&] {
    const sgp::AuditReport report = sgp::audit(family_of(family), range(first, last), bound(max_order));
    *out = dup(sgp::render_audit(report, format_of(format)));
    if (discrepancies) *discrepancies = report.discrepancy_count();
    return SGP_OK;
  });
}

sgp_status sgp_write_atlas(sgp_family family, int first, int last, int max_order, const char* dir, char** manifest) {
  if (!dir) return usage("null argument");
  if (manifest) *manifest = nullptr;
  return guarded([&] {
    const auto entries = sgp::write_atlas(family_of(family), range(first, last), dir, bound(max_order));
    if (manifest) *manifest = dup(sgp::render_manifest(entries));
    return SGP_OK;
  });
}

}  // extern "C"
