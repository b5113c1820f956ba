#include "sumorder/json_io.hpp"

#include <cinttypes>
#include <cstdio>

#include "sumorder/errors.hpp"

namespace sumorder {
namespace {

std::int64_t int_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw input_error(std::string("certificate JSON needs integer field '") +
                      key + "'");
  }
  return j[key].get<std::int64_t>();
}

}  // namespace

ordered_json element_to_json(const Element& e) {
  if (e.rank() == 1) return e.coords()[0];
  return ordered_json(e.coords());
}

ordered_json elements_to_json(std::span<const Element> elems) {
  ordered_json arr = ordered_json::array();
  for (const Element& e : elems) arr.push_back(element_to_json(e));
  return arr;
}

ordered_json certificate_to_json(const RectCertificate& cert) {
  ordered_json j;
  j["p"] = cert.p;
  j["ell"] = cert.ell;
  j["lambda"] = cert.lambda;
  j["window_start"] = cert.window_start;
  j["width"] = cert.width;
  ordered_json mapping = ordered_json::array();
  for (const auto& [source, image] : cert.mapping) {
    mapping.push_back(ordered_json::array({source, image}));
  }
  j["mapping"] = std::move(mapping);
  return j;
}

RectCertificate certificate_from_json(const ordered_json& j) {
  if (!j.is_object()) throw input_error("certificate JSON must be an object");
  RectCertificate cert;
  cert.p = int_field(j, "p");
  cert.ell = static_cast<int>(int_field(j, "ell"));
  cert.lambda = int_field(j, "lambda");
  cert.window_start = int_field(j, "window_start");
  cert.width = int_field(j, "width");
  if (!j.contains("mapping") || !j["mapping"].is_array()) {
    throw input_error("certificate JSON needs array field 'mapping'");
  }
  for (const auto& entry : j["mapping"]) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw input_error(
          "certificate mapping entries must be [source, image] pairs");
    }
    cert.mapping.emplace_back(entry[0].get<std::int64_t>(),
                              entry[1].get<std::int64_t>());
  }
  return cert;
}

ordered_json validity_to_json(const ValidityReport& report) {
  ordered_json j;
  j["valid"] = report.valid;
  if (report.first_collision) {
    j["first_collision"] = ordered_json::array(
        {report.first_collision->first, report.first_collision->second});
  } else {
    j["first_collision"] = nullptr;
  }
  j["two_sided"] = report.two_sided;
  ordered_json blocks = ordered_json::array();
  for (const auto& [i, k] : report.zero_blocks) {
    blocks.push_back(ordered_json::array({i, k}));
  }
  j["zero_blocks"] = std::move(blocks);
  return j;
}

ordered_json result_to_json(const SequencingResult& result) {
  ordered_json j;
  j["ordering"] = elements_to_json(result.ordering.elems);
  j["partial_sums"] = elements_to_json(partial_sums(result.ordering));
  j["method"] = method_name(result.method);
  j["verified"] = result.verified;
  if (result.certificate) {
    j["certificate"] = certificate_to_json(*result.certificate);
  }
  if (result.layout) {
    j["layout"] = *result.layout;
  }
  return j;
}

ordered_json sweep_to_json(const SweepReport& report, bool include_timing) {
  ordered_json j;
  j["p"] = report.p;
  j["max_size"] = report.max_size;
  j["engine"] = engine_name(report.engine);
  ordered_json rows = ordered_json::array();
  for (const auto& [size, stats] : report.per_size) {
    ordered_json row;
    row["size"] = size;
    row["subset_count"] = stats.subset_count;
    row["all_sequenceable"] = stats.all_sequenceable;
    row["total_backtrack_nodes"] = stats.total_backtrack_nodes;
    row["max_backtrack_nodes"] = stats.max_backtrack_nodes;
    if (include_timing) row["elapsed_seconds"] = stats.elapsed_seconds;
    rows.push_back(std::move(row));
  }
  j["per_size"] = std::move(rows);
  ordered_json counter = ordered_json::array();
  for (const auto& subset : report.counterexamples) {
    counter.push_back(ordered_json(subset));
  }
  j["counterexamples"] = std::move(counter);
  return j;
}

std::string sweep_to_csv(const SweepReport& report) {
  std::string csv =
      "p,size,subset_count,all_sequenceable,total_backtrack_nodes,"
      "max_backtrack_nodes,elapsed_seconds\n";
  for (const auto& [size, stats] : report.per_size) {
    char line[192];
    std::snprintf(line, sizeof(line),
                  "%" PRId64 ",%d,%" PRIu64 ",%s,%" PRIu64 ",%" PRIu64
                  ",%.6f\n",
                  report.p, size, stats.subset_count,
                  stats.all_sequenceable ? "true" : "false",
                  stats.total_backtrack_nodes, stats.max_backtrack_nodes,
                  stats.elapsed_seconds);
    csv += line;
  }
  return csv;
}

}  // namespace sumorder
