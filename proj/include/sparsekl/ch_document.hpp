#pragma once

// On-disk description of a sparse paving matroid: a UTF-8 JSON object with
// integer fields m and d and a field ch holding a list of lists of 1-based
// ground set elements, e.g. {"m":3,"d":3,"ch":[[1,2,3],[4,5,6]]}.

#include "sparsekl/exactmath.hpp"
#include "sparsekl/sparse_paving.hpp"
#include "sparsekl/subsets.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace sparsekl {

struct ChDocument {
  int m = 0;
  int d = 0;
  std::vector<std::vector<int>> ch;  // 1-based elements, each list sorted

  static ChDocument parse(const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw validation_error(std::string("ch document: not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("d") || !j.contains("ch"))
      throw validation_error("ch document: expected an object with fields m, d, ch");
    if (!j["m"].is_number_integer() || !j["d"].is_number_integer())
      throw validation_error("ch document: m and d must be integers");
    ChDocument doc;
    doc.m = j["m"].get<int>();
    doc.d = j["d"].get<int>();
    if (!j["ch"].is_array()) throw validation_error("ch document: ch must be a list of lists");
    for (const auto& entry : j["ch"]) {
      if (!entry.is_array()) throw validation_error("ch document: ch must be a list of lists");
      std::vector<int> set;
      for (const auto& v : entry) {
        if (!v.is_number_integer())
          throw validation_error("ch document: ground set elements must be integers");
        const int e = v.get<int>();
        if (e < 1 || e > doc.m + doc.d)
          throw validation_error("ch document: element " + std::to_string(e) +
                                 " outside the ground set [" + std::to_string(doc.m + doc.d) +
                                 "]");
        set.push_back(e);
      }
      std::sort(set.begin(), set.end());
      doc.ch.push_back(std::move(set));
    }
    std::sort(doc.ch.begin(), doc.ch.end());
    return doc;
  }

  static ChDocument load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("ch document: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

  std::string serialize() const {
    nlohmann::json j;
    j["m"] = m;
    j["d"] = d;
    j["ch"] = ch;
    return j.dump();
  }

  // Validates on conversion; errors name the violated rule.
  paving::SparsePavingMatroid to_matroid() const {
    std::vector<Mask> masks;
    for (const auto& set : ch) masks.push_back(elements_to_mask(set));
    return paving::validate(m, d, std::move(masks));
  }

  static ChDocument from_matroid(const paving::SparsePavingMatroid& sp) {
    ChDocument doc;
    doc.m = sp.m;
    doc.d = sp.d;
    for (Mask c : sp.ch) doc.ch.push_back(mask_to_elements(c));
    return doc;
  }
};

}  // namespace sparsekl
