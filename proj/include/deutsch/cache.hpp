#pragma once

// Optional on-disk cache of v(z) prefixes and trinomial rows.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "deutsch/bigint.hpp"
#include "deutsch/series.hpp"
#include "deutsch/substitution.hpp"

namespace deutsch {

/// One versioned JSON file per directory:
///   {"version": 1, "v_of_z": ["0","1",...], "trinomial_rows": {"n": ["1",...]}}
/// Files with another version are ignored and rewritten.
class SeriesCache {
 public:
  static constexpr int kVersion = 1;
  static constexpr const char* kFileName = "deutsch-cache-v1.json";

  explicit SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) { load(); }

  std::filesystem::path file() const { return dir_ / kFileName; }

  /// v(z) through z^order, from the cache when long enough.
  IntSeries v_of_z(std::size_t order) {
    if (doc_.contains("v_of_z") && doc_["v_of_z"].size() > order) {
      std::vector<BigInt> c;
      for (std::size_t k = 0; k <= order; ++k) c.emplace_back(doc_["v_of_z"][k].get<std::string>());
      return IntSeries(std::move(c));
    }
    IntSeries v = v_of_z_int(order);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : v.coefficients()) arr.push_back(c.get_str());
    doc_["v_of_z"] = std::move(arr);
    save();
    return v;
  }

  std::vector<BigInt> trinomial_row(std::size_t n) {
    const std::string key = std::to_string(n);
    auto& rows = doc_["trinomial_rows"];
    if (rows.is_object() && rows.contains(key)) {
      std::vector<BigInt> r;
      for (const auto& x : rows[key]) r.emplace_back(x.get<std::string>());
      return r;
    }
    std::vector<BigInt> r = deutsch::trinomial_row(n);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : r) arr.push_back(c.get_str());
    rows[key] = std::move(arr);
    save();
    return r;
  }

 private:
  void load() {
    doc_ = {{"version", kVersion}, {"trinomial_rows", nlohmann::json::object()}};
    std::ifstream in(file());
    if (!in) return;
    try {
      auto j = nlohmann::json::parse(in);
      if (j.value("version", 0) == kVersion) doc_ = std::move(j);
    } catch (const nlohmann::json::exception&) {
      // Unreadable cache: start over.
    }
    if (!doc_.contains("trinomial_rows")) doc_["trinomial_rows"] = nlohmann::json::object();
  }

  void save() const {
    std::filesystem::create_directories(dir_);
    const auto tmp = file().string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << doc_.dump();
    }
    std::filesystem::rename(tmp, file());
  }

  std::filesystem::path dir_;
  nlohmann::json doc_;
};

}  // namespace deutsch
