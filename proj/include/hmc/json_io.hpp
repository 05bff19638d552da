#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hmc/codec.hpp"
#include "hmc/core.hpp"
#include "hmc/errors.hpp"
#include "hmc/multiset.hpp"

namespace hmc {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kCodebookSchema = "hmc-codebook/1";
inline constexpr const char* kMixtureSchema = "hmc-mixture/1";
inline constexpr const char* kShuffledMixtureSchema = "hmc-mixture-shuffled/1";
inline constexpr const char* kDecodeReportSchema = "hmc-decode-report/1";

inline std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

inline ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open file: " + path);
  out << content;
  if (!out) throw ValidationError("cannot write file: " + path);
}

inline ordered_json codebook_to_json(const Codebook& cb) {
  ordered_json j;
  j["schema"] = kCodebookSchema;
  j["h"] = cb.h;
  j["m"] = cb.m;
  // MSB-first coefficient bits including the x^m term.
  std::string poly_bits;
  for (int i = cb.m; i >= 0; --i)
    poly_bits.push_back(((cb.poly >> i) & 1u) ? '1' : '0');
  j["primitive_poly"] = poly_bits;
  j["n"] = cb.sidon.n;
  ordered_json strings = ordered_json::array();
  for (const auto& s : cb.sidon.strings) strings.push_back(s.str());
  j["strings"] = std::move(strings);
  j["layout"] = {{"n", cb.layout.n},
                 {"block_len", cb.layout.block_len},
                 {"lead_run", cb.layout.lead_run},
                 {"v_len", cb.layout.v_len},
                 {"N", cb.layout.N},
                 {"parity_fix", cb.layout.parity_fix}};
  ordered_json codewords = ordered_json::array();
  for (const auto& cw : cb.codewords) codewords.push_back(cw.str());
  j["codewords"] = std::move(codewords);
  return j;
}

// Loads by rebuilding from (m, h) and demanding the file agree byte for byte;
// a codebook file is a record of a deterministic construction, not free-form
// data, so any edit is rejected.
inline Codebook codebook_from_json(const ordered_json& j) {
  try {
    if (j.at("schema").get<std::string>() != kCodebookSchema)
      throw ValidationError("unsupported schema");
    const int m = j.at("m").get<int>();
    const int h = j.at("h").get<int>();
    Codebook cb = build_codebook(m, h);

    auto expected = codebook_to_json(cb);
    for (const char* key :
         {"primitive_poly", "n", "strings", "layout", "codewords"}) {
      if (j.at(key) != expected.at(key))
        throw ValidationError("codebook file does not match its parameters");
    }
    return cb;
  } catch (const ordered_json::exception& e) {
    throw ValidationError(std::string("malformed codebook file: ") + e.what());
  }
}

inline ordered_json mixture_to_json(const MixtureDocument& doc) {
  ordered_json j;
  j["schema"] = kMixtureSchema;
  j["N"] = doc.n_total;
  j["hmax"] = doc.declared_hmax;
  ordered_json entries = ordered_json::array();
  for (const auto& [c, k] : doc.entries.entries())
    entries.push_back({{"len", c.length()}, {"ones", c.ones}, {"count", k}});
  j["entries"] = std::move(entries);
  return j;
}

// Readout-realism export: every composition as its own text entry, in a
// seeded pseudo-random order. The shuffle is pinned for reproducibility:
// std::mt19937_64(seed), Fisher-Yates with j = next() % (i + 1) for
// i = count-1 down to 1.
inline ordered_json mixture_to_shuffled_json(const MixtureDocument& doc,
                                             std::uint64_t seed) {
  std::vector<std::string> flat;
  for (const auto& [c, k] : doc.entries.entries())
    for (long long copy = 0; copy < k; ++copy) flat.push_back(c.str());

  std::mt19937_64 rng(seed);
  for (std::size_t i = flat.size(); i-- > 1;) {
    const std::size_t pick = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(flat[i], flat[pick]);
  }

  ordered_json j;
  j["schema"] = kShuffledMixtureSchema;
  j["N"] = doc.n_total;
  j["hmax"] = doc.declared_hmax;
  j["seed"] = seed;
  j["compositions"] = flat;
  return j;
}

// Accepts both mixture schemas; shuffled input re-canonicalizes, so the
// result never depends on the stored order or seed.
inline MixtureDocument mixture_from_json(const ordered_json& j) {
  try {
    const auto schema = j.at("schema").get<std::string>();
    MixtureDocument doc;
    doc.n_total = j.at("N").get<long long>();
    doc.declared_hmax = j.at("hmax").get<long long>();
    if (doc.n_total < 1 || doc.declared_hmax < 1)
      throw ValidationError("malformed mixture");

    if (schema == kMixtureSchema) {
      for (const auto& e : j.at("entries")) {
        const long long len = e.at("len").get<long long>();
        const long long ones = e.at("ones").get<long long>();
        const long long count = e.at("count").get<long long>();
        if (len < 1 || ones < 0 || ones > len || count < 1)
          throw ValidationError("malformed mixture");
        doc.entries.add(Composition{len - ones, ones}, count);
      }
    } else if (schema == kShuffledMixtureSchema) {
      for (const auto& e : j.at("compositions"))
        doc.entries.add(Composition::parse(e.get<std::string>()));
    } else {
      throw ValidationError("unsupported schema");
    }
    if (doc.entries.empty()) throw ValidationError("malformed mixture");
    return doc;
  } catch (const ordered_json::exception& e) {
    throw ValidationError(std::string("malformed mixture file: ") + e.what());
  }
}

inline ordered_json decode_report_to_json(const DecodeResult& result) {
  ordered_json j;
  j["schema"] = kDecodeReportSchema;
  j["h_bar"] = result.h_bar;
  ordered_json indices = ordered_json::array();
  for (auto i : result.indices) indices.push_back(i);
  j["codeword_indices"] = std::move(indices);
  ordered_json codewords = ordered_json::array();
  for (const auto& cw : result.codewords) codewords.push_back(cw.str());
  j["codewords"] = std::move(codewords);
  ordered_json stages;
  for (const auto& [name, ms] : result.stage_ms) stages[name] = ms;
  j["stages"] = std::move(stages);
  return j;
}

}  // namespace hmc
