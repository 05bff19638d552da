#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hmc/codec.hpp"
#include "hmc/core.hpp"
#include "hmc/errors.hpp"
#include "hmc/json_io.hpp"
#include "hmc/multiset.hpp"
#include "hmc/oracle.hpp"
#include "hmc/sidon.hpp"

namespace hmc {

inline constexpr const char* kVerifyReportSchema = "hmc-verify-report/1";
inline constexpr const char* kRateReportSchema = "hmc-rate-report/1";

namespace detail {

// Every command produces one JSON document; --out writes it, --json prints
// it, and the default stdout is a short human summary.
inline void emit(const ordered_json& doc, const std::string& out_path,
                 bool json, const std::string& summary, std::ostream& out) {
  if (!out_path.empty()) write_text_file(out_path, dump_json(doc));
  if (json)
    out << dump_json(doc);
  else
    out << summary << "\n";
}

inline Codebook load_codebook_file(const std::string& path) {
  return codebook_from_json(parse_json(read_text_file(path)));
}

inline int cmd_build(int m, int h, const std::string& out_path, bool json,
                     std::ostream& out) {
  const Codebook cb = build_codebook(m, h);
  std::string summary = "codebook m=" + std::to_string(m) + " h=" +
                        std::to_string(h) + " codewords=" +
                        std::to_string(cb.size()) + " n=" +
                        std::to_string(cb.sidon.n) + " N=" +
                        std::to_string(cb.layout.N);
  if (!out_path.empty()) summary += " -> " + out_path;
  emit(codebook_to_json(cb), out_path, json, summary, out);
  return 0;
}

inline int cmd_mix(const std::string& codebook_path,
                   const std::vector<long long>& indices, std::uint64_t seed,
                   const std::string& out_path, bool json, std::ostream& out) {
  const Codebook cb = load_codebook_file(codebook_path);
  std::set<long long> uniq(indices.begin(), indices.end());
  if (uniq.size() != indices.size())
    throw ValidationError("collection must be a set");

  std::vector<BinaryString> picked;
  for (long long i : indices) {
    if (i < 0) throw ValidationError("column index out of range");
    picked.push_back(encode(cb, static_cast<std::size_t>(i)));
  }
  const MixtureDocument doc = mix(picked, cb.h);
  const ordered_json j = mixture_to_shuffled_json(doc, seed);

  std::string summary = "mixture N=" + std::to_string(doc.n_total) +
                        " strings=" + std::to_string(indices.size()) +
                        " compositions=" + std::to_string(doc.entries.total()) +
                        " seed=" + std::to_string(seed);
  if (!out_path.empty()) summary += " -> " + out_path;
  emit(j, out_path, json, summary, out);
  return 0;
}

inline int cmd_decode(const std::string& codebook_path,
                      const std::string& mixture_path,
                      const std::string& out_path, bool json,
                      std::ostream& out) {
  const Codebook cb = load_codebook_file(codebook_path);
  const MixtureDocument doc =
      mixture_from_json(parse_json(read_text_file(mixture_path)));
  const DecodeResult result = decode(cb, doc);

  std::string summary = "decoded h_bar=" + std::to_string(result.h_bar) +
                        " indices=[";
  for (std::size_t q = 0; q < result.indices.size(); ++q)
    summary += (q ? ", " : "") + std::to_string(result.indices[q]);
  summary += "]";
  if (!out_path.empty()) summary += " -> " + out_path;
  emit(decode_report_to_json(result), out_path, json, summary, out);
  return 0;
}

inline ordered_json max_check(const std::string& name, long long observed,
                              long long bound) {
  return {{"name", name},        {"kind", "max"},
          {"bound", bound},      {"observed", observed},
          {"slack", bound - observed}, {"ok", observed <= bound}};
}

inline ordered_json min_check(const std::string& name, long long observed,
                              long long bound) {
  return {{"name", name},        {"kind", "min"},
          {"bound", bound},      {"observed", observed},
          {"slack", observed - bound}, {"ok", observed >= bound}};
}

inline int cmd_verify(const std::string& scope,
                      const std::string& codebook_path, long long sample,
                      std::uint64_t seed, const std::string& out_path,
                      bool json, std::ostream& out, std::ostream& err) {
  const Codebook cb = load_codebook_file(codebook_path);
  const LayoutParams& L = cb.layout;
  const long long root = L.block_len;
  ordered_json checks = ordered_json::array();

  if (scope == "bh") {
    const auto budget = subset_budget(cb.sidon.strings.size(), cb.h);
    if (budget > kBhVerifyGuard)
      throw GuardError("instance too large for brute force: subset budget " +
                       std::to_string(budget) + " exceeds " +
                       std::to_string(kBhVerifyGuard));
    const BhVerdict verdict = verify_bh(cb.sidon.strings, cb.h);
    ordered_json c = {{"name", "distinct_subset_sums"},
                      {"kind", "all"},
                      {"checked", budget},
                      {"ok", verdict.ok}};
    if (!verdict.ok) {
      ordered_json a = ordered_json::array(), b = ordered_json::array();
      for (const auto& s : verdict.set_a) a.push_back(s.str());
      for (const auto& s : verdict.set_b) b.push_back(s.str());
      c["witness_a"] = std::move(a);
      c["witness_b"] = std::move(b);
    }
    checks.push_back(std::move(c));
  } else if (scope == "mc") {
    if (sample < 1) throw ValidationError("sample must be positive");
    std::vector<std::size_t> pool(cb.size());
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    const std::size_t k =
        std::min<std::size_t>(static_cast<std::size_t>(sample), pool.size());
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i)
      std::swap(pool[i], pool[i + static_cast<std::size_t>(
                                      rng() % (pool.size() - i))]);
    std::vector<BinaryString> sampled;
    for (std::size_t i = 0; i < k; ++i) sampled.push_back(cb.codewords[pool[i]]);

    const auto budget = subset_budget(sampled.size(), cb.h);
    if (budget > kMcVerifyGuard)
      throw GuardError("instance too large for brute force: subset budget " +
                       std::to_string(budget) + " exceeds " +
                       std::to_string(kMcVerifyGuard));
    const McVerdict verdict = is_h_mc_code(sampled, cb.h);
    ordered_json c = {{"name", "unique_multiset_unions"},
                      {"kind", "all"},
                      {"strings", k},
                      {"checked", budget},
                      {"ok", verdict.ok}};
    if (!verdict.ok) {
      ordered_json a = ordered_json::array(), b = ordered_json::array();
      for (const auto& s : verdict.witness.set_a) a.push_back(s.str());
      for (const auto& s : verdict.witness.set_b) b.push_back(s.str());
      c["witness_a"] = std::move(a);
      c["witness_b"] = std::move(b);
    }
    checks.push_back(std::move(c));
  } else if (scope == "dyck") {
    bool all_dyck = true;
    long long min_interior = std::numeric_limits<long long>::max();
    for (const auto& cw : cb.codewords) {
      if (!is_dyck(cw)) all_dyck = false;
      const auto rds = rds_profile(cw);
      for (std::size_t i = 0; i + 1 < rds.size(); ++i)
        min_interior = std::min(min_interior, rds[i]);
    }
    checks.push_back({{"name", "dyck_all_codewords"},
                      {"kind", "all"},
                      {"checked", cb.size()},
                      {"ok", all_dyck}});
    checks.push_back(min_check("interior_rds_min", min_interior, 1));
  } else {  // bounds
    long long max_block_abs = 0, max_u_abs = 0;
    long long min_v = std::numeric_limits<long long>::max(), max_v = 0;
    for (const auto& s : cb.sidon.strings) {
      const BalanceResult bal = balance(s, L);
      const auto rds_u = rds_profile(bal.u);
      for (long long j = 1; j <= L.num_blocks; ++j)
        max_block_abs = std::max(
            max_block_abs,
            std::abs(rds_u[static_cast<std::size_t>(j * L.block_len - 1)]));
      for (long long v : rds_u) max_u_abs = std::max(max_u_abs, std::abs(v));
      const auto rds_v = rds_profile(assemble_v(bal, L));
      for (long long v : rds_v) {
        min_v = std::min(min_v, v);
        max_v = std::max(max_v, v);
      }
    }
    checks.push_back(max_check("block_boundary_rds_abs", max_block_abs, root));
    checks.push_back(max_check("balanced_rds_abs", max_u_abs, 3 * root / 2));
    checks.push_back(min_check("assembled_rds_min", min_v, 1));
    checks.push_back(max_check("assembled_rds_max", max_v, 5 * root + 1));
  }

  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c.at("ok").get<bool>();

  ordered_json rep;
  rep["schema"] = kVerifyReportSchema;
  rep["scope"] = scope;
  rep["m"] = cb.m;
  rep["h"] = cb.h;
  rep["ok"] = all_ok;
  rep["checks"] = checks;

  std::string summary = "verify scope=" + scope + " m=" +
                        std::to_string(cb.m) + " h=" + std::to_string(cb.h);
  for (const auto& c : checks) {
    summary += "\n  " + c.at("name").get<std::string>() + ":";
    if (c.contains("observed")) {
      summary += " observed " + std::to_string(c.at("observed").get<long long>()) +
                 " bound " + std::to_string(c.at("bound").get<long long>()) +
                 " slack " + std::to_string(c.at("slack").get<long long>());
    }
    if (c.contains("checked"))
      summary += " checked " + std::to_string(c.at("checked").get<long long>());
    summary += c.at("ok").get<bool>() ? " ok" : " VIOLATION";
  }
  summary += all_ok ? "\nok" : "\nFAILED";
  emit(rep, out_path, json, summary, out);

  if (!all_ok) {
    err << "internal error: verification failed for scope " << scope << "\n";
    return 4;
  }
  return 0;
}

inline int cmd_rate(int h, const std::vector<int>& m_list,
                    const std::string& out_path, bool json, std::ostream& out) {
  ordered_json rows = ordered_json::array();
  std::vector<std::pair<int, double>> by_m;
  for (int m : m_list) {
    const Codebook cb = build_codebook(m, h);
    const double rate =
        std::log2(static_cast<double>(cb.size())) / static_cast<double>(cb.layout.N);
    if (rate >= 1.0 / h) throw InternalError("rate bound violated");
    rows.push_back({{"m", m},
                    {"h", h},
                    {"n", cb.sidon.n},
                    {"N", cb.layout.N},
                    {"codebook_size", cb.size()},
                    {"rate", rate}});
    by_m.emplace_back(m, rate);
  }
  // Reported, not enforced: padding jumps can pull the rate down between
  // adjacent degrees even though the trend recovers within one pad size.
  std::sort(by_m.begin(), by_m.end());
  bool non_decreasing = true;
  for (std::size_t i = 0; i + 1 < by_m.size(); ++i)
    if (by_m[i + 1].second < by_m[i].second) non_decreasing = false;

  ordered_json rep;
  rep["schema"] = kRateReportSchema;
  rep["h"] = h;
  rep["target"] = 1.0 / h;
  rep["non_decreasing"] = non_decreasing;
  rep["rows"] = rows;

  std::ostringstream table;
  table << std::setw(4) << "m" << std::setw(6) << "n" << std::setw(6) << "N"
        << std::setw(8) << "size" << std::setw(12) << "rate" << std::setw(12)
        << "target";
  table << std::fixed << std::setprecision(6);
  for (const auto& row : rows)
    table << "\n"
          << std::setw(4) << row.at("m").get<int>() << std::setw(6)
          << row.at("n").get<int>() << std::setw(6) << row.at("N").get<int>()
          << std::setw(8) << row.at("codebook_size").get<long long>()
          << std::setw(12) << row.at("rate").get<double>() << std::setw(12)
          << 1.0 / h;
  emit(rep, out_path, json, table.str(), out);
  return 0;
}

}  // namespace detail

// Entry point shared by the binary and the tests. args excludes the program
// name and is in natural order.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"h-multicomposition codec: build codebooks, simulate "
               "composition-multiset mixtures, and decode them back"};
  app.name("hmc");
  app.require_subcommand(1);
  // --h is an option, so help is long-form only.
  app.set_help_flag("--help", "print help and exit");

  std::string out_path;
  bool json = false;
  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print help and exit");
    sub->add_option("--out", out_path, "write the JSON document to this file");
    sub->add_flag("--json", json, "print the JSON document to stdout");
  };

  int build_m = 0, build_h = 0;
  auto* build = app.add_subcommand("build", "construct a codebook");
  build->add_option("--m", build_m, "field degree (2..16)")->required();
  build->add_option("--h", build_h, "mixture size limit (>= 2)")->required();
  add_common(build);

  std::string mix_codebook;
  std::vector<long long> mix_indices;
  std::uint64_t mix_seed = 0;
  auto* mixc = app.add_subcommand("mix", "emit the shuffled mixture of codewords");
  mixc->add_option("--codebook", mix_codebook, "codebook JSON file")->required();
  mixc->add_option("--indices", mix_indices, "comma-separated column indices")
      ->required()
      ->delimiter(',');
  mixc->add_option("--seed", mix_seed, "shuffle seed (default 0)");
  add_common(mixc);

  std::string dec_codebook, dec_mixture;
  auto* dec = app.add_subcommand("decode", "recover the codeword set of a mixture");
  dec->add_option("--codebook", dec_codebook, "codebook JSON file")->required();
  dec->add_option("--mixture", dec_mixture, "mixture JSON file")->required();
  add_common(dec);

  std::string ver_scope, ver_codebook;
  long long ver_sample = 20;
  std::uint64_t ver_seed = 0;
  auto* ver = app.add_subcommand("verify", "run a property suite on a codebook");
  ver->add_option("--scope", ver_scope, "bh | mc | dyck | bounds")
      ->required()
      ->check(CLI::IsMember({"bh", "mc", "dyck", "bounds"}));
  ver->add_option("--codebook", ver_codebook, "codebook JSON file")->required();
  ver->add_option("--sample", ver_sample, "subsample size for --scope mc");
  ver->add_option("--seed", ver_seed, "subsample seed for --scope mc");
  add_common(ver);

  int rate_h = 0;
  std::vector<int> rate_m;
  auto* rate = app.add_subcommand("rate", "tabulate code rates per field degree");
  rate->add_option("--h", rate_h, "mixture size limit")->required();
  rate->add_option("--m", rate_m, "comma-separated field degrees")->delimiter(',');
  add_common(rate);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (build->parsed())
      return detail::cmd_build(build_m, build_h, out_path, json, out);
    if (mixc->parsed())
      return detail::cmd_mix(mix_codebook, mix_indices, mix_seed, out_path,
                             json, out);
    if (dec->parsed())
      return detail::cmd_decode(dec_codebook, dec_mixture, out_path, json, out);
    if (ver->parsed())
      return detail::cmd_verify(ver_scope, ver_codebook, ver_sample, ver_seed,
                                out_path, json, out, err);
    if (rate->parsed())
      return detail::cmd_rate(rate_h, rate_m, out_path, json, out);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const DecodeError& e) {
    err << "error [stage " << e.stage() << "]: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hmc
