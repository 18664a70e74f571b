// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: regions, gDoF sweeps, finite-SNR rate tables,
// slope checks, and the validation suite, emitted as CSV or JSON.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or domain error.
// The default seed is 1, overridable through the NCIC_SEED environment
// variable; explicit --seed flags win over both.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncic/channel.hpp"
#include "ncic/gdof.hpp"
#include "ncic/polytope.hpp"
#include "ncic/rates.hpp"
#include "ncic/records.hpp"
#include "ncic/rng.hpp"
#include "ncic/validate.hpp"

namespace {

int usage_error(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return 2;
}

int write_payload(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << payload;
  file.close();
  if (!file.good()) {
    return usage_error("--out path is not writable: " + out_path);
  }
  return 0;
}

int emit_table(const ncic::RecordTable& table, const std::string& format,
               const std::string& out_path) {
  const std::string payload =
      format == "json" ? ncic::to_json(table) : ncic::to_csv(table);
  return write_payload(payload, out_path);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed,
                           bool& ok) {
  ok = true;
  if (flag_seed) return *flag_seed;
  const char* env = std::getenv("NCIC_SEED");
  if (env == nullptr || *env == '\0') return ncic::kDefaultSeed;
  std::uint64_t value = 0;
  const char* end = env + std::string_view(env).size();
  const auto parsed = std::from_chars(env, end, value);
  if (parsed.ec != std::errc{} || parsed.ptr != end) {
    ok = false;
    return ncic::kDefaultSeed;
  }
  return value;
}

ncic::Cell blank() { return ncic::Cell::txt(""); }

int run_gdof(const std::string& scheme_token, double alpha, int coherence,
             const std::string& format, const std::string& out_path) {
  const auto scheme = ncic::scheme_from_token(scheme_token);
  if (!scheme) {
    return usage_error("unknown value for --scheme: " + scheme_token);
  }
  if (alpha < 0.0) return usage_error("--alpha must be nonnegative");
  if (coherence < 2) return usage_error("--coherence must be at least 2");
  const ncic::Region2D region = ncic::region(*scheme, alpha, coherence);
  const auto vertices = ncic::vertices_2d(region);
  const ncic::SymMax sym = ncic::symmetric_max(region);

  ncic::RecordTable table;
  table.columns = {"record", "index", "a", "b", "c", "x", "y", "value"};
  for (std::size_t i = 0; i < region.rows.size(); ++i) {
    table.add_row({ncic::Cell::txt("inequality"), ncic::Cell::num(double(i)),
                   ncic::Cell::num(region.rows[i].a), ncic::Cell::num(region.rows[i].b),
                   ncic::Cell::num(region.rows[i].c), blank(), blank(), blank()});
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    table.add_row({ncic::Cell::txt("vertex"), ncic::Cell::num(double(i)), blank(),
                   blank(), blank(), ncic::Cell::num(vertices[i].x),
                   ncic::Cell::num(vertices[i].y), blank()});
  }
  table.add_row({ncic::Cell::txt("sym_gdof"), ncic::Cell::num(0.0), blank(), blank(),
                 blank(), blank(), blank(), ncic::Cell::num(sym.value)});
  table.add_row({ncic::Cell::txt("empty"), ncic::Cell::num(0.0), blank(), blank(),
                 blank(), blank(), blank(),
                 ncic::Cell::txt(sym.empty ? "true" : "false")});
  return emit_table(table, format, out_path);
}

int run_sweep(const std::vector<std::string>& scheme_tokens, int coherence,
              double alpha_min, double alpha_max, int steps,
              const std::string& format, const std::string& out_path) {
  if (steps < 2) {
    return usage_error("--steps must be at least 2");
  }
  if (alpha_min > alpha_max) {
    return usage_error("--alpha-min exceeds --alpha-max");
  }
  if (alpha_min < 0.0) return usage_error("--alpha-min must be nonnegative");
  if (coherence < 2) return usage_error("--coherence must be at least 2");
  std::vector<ncic::SchemeId> schemes;
  for (const auto& token : scheme_tokens) {
    const auto scheme = ncic::scheme_from_token(token);
    if (!scheme) {
      return usage_error("unknown value for --schemes: " + token);
    }
    schemes.push_back(*scheme);
  }

  ncic::RecordTable table;
  table.columns = {"alpha", "scheme", "sym_gdof"};
  for (int i = 0; i < steps; ++i) {
    const double alpha =
        alpha_min + (alpha_max - alpha_min) * i / double(steps - 1);
    for (std::size_t s = 0; s < schemes.size(); ++s) {
      table.add_row({ncic::Cell::num(alpha),
                     ncic::Cell::txt(std::string(scheme_tokens[s])),
                     ncic::Cell::num(ncic::sym_gdof(schemes[s], alpha, coherence))});
    }
  }
  return emit_table(table, format, out_path);
}

int run_rates(const std::vector<double>& snr_db_list,
              const std::vector<std::string>& scheme_tokens, double alpha,
              int coherence, double link_gain, std::size_t samples,
              std::uint64_t seed, const std::string& format,
              const std::string& out_path) {
  if (snr_db_list.empty()) {
    return usage_error("--snr-db-list must name at least one value");
  }
  if (samples < 1000) {
    return usage_error("--samples must be at least 1000");
  }
  if (alpha < 0.0) return usage_error("--alpha must be nonnegative");
  if (coherence < 2) return usage_error("--coherence must be at least 2");
  if (link_gain <= 0.0) return usage_error("--link-gain must be positive");
  for (const auto& token : scheme_tokens) {
    if (token != "tdm" && token != "train") {
      return usage_error("--schemes supports tdm and train, got: " + token);
    }
  }

  ncic::RecordTable table;
  table.columns = {"snr_db", "scheme", "rate", "stderr"};
  for (const double snr_db : snr_db_list) {
    const auto config =
        ncic::ChannelConfig::from_db(snr_db, alpha, coherence, link_gain);
    for (const auto& token : scheme_tokens) {
      const ncic::McEstimate estimate =
          token == "tdm" ? ncic::rate_tdm(config, samples, seed)
                         : ncic::rate_training_rs(config, samples, seed);
      table.add_row({ncic::Cell::num(snr_db), ncic::Cell::txt(token),
                     ncic::Cell::num(estimate.value),
                     ncic::Cell::num(estimate.std_error)});
    }
  }
  return emit_table(table, format, out_path);
}

int run_slope(const std::string& term_token, double alpha, int coherence,
              const std::vector<double>& exponents, const std::string& format,
              const std::string& out_path) {
  const auto term = ncic::term_from_token(term_token);
  if (!term) {
    return usage_error("unknown value for --term: " + term_token);
  }
  if (exponents.size() < 2) {
    return usage_error("--exponents needs at least two values");
  }
  if (alpha < 0.0) return usage_error("--alpha must be nonnegative");
  if (coherence < 2) return usage_error("--coherence must be at least 2");
  const double numeric = ncic::prelog_numeric(*term, alpha, coherence, exponents);
  const double expected = ncic::prelog_expected(*term, alpha, coherence);

  ncic::RecordTable table;
  table.columns = {"term", "alpha", "coherence", "numeric", "expected", "abs_diff"};
  table.add_row({ncic::Cell::txt(term_token), ncic::Cell::num(alpha),
                 ncic::Cell::num(double(coherence)), ncic::Cell::num(numeric),
                 ncic::Cell::num(expected),
                 ncic::Cell::num(std::fabs(numeric - expected))});
  return emit_table(table, format, out_path);
}

int run_validate(bool full, std::uint64_t seed, const std::string& out_path) {
  const ncic::CheckOptions options{full, seed};
  std::vector<ncic::CheckResult> results = ncic::acceptance_checks(options);
  const std::vector<ncic::CheckResult> invariants = ncic::invariant_checks(options);
  results.insert(results.end(), invariants.begin(), invariants.end());

  std::string payload;
  bool all_pass = true;
  for (const auto& result : results) {
    payload += ncic::format_check_line(result);
    payload += '\n';
    all_pass = all_pass && result.pass;
  }
  const int write_status = write_payload(payload, out_path);
  if (write_status != 0) return write_status;
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rate and gDoF tables for the noncoherent two-user interference channel"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string out_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string scheme_token;
  std::string term_token;
  std::vector<std::string> scheme_tokens;
  std::vector<double> snr_db_list;
  std::vector<double> exponents;
  double alpha = 1.0;
  double alpha_min = 0.0;
  double alpha_max = 2.0;
  double link_gain = 1.0;
  int coherence = 5;
  int steps = 2;
  std::size_t samples = 100'000;
  std::optional<std::uint64_t> flag_seed;
  bool full = false;
  bool fast = false;

  auto* gdof = app.add_subcommand("gdof", "Inequalities, vertices, and symmetric gDoF of one scheme region");
  gdof->add_option("--scheme", scheme_token, "Scheme: rs, rs-fb, tin, tdm, train, train-fb")->required();
  gdof->add_option("--alpha", alpha, "Interference exponent log(INR)/log(SNR)")->required();
  gdof->add_option("--coherence", coherence, "Fading block length in symbols")->required();

  auto* sweep = app.add_subcommand("sweep", "Symmetric gDoF of several schemes over an alpha grid");
  sweep->add_option("--schemes", scheme_tokens, "Comma-separated scheme list")->required()->delimiter(',');
  sweep->add_option("--coherence", coherence, "Fading block length in symbols")->required();
  sweep->add_option("--alpha-min", alpha_min, "Grid start")->required();
  sweep->add_option("--alpha-max", alpha_max, "Grid end")->required();
  sweep->add_option("--steps", steps, "Number of grid points")->required();

  auto* rates = app.add_subcommand("rates", "Monte-Carlo finite-SNR rates of the training schemes");
  rates->add_option("--snr-db-list", snr_db_list, "Comma-separated SNR points in dB")->required()->delimiter(',');
  rates->add_option("--schemes", scheme_tokens, "Comma-separated subset of tdm,train")->delimiter(',');
  rates->add_option("--alpha", alpha, "Interference exponent");
  rates->add_option("--coherence", coherence, "Fading block length in symbols");
  rates->add_option("--link-gain", link_gain, "Linear gain applied to the raw SNR");
  rates->add_option("--samples", samples, "Monte-Carlo sample count");
  rates->add_option("--seed", flag_seed, "Seed (beats NCIC_SEED)");

  auto* slope = app.add_subcommand("slope", "Numeric prelog slope of one term bound against its table value");
  slope->add_option("--term", term_token, "Term token, e.g. IX1_Y1_gU2")->required();
  slope->add_option("--alpha", alpha, "Interference exponent")->required();
  slope->add_option("--coherence", coherence, "Fading block length in symbols")->required();
  slope->add_option("--exponents", exponents, "Comma-separated base-10 SNR exponents")->required()->delimiter(',');

  auto* validate = app.add_subcommand("validate", "Run invariant and acceptance checks");
  validate->add_flag("--full", full, "Include the million-sample rate-table reproduction");
  validate->add_flag("--fast", fast, "Skip long Monte-Carlo runs (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  bool seed_ok = true;
  const std::uint64_t seed = resolve_seed(flag_seed, seed_ok);
  if (!seed_ok) {
    return usage_error("NCIC_SEED is not an unsigned integer");
  }

  try {
    if (app.got_subcommand(gdof)) {
      return run_gdof(scheme_token, alpha, coherence, format, out_path);
    }
    if (app.got_subcommand(sweep)) {
      return run_sweep(scheme_tokens, coherence, alpha_min, alpha_max, steps,
                       format, out_path);
    }
    if (app.got_subcommand(rates)) {
      if (scheme_tokens.empty()) scheme_tokens = {"tdm", "train"};
      return run_rates(snr_db_list, scheme_tokens, alpha, coherence, link_gain,
                       samples, seed, format, out_path);
    }
    if (app.got_subcommand(slope)) {
      return run_slope(term_token, alpha, coherence, exponents, format, out_path);
    }
    if (app.got_subcommand(validate)) {
      if (full && fast) {
        return usage_error("--full and --fast are mutually exclusive");
      }
      return run_validate(full, seed, out_path);
    }
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  return 2;
}
