#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "altseq/asymfit.hpp"
#include "altseq/distribution.hpp"
#include "altseq/error.hpp"
#include "altseq/io.hpp"
#include "altseq/moments.hpp"
#include "altseq/montecarlo.hpp"
#include "altseq/permutation.hpp"
#include "altseq/verify.hpp"

namespace altseq::cli {

namespace {

struct NRange {
  int start = 0;
  int stop = 0;
  int step = 1;
};

NRange parse_range(const std::string& text) {
  NRange r;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> r.start >> c1 >> r.stop) || c1 != ':') {
    throw InvalidArgument("--n-range must look like start:stop[:step], got '" + text + "'");
  }
  if (in >> c2) {
    if (c2 != ':' || !(in >> r.step)) {
      throw InvalidArgument("--n-range must look like start:stop[:step], got '" + text + "'");
    }
  }
  std::string rest;
  if (in >> rest) throw InvalidArgument("--n-range has trailing text '" + rest + "'");
  if (r.start < 1 || r.stop < r.start || r.step < 1) {
    throw InvalidArgument("--n-range needs 1 <= start <= stop and step >= 1");
  }
  return r;
}

bool in_range(const NRange& r, int n) {
  return n >= r.start && n <= r.stop && (n - r.start) % r.step == 0;
}

std::filesystem::path resolve_out(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

// Writes `text` to --out when given, else to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const auto p = resolve_out(path);
  std::ofstream f(p, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open output file '" + p.string() + "'");
  f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") {
    throw InvalidArgument("--format must be json or csv, got '" + format + "'");
  }
}

struct Options {
  std::string convention = "descent";
  std::string out;
  std::string format = "json";
  std::string perm;
  int n = 0;
  int n_max = kDefaultNMax;
  std::string n_range;
  int max_moment = kDefaultMaxMoment;
  std::string input;
  std::string orders = "4,6,3,5";
  int terms = 3;
  int precision = kDefaultDigits;
  int window_spacing = 1;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  bool compare_exact = false;
  int verify_n_max = 200;
  std::string verify_format = "text";
  std::uint64_t verify_samples = 200000;
  std::uint64_t verify_seed = 1;
  int inject_corruption = 0;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const auto w = Permutation::parse(o.perm);
  out << as_linear(w, parse_convention(o.convention)) << '\n';
  return kOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
  check_format(o.format);
  if (o.n < 1) throw InvalidArgument("--n must be >= 1");
  const auto t = distribution_dp(o.n, parse_convention(o.convention), o.n_max);
  std::ostringstream text;
  if (o.format == "json") {
    text << dump(to_json(t));
  } else {
    write_distribution_csv(text, t);
  }
  emit(o.out, text.str(), out);
  return kOk;
}

int cmd_moments(const Options& o, std::ostream& out) {
  const NRange range = parse_range(o.n_range);
  if (o.max_moment < 2) throw InvalidArgument("--max-moment must be >= 2");
  const auto family = distribution_family(range.stop, parse_convention(o.convention), o.n_max);
  std::vector<MomentTable> tables;
  for (const auto& t : family) {
    if (in_range(range, t.n)) tables.push_back(moments_from_table(t, o.max_moment));
  }
  std::ostringstream text;
  write_moments_csv(text, tables, o.max_moment);
  emit(o.out, text.str(), out);
  return kOk;
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> orders;
  std::istringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(field, &used);
      if (used != field.size() || k < 2) throw std::invalid_argument(field);
      orders.push_back(k);
    } catch (const std::exception&) {
      throw InvalidArgument("--orders takes moment orders >= 2 such as 4,6,3,5; got '" + field + "'");
    }
  }
  if (orders.empty()) throw InvalidArgument("--orders is empty");
  return orders;
}

int cmd_fit(const Options& o, std::ostream& out) {
  const auto orders = parse_orders(o.orders);
  CsvTable csv;
  if (o.input == "-") {
    csv = read_csv(std::cin);
  } else {
    std::ifstream f(o.input);
    if (!f) throw InvalidArgument("cannot open input file '" + o.input + "'");
    csv = read_csv(f);
  }
  if (!o.n_range.empty()) {
    const NRange range = parse_range(o.n_range);
    const auto n_col = csv.column("n");
    std::erase_if(csv.rows, [&](const auto& row) { return !in_range(range, std::stoi(row[n_col])); });
  }
  const FitOptions options{o.terms, o.precision, {o.window_spacing}};
  nlohmann::json fits = nlohmann::json::array();
  for (int order : orders) {
    const int r = order / 2;
    if (order % 2 == 0) {
      fits.push_back(to_json(fit_even_moment(even_samples_from_csv(csv, r), r, options)));
    } else {
      fits.push_back(to_json(fit_odd_moment(odd_samples_from_csv(csv, r), r, options)));
    }
  }
  const nlohmann::json doc{{"schema_version", kSchemaVersion}, {"type", "FitReportList"}, {"fits", fits}};
  emit(o.out, dump(doc), out);
  return kOk;
}

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
  check_format(o.format);
  if (o.n < 1) throw InvalidArgument("--n must be >= 1");
  if (o.samples < 1) throw InvalidArgument("--samples must be >= 1");
  const Convention c = parse_convention(o.convention);
  const auto h = empirical_histogram(o.n, o.samples, o.seed, c, o.threads);
  std::ostringstream text;
  if (o.format == "json") {
    auto j = to_json(h);
    if (o.compare_exact) j["tv_distance_to_exact"] = tv_distance(h, distribution_dp(o.n, c, o.n_max));
    text << dump(j);
  } else {
    write_histogram_csv(text, h);
    if (o.compare_exact) err << "tv_distance_to_exact " << tv_distance(h, distribution_dp(o.n, c, o.n_max)) << '\n';
  }
  emit(o.out, text.str(), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.verify_format != "text" && o.verify_format != "json") {
    throw InvalidArgument("--format must be text or json, got '" + o.verify_format + "'");
  }
  VerifyOptions v;
  v.n_max = o.verify_n_max;
  v.digits = o.precision;
  v.mc_samples = o.verify_samples;
  v.mc_seed = o.verify_seed;
  v.threads = o.threads;
  if (o.inject_corruption > 0) {
    const int n = o.inject_corruption;
    v.table_hook = [n](std::vector<DistributionTable>& tables) {
      if (n <= static_cast<int>(tables.size())) tables[static_cast<std::size_t>(n - 1)].counts[0] += 1;
    };
  }
  const CheckReport report = run_verification(v);
  if (o.verify_format == "json") {
    out << dump(to_json(report));
  } else {
    out << render_text(report);
  }
  if (!o.out.empty()) emit(o.out, dump(to_json(report)), out);
  return report.exit_code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact law, moments and asymptotic fits of the longest alternating subsequence"};
  app.require_subcommand(1);
  Options o;

  auto add_convention = [&](CLI::App* sub) {
    sub->add_option("--convention", o.convention, "descent (a1 > a2 < ...) or ascent")
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "output path (relative paths resolve against $ALTSEQ_OUT_DIR)");
  };

  auto* eval = app.add_subcommand("eval", "longest alternating subsequence of one permutation");
  eval->add_option("--perm", o.perm, "comma-separated permutation of 1..n")->required();
  add_convention(eval);

  auto* dist = app.add_subcommand("dist", "exact distribution table b_{n,k}");
  dist->add_option("--n", o.n, "permutation length")->required();
  dist->add_option("--format", o.format, "json or csv")->capture_default_str();
  dist->add_option("--n-max", o.n_max, "largest n the DP accepts")->capture_default_str();
  add_convention(dist);
  add_out(dist);

  auto* moments = app.add_subcommand("moments", "exact moments CSV over an n range");
  moments->add_option("--n-range", o.n_range, "start:stop[:step]")->required();
  moments->add_option("--max-moment", o.max_moment, "largest central moment order R")->capture_default_str();
  moments->add_option("--n-max", o.n_max, "largest n the DP accepts")->capture_default_str();
  add_convention(moments);
  add_out(moments);

  auto* fit = app.add_subcommand("fit", "fit inverse-power series to standardized moments");
  fit->add_option("--input", o.input, "moments CSV ('-' for stdin)")->required();
  fit->add_option("--orders", o.orders, "standardized moment orders, e.g. 4,6,3,5")->capture_default_str();
  fit->add_option("--terms", o.terms, "highest inverse power J")->capture_default_str();
  fit->add_option("--precision", o.precision, "significant decimal digits")->capture_default_str();
  fit->add_option("--window-spacing", o.window_spacing, "sample spacing inside a window")
      ->capture_default_str();
  fit->add_option("--n-range", o.n_range, "only use rows with n in start:stop[:step]");
  add_out(fit);

  auto* sample = app.add_subcommand("sample", "Monte-Carlo histogram of the statistic");
  sample->add_option("--n", o.n, "permutation length")->required();
  sample->add_option("--samples", o.samples, "number of permutations M")->required();
  sample->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  sample->add_option("--format", o.format, "json or csv")->capture_default_str();
  sample->add_option("--threads", o.threads, "worker threads (output does not depend on it)")
      ->capture_default_str();
  sample->add_option("--n-max", o.n_max, "largest n for --compare-exact")->capture_default_str();
  sample->add_flag("--compare-exact", o.compare_exact, "add the TV distance to the exact law");
  add_convention(sample);
  add_out(sample);

  auto* verify = app.add_subcommand("verify", "run every reproduction check");
  verify->add_option("--n-max", o.verify_n_max, "largest n in the exact checks")->capture_default_str();
  verify->add_option("--precision", o.precision, "fit precision in decimal digits")->capture_default_str();
  verify->add_option("--samples", o.verify_samples, "Monte-Carlo sample count")->capture_default_str();
  verify->add_option("--seed", o.verify_seed, "Monte-Carlo seed")->capture_default_str();
  verify->add_option("--threads", o.threads, "Monte-Carlo worker threads")->capture_default_str();
  verify->add_option("--format", o.verify_format, "text or json on stdout")->capture_default_str();
  verify->add_option("--inject-corruption", o.inject_corruption, "corrupt the DP table for this n")
      ->group("");
  add_out(verify);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (dist->parsed()) return cmd_dist(o, out);
    if (moments->parsed()) return cmd_moments(o, out);
    if (fit->parsed()) return cmd_fit(o, out);
    if (sample->parsed()) return cmd_sample(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace altseq::cli
