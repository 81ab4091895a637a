#include "altseq/io.hpp"

#include <algorithm>
#include <sstream>

#include "altseq/error.hpp"

namespace altseq {

std::string format_rational(const Rational& x) {
  Rational c(x);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw InvalidArgument("not a rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  const BigInt d(std::string(den), 10);
  if (d == 0) throw InvalidArgument("not a rational: zero denominator in '" + std::string(text) + "'");
  Rational q(BigInt(n, 10), d);
  q.canonicalize();
  return q;
}

nlohmann::json to_json(const DistributionTable& t) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& c : t.counts) counts.push_back(c.get_str());
  return {{"schema_version", kSchemaVersion},
          {"type", "DistributionTable"},
          {"n", t.n},
          {"convention", std::string(to_string(t.convention))},
          {"counts", counts},
          {"total", t.total().get_str()}};
}

DistributionTable distribution_from_json(const nlohmann::json& j) {
  try {
    DistributionTable t;
    t.n = j.at("n").get<int>();
    t.convention = parse_convention(j.at("convention").get<std::string>());
    for (const auto& c : j.at("counts")) t.counts.emplace_back(c.get<std::string>(), 10);
    if (static_cast<int>(t.counts.size()) != t.n) {
      throw InvalidArgument("DistributionTable JSON: counts length differs from n");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("DistributionTable JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("DistributionTable JSON: count is not a decimal integer");
  }
}

nlohmann::json to_json(const EmpiricalHistogram& h) {
  return {{"schema_version", kSchemaVersion},
          {"type", "EmpiricalHistogram"},
          {"n", h.n},
          {"samples", h.samples},
          {"seed", h.seed},
          {"convention", std::string(to_string(h.convention))},
          {"counts", h.counts}};
}

namespace {

std::string decimal(const BigFloat& x) { return x.to_string(x.digits()); }

nlohmann::json decimals(const std::vector<BigFloat>& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(decimal(x));
  return out;
}

}  // namespace

nlohmann::json to_json(const AsymptoticSeries& s) {
  nlohmann::json windows = nlohmann::json::array();
  for (const auto& w : s.windows) {
    windows.push_back({{"n", w.ns},
                       {"coefficients", decimals(w.coefficients)},
                       {"relative_delta", decimals(w.relative_delta)}});
  }
  nlohmann::json drift = nlohmann::json::array();
  nlohmann::json shrinking = nlohmann::json::array();
  for (int j = 0; j <= s.terms(); ++j) {
    drift.push_back(decimal(s.drift(j)));
    shrinking.push_back(s.drift_shrinking(j));
  }
  return {{"prefactor_exponent", s.prefactor == PrefactorExponent::kNone ? "0" : "-1/2"},
          {"terms", s.terms()},
          {"precision_digits", s.digits},
          {"coefficients", decimals(s.coefficients)},
          {"drift", drift},
          {"drift_shrinking", shrinking},
          {"max_residual", decimal(s.max_residual)},
          {"windows", windows}};
}

nlohmann::json to_json(const FitReport& r) {
  nlohmann::json comparisons = nlohmann::json::array();
  for (const auto& c : r.comparisons) {
    comparisons.push_back({{"quantity", c.quantity},
                           {"expected", decimal(c.expected)},
                           {"fitted", decimal(c.fitted)},
                           {"abs_error", c.abs_error.to_string(6)},
                           {"rel_error", c.rel_error.to_string(6)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"type", "FitReport"},
          {"target", r.target},
          {"order", r.order},
          {"n_range", {r.n_first, r.n_last}},
          {"series", to_json(r.series)},
          {"comparisons", comparisons}};
}

void write_distribution_csv(std::ostream& out, const DistributionTable& t) {
  out << "k,count\n";
  for (int k = 1; k <= t.n; ++k) out << k << ',' << t.count(k).get_str() << '\n';
}

void write_histogram_csv(std::ostream& out, const EmpiricalHistogram& h) {
  out << "k,count\n";
  for (std::size_t k = 0; k < h.counts.size(); ++k) out << k + 1 << ',' << h.counts[k] << '\n';
}

std::vector<std::string> moments_csv_header(int max_order) {
  std::vector<std::string> h{"schema_version", "n", "mean"};
  for (int r = 2; r <= max_order; ++r) h.push_back("m" + std::to_string(r));
  for (int r = 1; 2 * r <= max_order; ++r) h.push_back("alpha" + std::to_string(2 * r));
  for (int r = 1; 2 * r + 1 <= max_order; ++r) h.push_back("q" + std::to_string(2 * r + 1));
  return h;
}

void write_moments_csv(std::ostream& out, std::span<const MomentTable> tables, int max_order) {
  const auto header = moments_csv_header(max_order);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& t : tables) {
    if (t.max_order < max_order) {
      throw InvalidArgument("write_moments_csv: table for n = " + std::to_string(t.n) +
                            " has fewer moments than requested");
    }
    out << kSchemaVersion << ',' << t.n << ',' << format_rational(t.mean);
    for (int r = 2; r <= max_order; ++r) out << ',' << format_rational(t.m(r));
    for (int r = 1; 2 * r <= max_order; ++r) {
      out << ',' << (t.standardized ? format_rational(t.alpha_even(r)) : "NA");
    }
    for (int r = 1; 2 * r + 1 <= max_order; ++r) {
      out << ',' << (t.standardized ? format_rational(t.q_odd(r)) : "NA");
    }
    out << '\n';
  }
}

std::size_t CsvTable::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw InvalidArgument("missing column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - header.begin());
}

bool CsvTable::has_column(std::string_view name) const {
  return std::find(header.begin(), header.end(), name) != header.end();
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

int parse_n(const std::string& text) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return n;
  } catch (const std::exception&) {
    throw InvalidArgument("CSV: column 'n' holds a non-integer '" + text + "'");
  }
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable csv;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_line(line);
    if (first) {
      csv.header = std::move(fields);
      first = false;
      continue;
    }
    if (fields.size() != csv.header.size()) {
      throw InvalidArgument("CSV: row " + std::to_string(csv.rows.size() + 1) + " has " +
                            std::to_string(fields.size()) + " fields, header has " +
                            std::to_string(csv.header.size()));
    }
    csv.rows.push_back(std::move(fields));
  }
  if (first) throw InvalidArgument("CSV: empty input");
  return csv;
}

std::vector<MomentTable> read_moments_csv(const CsvTable& csv) {
  int max_order = 1;
  while (csv.has_column("m" + std::to_string(max_order + 1))) ++max_order;
  if (max_order < 2) throw InvalidArgument("missing column 'm2'");
  const auto header = moments_csv_header(max_order);
  std::vector<std::size_t> idx;
  for (const auto& name : header) idx.push_back(csv.column(name));

  std::vector<MomentTable> out;
  for (const auto& row : csv.rows) {
    std::size_t c = 0;
    const auto& version = row[idx[c++]];
    if (version != std::to_string(kSchemaVersion)) {
      throw InvalidArgument("CSV: unsupported schema_version '" + version + "'");
    }
    MomentTable t;
    t.n = parse_n(row[idx[c++]]);
    t.max_order = max_order;
    t.mean = parse_rational(row[idx[c++]]);
    t.central = {Rational(1), Rational(0)};
    for (int r = 2; r <= max_order; ++r) t.central.push_back(parse_rational(row[idx[c++]]));
    t.standardized = t.central[2] > 0;
    if (t.standardized) {
      t.std_even.push_back(Rational(1));
      t.std_odd_q.push_back(Rational(0));
      for (int r = 1; 2 * r <= max_order; ++r) t.std_even.push_back(parse_rational(row[idx[c++]]));
      for (int r = 1; 2 * r + 1 <= max_order; ++r) {
        t.std_odd_q.push_back(parse_rational(row[idx[c++]]));
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<EvenSample> even_samples_from_csv(const CsvTable& csv, int r) {
  const auto n_col = csv.column("n");
  const auto a_col = csv.column("alpha" + std::to_string(2 * r));
  std::vector<EvenSample> out;
  for (const auto& row : csv.rows) {
    if (row[a_col] == "NA") continue;
    out.push_back({parse_n(row[n_col]), parse_rational(row[a_col])});
  }
  return out;
}

std::vector<OddSample> odd_samples_from_csv(const CsvTable& csv, int r) {
  const auto n_col = csv.column("n");
  const auto q_col = csv.column("q" + std::to_string(2 * r + 1));
  const auto m2_col = csv.column("m2");
  std::vector<OddSample> out;
  for (const auto& row : csv.rows) {
    if (row[q_col] == "NA") continue;
    out.push_back({parse_n(row[n_col]), parse_rational(row[q_col]), parse_rational(row[m2_col])});
  }
  return out;
}

}  // namespace altseq
