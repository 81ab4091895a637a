#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "altseq/asymfit.hpp"
#include "altseq/distribution.hpp"
#include "altseq/moments.hpp"
#include "altseq/montecarlo.hpp"

namespace altseq {

inline constexpr int kSchemaVersion = 1;

// Lowest-terms "p/q", or "p" when q = 1.
std::string format_rational(const Rational& x);
// Accepts "p/q" or "p" with optional sign; q must be nonzero.
Rational parse_rational(std::string_view text);

nlohmann::json to_json(const DistributionTable& t);
DistributionTable distribution_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EmpiricalHistogram& h);
nlohmann::json to_json(const AsymptoticSeries& s);
nlohmann::json to_json(const FitReport& r);

// "k,count" rows.
void write_distribution_csv(std::ostream& out, const DistributionTable& t);
void write_histogram_csv(std::ostream& out, const EmpiricalHistogram& h);

// Moments CSV, one row per n:
//   schema_version,n,mean,m2..mR,alpha2,alpha4..,q3,q5..
// Entries are exact rationals; standardized columns hold "NA" when the
// variance is zero (n = 1).
std::vector<std::string> moments_csv_header(int max_order);
void write_moments_csv(std::ostream& out, std::span<const MomentTable> tables, int max_order);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws InvalidArgument "missing column '<name>'".
  std::size_t column(std::string_view name) const;
  bool has_column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);

// Rebuilds full moment tables from a moments CSV (every column for the
// file's max order must be present).
std::vector<MomentTable> read_moments_csv(const CsvTable& csv);

// Rows with "NA" in the needed columns are skipped.
std::vector<EvenSample> even_samples_from_csv(const CsvTable& csv, int r);
std::vector<OddSample> odd_samples_from_csv(const CsvTable& csv, int r);

}  // namespace altseq
