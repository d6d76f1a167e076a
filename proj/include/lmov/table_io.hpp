#pragma once

// Text formats for coefficient tables, product representations and reports.
//
// Every file starts with a "lmov-table 1" (or "lmov-report 1") line, then
// "field value" header lines, then a "---" line, then tab-separated records.
// Exponents are those of s = q^{1/2} and v = t^{1/2}; rationals are "+p/q".

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lmov/pipeline.hpp"
#include "lmov/product.hpp"

namespace lmov {

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct VersionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateKey : ParseError {
  using ParseError::ParseError;
};

inline constexpr int kFormatVersion = 1;

/// Untyped view of a table file.
struct TableFile {
  struct Record {
    int line = 0;
    std::vector<std::string> fields;
    /// 1-based column where field i starts.
    int column(std::size_t i) const;
  };
  std::string magic = "lmov-table";
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<Record> records;

  /// Throws ParseError when the field is absent.
  const std::string& get(std::string_view field) const;
  const std::string* find(std::string_view field) const;
  int get_int(std::string_view field) const;

  std::string serialize() const;
  static TableFile parse(std::string_view text);
};

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

std::string write_wtable(const WTable& w);
/// Throws ParseError, VersionError, DuplicateKey or MissingDegrees.
WTable parse_wtable(std::string_view text);
WTable read_wtable(const std::filesystem::path& path);

/// Tables of the pipeline stages.  `kind` is one of Z, F, f, P.
std::string write_stage_table(std::string_view kind, std::string_view name, int components, int max_degree,
                              const std::map<PartitionVector, RatFunc>& entries,
                              PConvention convention = PConvention::qrho);
std::map<PartitionVector, RatFunc> parse_stage_entries(const TableFile& file);

/// N and n tables: records "key  g  2Q  value".
std::string write_integer_table(std::string_view kind, std::string_view name, int components, int max_degree,
                                const std::map<PartitionVector, IntegerRow>& rows,
                                PConvention convention = PConvention::qrho);
std::map<PartitionVector, IntegerRow> parse_integer_rows(const TableFile& file);

std::string write_checkn_table(std::string_view name, const CheckNTable& cn,
                               PConvention convention = PConvention::qrho);
CheckNTable parse_checkn_table(std::string_view text);

std::string write_product(const ProductRep& product, std::string_view name);
ProductRep parse_product(std::string_view text);

std::string to_string(PConvention c);
PConvention parse_convention(std::string_view text);

/// Reports.  Same layout as tables, sectioned by "[name]" lines.
std::string render_pipeline_report(std::string_view name, const PipelineResult& result);
std::string render_roundtrip_report(std::string_view name, const RoundTripReport& report);
std::string render_symmetry_report(std::string_view name, const SymmetryReport& report);

}  // namespace lmov
