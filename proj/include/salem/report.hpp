#pragma once

// Polynomial list files, per-polynomial reports and their JSON / text
// renderings, and the regression table behind `salem reproduce`.
//
// File format: one polynomial per line, coefficients ascending (constant
// first) separated by whitespace; '#' starts a comment.
//
// JSON: fields always in the order below; integers are decimal strings.

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "salem/forge.hpp"
#include "salem/poly.hpp"

namespace salem {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  /// 1-based; 0 when not tied to a file line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct PolyLine {
  std::size_t line = 0;
  IntPoly poly;
};

/// Nothing for blank or comment-only lines. Throws ParseError on bad tokens
/// or an all-zero coefficient list.
std::optional<IntPoly> parse_poly_line(const std::string& text, std::size_t line = 0);
std::vector<PolyLine> parse_poly_file(std::istream& in);
/// Ascending coefficients joined by single spaces.
std::string format_poly_line(const IntPoly& p);

struct NormEntry {
  unsigned n = 0;
  Integer norm_minus;
  Integer norm_plus;
  friend bool operator==(const NormEntry&, const NormEntry&) = default;
};

/// Characterization checks at one exponent; a side is absent when the
/// exponent has no such characterization.
struct CheckEntry {
  unsigned n = 0;
  std::optional<bool> coefficient_identity;
  std::optional<bool> trace_evaluation;
  bool norm_unit = false;
  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct ReportRecord {
  IntPoly input;
  std::string verdict;  // SalemTag name
  std::string reason;   // failure detail, or the irreducibility evidence
  std::optional<unsigned> t;
  std::optional<IntPoly> trace;
  std::optional<std::string> alpha;
  unsigned digits = 6;
  unsigned max_n = 0;
  std::optional<std::vector<unsigned>> spectrum;
  std::vector<NormEntry> norms;
  std::vector<CheckEntry> checks;
  std::optional<Provenance> provenance;

  bool is_salem() const { return verdict == "Salem"; }
  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

struct VerifyOptions {
  unsigned max_n = 10;
  unsigned digits = 6;
  IrreducibilityOptions irreducibility;
};

ReportRecord verify_polynomial(const IntPoly& p, const VerifyOptions& opts = {});
/// verify_polynomial on the certified polynomial, with provenance attached.
ReportRecord record_from_certificate(const SalemCertificate& cert, const VerifyOptions& opts = {});

/// Pretty-printed JSON of one record.
std::string to_json(const ReportRecord& r);
/// JSON array of records, one per line.
std::string to_json(const std::vector<ReportRecord>& rs);
/// Throws std::invalid_argument on malformed input.
ReportRecord record_from_json(const std::string& text);
std::vector<ReportRecord> records_from_json(const std::string& text);

std::string to_text(const ReportRecord& r);
/// Only the verdict and unit spectrum.
std::string to_spectrum_text(const ReportRecord& r);
std::string to_spectrum_json(const std::vector<ReportRecord>& rs);

struct ReproRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The worked examples: fixed polynomials, families, recurrence, generators.
std::vector<ReproRow> reproduce_examples();

}  // namespace salem
