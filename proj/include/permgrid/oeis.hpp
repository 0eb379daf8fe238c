#pragma once

#include <string>
#include <vector>

#include "permgrid/series.hpp"

namespace permgrid {

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(const std::string& msg, int line) : std::runtime_error(msg), line_no(line) {}
  int line_no;
};

/// A reference sequence with a declared index of the first term.
struct ReferenceSequence {
  std::string id;
  int offset = 0;
  std::vector<BigInt> terms;

  /// Term a(n); throws when n is outside the stored range.
  const BigInt& at(int n) const;
  bool covers(int n) const { return n >= offset && n < offset + static_cast<int>(terms.size()); }
};

/// Shipped reference sequences for classes A, B and C (A033321, A278301,
/// A165538), extended with a(0) = 1 for the empty permutation.
ReferenceSequence reference_for_class(char cls);

struct BFileEntry {
  long n = 0;
  BigInt value;
};

/// Parses the two-column "n a(n)" flat format; '#' lines are comments.
/// Throws BFileParseError with the offending line number.
std::vector<BFileEntry> parse_bfile(const std::string& content);
std::vector<BFileEntry> parse_bfile_file(const std::string& path);

struct SequenceMismatch {
  long n = 0;
  BigInt expected;
  BigInt actual;
};

struct SequenceCheckReport {
  std::string id;
  int checked = 0;
  std::vector<SequenceMismatch> mismatches;
  bool ok() const { return checked > 0 && mismatches.empty(); }
};

/// Compares b-file entries with `computed` (indexed from 0) for all entries
/// with 0 <= n <= n_max.
SequenceCheckReport check_against_bfile(const std::string& id,
                                        const std::vector<BFileEntry>& entries,
                                        const std::vector<BigInt>& computed, int n_max);

}  // namespace permgrid
