#include "permgrid/oeis.hpp"

#include <fstream>
#include <sstream>

namespace permgrid {

const BigInt& ReferenceSequence::at(int n) const {
  if (!covers(n)) {
    throw std::out_of_range(id + " has no term a(" + std::to_string(n) + ")");
  }
  return terms[static_cast<std::size_t>(n - offset)];
}

ReferenceSequence reference_for_class(char cls) {
  switch (cls) {
    case 'A':
      return {"A033321", 0, {1, 1, 2, 6, 21, 79, 311, 1265, 5275, 22431, 96900, 424068, 1876143}};
    case 'B':
      return {"A278301", 0, {1, 1, 2, 6, 23, 98, 434, 1949, 8803, 39888, 181201, 825201, 3767757}};
    case 'C':
      return {"A165538", 0, {1, 1, 2, 6, 22, 88, 367, 1568, 6810, 29943, 132958, 595227, 2683373}};
  }
  throw std::invalid_argument("unknown class");
}

std::vector<BFileEntry> parse_bfile(const std::string& content) {
  std::vector<BFileEntry> out;
  std::stringstream ss(content);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    std::stringstream ls(line);
    std::string first, second, extra;
    if (!(ls >> first)) continue;       // blank line
    if (first[0] == '#') continue;      // comment
    if (!(ls >> second) || (ls >> extra)) {
      throw BFileParseError("b-file line " + std::to_string(line_no) +
                                ": expected exactly \"n a(n)\"",
                            line_no);
    }
    BFileEntry e;
    try {
      e.n = std::stol(first);
      e.value = BigInt(second);
    } catch (const std::exception&) {
      throw BFileParseError("b-file line " + std::to_string(line_no) + ": malformed number",
                            line_no);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<BFileEntry> parse_bfile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open b-file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_bfile(buf.str());
}

SequenceCheckReport check_against_bfile(const std::string& id,
                                        const std::vector<BFileEntry>& entries,
                                        const std::vector<BigInt>& computed, int n_max) {
  SequenceCheckReport report;
  report.id = id;
  for (const auto& e : entries) {
    if (e.n < 0 || e.n > n_max || e.n >= static_cast<long>(computed.size())) continue;
    ++report.checked;
    const BigInt& actual = computed[static_cast<std::size_t>(e.n)];
    if (actual != e.value) report.mismatches.push_back({e.n, e.value, actual});
  }
  return report;
}

}  // namespace permgrid
