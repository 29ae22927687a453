#pragma once

#include <string>
#include <vector>

namespace reslab {

/// A flat report: header plus rows of already-formatted cells. All emitters
/// are locale-independent and byte-deterministic.
struct ReportTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const ReportTable& t);
std::string to_json(const ReportTable& t);  // array of flat objects, same field names
std::string to_pretty(const ReportTable& t);

/// Parses output of to_csv (no quoting in any emitted column).
ReportTable parse_csv(const std::string& text);

std::string fmt_fixed(double v, int decimals);  // "%.Nf"
std::string fmt_sig(double v);                  // "%.6g"

}  // namespace reslab
