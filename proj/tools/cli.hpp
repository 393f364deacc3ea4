#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace relosc::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
};

/// One table cell. Doubles are printed with 17 significant digits.
using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

/// Header row, comma delimiter, '.' decimal point.
std::string to_csv(const Table& t);
/// Array of flat objects; non-finite numbers become null.
std::string to_json(const Table& t);
std::string render(const Table& t, Format f);

/// Writes to a sibling temporary file and renames it over path.
void write_atomically(const std::string& path, const std::string& contents);

/// Entry point shared by the executable and the tests. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relosc::cli
