#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qsmear::cli {

/// Output-sink failure (unwritable temp file, failed rename). Kept distinct
/// from qsmear::Error so the entry point can map it to its own exit code.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One table cell: a number, an integer count, or a label.
using Cell = std::variant<double, long long, std::string>;

/// Rectangular result table shared by every subcommand. The same table is
/// rendered as CSV or JSON depending on the requested output format.
struct Table {
    std::string command;  ///< echoed into the JSON envelope
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Appends a row, checking its width against the header.
    void add_row(std::vector<Cell> cells);
};

/// Scientific notation with 17 significant digits, enough to round-trip an
/// IEEE double, so repeated runs produce byte-identical files.
std::string format_double(double x);

/// Header row followed by one comma-separated line per data row.
std::string to_csv(const Table& table);

/// Envelope {"schema_version": 1, "command": ..., "columns": ..., "rows": ...}
/// with rows as arrays in column order.
std::string to_json(const Table& table);

/// Renders the table in the requested format ("csv" or "json") and writes it.
/// An empty path streams to stdout; otherwise the content goes to a sibling
/// temp file first and is renamed over the target, so a crash mid-write never
/// leaves a truncated table behind.
void write_output(const Table& table, const std::string& path, const std::string& format);

}  // namespace qsmear::cli
