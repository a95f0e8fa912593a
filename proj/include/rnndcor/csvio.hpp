#ifndef RNNDCOR_CSVIO_HPP
#define RNNDCOR_CSVIO_HPP

#include <string>
#include <vector>

namespace rnndcor::csvio {

/// Shortest text representation that parses back to the same double
/// (std::to_chars). Shared by every CSV writer and by SVG data
/// attributes, so exported numbers compare byte-for-byte across formats.
std::string format_double(double v);

/// Fixed-precision variant for display labels.
std::string format_fixed(double v, int decimals);

/// RFC-4180-style reader: quoted fields, doubled quotes, configurable
/// delimiter. Newlines inside quoted fields are not supported (no field
/// in this project's formats ever contains one).
std::vector<std::vector<std::string>> read_rows(const std::string &path,
                                                char delimiter = ',');

std::vector<std::string> split_record(const std::string &line,
                                      char delimiter);

void write_text_file(const std::string &path, const std::string &content);

std::string read_text_file(const std::string &path);

} // namespace rnndcor::csvio

#endif
