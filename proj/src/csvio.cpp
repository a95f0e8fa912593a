#include "rnndcor/csvio.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rnndcor/errors.hpp"

namespace rnndcor::csvio {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::vector<std::string> split_record(const std::string &line,
                                      char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(ch);
            }
        } else if (ch == '"' && current.empty()) {
            quoted = true;
        } else if (ch == delimiter) {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::vector<std::vector<std::string>> read_rows(const std::string &path,
                                                char delimiter) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open file: " + path);
    }
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        rows.push_back(split_record(line, delimiter));
    }
    // A trailing blank line is an artifact of the final newline.
    if (!rows.empty() && rows.back().size() == 1 && rows.back()[0].empty()) {
        rows.pop_back();
    }
    return rows;
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open file for writing: " + path);
    }
    out << content;
    if (!out) {
        throw IoError("failed writing file: " + path);
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace rnndcor::csvio
