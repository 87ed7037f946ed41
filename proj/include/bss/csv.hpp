#pragma once

#include <charconv>
#include <cstdio>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bss::csv {

// Minimal comma-separated reader for the plain formats used here: no quoting,
// no embedded commas. A header row with the expected column names is required.
class Reader {
public:
    Reader(std::istream& in, std::vector<std::string> expected_header)
        : in_(in) {
        std::string line;
        if (!std::getline(in_, line)) throw std::runtime_error("csv: missing header");
        if (split(line) != expected_header) {
            std::string want;
            for (const auto& c : expected_header) want += c + ",";
            throw std::runtime_error("csv: unexpected header, want " + want);
        }
        columns_ = expected_header.size();
    }

    bool next(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(in_, line)) {
            if (line.empty()) continue;
            fields = split(line);
            if (fields.size() != columns_)
                throw std::runtime_error("csv: wrong field count in line: " + line);
            return true;
        }
        return false;
    }

    static std::vector<std::string> split(std::string line) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> out;
        size_t start = 0;
        while (true) {
            size_t pos = line.find(',', start);
            if (pos == std::string::npos) {
                out.push_back(line.substr(start));
                break;
            }
            out.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        return out;
    }

private:
    std::istream& in_;
    size_t columns_ = 0;
};

inline int to_int(const std::string& s, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error(std::string("csv: bad integer for ") + what + ": " + s);
    return value;
}

inline double to_double(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        double value = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("csv: bad number for ") + what + ": " + s);
    }
}

// Shortest representation that round-trips exactly.
inline std::string format_double(double v) {
    char buf[32];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::stod(buf) == v) break;
    }
    return buf;
}

}  // namespace bss::csv
