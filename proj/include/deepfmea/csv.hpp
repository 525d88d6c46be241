#pragma once

#include <string>
#include <string_view>

#include "deepfmea/util.hpp"

namespace deepfmea {

// Comma-separated output with minimal quoting; doubles use the shortest
// round-trip form so files are byte-stable across runs.
class CsvWriter {
public:
    CsvWriter& field(std::string_view text) {
        sep();
        if (text.find_first_of(",\"\n") == std::string_view::npos) {
            out_.append(text);
        } else {
            out_.push_back('"');
            for (char c : text) {
                if (c == '"') out_.push_back('"');
                out_.push_back(c);
            }
            out_.push_back('"');
        }
        return *this;
    }

    CsvWriter& field(double v) {
        sep();
        out_.append(format_double(v));
        return *this;
    }

    CsvWriter& field(long v) {
        sep();
        out_.append(std::to_string(v));
        return *this;
    }

    CsvWriter& end_row() {
        out_.push_back('\n');
        row_open_ = false;
        return *this;
    }

    const std::string& str() const { return out_; }

private:
    void sep() {
        if (row_open_) out_.push_back(',');
        row_open_ = true;
    }

    std::string out_;
    bool row_open_ = false;
};

}  // namespace deepfmea
