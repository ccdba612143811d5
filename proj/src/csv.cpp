#include "paircorr/csv.hpp"

#include <cstdio>

namespace paircorr::csv {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Writer::Writer(const std::string& path) : path_(path) {
    if (path == "-") {
        out_ = &std::cout;
    } else {
        file_.open(path);
        if (!file_) throw std::runtime_error("csv: cannot open " + path);
        out_ = &file_;
    }
}

Writer::~Writer() {
    if (!finished_ && out_ == &file_) {
        file_.close();
        std::remove(path_.c_str());
    }
}

void Writer::comment(const std::string& line) { *out_ << "# " << line << "\n"; }

void Writer::header(const std::vector<std::string>& columns) { row(columns); }

void Writer::row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) *out_ << ',';
        *out_ << cells[i];
    }
    *out_ << "\n";
}

void Writer::finish() {
    out_->flush();
    finished_ = true;
}

}  // namespace paircorr::csv
