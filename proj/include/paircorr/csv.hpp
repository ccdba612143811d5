#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace paircorr::csv {

/// Formats a double with 17 significant digits (round-trip exact).
std::string num(double v);

/// CSV sink: stdout when path is "-", a file otherwise. Provenance lines go
/// out as '#' comments before the header row. A file that has not been
/// finished by the time the writer is destroyed is removed.
class Writer {
public:
    explicit Writer(const std::string& path);
    ~Writer();
    Writer(const Writer&) = delete;
    Writer& operator=(const Writer&) = delete;

    void comment(const std::string& line);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);
    void finish();

private:
    std::string path_;
    std::ofstream file_;
    std::ostream* out_;
    bool finished_ = false;
};

}  // namespace paircorr::csv
