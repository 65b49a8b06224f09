#include "solenoid/cli/csv.hpp"

#include <charconv>
#include <filesystem>

#include "solenoid/error.hpp"

namespace solenoid::cli {

std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return {buf, res.ptr};
}

namespace {

std::ofstream open_for_writing(const std::string& path) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw invalid_input("cannot write '" + path + "'");
    return out;
}

std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line;
}

}  // namespace

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : path_(path), out_(open_for_writing(path)), columns_(header.size()) {
    out_ << join(header) << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_real(v));
    row(cells);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw invalid_input("CSV row has the wrong number of columns");
    out_ << join(cells) << '\n';
    if (!out_) throw invalid_input("write to '" + path_ + "' failed");
}

std::string write_gnuplot_script(const std::string& csv_path, const std::string& title, const std::string& xlabel,
                                 const std::string& ylabel, const std::vector<PlotSeries>& series) {
    const std::filesystem::path csv(csv_path);
    std::filesystem::path script = csv;
    script.replace_extension(".gp");
    std::filesystem::path png = csv;
    png.replace_extension(".png");

    std::ofstream out = open_for_writing(script.string());
    out << "# gnuplot " << script.filename().string() << "\n"
        << "set datafile separator ','\n"
        << "set terminal pngcairo size 900,600\n"
        << "set output '" << png.filename().string() << "'\n"
        << "set title '" << title << "'\n"
        << "set xlabel '" << xlabel << "'\n"
        << "set ylabel '" << ylabel << "'\n"
        << "set grid\n"
        << "plot ";
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i) out << ", \\\n     ";
        out << "'" << csv.filename().string() << "' every ::1 using " << series[i].x_column << ':'
            << series[i].y_column << " with lines title '" << series[i].title << "'";
    }
    out << '\n';
    return script.string();
}

}  // namespace solenoid::cli
