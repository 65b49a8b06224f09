#pragma once

// CSV output (header row, '.' decimals, 17 significant digits, LF endings)
// and companion gnuplot scripts.

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace solenoid::cli {

/// Round-trippable decimal text for a double ("%.17g", locale independent).
std::string format_real(double v);

class CsvWriter {
public:
    /// Creates parent directories; throws Error(invalid_input) if the file
    /// cannot be opened.
    CsvWriter(const std::string& path, const std::vector<std::string>& header);

    void row(std::initializer_list<double> values);
    void row(const std::vector<std::string>& cells);

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream out_;
    std::size_t columns_;
};

struct PlotSeries {
    int x_column = 1;  // 1-based
    int y_column = 2;
    std::string title;
};

/// Writes <csv_path minus extension>.gp, which renders the series to a PNG
/// next to the CSV when run through gnuplot. Returns the script path.
std::string write_gnuplot_script(const std::string& csv_path, const std::string& title, const std::string& xlabel,
                                 const std::string& ylabel, const std::vector<PlotSeries>& series);

}  // namespace solenoid::cli
