#include "grwscmf/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace grwscmf {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

bool is_blank(const std::string& line) {
    for (char ch : line) {
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

void split_cells(const std::string& line, char delim,
                 std::vector<std::string>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(delim, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_cell(const std::string& cell, const std::string& path,
                  std::size_t line_no) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    // allow surrounding whitespace only
    while (end && *end != '\0' &&
           std::isspace(static_cast<unsigned char>(*end)))
        ++end;
    const char* p = begin;
    while (*p != '\0' && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (end == begin || *p == '\0' || (end && *end != '\0')) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": cannot parse numeric cell '" + cell + "'");
    }
    if (!std::isfinite(v)) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": non-finite value '" + cell + "'");
    }
    return v;
}

}  // namespace

Matrix read_csv_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    char delim = '\0';
    std::vector<std::string> cells;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line) || line[0] == '#') continue;
        if (delim == '\0') {
            delim = line.find('\t') != std::string::npos ? '\t' : ',';
        }
        split_cells(line, delim, cells);
        if (width == 0) {
            width = cells.size();
        } else if (cells.size() != width) {
            throw std::runtime_error(
                path + ":" + std::to_string(line_no) + ": ragged row (" +
                std::to_string(cells.size()) + " cells, expected " +
                std::to_string(width) + ")");
        }
        std::vector<double> row(width);
        for (std::size_t j = 0; j < width; ++j) {
            row[j] = parse_cell(cells[j], path, line_no);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty matrix file: " + path);

    Matrix m(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(width));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)]
                          [static_cast<std::size_t>(j)];
    return m;
}

void write_csv_matrix(const std::string& path, const Matrix& m,
                      const std::vector<std::string>& header_comments) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    for (const auto& c : header_comments) out << "# " << c << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

int read_label_count_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest: " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line) || line[0] == '#') continue;
        const std::string key = "label_count=";
        if (line.rfind(key, 0) == 0) {
            try {
                return std::stoi(line.substr(key.size()));
            } catch (const std::exception&) {
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": invalid label_count value");
            }
        }
    }
    throw std::runtime_error("manifest has no label_count line: " + path);
}

}  // namespace grwscmf
