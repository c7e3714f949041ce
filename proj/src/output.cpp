#include "qwalk/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qwalk {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvTable::Row& CsvTable::Row::add(const std::string& s) {
    cells_.push_back(s);
    return *this;
}

CsvTable::Row& CsvTable::row() { return rows_.emplace_back(); }

std::string CsvTable::str() const {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r.cells_);
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("write failed for " + path.string());
}

std::string heatmap_csv(const ProbabilityField& p) {
    const int e = p.extent();
    std::string out = "y\\x";
    for (int x = -e; x <= e; ++x) out += "," + std::to_string(x);
    out += '\n';
    for (int y = e; y >= -e; --y) {
        out += std::to_string(y);
        for (int x = -e; x <= e; ++x) out += "," + format_double(p.at(x, y));
        out += '\n';
    }
    return out;
}

std::string heatmap_pgm(const ProbabilityField& p) {
    const int e = p.extent();
    const double peak = p.values().empty() ? 0.0 : *std::max_element(p.values().begin(), p.values().end());
    std::ostringstream out;
    out << "P2\n" << p.side() << ' ' << p.side() << "\n255\n";
    for (int y = e; y >= -e; --y) {
        std::size_t width = 0;
        for (int x = -e; x <= e; ++x) {
            const int v = peak > 0 ? static_cast<int>(std::lround(255.0 * p.at(x, y) / peak)) : 0;
            const std::string cell = std::to_string(std::clamp(v, 0, 255));
            if (width > 0 && width + 1 + cell.size() > 70) {
                out << '\n';
                width = 0;
            }
            if (width > 0) {
                out << ' ';
                ++width;
            }
            out << cell;
            width += cell.size();
        }
        out << '\n';
    }
    return out.str();
}

std::vector<std::filesystem::path> emit_heatmap(const ProbabilityField& p, const std::filesystem::path& dir,
                                                const std::string& stem) {
    const auto csv = dir / (stem + ".csv");
    const auto pgm = dir / (stem + ".pgm");
    write_file(csv, heatmap_csv(p));
    write_file(pgm, heatmap_pgm(p));
    return {csv, pgm};
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace qwalk
