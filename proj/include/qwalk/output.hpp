// output.hpp
// Byte-deterministic writers: CSV tables, heatmaps and the run manifest.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qwalk/probability_field.hpp"

namespace qwalk {

// %.17g, round-trippable for doubles.
std::string format_double(double v);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    class Row {
    public:
        Row& add(const std::string& s);
        Row& add(const char* s) { return add(std::string(s)); }
        Row& add(double v) { return add(format_double(v)); }
        Row& add(int v) { return add(std::to_string(v)); }
        Row& add(std::uint64_t v) { return add(std::to_string(v)); }

    private:
        friend class CsvTable;
        std::vector<std::string> cells_;
    };

    Row& row();
    std::string str() const;
    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<Row> rows_;
};

// Writes bytes to path, creating parent directories. Throws std::runtime_error
// naming the path on failure.
void write_file(const std::filesystem::path& path, const std::string& bytes);

// CSV grid: header row "y\x,<x...>", then one row per y (top row is the largest y).
std::string heatmap_csv(const ProbabilityField& p);

// Plain PGM (P2), maxval 255, pixel = round(255 * p / max p). Rows run from
// the largest y down; columns from the smallest x. Text lines stay within
// 70 characters as netpbm asks.
std::string heatmap_pgm(const ProbabilityField& p);

// Writes <stem>.csv and <stem>.pgm into dir; returns the two paths.
std::vector<std::filesystem::path> emit_heatmap(const ProbabilityField& p, const std::filesystem::path& dir,
                                                const std::string& stem);

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace qwalk
