// Artifact writers: deterministic JSON/CSV text output and raw coefficient
// dumps with JSON sidecars describing layout and run parameters.
#pragma once

#include <string>

#include <json.hpp>

#include "field.hpp"
#include "grid.hpp"

namespace tpns {

/// Insertion-ordered JSON so artifact key order is deterministic.
using ojson = nlohmann::ordered_json;

/// Create a directory (and parents). Throws IoError on failure.
void ensure_dir(const std::string& dir);

/// True when the path names an existing directory.
bool dir_exists(const std::string& dir);

/// Write a whole text file. Throws IoError on failure.
void write_text(const std::string& path, const std::string& content);

/// Read a whole file into a string. Throws IoError on failure.
std::string read_text(const std::string& path);

/// Fixed-format decimal rendering for CSV cells (deterministic, 12
/// significant digits).
std::string csv_num(double v);

/// Serialize with a trailing newline and write to disk.
void write_json_file(const std::string& path, const ojson& j);

/// Dump a field's raw coefficients or samples: little-endian doubles,
/// interleaved (re, im), in storage order (time slow; x1, x2, x3
/// lexicographic; component fast), plus a `<base>.json` sidecar recording the
/// layout and run parameters. `base` is the path without extension.
void dump_field(const std::string& base, const Grid& g, const Field& f);

} // namespace tpns
