#pragma once

// Harmonic power spectra on disk.
//
// CSV format, one row per harmonic:
//
//   # comment lines and blank lines are ignored
//   harmonic_index,power        <- optional header
//   1,4.0
//   2,2.0
//
// Indices are 1-based and may appear in any order; n is the largest index and
// harmonics not listed below it have zero power.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qo/timbre.hpp"

namespace qo {

struct RawSpectrum {
  std::string name;
  std::vector<double> powers;  // harmonic 1 first
  std::string source_path;
};

RawSpectrum parse_spectrum(std::string_view text, std::string name, std::string source = "<memory>");

/// Reads a CSV file. An empty `name` defaults to the file stem.
RawSpectrum load_spectrum(const std::filesystem::path& path, std::string name = {});

/// Keeps the lowest `n` harmonics.
RawSpectrum truncate(const RawSpectrum& raw, std::size_t n);

/// Divides by the total power, zero-padding high harmonics up to `pad_to`.
TimbralVector normalize(const RawSpectrum& raw, std::optional<std::size_t> pad_to = std::nullopt);

struct CollectionOptions {
  std::optional<std::size_t> pad_to;
  std::optional<std::size_t> truncate_to;
};

/// Every *.csv in `dir`, normalized and sorted by name.
std::vector<TimbralVector> load_collection(const std::filesystem::path& dir, const CollectionOptions& options = {});

/// CSV text for a timbral vector; full round-trip precision.
std::string write_spectrum_csv(const TimbralVector& v);

nlohmann::json timbral_to_json(const TimbralVector& v);
TimbralVector timbral_from_json(const nlohmann::json& j);

/// Graphviz digraph of the Hasse diagram. An edge u -> v means v is brighter
/// than u. Nodes and edges are sorted by name.
std::string export_dot(const BrightnessHasse& hasse);

}  // namespace qo
