#pragma once

#include "holonoise/spectral.hpp"
#include "holonoise/synthesis.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace holonoise::io {

/// Shortest-exact-enough text form: 17 significant digits, round-trips bitwise.
std::string format_double(double v);
/// Locale-independent parse; throws FormatError.
double parse_double(const std::string& text);

/// Header comments are written as "# key=value" lines before the column row.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// freq_hz,psd1,psd2,csd_re,csd_im,coherence with window/overlap/n_avg/
/// segment_length/sample_rate_hz in the header.
void write_spectra_csv(std::ostream& out, const SpectralEstimate& est, const Metadata& extra = {});
SpectralEstimate read_spectra_csv(std::istream& in);

/// time_s,ch1_m,ch2_m,common_m with sample_rate_hz in the header.
void write_timeseries_csv(std::ostream& out, const TimeSeriesPair& pair, const Metadata& extra = {});
TimeSeriesPair read_timeseries_csv(std::istream& in);

/// Parsed "# key=value" comments from the top of a CSV.
std::map<std::string, std::string> read_header(std::istream& in);

SpectralEstimate read_spectra_file(const std::filesystem::path& path);
TimeSeriesPair read_timeseries_file(const std::filesystem::path& path);

} // namespace holonoise::io
