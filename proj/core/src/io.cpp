#include "holonoise/io.hpp"

#include "holonoise/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace holonoise::io {

namespace {

constexpr int kSignificantDigits = 17;

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    return fields;
}

const std::string& require_key(const std::map<std::string, std::string>& header,
                               const std::string& key) {
    const auto it = header.find(key);
    if (it == header.end()) {
        throw FormatError("missing header field '" + key + "'");
    }
    return it->second;
}

std::size_t parse_size(const std::string& text) {
    std::size_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw FormatError("not an unsigned integer: '" + text + "'");
    }
    return v;
}

void write_metadata(std::ostream& out, const Metadata& md) {
    for (const auto& [k, v] : md) {
        out << "# " << k << '=' << v << '\n';
    }
}

// Reads data rows following the header; expects `columns` numeric fields.
std::vector<std::vector<double>> read_rows(std::istream& in, const std::vector<std::string>& columns) {
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError("missing column header row");
    }
    if (split_csv_row(line) != columns) {
        throw FormatError("unexpected column header: '" + line + "'");
    }
    std::vector<std::vector<double>> rows;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_row(line);
        if (fields.size() != columns.size()) {
            throw FormatError("row " + std::to_string(lineno) + " has " +
                              std::to_string(fields.size()) + " fields");
        }
        std::vector<double> row(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) {
            row[i] = parse_double(fields[i]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, kSignificantDigits);
    if (ec != std::errc()) {
        throw FormatError("cannot format number");
    }
    return {buf, ptr};
}

double parse_double(const std::string& text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw FormatError("not a number: '" + text + "'");
    }
    return v;
}

std::map<std::string, std::string> read_header(std::istream& in) {
    std::map<std::string, std::string> header;
    while (in.peek() == '#') {
        std::string line;
        std::getline(in, line);
        const auto body = line.substr(line.find_first_not_of("# "));
        const auto eq = body.find('=');
        if (eq != std::string::npos) {
            header[body.substr(0, eq)] = body.substr(eq + 1);
        }
    }
    return header;
}

void write_spectra_csv(std::ostream& out, const SpectralEstimate& est, const Metadata& extra) {
    out << "# holonoise spectra\n";
    write_metadata(out, {{"sample_rate_hz", format_double(est.sample_rate)},
                         {"window", std::string(window_name(est.window))},
                         {"overlap", format_double(est.overlap)},
                         {"n_avg", std::to_string(est.n_avg)},
                         {"segment_length", std::to_string(est.segment_length)},
                         {"convention", "one-sided; csd = <conj(X1) X2>"}});
    write_metadata(out, extra);
    out << "freq_hz,psd1,psd2,csd_re,csd_im,coherence\n";
    const bool has_cross = !est.csd.empty();
    for (std::size_t k = 0; k < est.freqs.size(); ++k) {
        out << format_double(est.freqs[k]) << ',' << format_double(est.psd1[k]) << ','
            << format_double(has_cross ? est.psd2[k] : 0.0) << ','
            << format_double(has_cross ? est.csd[k].real() : 0.0) << ','
            << format_double(has_cross ? est.csd[k].imag() : 0.0) << ','
            << format_double(has_cross ? est.coherence[k] : 0.0) << '\n';
    }
}

SpectralEstimate read_spectra_csv(std::istream& in) {
    const auto header = read_header(in);
    SpectralEstimate est;
    est.sample_rate = parse_double(require_key(header, "sample_rate_hz"));
    est.window = parse_window(require_key(header, "window"));
    est.overlap = parse_double(require_key(header, "overlap"));
    est.n_avg = parse_size(require_key(header, "n_avg"));
    est.segment_length = parse_size(require_key(header, "segment_length"));
    const auto rows = read_rows(in, {"freq_hz", "psd1", "psd2", "csd_re", "csd_im", "coherence"});
    if (rows.size() != est.segment_length / 2 + 1) {
        throw FormatError("spectra file has " + std::to_string(rows.size()) +
                          " rows, expected segment_length/2 + 1");
    }
    for (const auto& r : rows) {
        est.freqs.push_back(r[0]);
        est.psd1.push_back(r[1]);
        est.psd2.push_back(r[2]);
        est.csd.emplace_back(r[3], r[4]);
        est.coherence.push_back(r[5]);
    }
    return est;
}

void write_timeseries_csv(std::ostream& out, const TimeSeriesPair& pair, const Metadata& extra) {
    out << "# holonoise timeseries\n";
    write_metadata(out, {{"sample_rate_hz", format_double(pair.sample_rate)},
                         {"n_samples", std::to_string(pair.ch1.size())}});
    write_metadata(out, extra);
    out << "time_s,ch1_m,ch2_m,common_m\n";
    for (std::size_t i = 0; i < pair.ch1.size(); ++i) {
        out << format_double(static_cast<double>(i) / pair.sample_rate) << ','
            << format_double(pair.ch1[i]) << ',' << format_double(pair.ch2[i]) << ','
            << format_double(pair.common[i]) << '\n';
    }
}

TimeSeriesPair read_timeseries_csv(std::istream& in) {
    const auto header = read_header(in);
    TimeSeriesPair pair;
    pair.sample_rate = parse_double(require_key(header, "sample_rate_hz"));
    const auto rows = read_rows(in, {"time_s", "ch1_m", "ch2_m", "common_m"});
    pair.ch1.reserve(rows.size());
    pair.ch2.reserve(rows.size());
    pair.common.reserve(rows.size());
    for (const auto& r : rows) {
        pair.ch1.push_back(r[1]);
        pair.ch2.push_back(r[2]);
        pair.common.push_back(r[3]);
    }
    return pair;
}

SpectralEstimate read_spectra_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return read_spectra_csv(in);
}

TimeSeriesPair read_timeseries_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return read_timeseries_csv(in);
}

} // namespace holonoise::io
