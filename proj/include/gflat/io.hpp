// Dataset serialization (CSV and JSON) and CLI descriptor parsing.
//
// Output is deterministic: numbers are printed with %.17g (round-trip
// safe for doubles), fields are emitted in declaration order, and no
// clocks or environment state leak into a file.  Identical configuration
// therefore produces byte-identical output.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gflat/states.hpp"

namespace gflat::io {

inline constexpr const char* kArtifactVersion = "1.0.0";

std::string format_number(double x);

enum class Format { csv, json };

// Long-form table: named columns, numeric rows, ordered metadata.
// CSV: one header line, comma-separated %.17g values, LF endings,
// trailing `# key=value` comment lines for the summary entries.
// JSON: {"metadata": {...}, "records": [{column: value, ...}, ...]}.
struct Dataset {
    struct Meta {
        std::string key;
        std::string value;  // preformatted; raw == true emits unquoted in JSON
        bool raw = false;
    };

    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<Meta> metadata;
    std::vector<Meta> summary;  // also appended to CSV as comments

    void meta_str(const std::string& key, const std::string& value);
    void meta_num(const std::string& key, double value);
    void meta_int(const std::string& key, long value);
    void summary_num(const std::string& key, double value);
    void add_row(std::initializer_list<double> values);
};

void write_csv(std::ostream& os, const Dataset& d);
void write_json(std::ostream& os, const Dataset& d);
void write(std::ostream& os, const Dataset& d, Format format);

// Input-state descriptors:
//   fock:p:m        Fock state, m photons in waveguide p
//   superpos:j:k:a  one photon as a*|j> + sqrt(1-a^2)*|k>, real a in [-1, 1]
//   product:j:k     one photon in each of waveguides j and k
//   noon:j:k:phi    two-photon NOON state across j and k with phase phi
// Throws std::invalid_argument with a usage message on malformed input.
InputState parse_input_state(const std::string& descriptor, int lattice_size);

// Comma-separated list of nonnegative finite times.
std::vector<double> parse_time_list(const std::string& list);

}  // namespace gflat::io
