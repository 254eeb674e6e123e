#include "gflat/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace gflat::io {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void Dataset::meta_str(const std::string& key, const std::string& value) {
    metadata.push_back({key, value, false});
}

void Dataset::meta_num(const std::string& key, double value) {
    metadata.push_back({key, format_number(value), true});
}

void Dataset::meta_int(const std::string& key, long value) {
    metadata.push_back({key, std::to_string(value), true});
}

void Dataset::summary_num(const std::string& key, double value) {
    summary.push_back({key, format_number(value), true});
}

void Dataset::add_row(std::initializer_list<double> values) {
    rows.emplace_back(values);
}

void write_csv(std::ostream& os, const Dataset& d) {
    for (std::size_t c = 0; c < d.columns.size(); ++c) {
        if (c) os << ',';
        os << d.columns[c];
    }
    os << '\n';
    for (const auto& row : d.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << format_number(row[c]);
        }
        os << '\n';
    }
    for (const auto& s : d.summary) os << "# " << s.key << '=' << s.value << '\n';
}

namespace {

void json_escaped(std::ostream& os, const std::string& s) {
    os << '"';
    for (char ch : s) {
        switch (ch) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    os << buf;
                } else {
                    os << ch;
                }
        }
    }
    os << '"';
}

void json_meta_fields(std::ostream& os, const std::vector<Dataset::Meta>& meta) {
    for (std::size_t i = 0; i < meta.size(); ++i) {
        if (i) os << ", ";
        json_escaped(os, meta[i].key);
        os << ": ";
        if (meta[i].raw)
            os << meta[i].value;
        else
            json_escaped(os, meta[i].value);
    }
}

}  // namespace

void write_json(std::ostream& os, const Dataset& d) {
    os << "{\n  \"metadata\": {";
    std::vector<Dataset::Meta> meta = d.metadata;
    meta.insert(meta.end(), d.summary.begin(), d.summary.end());
    json_meta_fields(os, meta);
    os << "},\n  \"records\": [\n";
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
        os << "    {";
        for (std::size_t c = 0; c < d.rows[r].size(); ++c) {
            if (c) os << ", ";
            json_escaped(os, d.columns[c]);
            os << ": " << format_number(d.rows[r][c]);
        }
        os << (r + 1 < d.rows.size() ? "},\n" : "}\n");
    }
    os << "  ]\n}\n";
}

void write(std::ostream& os, const Dataset& d, Format format) {
    if (format == Format::csv)
        write_csv(os, d);
    else
        write_json(os, d);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = s.find(sep, begin);
        parts.push_back(s.substr(begin, end - begin));
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return parts;
}

int parse_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": expected an integer, got '" + s + "'");
    }
    if (used != s.size())
        throw std::invalid_argument(std::string(what) + ": expected an integer, got '" + s + "'");
    return v;
}

double parse_double(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": expected a number, got '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + ": expected a finite number, got '" + s + "'");
    return v;
}

}  // namespace

InputState parse_input_state(const std::string& descriptor, int lattice_size) {
    const auto parts = split(descriptor, ':');
    const std::string& kind = parts[0];
    InputState state;
    if (kind == "fock") {
        if (parts.size() != 3)
            throw std::invalid_argument("input descriptor: expected fock:p:m");
        state = FockAt{parse_int(parts[1], "fock waveguide"), parse_int(parts[2], "fock photons")};
    } else if (kind == "superpos") {
        if (parts.size() != 4)
            throw std::invalid_argument("input descriptor: expected superpos:j:k:alpha");
        const int j = parse_int(parts[1], "superpos j");
        const int k = parse_int(parts[2], "superpos k");
        const double alpha = parse_double(parts[3], "superpos alpha");
        if (std::abs(alpha) > 1.0)
            throw std::invalid_argument("superpos alpha: must satisfy |alpha| <= 1");
        if (j == k) throw std::invalid_argument("superpos: waveguide indices must differ");
        if (j < 0 || j >= lattice_size || k < 0 || k >= lattice_size)
            throw std::invalid_argument("superpos: waveguide index out of range");
        SinglePhotonSuperposition s;
        s.amplitudes.assign(lattice_size, cdouble{});
        s.amplitudes[j] = alpha;
        s.amplitudes[k] = std::sqrt(1.0 - alpha * alpha);
        state = std::move(s);
    } else if (kind == "product") {
        if (parts.size() != 3)
            throw std::invalid_argument("input descriptor: expected product:j:k");
        state = TwoPhotonProduct{parse_int(parts[1], "product j"), parse_int(parts[2], "product k")};
    } else if (kind == "noon") {
        if (parts.size() != 4)
            throw std::invalid_argument("input descriptor: expected noon:j:k:phi");
        state = Noon{parse_int(parts[1], "noon j"), parse_int(parts[2], "noon k"), 2,
                     parse_double(parts[3], "noon phase")};
    } else {
        throw std::invalid_argument("input descriptor: unknown kind '" + kind +
                                    "' (expected fock, superpos, product or noon)");
    }
    validate_input_state(state, lattice_size);
    return state;
}

std::vector<double> parse_time_list(const std::string& list) {
    std::vector<double> times;
    for (const auto& part : split(list, ',')) {
        const double t = parse_double(part, "time list");
        if (t < 0.0) throw std::invalid_argument("time list: times must be >= 0");
        times.push_back(t);
    }
    if (times.empty()) throw std::invalid_argument("time list: empty");
    return times;
}

}  // namespace gflat::io
