#include "eventready/records.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace eventready {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void Record::set(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
}

void Record::set(const std::string& key, double value) { set(key, format_double(value)); }

void Record::set(const std::string& key, std::uint64_t value) { set(key, std::to_string(value)); }

void Record::set(const std::string& key, std::int64_t value) { set(key, std::to_string(value)); }

const std::string* Record::find(const std::string& key) const {
    for (const auto& [k, v] : fields_)
        if (k == key) return &v;
    return nullptr;
}

std::string Record::to_text() const {
    std::string out;
    for (const auto& [k, v] : fields_) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

namespace {

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Record Record::parse(std::istream& in) {
    Record record;
    std::string line;
    while (std::getline(in, line)) {
        const std::string text = strip(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("Record: malformed line '" + text + "'");
        record.set(strip(text.substr(0, eq)), strip(text.substr(eq + 1)));
    }
    return record;
}

std::string sweep_row_to_csv(const SweepRow& row) {
    std::string out;
    out += format_double(row.v);
    out += ',';
    out += format_double(row.rho);
    out += ',';
    out += format_double(row.reflectivity);
    out += ',';
    if (row.eta_min) out += format_double(*row.eta_min);  // empty field marks no violation
    for (const auto& angle : row.angles) {
        out += ',';
        if (row.eta_min) out += format_double(angle.degrees());
    }
    return out;
}

SweepRow sweep_row_from_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    while (cells.size() < 8) cells.emplace_back();  // trailing empties drop off getline
    if (cells.size() != 8)
        throw std::invalid_argument("sweep CSV: expected 8 fields, got line '" + line + "'");

    SweepRow row;
    row.v = std::stod(cells[0]);
    row.rho = std::stod(cells[1]);
    row.reflectivity = std::stod(cells[2]);
    if (!cells[3].empty()) {
        row.eta_min = std::stod(cells[3]);
        for (int k = 0; k < 4; ++k)
            row.angles[k] = Angle::from_degrees(std::stod(cells[4 + k]));
    }
    return row;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << '\n';
    for (const auto& row : rows) out << sweep_row_to_csv(row) << '\n';
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("sweep CSV: empty input");
    if (strip(line) != kSweepCsvHeader)
        throw std::invalid_argument("sweep CSV: unexpected header '" + line + "'");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        rows.push_back(sweep_row_from_csv(line));
    }
    return rows;
}

}  // namespace eventready
