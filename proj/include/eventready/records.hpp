#ifndef EVENTREADY_RECORDS_HPP
#define EVENTREADY_RECORDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eventready/optimizer.hpp"

namespace eventready {

/// Canonical float text: 12 significant digits, shortest form.
std::string format_double(double value);

/// Ordered key = value lines; the exchange format for manifests, tallies
/// and config files.
class Record {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, std::uint64_t value);
    void set(const std::string& key, std::int64_t value);

    const std::string* find(const std::string& key) const;
    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

    /// One "key = value" line per field.
    std::string to_text() const;

    /// Parses key = value lines; '#' starts a comment, blank lines skipped.
    static Record parse(std::istream& in);

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

inline constexpr const char* kSweepCsvHeader =
    "v,rho,R,eta_min,theta1_deg,theta2_deg,theta1p_deg,theta2p_deg";

std::string sweep_row_to_csv(const SweepRow& row);
SweepRow sweep_row_from_csv(const std::string& line);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace eventready

#endif
