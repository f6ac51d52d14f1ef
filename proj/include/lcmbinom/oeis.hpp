#ifndef LCMBINOM_OEIS_HPP
#define LCMBINOM_OEIS_HPP

// OEIS b-file snapshots: "# comment" lines and "INDEX VALUE" data lines.

#include <lcmbinom/core.hpp>
#include <lcmbinom/render.hpp>

#include <cstdint>
#include <fstream>
#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lcmbinom {

struct OeisTerm {
    std::uint64_t index = 0;
    Natural value;
};

struct OeisSnapshot {
    std::string sequence_id;
    std::vector<OeisTerm> terms;

    std::uint64_t first_index() const { return terms.empty() ? 0 : terms.front().index; }
};

/// Parses a b-file. Empty lines are skipped; any other line that is neither a
/// comment nor exactly "INDEX VALUE" raises MalformedBfile, as do indices
/// that are not contiguous.
inline OeisSnapshot parse_bfile(std::istream& in, std::string sequence_id)
{
    OeisSnapshot snap;
    snap.sequence_id = std::move(sequence_id);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = detail::split(line, ' ');
        if (fields.size() != 2 || !detail::all_digits(fields[0]) || !detail::all_digits(fields[1])) {
            throw error(errc::malformed_bfile, "line " + std::to_string(lineno) + ": '" + line + "'");
        }
        OeisTerm term{detail::parse_u64(fields[0], errc::malformed_bfile),
                      detail::parse_natural(fields[1], errc::malformed_bfile)};
        if (!snap.terms.empty() && term.index != snap.terms.back().index + 1) {
            throw error(errc::malformed_bfile, "line " + std::to_string(lineno) + ": index " +
                                                   std::to_string(term.index) + " is not contiguous");
        }
        snap.terms.push_back(std::move(term));
    }
    return snap;
}

inline OeisSnapshot parse_bfile(const std::string& text, std::string sequence_id)
{
    std::istringstream is(text);
    return parse_bfile(is, std::move(sequence_id));
}

inline OeisSnapshot load_bfile(const std::string& path, std::string sequence_id)
{
    std::ifstream in(path);
    if (!in) throw error(errc::malformed_bfile, "cannot open " + path);
    return parse_bfile(in, std::move(sequence_id));
}

struct OeisMismatch {
    std::uint64_t index = 0;
    Natural expected; // from the snapshot
    Natural computed;
};

struct OeisReport {
    std::string sequence_id;
    std::uint64_t verified = 0;
    std::vector<OeisMismatch> mismatches;
    /// Set when the canonical reading fails but another flattening matches.
    std::optional<std::string> ordering_note;

    bool ok() const { return mismatches.empty(); }
};

namespace detail {

/// Flattening of the triangle: rows from `first_row`, columns from `first_col`
/// (or reversed within each row).
struct Reading {
    const char* name;
    std::uint64_t first_row;
    std::uint64_t first_col;
    bool reversed;
};

inline constexpr Reading canonical_reading{"rows n >= 0, columns k = 0..n", 0, 0, false};

inline constexpr Reading alternative_readings[] = {
    {"rows n >= 1, columns k = 1..n", 1, 1, false},
    {"rows n >= 1, columns k = 0..n", 1, 0, false},
    {"rows n >= 0, columns k = n..0", 0, 0, true},
};

inline std::vector<Natural> flatten(const Reading& r, std::size_t count)
{
    std::vector<Natural> out;
    out.reserve(count);
    for (std::uint64_t n = r.first_row; out.size() < count; ++n) {
        auto row = lcm_binomial_row(n);
        if (r.reversed) std::reverse(row.begin(), row.end());
        for (std::uint64_t k = r.first_col; k <= n && out.size() < count; ++k) out.push_back(row[k]);
    }
    return out;
}

inline bool matches(const OeisSnapshot& snap, const std::vector<Natural>& seq)
{
    for (std::size_t i = 0; i < snap.terms.size(); ++i) {
        if (snap.terms[i].value != seq[i]) return false;
    }
    return true;
}

} // namespace detail

/// Compares the snapshot term by term against the triangle read by rows
/// from row 0, position 0 taken to be the snapshot's first index.
inline OeisReport oeis_check(const OeisSnapshot& snap)
{
    OeisReport report;
    report.sequence_id = snap.sequence_id;
    const auto computed = detail::flatten(detail::canonical_reading, snap.terms.size());
    for (std::size_t i = 0; i < snap.terms.size(); ++i) {
        if (snap.terms[i].value == computed[i]) {
            ++report.verified;
        } else {
            report.mismatches.push_back({snap.terms[i].index, snap.terms[i].value, computed[i]});
        }
    }
    if (!report.ok()) {
        for (const auto& r : detail::alternative_readings) {
            if (detail::matches(snap, detail::flatten(r, snap.terms.size()))) {
                report.ordering_note = std::string("snapshot matches reading '") + r.name +
                                       "' instead of '" + detail::canonical_reading.name + "'";
                break;
            }
        }
    }
    return report;
}

inline std::string format_report(const OeisReport& report)
{
    std::ostringstream os;
    os << report.sequence_id << ": " << report.verified << " terms verified, " << report.mismatches.size()
       << " mismatches\n";
    for (const auto& m : report.mismatches) {
        os << "  index " << m.index << ": snapshot " << m.expected << ", computed " << m.computed << '\n';
    }
    if (report.ordering_note) os << "  ordering: " << *report.ordering_note << '\n';
    return os.str();
}

} // namespace lcmbinom

#endif // LCMBINOM_OEIS_HPP
