#ifndef LCMBINOM_RENDER_HPP
#define LCMBINOM_RENDER_HPP

#include <lcmbinom/core.hpp>

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace lcmbinom {

enum class Format { text, csv, json, bfile };
enum class Quantity { lcm_binomial, binomial, ratio };

struct RenderOptions {
    std::uint64_t rows = 13;
    Format format = Format::text;
    /// Mark cells where [n k] != C(n,k).
    bool highlight = false;
    /// Use ANSI green for marked cells instead of *v*.
    bool ansi = false;
    Quantity what = Quantity::lcm_binomial;
};

inline Format parse_format(std::string_view s)
{
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    if (s == "bfile") return Format::bfile;
    throw error(errc::invalid_format, "unknown format '" + std::string(s) + "'");
}

inline Quantity parse_quantity(std::string_view s)
{
    if (s == "lcm_binomial" || s == "lcm") return Quantity::lcm_binomial;
    if (s == "binomial") return Quantity::binomial;
    if (s == "ratio") return Quantity::ratio;
    throw error(errc::invalid_format, "unknown quantity '" + std::string(s) + "'");
}

inline const Natural& pick(const TriangleEntry& e, Quantity q)
{
    switch (q) {
    case Quantity::binomial: return e.binom;
    case Quantity::ratio: return e.ratio;
    case Quantity::lcm_binomial: break;
    }
    return e.lcm_binom;
}

inline constexpr std::string_view csv_header = "n,k,lcm_binom,binom,ratio,differs";

inline std::string to_csv(const std::vector<TriangleEntry>& entries)
{
    std::ostringstream os;
    os << csv_header << '\n';
    for (const auto& e : entries) {
        os << e.n << ',' << e.k << ',' << e.lcm_binom << ',' << e.binom << ',' << e.ratio << ','
           << (e.differs ? "true" : "false") << '\n';
    }
    return os.str();
}

namespace detail {

inline std::vector<std::string> split(std::string_view line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

inline Natural parse_natural(std::string_view s, errc code)
{
    if (!all_digits(s)) throw error(code, "not a nonnegative integer: '" + std::string(s) + "'");
    return Natural(std::string(s));
}

inline std::uint64_t parse_u64(std::string_view s, errc code)
{
    const Natural v = parse_natural(s, code);
    if (!fits_u64(v)) throw error(code, "index too large: '" + std::string(s) + "'");
    return static_cast<std::uint64_t>(v);
}

} // namespace detail

inline std::vector<TriangleEntry> parse_csv(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != csv_header) {
        throw error(errc::invalid_format, "missing csv header");
    }
    std::vector<TriangleEntry> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = detail::split(line, ',');
        if (f.size() != 6 || (f[5] != "true" && f[5] != "false")) {
            throw error(errc::invalid_format, "bad csv record '" + line + "'");
        }
        TriangleEntry e;
        e.n = detail::parse_u64(f[0], errc::invalid_format);
        e.k = detail::parse_u64(f[1], errc::invalid_format);
        e.lcm_binom = detail::parse_natural(f[2], errc::invalid_format);
        e.binom = detail::parse_natural(f[3], errc::invalid_format);
        e.ratio = detail::parse_natural(f[4], errc::invalid_format);
        e.differs = f[5] == "true";
        out.push_back(std::move(e));
    }
    return out;
}

/// Array of {n, k, lcm_binom, binom, ratio, differs}; big values as decimal strings.
inline nlohmann::json to_json(const std::vector<TriangleEntry>& entries)
{
    auto arr = nlohmann::json::array();
    for (const auto& e : entries) {
        arr.push_back({{"n", e.n},
                       {"k", e.k},
                       {"lcm_binom", e.lcm_binom.str()},
                       {"binom", e.binom.str()},
                       {"ratio", e.ratio.str()},
                       {"differs", e.differs}});
    }
    return arr;
}

/// Triangle rows 0 .. rows-1 flattened row by row as "index value" lines.
inline std::string export_bfile(std::uint64_t rows, std::uint64_t first_index = 0)
{
    if (rows == 0) throw error(errc::zero_input, "export_bfile needs rows >= 1");
    std::ostringstream os;
    std::uint64_t index = first_index;
    for (std::uint64_t n = 0; n < rows; ++n) {
        for (const auto& v : lcm_binomial_row(n)) os << index++ << ' ' << v << '\n';
    }
    return os.str();
}

inline std::string render_triangle(const RenderOptions& opts)
{
    if (opts.rows == 0) throw error(errc::zero_input, "rows must be >= 1");
    switch (opts.format) {
    case Format::bfile:
        if (opts.what != Quantity::lcm_binomial) {
            throw error(errc::invalid_format, "bfile export only covers the lcm-binomial triangle");
        }
        return export_bfile(opts.rows);
    case Format::csv: return to_csv(triangle_entries(opts.rows));
    case Format::json: return to_json(triangle_entries(opts.rows)).dump(2) + "\n";
    case Format::text: break;
    }
    std::ostringstream os;
    const auto entries = triangle_entries(opts.rows);
    for (const auto& e : entries) {
        if (e.k > 0) os << ' ';
        const bool mark = opts.highlight && e.differs;
        if (mark) os << (opts.ansi ? "\x1b[32m" : "*");
        os << pick(e, opts.what);
        if (mark) os << (opts.ansi ? "\x1b[0m" : "*");
        if (e.k == e.n) os << '\n';
    }
    return os.str();
}

} // namespace lcmbinom

#endif // LCMBINOM_RENDER_HPP
