#pragma once

// Reference Publication Year Spectroscopy (standard and multi) and a plain
// keyword frequency count.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace snacap {

inline constexpr int kEarliestYear = 1800;
inline constexpr int kLatestYear = 2100;

struct CitationRecord {
    int citing_year = 0;
    std::vector<int> cited_years;
};

struct YearRange {
    int first = 0;
    int last = 0;

    bool contains(int y) const { return y >= first && y <= last; }
    std::size_t size() const { return static_cast<std::size_t>(last - first + 1); }
};

struct Spectrogram {
    int first_year = 0;
    std::vector<long> counts;
    std::vector<double> deviations;

    int year_at(std::size_t i) const { return first_year + static_cast<int>(i); }
};

namespace detail {

inline void check_year(int y, const char* what) {
    if (y < kEarliestYear || y > kLatestYear)
        throw std::invalid_argument(std::string(what) + " " + std::to_string(y) +
                                    " outside [1800, 2100]");
}

inline double median_of(std::vector<long> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    if (n % 2 == 1) return static_cast<double>(xs[n / 2]);
    return 0.5 * static_cast<double>(xs[n / 2 - 1] + xs[n / 2]);
}

} // namespace detail

/// Deviation of each count from the median of the 5-year window centred on
/// it. Windows are truncated at the range edges.
inline std::vector<double> median_deviations(const std::vector<long>& counts) {
    std::vector<double> dev(counts.size());
    const auto n = static_cast<std::ptrdiff_t>(counts.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - 2);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n - 1, i + 2);
        std::vector<long> window(counts.begin() + lo, counts.begin() + hi + 1);
        dev[static_cast<std::size_t>(i)] =
            static_cast<double>(counts[static_cast<std::size_t>(i)]) - detail::median_of(window);
    }
    return dev;
}

/// Tallies cited-reference years and their median deviations. Without an
/// explicit range the axis spans the earliest to latest cited year.
inline Spectrogram rpys(const std::vector<CitationRecord>& records,
                        std::optional<YearRange> range = std::nullopt) {
    std::optional<int> lo, hi;
    for (const auto& r : records) {
        for (int y : r.cited_years) {
            detail::check_year(y, "cited year");
            lo = lo ? std::min(*lo, y) : y;
            hi = hi ? std::max(*hi, y) : y;
        }
    }
    if (!range) {
        if (!lo) throw std::invalid_argument("rpys needs at least one cited reference");
        range = YearRange{*lo, *hi};
    }
    if (range->last < range->first) throw std::invalid_argument("empty year range");

    Spectrogram s;
    s.first_year = range->first;
    s.counts.assign(range->size(), 0);
    for (const auto& r : records)
        for (int y : r.cited_years)
            if (range->contains(y)) ++s.counts[static_cast<std::size_t>(y - range->first)];
    s.deviations = median_deviations(s.counts);
    return s;
}

/// Rank transform with the minimum rank for ties, divided by the row width,
/// so values lie in (0, 1].
inline std::vector<double> min_rank_normalize(const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    const double width = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::size_t below = 0;
        for (double x : xs)
            if (x < xs[i]) ++below;
        out[i] = static_cast<double>(below + 1) / width;
    }
    return out;
}

struct MultiRpysRow {
    int citing_year = 0;
    /// No records were published in this citing year; the row is all zero.
    bool empty = false;
    std::vector<double> deviations;
    std::vector<double> ranks;
};

struct MultiRpysGrid {
    YearRange referenced;
    std::vector<MultiRpysRow> rows;
};

inline MultiRpysGrid multi_rpys(const std::vector<CitationRecord>& records, YearRange citing,
                                YearRange referenced) {
    if (citing.last < citing.first || referenced.last < referenced.first)
        throw std::invalid_argument("multi-RPYS ranges must be non-empty");
    std::map<int, std::vector<CitationRecord>> segments;
    for (const auto& r : records) {
        detail::check_year(r.citing_year, "citing year");
        if (citing.contains(r.citing_year)) segments[r.citing_year].push_back(r);
    }
    MultiRpysGrid grid;
    grid.referenced = referenced;
    for (int y = citing.first; y <= citing.last; ++y) {
        MultiRpysRow row;
        row.citing_year = y;
        auto it = segments.find(y);
        if (it == segments.end()) {
            row.empty = true;
            row.deviations.assign(referenced.size(), 0.0);
            row.ranks.assign(referenced.size(), 0.0);
        } else {
            row.deviations = rpys(it->second, referenced).deviations;
            row.ranks = min_rank_normalize(row.deviations);
        }
        grid.rows.push_back(std::move(row));
    }
    return grid;
}

struct TermCount {
    std::string term;
    std::size_t count = 0;

    friend bool operator==(const TermCount&, const TermCount&) = default;
};

/// Counts, per keyword list, each case-folded term once.
inline std::vector<TermCount> term_frequency(const std::vector<std::vector<std::string>>& lists,
                                             std::size_t top_n) {
    if (top_n == 0) throw std::invalid_argument("top_n must be >= 1");
    std::map<std::string, std::size_t> counts;
    for (const auto& list : lists) {
        std::set<std::string> seen;
        for (std::string term : list) {
            std::transform(term.begin(), term.end(), term.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            if (seen.insert(term).second) ++counts[term];
        }
    }
    std::vector<TermCount> out;
    out.reserve(counts.size());
    for (auto& [t, c] : counts) out.push_back({t, c});
    std::stable_sort(out.begin(), out.end(),
                     [](const TermCount& a, const TermCount& b) { return a.count > b.count; });
    if (out.size() > top_n) out.resize(top_n);
    return out;
}

/// Reads `citing_year,cited_year` pairs (one per line, optional header,
/// `#` comments) and groups them by citing year.
inline std::vector<CitationRecord> read_citation_csv(std::istream& in) {
    std::map<int, CitationRecord> by_year;
    std::string line;
    std::size_t lineno = 0;
    auto parse_int = [](std::string_view s, int& out) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && p == s.data() + s.size() && !s.empty();
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        int citing = 0, cited = 0;
        if (comma == std::string::npos ||
            !parse_int(std::string_view(line).substr(0, comma), citing) ||
            !parse_int(std::string_view(line).substr(comma + 1), cited)) {
            if (lineno == 1) continue; // header
            throw std::invalid_argument("citation csv line " + std::to_string(lineno) +
                                        ": expected 'citing_year,cited_year'");
        }
        detail::check_year(citing, "citing year");
        detail::check_year(cited, "cited year");
        auto& rec = by_year[citing];
        rec.citing_year = citing;
        rec.cited_years.push_back(cited);
    }
    std::vector<CitationRecord> out;
    for (auto& [_, r] : by_year) out.push_back(std::move(r));
    return out;
}

} // namespace snacap
