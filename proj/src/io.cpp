#include "quadgraph/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace quadgraph {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::vector<std::string>> parse_table(const std::string& text,
                                                  const std::string& header,
                                                  size_t min_columns) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind(header, 0) != 0)
                throw std::invalid_argument("unexpected CSV header: " + line);
            continue;
        }
        auto cells = split(line, ',');
        if (cells.size() < min_columns)
            throw std::invalid_argument("short CSV row: " + line);
        rows.push_back(std::move(cells));
    }
    return rows;
}

uint64_t to_u64(const std::string& s) { return std::stoull(s); }

}  // namespace

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_percent(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// --- census -----------------------------------------------------------------

std::vector<CensusRow> census_rows(const LeafHistogram& H) {
    std::vector<CensusRow> rows;
    rows.reserve(H.counts.size());
    for (auto [k, c] : H.counts) {
        CensusRow r;
        r.p = H.p;
        r.n = H.n;
        r.is_bucket = H.bucket && k == *H.bucket;
        r.k = k;
        r.count = c;
        r.total = H.total;
        r.method = H.method;
        r.bucket = H.bucket;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string emit_census_csv(const std::vector<CensusRow>& rows, bool header) {
    std::string out;
    if (header) out += "p,n,k,count,total,method,bucket\n";
    for (const auto& r : rows) {
        out += std::to_string(r.p) + ',' + std::to_string(r.n) + ',';
        out += r.is_bucket ? ">=" + std::to_string(r.k) : std::to_string(r.k);
        out += ',' + std::to_string(r.count) + ',' + std::to_string(r.total) + ',' +
               r.method + ',';
        if (r.bucket) out += std::to_string(*r.bucket);
        out += '\n';
    }
    return out;
}

std::vector<CensusRow> parse_census_csv(const std::string& text) {
    std::vector<CensusRow> rows;
    for (const auto& cells : parse_table(text, "p,n,k", 7)) {
        CensusRow r;
        r.p = to_u64(cells[0]);
        r.n = to_u64(cells[1]);
        if (cells[2].rfind(">=", 0) == 0) {
            r.is_bucket = true;
            r.k = to_u64(cells[2].substr(2));
        } else {
            r.k = to_u64(cells[2]);
        }
        r.count = to_u64(cells[3]);
        r.total = to_u64(cells[4]);
        r.method = cells[5];
        if (!cells[6].empty()) r.bucket = to_u64(cells[6]);
        rows.push_back(std::move(r));
    }
    return rows;
}

nlohmann::json census_json(const LeafHistogram& H) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : census_rows(H)) {
        nlohmann::json j{{"p", r.p},         {"n", r.n},
                         {"count", r.count}, {"total", r.total},
                         {"method", r.method}};
        if (r.is_bucket)
            j["k"] = ">=" + std::to_string(r.k);
        else
            j["k"] = r.k;
        if (r.bucket)
            j["bucket"] = *r.bucket;
        else
            j["bucket"] = nullptr;
        rows.push_back(std::move(j));
    }
    return rows;
}

// --- cover ------------------------------------------------------------------

CoverRow cover_row(const CoverReport& report) {
    CoverRow r;
    r.p = report.p;
    r.n = report.shifts.size();
    r.shifts = report.shifts;
    r.leafless = report.leafless;
    r.log2_ceil = log2_ceiling(report.p);
    return r;
}

static std::string join_shifts(const std::vector<uint64_t>& shifts) {
    std::string s;
    for (size_t i = 0; i < shifts.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(shifts[i]);
    }
    return s;
}

std::string emit_cover_csv(const std::vector<CoverRow>& rows, bool header,
                           const std::vector<std::string>& extra_columns,
                           const std::vector<std::vector<std::string>>& extra_cells) {
    std::string out;
    if (header) {
        out += "p,n,shifts,leafless,log2_ceiling";
        for (const auto& c : extra_columns) out += ',' + c;
        out += '\n';
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out += std::to_string(r.p) + ',' + std::to_string(r.n) + ',' +
               join_shifts(r.shifts) + ',' + (r.leafless ? "true" : "false") + ',' +
               std::to_string(r.log2_ceil);
        if (!extra_cells.empty())
            for (const auto& cell : extra_cells[i]) out += ',' + cell;
        out += '\n';
    }
    return out;
}

std::vector<CoverRow> parse_cover_csv(const std::string& text) {
    std::vector<CoverRow> rows;
    for (const auto& cells : parse_table(text, "p,n,shifts", 5)) {
        CoverRow r;
        r.p = to_u64(cells[0]);
        r.n = to_u64(cells[1]);
        for (const auto& s : split(cells[2], ';'))
            if (!s.empty()) r.shifts.push_back(to_u64(s));
        r.leafless = cells[3] == "true";
        r.log2_ceil = to_u64(cells[4]);
        rows.push_back(std::move(r));
    }
    return rows;
}

nlohmann::json cover_json(const CoverReport& report) {
    CoverRow r = cover_row(report);
    return nlohmann::json{{"p", r.p},
                          {"n", r.n},
                          {"shifts", r.shifts},
                          {"leafless", r.leafless},
                          {"log2_ceiling", r.log2_ceil},
                          {"residuals", report.residuals}};
}

// --- dist -------------------------------------------------------------------

std::vector<DistRow> dist_rows(const DeltaHistogram& H) {
    std::vector<DistRow> rows;
    rows.reserve(H.bins);
    for (uint64_t i = 0; i < H.bins; ++i) {
        DistRow r;
        r.p = H.p;
        r.bin_lo = H.edge(i);
        r.bin_hi = H.edge(i + 1);
        r.empirical = H.empirical[i];
        r.theoretical = H.theoretical[i];
        r.mode = H.mode + (H.conjectural ? "(conjectural)" : "");
        r.seed = H.seed;
        r.samples = H.samples;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string emit_dist_csv(const std::vector<DistRow>& rows, bool header) {
    std::string out;
    if (header) out += "p,bin_lo,bin_hi,empirical,theoretical,mode,seed,samples\n";
    for (const auto& r : rows) {
        out += std::to_string(r.p) + ',' + format_real(r.bin_lo) + ',' +
               format_real(r.bin_hi) + ',' + format_real(r.empirical) + ',' +
               format_real(r.theoretical) + ',' + r.mode + ',' +
               std::to_string(r.seed) + ',' + std::to_string(r.samples) + '\n';
    }
    return out;
}

std::vector<DistRow> parse_dist_csv(const std::string& text) {
    std::vector<DistRow> rows;
    for (const auto& cells : parse_table(text, "p,bin_lo", 8)) {
        DistRow r;
        r.p = to_u64(cells[0]);
        r.bin_lo = std::stod(cells[1]);
        r.bin_hi = std::stod(cells[2]);
        r.empirical = std::stod(cells[3]);
        r.theoretical = std::stod(cells[4]);
        r.mode = cells[5];
        r.seed = to_u64(cells[6]);
        r.samples = to_u64(cells[7]);
        rows.push_back(std::move(r));
    }
    return rows;
}

nlohmann::json dist_json(const DeltaHistogram& H) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : dist_rows(H)) {
        rows.push_back(nlohmann::json{{"p", r.p},
                                      {"bin_lo", r.bin_lo},
                                      {"bin_hi", r.bin_hi},
                                      {"empirical", r.empirical},
                                      {"theoretical", r.theoretical},
                                      {"mode", r.mode},
                                      {"seed", r.seed},
                                      {"samples", r.samples}});
    }
    return rows;
}

}  // namespace quadgraph
