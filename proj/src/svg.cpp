#include "quadgraph/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace quadgraph {

namespace {

constexpr double kWidth = 860;
constexpr double kHeight = 520;
constexpr double kMargin = 60;

const char* kShades[5] = {"#1a1a1a", "#4d4d4d", "#808080", "#b3b3b3", "#d9d9d9"};

struct Scale {
    double lo, hi, out_lo, out_hi;
    double operator()(double v) const {
        if (hi == lo) return (out_lo + out_hi) / 2;
        return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Canvas {
    std::string body;

    void line(double x1, double y1, double x2, double y2, const char* stroke = "#000") {
        body += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\"/>\n";
    }
    void rect(double x, double y, double w, double h, const std::string& fill) {
        body += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
                "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& stroke, double width = 1.2) {
        if (pts.size() < 2) return;
        body += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                num(width) + "\" points=\"";
        for (auto [x, y] : pts) body += num(x) + ',' + num(y) + ' ';
        body += "\"/>\n";
    }
    void text(double x, double y, const std::string& s, int size = 11) {
        body += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" +
                std::to_string(size) + "\" font-family=\"sans-serif\">" + s +
                "</text>\n";
    }
    std::string finish(const std::string& title) {
        std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                          num(kWidth) + "\" height=\"" + num(kHeight) + "\">\n";
        out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out += "<text x=\"" + num(kWidth / 2) +
               "\" y=\"24\" font-size=\"15\" font-family=\"sans-serif\" "
               "text-anchor=\"middle\">" +
               title + "</text>\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

void axes(Canvas& cv) {
    cv.line(kMargin, kHeight - kMargin, kWidth - kMargin, kHeight - kMargin);
    cv.line(kMargin, kMargin, kMargin, kHeight - kMargin);
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

std::string svg_minmax(const std::vector<CensusRow>& rows) {
    require(!rows.empty(), "minmax plot needs census rows");
    // (n, p) -> [min k, max k] over rows with nonzero count
    std::map<uint64_t, std::map<uint64_t, std::pair<uint64_t, uint64_t>>> series;
    uint64_t pmin = UINT64_MAX, pmax = 0, kmax = 0;
    for (const auto& r : rows) {
        if (r.count == 0) continue;
        auto& mm = series[r.n];
        auto it = mm.find(r.p);
        if (it == mm.end())
            mm[r.p] = {r.k, r.k};
        else {
            it->second.first = std::min(it->second.first, r.k);
            it->second.second = std::max(it->second.second, r.k);
        }
        pmin = std::min(pmin, r.p);
        pmax = std::max(pmax, r.p);
        kmax = std::max(kmax, r.k);
    }
    Scale sx{static_cast<double>(pmin), static_cast<double>(pmax), kMargin,
             kWidth - kMargin};
    Scale sy{0, static_cast<double>(kmax), kHeight - kMargin, kMargin};

    Canvas cv;
    axes(cv);
    int shade = 0;
    for (const auto& [n, mm] : series) {
        std::vector<std::pair<double, double>> lows, highs;
        for (const auto& [p, bounds] : mm) {
            lows.push_back({sx(static_cast<double>(p)),
                            sy(static_cast<double>(bounds.first))});
            highs.push_back({sx(static_cast<double>(p)),
                             sy(static_cast<double>(bounds.second))});
        }
        const char* col = kShades[shade % 5];
        cv.polyline(lows, col);
        cv.polyline(highs, col);
        cv.text(kWidth - kMargin + 4, highs.back().second, "n=" + std::to_string(n));
        ++shade;
    }
    cv.text(kWidth / 2, kHeight - 18, "p");
    cv.text(12, kHeight / 2, "leaves");
    return cv.finish("leaf count bounds per prime");
}

std::string svg_lognum(const std::vector<CensusRow>& rows) {
    require(!rows.empty(), "lognum plot needs census rows");
    // k -> (p -> ln count)
    std::map<uint64_t, std::map<uint64_t, double>> series;
    uint64_t pmin = UINT64_MAX, pmax = 0;
    double ymax = 0;
    for (const auto& r : rows) {
        if (r.count == 0 || r.is_bucket) continue;
        double y = std::log(static_cast<double>(r.count));
        series[r.k][r.p] = y;
        ymax = std::max(ymax, y);
        pmin = std::min(pmin, r.p);
        pmax = std::max(pmax, r.p);
    }
    require(!series.empty(), "lognum plot needs nonzero counts");
    Scale sx{static_cast<double>(pmin), static_cast<double>(pmax), kMargin,
             kWidth - kMargin};
    Scale sy{0, ymax, kHeight - kMargin, kMargin};

    Canvas cv;
    axes(cv);
    int shade = 0;
    for (const auto& [k, pts] : series) {
        std::vector<std::pair<double, double>> line;
        for (auto [p, y] : pts) line.push_back({sx(static_cast<double>(p)), sy(y)});
        cv.polyline(line, kShades[shade++ % 5]);
    }
    cv.text(kWidth / 2, kHeight - 18, "p");
    cv.text(12, kHeight / 2, "ln N_k");
    return cv.finish("log-number of graphs per leaf count");
}

std::string svg_stacked(const std::vector<CensusRow>& rows) {
    require(!rows.empty(), "stacked plot needs census rows");
    // p -> ordered (k, fraction); shade index follows k order
    std::map<uint64_t, std::vector<std::pair<uint64_t, double>>> columns;
    for (const auto& r : rows) {
        require(r.total > 0, "census rows carry zero totals");
        columns[r.p].push_back(
            {r.k, static_cast<double>(r.count) / static_cast<double>(r.total)});
    }
    Canvas cv;
    axes(cv);
    double span = kWidth - 2 * kMargin;
    double barw = std::max(2.0, span / static_cast<double>(columns.size()) * 0.8);
    double step = span / static_cast<double>(columns.size());
    double x = kMargin + step * 0.1;
    for (auto& [p, segs] : columns) {
        std::sort(segs.begin(), segs.end());
        double y = kHeight - kMargin;
        for (auto [k, frac] : segs) {
            double h = frac * (kHeight - 2 * kMargin);
            y -= h;
            cv.rect(x, y, barw, h, kShades[k % 5]);
        }
        cv.text(x, kHeight - kMargin + 14, std::to_string(p), 9);
        x += step;
    }
    cv.text(kWidth / 2, kHeight - 8, "p");
    cv.text(12, kHeight / 2, "share");
    return cv.finish("proportion of graphs per leaf count");
}

std::string svg_hist(const std::vector<DistRow>& rows) {
    require(!rows.empty(), "hist plot needs dist rows");
    double ymax = 0;
    for (const auto& r : rows) ymax = std::max({ymax, r.empirical, r.theoretical});
    require(ymax > 0, "hist plot needs nonzero masses");
    Scale sx{rows.front().bin_lo, rows.back().bin_hi, kMargin, kWidth - kMargin};
    Scale sy{0, ymax * 1.05, kHeight - kMargin, kMargin};

    Canvas cv;
    axes(cv);
    std::vector<std::pair<double, double>> overlay;
    for (const auto& r : rows) {
        double x0 = sx(r.bin_lo), x1 = sx(r.bin_hi);
        double y = sy(r.empirical);
        cv.rect(x0, y, x1 - x0 - 0.5, kHeight - kMargin - y, kShades[3]);
        overlay.push_back({(x0 + x1) / 2, sy(r.theoretical)});
    }
    cv.polyline(overlay, kShades[0], 1.8);
    cv.text(kWidth / 2, kHeight - 18, "normalized deviation");
    cv.text(12, kHeight / 2, "mass");
    return cv.finish("deviation histogram, p = " + std::to_string(rows.front().p));
}

}  // namespace quadgraph
