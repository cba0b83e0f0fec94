#include "quadgraph/cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quadgraph {

CoverShift best_cover_shift(const PrimeField& F, const BitRow& S) {
    if (S.count() == 0)
        throw std::invalid_argument("cover target set must be non-empty");
    const uint64_t p = F.p();
    uint64_t best_a = 0;
    uint64_t best_cover = 0;
    for (uint64_t a = 0; a < p; ++a) {
        uint64_t c = S.count_and(F.squares().rotated(a));
        if (c > best_cover) {
            best_cover = c;
            best_a = a;
        }
    }
    return {best_a, best_cover};
}

CoverReport greedy_leafless(const PrimeField& F) {
    const uint64_t p = F.p();
    if (!F.has_table())
        throw std::domain_error("greedy construction needs the residue table");

    CoverReport report;
    report.p = p;

    // S_1 = F_p \ Q_p: the vertices not covered by the a_1 = 0 translate.
    BitRow residual(p);
    for (uint64_t v = 0; v < p; ++v)
        if (!F.squares().test(v)) residual.set(v);
    report.shifts.push_back(0);
    report.residuals.push_back(residual.count());

    const uint64_t bound = log2_ceiling(p);
    while (residual.count() > 0) {
        CoverShift pick = best_cover_shift(F, residual);
        if (2 * pick.covered < residual.count())
            throw std::logic_error("greedy step covered fewer than half of the residual");
        if (std::find(report.shifts.begin(), report.shifts.end(), pick.a) !=
            report.shifts.end())
            throw std::logic_error("greedy step repeated shift " + std::to_string(pick.a));
        residual.and_not(F.squares().rotated(pick.a));
        report.shifts.push_back(pick.a);
        report.residuals.push_back(residual.count());
        if (report.shifts.size() > bound)
            throw std::logic_error("greedy construction exceeded ceil(log2 p) shifts");
    }

    // Residual after step i must stay below p / 2^(i+1).
    for (size_t i = 0; i < report.residuals.size(); ++i) {
        unsigned __int128 scaled = static_cast<unsigned __int128>(report.residuals[i])
                                   << (i + 1);
        if (scaled >= p)
            throw std::logic_error("residual after step " + std::to_string(i + 1) +
                                   " not below p/2^" + std::to_string(i + 1));
    }

    report.leafless = verify_leafless(ShiftFamily(F, report.shifts));
    if (!report.leafless)
        throw std::logic_error("greedy construction left a leaf");
    return report;
}

bool verify_leafless(const ShiftFamily& fam) {
    if (fam.field().has_table()) return count_leaves_bitset(fam) == 0;
    return count_leaves_scan(fam) == 0;
}

bool leaf_guarantee_threshold(uint64_t n, uint64_t p) {
    if (n < 1) throw std::invalid_argument("family size must be >= 1");
    // n^2 * 2^shift < p, with p < 2^61: anything at or beyond 2^61 is "no".
    auto below_p = [p](uint64_t nn, uint64_t shift) {
        if (nn >= (uint64_t{1} << 31) || shift >= 64) return false;
        return (static_cast<unsigned __int128>(nn) * nn << shift) < p;
    };
    if (below_p(n, 4 * n - 4)) return true;
    return p % 4 == 3 && below_p(n, 2 * n - 2);
}

IntersectionCount intersect_shifted_squares(const ShiftFamily& fam) {
    const PrimeField& F = fam.field();
    if (!F.has_table())
        throw std::domain_error("intersection count needs the residue table");
    BitRow meet = F.squares().rotated(fam.shifts()[0]);
    for (size_t i = 1; i < fam.n(); ++i)
        meet &= F.squares().rotated(fam.shifts()[i]);
    uint64_t count = meet.count();
    double expect =
        static_cast<double>(F.p()) * std::pow(2.0, -static_cast<double>(fam.n()));
    return {count, std::abs(static_cast<double>(count) - expect)};
}

}  // namespace quadgraph
