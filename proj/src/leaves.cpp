#include "quadgraph/leaves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quadgraph {

ShiftFamily::ShiftFamily(const PrimeField& field, std::vector<uint64_t> shifts)
    : field_(&field), shifts_(std::move(shifts)) {
    if (shifts_.empty())
        throw std::invalid_argument("shift family must be non-empty");
    std::sort(shifts_.begin(), shifts_.end());
    for (size_t i = 0; i < shifts_.size(); ++i) {
        if (shifts_[i] >= field.p())
            throw std::invalid_argument("shift " + std::to_string(shifts_[i]) +
                                        " outside [0, " + std::to_string(field.p()) + ")");
        if (i > 0 && shifts_[i] == shifts_[i - 1])
            throw std::invalid_argument("shifts must be pairwise distinct (duplicate " +
                                        std::to_string(shifts_[i]) + ")");
    }
}

uint64_t count_leaves_bitset(const ShiftFamily& fam) {
    const PrimeField& F = fam.field();
    if (!F.has_table())
        throw std::domain_error("p exceeds the residue table budget; use the scan variant");
    BitRow covered = F.squares().rotated(fam.shifts()[0]);
    for (size_t i = 1; i < fam.n(); ++i)
        covered |= F.squares().rotated(fam.shifts()[i]);
    return covered.count_zeros();
}

uint64_t count_leaves_scan(const ShiftFamily& fam) {
    const PrimeField& F = fam.field();
    const uint64_t p = F.p();
    const auto& shifts = fam.shifts();
    uint64_t leaves = 0;
    for (uint64_t v = 0; v < p; ++v) {
        bool leaf = true;
        for (uint64_t a : shifts) {
            if (F.is_square(sub_mod(v, a, p))) {
                leaf = false;
                break;
            }
        }
        if (leaf) ++leaves;
    }
    return leaves;
}

uint64_t leaf_count_closed1(const PrimeField& F, uint64_t /*a*/) {
    return (F.p() - 1) / 2;
}

uint64_t leaf_count_closed2(const PrimeField& F, uint64_t a, uint64_t b) {
    if (a == b)
        throw std::invalid_argument("closed form for n=2 requires a != b");
    uint64_t k = F.p() / 4;
    if (F.p() % 4 == 3) return k;
    // chi(a-b) is +-1 here, so the correction is 0 or -1.
    return F.chi(F.sub(a, b)) == 1 ? k : k - 1;
}

LeafBound bound_count_n(const PrimeField& F, uint64_t n) {
    if (n < 1 || n > F.p())
        throw std::invalid_argument("family size must lie in [1, p]");
    double p = static_cast<double>(F.p());
    double sp = std::sqrt(p);
    double center = p * std::pow(2.0, -static_cast<double>(n));
    double c = (static_cast<double>(n) < 2.0 * sp) ? 0.5 : 2.0 / 3.0;
    double radius = c * static_cast<double>(n) * sp;
    return {center - radius, center + radius};
}

}  // namespace quadgraph
