#include "wca/bounds.hpp"

#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wca/hall.hpp"
#include "wca/prng.hpp"

namespace wca {

std::pair<std::int64_t, std::int64_t> OptimalityReport::ratio_fraction() const {
    const std::int64_t g = std::gcd(ones, lower_bound);
    return {ones / g, lower_bound / g};
}

std::string OptimalityReport::to_record() const {
    const auto [num, den] = ratio_fraction();
    std::ostringstream out;
    out << "N=" << ones << " lower_bound=" << lower_bound << " l_max=" << l_max
        << " per_row_bound=" << per_row_bound << " optimal=" << (is_optimal ? "true" : "false")
        << " ratio=" << num;
    if (den != 1) out << '/' << den;
    return out.str();
}

OptimalityReport analyze(const BinaryMatrix& m) {
    if (m.rows() < m.cols())
        throw std::invalid_argument("matrix must have at least as many rows as columns (n >= k)");
    const RowWeightProfile profile = row_weight_profile(m);
    OptimalityReport report;
    report.n = m.rows();
    report.k = m.cols();
    report.ones = profile.total_ones;
    report.lower_bound =
        static_cast<std::int64_t>(report.k) * (report.n - report.k + 1);
    report.l_max = profile.max_row_weight;
    report.per_row_bound = (report.lower_bound + report.n - 1) / report.n;
    report.is_optimal = report.ones == report.lower_bound;
    report.ratio = static_cast<double>(report.ones) / static_cast<double>(report.lower_bound);
    return report;
}

NecessityCheck check_necessity(const BinaryMatrix& m) {
    NecessityCheck check;
    check.k = m.cols();
    for (int c = 0; c < m.cols(); ++c) {
        int zeros = 0;
        for (int r = 0; r < m.rows(); ++r)
            if (!m.at(r, c)) ++zeros;
        if (zeros >= m.cols()) check.columns.push_back(c + 1);
    }
    return check;
}

std::vector<RatioPoint> ratio_trend(const std::vector<int>& ks) {
    std::vector<RatioPoint> points;
    points.reserve(ks.size());
    for (int k : ks) {
        const BinaryMatrix m = build_augmented_l_banded(k, 2 * (k - 1));
        const OptimalityReport report = analyze(m);
        RatioPoint point{k, report.ones, report.lower_bound, report.ratio};
        if (point.ones * k != point.lower_bound * (k + 1))
            throw std::logic_error("counted ratio disagrees with the closed form (k+1)/k");
        points.push_back(point);
    }
    return points;
}

namespace {

std::int64_t count_ones(const BinaryMatrix& m) { return row_weight_profile(m).total_ones; }

// Flip removable ones to zero, first to last, repeating until stable.
BinaryMatrix descend(BinaryMatrix m) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < m.rows(); ++r) {
            for (int c = 0; c < m.cols(); ++c) {
                if (!m.at(r, c)) continue;
                std::vector<std::uint8_t> cells;
                cells.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
                for (int i = 0; i < m.rows(); ++i) {
                    const auto row = m.row(i);
                    cells.insert(cells.end(), row.begin(), row.end());
                }
                cells[static_cast<std::size_t>(r) * m.cols() + c] = 0;
                BinaryMatrix candidate(m.rows(), m.cols(), std::move(cells));
                if (verify_exhaustive(candidate).holds) {
                    m = std::move(candidate);
                    changed = true;
                }
            }
        }
    }
    return m;
}

}  // namespace

MinOnesSearch search_min_ones(int n, int k, std::uint64_t random_trials, std::uint64_t seed) {
    if (n < k) throw std::invalid_argument("n must be >= k");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    MinOnesSearch search;
    search.n = n;
    search.k = k;
    const int bits = n * k;
    search.exhaustive = bits <= 20;

    auto consider = [&](const BinaryMatrix& m) {
        const std::int64_t ones = count_ones(m);
        if (search.best_ones < 0 || ones < search.best_ones) {
            search.best_ones = ones;
            search.best = m;
        }
    };

    if (search.exhaustive) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            ++search.candidates_checked;
            if (search.best_ones >= 0 && std::popcount(mask) >= search.best_ones) continue;
            std::vector<std::uint8_t> cells(bits);
            for (int i = 0; i < bits; ++i) cells[i] = (mask >> i) & 1;
            BinaryMatrix m(n, k, std::move(cells));
            if (verify_exhaustive(m).holds) consider(m);
        }
        return search;
    }

    std::mt19937_64 gen(mix64(seed));
    for (std::uint64_t trial = 0; trial < random_trials; ++trial) {
        ++search.candidates_checked;
        // densities spread over [0.2, 0.8]
        const std::uint64_t threshold =
            (std::uint64_t{1} << 50) / 5 + random_below(gen, (std::uint64_t{3} << 50) / 5);
        std::vector<std::uint8_t> cells(bits);
        for (int i = 0; i < bits; ++i) cells[i] = (gen() >> 14) < threshold ? 1 : 0;
        BinaryMatrix m(n, k, std::move(cells));
        if (verify_exhaustive(m).holds) consider(descend(std::move(m)));
    }
    return search;
}

}  // namespace wca
