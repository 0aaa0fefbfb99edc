#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "lbmtest/tw1_table.hpp"
#include "lbmtest/types.hpp"

namespace lbmtest {

/// Tabulated CDF of the Tracy-Widom distribution with index 1, evaluated by
/// shape-preserving (Fritsch-Carlson) cubic interpolation so monotonicity of
/// the table carries over to the interpolant. Outside the grid the CDF is
/// clamped to 0 / 1; the table must cover at least [-10, 6] with step <= 0.05
/// so every quantile the rejection rule can ask for lies inside.
class Tw1Table {
  public:
    Tw1Table(std::vector<double> grid, std::vector<double> cdf_values)
        : grid_(std::move(grid)), cdf_(std::move(cdf_values)) {
        validate_table();
        compute_slopes();
    }

    /// The table embedded in the binary (grid [-10, 8], step 0.02).
    static const Tw1Table& builtin() {
        static const Tw1Table table(
            std::vector<double>(detail::kTw1Grid.begin(), detail::kTw1Grid.end()),
            std::vector<double>(detail::kTw1Cdf.begin(), detail::kTw1Cdf.end()));
        return table;
    }

    /// Load a replacement table from two-column CSV lines "s,F1(s)".
    static Tw1Table from_csv(std::istream& is) {
        std::vector<double> grid, cdf;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos) throw Error("table line missing comma: " + line);
            grid.push_back(std::stod(line.substr(0, comma)));
            cdf.push_back(std::stod(line.substr(comma + 1)));
        }
        return Tw1Table(std::move(grid), std::move(cdf));
    }

    double cdf(double s) const {
        if (s <= grid_.front()) return 0.0;
        if (s >= grid_.back()) return 1.0;
        const auto it = std::upper_bound(grid_.begin(), grid_.end(), s);
        const auto i = static_cast<std::size_t>(it - grid_.begin()) - 1;
        const double h = grid_[i + 1] - grid_[i];
        const double t = (s - grid_[i]) / h;
        const double y0 = cdf_[i], y1 = cdf_[i + 1];
        const double d0 = slopes_[i] * h, d1 = slopes_[i + 1] * h;
        // cubic Hermite basis
        const double t2 = t * t, t3 = t2 * t;
        const double value = (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * d0 +
                             (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * d1;
        return std::clamp(value, 0.0, 1.0);
    }

    /// t with F1(t) = 1 - alpha, by bisection on the monotone interpolant.
    double upper_quantile(double alpha) const {
        if (!(alpha > 0.0001 && alpha < 0.9999))
            throw AlphaOutOfRange("alpha must lie in (0.0001, 0.9999), got " +
                                  std::to_string(alpha));
        const double target = 1.0 - alpha;
        double lo = grid_.front(), hi = grid_.back();
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            (cdf(mid) < target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

  private:
    void validate_table() const {
        if (grid_.size() != cdf_.size() || grid_.size() < 2)
            throw Error("table needs matching grid/cdf columns");
        double max_step = 0.0;
        for (std::size_t i = 0; i + 1 < grid_.size(); ++i) {
            if (!(grid_[i + 1] > grid_[i])) throw Error("table grid must be strictly increasing");
            max_step = std::max(max_step, grid_[i + 1] - grid_[i]);
            if (cdf_[i + 1] < cdf_[i]) throw Error("table cdf must be nondecreasing");
        }
        if (grid_.front() > -10.0 || grid_.back() < 6.0)
            throw Error("table must span at least [-10, 6]");
        if (max_step > 0.05 + 1e-12) throw Error("table grid step must be <= 0.05");
        if (!(cdf_.front() < 1e-8)) throw Error("table cdf must start below 1e-8");
        if (!(cdf_.back() > 1.0 - 1e-6)) throw Error("table cdf must end above 1 - 1e-6");
    }

    // Fritsch-Carlson slopes: the interpolant stays monotone on monotone data.
    void compute_slopes() {
        const std::size_t n = grid_.size();
        std::vector<double> widths(n - 1), secants(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            widths[i] = grid_[i + 1] - grid_[i];
            secants[i] = (cdf_[i + 1] - cdf_[i]) / widths[i];
        }
        slopes_.assign(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (secants[i - 1] * secants[i] <= 0.0) continue;
            const double w1 = 2.0 * widths[i] + widths[i - 1];
            const double w2 = widths[i] + 2.0 * widths[i - 1];
            slopes_[i] = (w1 + w2) / (w1 / secants[i - 1] + w2 / secants[i]);
        }
        slopes_[0] = endpoint_slope(widths[0], widths[1], secants[0], secants[1]);
        slopes_[n - 1] =
            endpoint_slope(widths[n - 2], widths[n - 3], secants[n - 2], secants[n - 3]);
    }

    static double endpoint_slope(double h0, double h1, double s0, double s1) {
        double d = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
        if (d * s0 <= 0.0) return 0.0;
        if (s0 * s1 <= 0.0 && std::abs(d) > 3.0 * std::abs(s0)) return 3.0 * s0;
        return d;
    }

    std::vector<double> grid_;
    std::vector<double> cdf_;
    std::vector<double> slopes_;
};

inline double tw1_cdf(double s) { return Tw1Table::builtin().cdf(s); }

inline double tw1_upper_quantile(double alpha) {
    return Tw1Table::builtin().upper_quantile(alpha);
}

}  // namespace lbmtest
