#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cgraph/colored_graph.hpp"
#include "cgraph/melonic.hpp"

namespace cgraph {

// Power series in y truncated after y^order.
template <class T>
class Series {
public:
    Series() = default;
    explicit Series(int order) : c_(static_cast<std::size_t>(order + 1), T(0)) {}
    static Series constant(int order, const T& value) {
        Series s(order);
        s.c_[0] = value;
        return s;
    }
    static Series monomial(int order, int power, const T& value = T(1)) {
        Series s(order);
        if (power <= order) s.c_[static_cast<std::size_t>(power)] = value;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    T& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<T>& coefficients() const { return c_; }

    Series& operator+=(const Series& o) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Series& operator-=(const Series& o) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b) {
        const int n = a.order();
        Series out(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= n; ++j) out.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
        return out;
    }
    friend Series operator*(const T& s, Series a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }

    // Multiplicative inverse; the constant term must be nonzero.
    Series inverse() const {
        if (c_[0] == 0) throw std::logic_error("series inversion: constant term vanishes");
        const int n = order();
        Series out(n);
        T inv0 = T(1) / c_[0];
        out.c_[0] = inv0;
        for (int k = 1; k <= n; ++k) {
            T acc(0);
            for (int j = 1; j <= k; ++j) acc += c_[static_cast<std::size_t>(j)] * out.c_[static_cast<std::size_t>(k - j)];
            out.c_[static_cast<std::size_t>(k)] = -acc * inv0;
        }
        return out;
    }

private:
    std::vector<T> c_;
};

// 2x2 matrix of truncated series; index 0 is the I leg, 1 the O leg.
template <class T>
struct SeriesMatrix2 {
    Series<T> a[2][2];

    explicit SeriesMatrix2(int order = 0) {
        for (auto& row : a)
            for (auto& s : row) s = Series<T>(order);
    }
    int order() const { return a[0][0].order(); }
    static SeriesMatrix2 identity(int order, const T& scale = T(1)) {
        SeriesMatrix2 m(order);
        m.a[0][0] = Series<T>::constant(order, scale);
        m.a[1][1] = Series<T>::constant(order, scale);
        return m;
    }
    friend SeriesMatrix2 operator+(SeriesMatrix2 x, const SeriesMatrix2& y) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) x.a[i][j] += y.a[i][j];
        return x;
    }
    friend SeriesMatrix2 operator-(SeriesMatrix2 x, const SeriesMatrix2& y) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) x.a[i][j] -= y.a[i][j];
        return x;
    }
    friend SeriesMatrix2 operator*(const SeriesMatrix2& x, const SeriesMatrix2& y) {
        SeriesMatrix2 out(x.order());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j];
        return out;
    }
    SeriesMatrix2 inverse() const {
        Series<T> det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        Series<T> inv = det.inverse();
        SeriesMatrix2 out(order());
        out.a[0][0] = a[1][1] * inv;
        out.a[1][1] = a[0][0] * inv;
        out.a[0][1] = T(-1) * (a[0][1] * inv);
        out.a[1][0] = T(-1) * (a[1][0] * inv);
        return out;
    }
};

// First-return / first-transit generating functions of the rooted melonic
// graph tree_to_graph(tree) between its legs I and O; an empty tree stands
// for the bare edge I-O. Computed from the sub-melon recursion.
SeriesMatrix2<mpq_class> first_return_series(const MelonTree& tree, int order);
SeriesMatrix2<double> first_return_series_double(const MelonTree& tree, int order);

// Full return / transit series (1 - P1)^{-1}.
template <class T>
SeriesMatrix2<T> return_series(const SeriesMatrix2<T>& first) {
    return (SeriesMatrix2<T>::identity(first.order()) - first).inverse();
}

// Exponent of (1 - z/z_c) in the derivative of the return generating function.
mpq_class spectral_exponent_relation(const mpq_class& delta, const mpq_class& ds, const mpq_class& gamma);

// Vertex ids of the two legs of a rooted melonic open graph.
struct Legs {
    int in = -1;   // I: negative boundary vertex
    int out = -1;  // O: positive boundary vertex
};
Legs legs_of(const ColoredGraph& rooted);

struct ReturnEstimate {
    int t = 0;
    double estimate = 0;
    double stderr_ = 0;
};

// Monte-Carlo return frequencies to `start` (a leg) for t = 0..t_max.
std::vector<ReturnEstimate> walk_return_mc(const ColoredGraph& rooted, bool start_at_in, int t_max,
                                           std::int64_t walks, std::uint64_t seed);
// Exact return probabilities by propagating the walk distribution.
std::vector<double> walk_return_exact(const ColoredGraph& rooted, bool start_at_in, int t_max);

struct ScalingFit {
    std::string model;  // "power" or "power+offset"
    std::vector<double> x, y, sigma;
    double exponent = 0;
    double stderr_ = 0;
    double prefactor = 0;
    double offset = 0;
    double window_lo = 0, window_hi = 0;
    std::vector<double> residuals;
};

// Least squares of log y on log x.
ScalingFit fit_power(const std::vector<double>& x, const std::vector<double>& y);
// Weighted fit of y = A x^a + B; sigma may be empty (unit weights).
ScalingFit fit_power_offset(const std::vector<double>& x, const std::vector<double>& y,
                            const std::vector<double>& sigma);

struct SusceptibilityResult {
    int dimension = 0;
    double zc = 0;
    double beta_formula = 0;      // the closed-form prefactor under test
    double prefactor_exact = 0;   // C_p z_c^p p^{3/2} at the largest p
    ScalingFit fit;               // log(C_p z_c^p) against log p
    double gamma() const { return fit.exponent + 2; }
};
mpq_class critical_point(int dimension);
double beta_prefactor(int dimension);
SusceptibilityResult susceptibility_check(int dimension, int p_min, int p_max);

enum class DistanceEstimator { ball, colored, word };
DistanceEstimator parse_estimator(const std::string& name);
std::string estimator_name(DistanceEstimator e);

struct HausdorffRow {
    int p = 0;
    int samples = 0;
    double mean = 0;
    double stderr_ = 0;
    double rescaled = 0;  // mean / (Lambda_Delta sqrt((D+1)p/D))
};

struct HausdorffResult {
    int dimension = 0;
    std::uint64_t seed = 0;
    DistanceEstimator estimator = DistanceEstimator::ball;
    std::vector<HausdorffRow> rows;
    ScalingFit power;   // pure power law
    ScalingFit offset;  // power law with constant offset
    double top_decade_variation = 0;  // relative spread of `rescaled` over the top decade
    std::string to_csv() const;
};

struct HausdorffOptions {
    int dimension = 3;
    std::vector<int> sizes;
    int samples = 200;
    int sources = 4;
    std::uint64_t seed = 1;
    DistanceEstimator estimator = DistanceEstimator::ball;
    int jobs = 0;
};
HausdorffResult hausdorff_estimate(const HausdorffOptions& options);

struct SpectralRow {
    int t = 0;
    double probability = 0;  // pooled P(t) + P(t+1) at even t
    double stderr_ = 0;
};

struct SpectralOptions {
    int dimension = 3;
    int p = 10000;
    int t_min = 50;
    int t_max = 500;
    int samples = 200;
    std::uint64_t seed = 1;
    int jobs = 0;
};

struct SpectralResult {
    SpectralOptions options;
    std::vector<SpectralRow> rows;         // every even t up to t_max
    ScalingFit fit;                        // log P against log t in the window
    double ds = 0, ds_stderr = 0;           // stderr: jackknife over groups of graphs
    std::vector<std::pair<int, double>> effective;  // (t, local d_S over [t, 2t])
    double odd_mass = 0;                   // total pooled probability at odd t
    std::vector<std::string> warnings;
    std::string to_csv() const;
};
SpectralResult spectral_estimate(const SpectralOptions& options);

struct LambdaEstimate {
    double mean = 0;
    double stderr_ = 0;
    double exact = 0;
};
LambdaEstimate lambda_monte_carlo(int dimension, std::int64_t letters, int repeats, std::uint64_t seed);

// Deterministic text for doubles in CSV output.
std::string format_double(double x);

}  // namespace cgraph
