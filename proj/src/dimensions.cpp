#include "cgraph/dimensions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>
#include <numeric>

#include "cgraph/parallel.hpp"

namespace cgraph {

namespace {

template <class T>
SeriesMatrix2<T> bare_edge(int order) {
    SeriesMatrix2<T> m(order);
    m.a[0][1] = Series<T>::monomial(order, 1);
    m.a[1][0] = Series<T>::monomial(order, 1);
    return m;
}

// One step of the sub-melon recursion. `zero` is the sub-melon on the node's
// own color (towards O), `others` the sum over the remaining D sub-melons.
// Inner index 0 is the negative vertex of the node, 1 the positive one.
template <class T>
SeriesMatrix2<T> combine(int D, const SeriesMatrix2<T>& zero, const SeriesMatrix2<T>& others) {
    const int order = zero.order();
    SeriesMatrix2<T> inner = SeriesMatrix2<T>::identity(order, T(D + 1)) - others;
    inner.a[0][0] -= zero.a[0][0];
    SeriesMatrix2<T> left(order), right(order);
    left.a[0][1] = Series<T>::monomial(order, 1);
    left.a[1][0] = zero.a[1][0];
    right.a[1][0] = Series<T>::monomial(order, 1);
    right.a[0][1] = zero.a[0][1];
    SeriesMatrix2<T> out = left * inner.inverse() * right;
    out.a[1][1] += zero.a[1][1];
    return out;
}

template <class T>
SeriesMatrix2<T> first_return_impl(const MelonTree& tree, int order) {
    if (order < 2) throw std::invalid_argument("first_return_series: truncation order must be at least 2");
    const SeriesMatrix2<T> base = bare_edge<T>(order);
    if (tree.empty()) return base;
    const int D = tree.dimension();
    auto pre = tree.preorder();
    std::vector<SeriesMatrix2<T>> value(static_cast<std::size_t>(tree.size()));
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        const int x = *it;
        const Color c = tree.color(x);
        auto sub = [&](Color j) -> const SeriesMatrix2<T>& {
            int ch = tree.child(x, j);
            return ch < 0 ? base : value[static_cast<std::size_t>(ch)];
        };
        SeriesMatrix2<T> others(order);
        for (Color j = 0; j <= D; ++j)
            if (j != c) others = others + sub(j);
        value[static_cast<std::size_t>(x)] = combine<T>(D, sub(c), others);
        for (Color j = 0; j <= D; ++j) {
            int ch = tree.child(x, j);
            if (ch >= 0) value[static_cast<std::size_t>(ch)] = SeriesMatrix2<T>();
        }
    }
    return value[static_cast<std::size_t>(tree.root())];
}

struct LinearFit {
    double slope = 0, intercept = 0, slope_se = 0;
    std::vector<double> residuals;
};

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("fit: need at least two points");
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) throw std::invalid_argument("fit: abscissae are all equal");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ssr = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = y[i] - (f.intercept + f.slope * x[i]);
        f.residuals.push_back(r);
        ssr += r * r;
    }
    f.slope_se = n > 2 ? std::sqrt(ssr / static_cast<double>(n - 2) / sxx) : 0.0;
    return f;
}

ScalingFit fit_power_logs(const std::vector<double>& lx, const std::vector<double>& ly) {
    LinearFit lf = least_squares(lx, ly);
    ScalingFit f;
    f.model = "power";
    f.exponent = lf.slope;
    f.stderr_ = lf.slope_se;
    f.prefactor = std::exp(lf.intercept);
    f.residuals = std::move(lf.residuals);
    f.window_lo = std::exp(*std::min_element(lx.begin(), lx.end()));
    f.window_hi = std::exp(*std::max_element(lx.begin(), lx.end()));
    return f;
}

double mean_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

double stderr_of(const std::vector<double>& v) {
    if (v.size() < 2) return 0;
    double m = mean_of(v), s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

}  // namespace

SeriesMatrix2<mpq_class> first_return_series(const MelonTree& tree, int order) { return first_return_impl<mpq_class>(tree, order); }

SeriesMatrix2<double> first_return_series_double(const MelonTree& tree, int order) { return first_return_impl<double>(tree, order); }

mpq_class spectral_exponent_relation(const mpq_class& delta, const mpq_class& ds, const mpq_class& gamma) {
    mpq_class r = delta * (ds / 2 - 1) - gamma;
    r.canonicalize();
    return r;
}

Legs legs_of(const ColoredGraph& g) {
    if (!g.is_open()) throw std::invalid_argument("rooted melonic graph must be open");
    Legs l;
    int count = 0;
    for (int v = 0; v < g.positive_count(); ++v)
        if (g.positive_is_boundary(v)) l.out = v, ++count;
    for (int n = 0; n < g.negative_count(); ++n)
        if (g.negative_is_boundary(n)) l.in = n, ++count;
    if (count != 2 || l.in < 0 || l.out < 0)
        throw std::invalid_argument("rooted melonic graph needs one positive and one negative leg");
    return l;
}

std::vector<ReturnEstimate> walk_return_mc(const ColoredGraph& g, bool start_at_in, int t_max, std::int64_t walks,
                                           std::uint64_t seed) {
    if (t_max < 0 || walks <= 0) throw std::invalid_argument("walk_return_mc: need t_max >= 0 and walks > 0");
    const Legs legs = legs_of(g);
    const int C = g.color_count();
    // Neighbor lists per side: only the colors actually present.
    auto neighbors = [&](bool positive, int v) {
        std::vector<int> out;
        for (Color c = 0; c < C; ++c) {
            int w = positive ? g.positive_neighbor(v, c) : g.negative_neighbor(v, c);
            if (w >= 0) out.push_back(w);
        }
        return out;
    };
    std::vector<std::vector<int>> pn(static_cast<std::size_t>(g.positive_count())), np(static_cast<std::size_t>(g.negative_count()));
    for (int v = 0; v < g.positive_count(); ++v) pn[static_cast<std::size_t>(v)] = neighbors(true, v);
    for (int n = 0; n < g.negative_count(); ++n) np[static_cast<std::size_t>(n)] = neighbors(false, n);

    const bool start_positive = !start_at_in;
    const int start = start_at_in ? legs.in : legs.out;
    std::vector<std::int64_t> hits(static_cast<std::size_t>(t_max + 1), 0);
    Rng rng(seed);
    for (std::int64_t w = 0; w < walks; ++w) {
        bool positive = start_positive;
        int v = start;
        ++hits[0];
        for (int t = 1; t <= t_max; ++t) {
            const auto& nb = positive ? pn[static_cast<std::size_t>(v)] : np[static_cast<std::size_t>(v)];
            v = nb.size() == 1 ? nb[0] : nb[static_cast<std::size_t>(uniform_below(rng, nb.size()))];
            positive = !positive;
            if (positive == start_positive && v == start) ++hits[static_cast<std::size_t>(t)];
        }
    }
    std::vector<ReturnEstimate> out;
    for (int t = 0; t <= t_max; ++t) {
        double p = static_cast<double>(hits[static_cast<std::size_t>(t)]) / static_cast<double>(walks);
        out.push_back({t, p, std::sqrt(p * (1 - p) / static_cast<double>(walks))});
    }
    return out;
}

std::vector<double> walk_return_exact(const ColoredGraph& g, bool start_at_in, int t_max) {
    if (t_max < 0) throw std::invalid_argument("walk_return_exact: t_max must be non-negative");
    const Legs legs = legs_of(g);
    const auto P = static_cast<std::size_t>(g.positive_count());
    const auto N = static_cast<std::size_t>(g.negative_count());
    std::vector<double> pos(P, 0.0), neg(N, 0.0), pinv(P), ninv(N);
    for (std::size_t v = 0; v < P; ++v) pinv[v] = 1.0 / g.positive_valence(static_cast<int>(v));
    for (std::size_t n = 0; n < N; ++n) ninv[n] = 1.0 / g.negative_valence(static_cast<int>(n));
    std::vector<int> ep, en;
    for (const Edge& e : g.edges()) {
        ep.push_back(e.positive);
        en.push_back(e.negative);
    }
    bool on_positive = !start_at_in;
    if (on_positive)
        pos[static_cast<std::size_t>(legs.out)] = 1;
    else
        neg[static_cast<std::size_t>(legs.in)] = 1;
    std::vector<double> out(static_cast<std::size_t>(t_max + 1), 0.0);
    out[0] = 1;
    const std::size_t E = ep.size();
    for (int t = 1; t <= t_max; ++t) {
        if (on_positive) {
            std::fill(neg.begin(), neg.end(), 0.0);
            for (std::size_t k = 0; k < E; ++k) neg[static_cast<std::size_t>(en[k])] += pos[static_cast<std::size_t>(ep[k])] * pinv[static_cast<std::size_t>(ep[k])];
        } else {
            std::fill(pos.begin(), pos.end(), 0.0);
            for (std::size_t k = 0; k < E; ++k) pos[static_cast<std::size_t>(ep[k])] += neg[static_cast<std::size_t>(en[k])] * ninv[static_cast<std::size_t>(en[k])];
        }
        on_positive = !on_positive;
        if (on_positive == !start_at_in)
            out[static_cast<std::size_t>(t)] = start_at_in ? neg[static_cast<std::size_t>(legs.in)] : pos[static_cast<std::size_t>(legs.out)];
    }
    return out;
}

ScalingFit fit_power(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_power: size mismatch");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) throw std::invalid_argument("fit_power: data must be positive");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    ScalingFit f = fit_power_logs(lx, ly);
    f.x = x;
    f.y = y;
    return f;
}

ScalingFit fit_power_offset(const std::vector<double>& x, const std::vector<double>& y, const std::vector<double>& sigma) {
    const std::size_t n = x.size();
    if (n < 4 || y.size() != n || (!sigma.empty() && sigma.size() != n))
        throw std::invalid_argument("fit_power_offset: need at least four matching points");
    std::vector<double> w(n, 1.0);
    if (!sigma.empty())
        for (std::size_t i = 0; i < n; ++i) w[i] = sigma[i] > 0 ? 1.0 / (sigma[i] * sigma[i]) : 1.0;
    // For fixed exponent the model is linear in (A, B).
    struct Solve {
        double chi2, A, B;
    };
    auto solve = [&](double a) {
        double s00 = 0, s01 = 0, s11 = 0, t0 = 0, t1 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double f = std::pow(x[i], a);
            s00 += w[i] * f * f;
            s01 += w[i] * f;
            s11 += w[i];
            t0 += w[i] * f * y[i];
            t1 += w[i] * y[i];
        }
        double det = s00 * s11 - s01 * s01;
        Solve s{0, (t0 * s11 - t1 * s01) / det, (s00 * t1 - s01 * t0) / det};
        for (std::size_t i = 0; i < n; ++i) {
            double r = y[i] - s.A * std::pow(x[i], a) - s.B;
            s.chi2 += w[i] * r * r;
        }
        return s;
    };
    double best_a = 0.05, best = solve(best_a).chi2;
    for (double a = 0.05; a <= 1.5 + 1e-12; a += 0.005) {
        double c = solve(a).chi2;
        if (c < best) best = c, best_a = a;
    }
    double lo = best_a - 0.005, hi = best_a + 0.005;
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int it = 0; it < 80; ++it) {
        double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
        if (solve(m1).chi2 < solve(m2).chi2)
            hi = m2;
        else
            lo = m1;
    }
    double a = (lo + hi) / 2;
    Solve s = solve(a);
    const double h = 1e-3;
    double curv = (solve(a + h).chi2 - 2 * s.chi2 + solve(a - h).chi2) / (h * h);
    double scale = std::max(1.0, s.chi2 / static_cast<double>(n - 3));
    ScalingFit f;
    f.model = "power+offset";
    f.x = x;
    f.y = y;
    f.sigma = sigma;
    f.exponent = a;
    f.prefactor = s.A;
    f.offset = s.B;
    f.stderr_ = curv > 0 ? std::sqrt(2.0 / curv * scale) : INFINITY;
    f.window_lo = *std::min_element(x.begin(), x.end());
    f.window_hi = *std::max_element(x.begin(), x.end());
    for (std::size_t i = 0; i < n; ++i) f.residuals.push_back(y[i] - s.A * std::pow(x[i], a) - s.B);
    return f;
}

mpq_class critical_point(int D) {
    if (D < 1) throw std::invalid_argument("critical_point: D must be at least 1");
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(D), static_cast<unsigned long>(D));
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(D + 1), static_cast<unsigned long>(D + 1));
    mpq_class z(num, den);
    z.canonicalize();
    return z;
}

double beta_prefactor(int D) {
    const double pi = std::acos(-1.0);
    return std::exp(1.0) / std::sqrt(2 * pi) * std::sqrt(static_cast<double>(D + 1) / (static_cast<double>(D) * D * D));
}

SusceptibilityResult susceptibility_check(int D, int p_min, int p_max) {
    if (p_max < 100 || p_min < 1 || p_min >= p_max)
        throw std::invalid_argument("susceptibility_check: need 1 <= p_min < p_max and p_max >= 100");
    SusceptibilityResult r;
    r.dimension = D;
    r.zc = critical_point(D).get_d();
    r.beta_formula = beta_prefactor(D);
    const double log_zc = D * std::log(static_cast<double>(D)) - (D + 1) * std::log(static_cast<double>(D + 1));
    auto log_mpz = [](const mpz_class& v) {
        long e = 0;
        double m = mpz_get_d_2exp(&e, v.get_mpz_t());
        return std::log(m) + static_cast<double>(e) * std::log(2.0);
    };
    std::vector<double> lx, ly;
    for (int p = p_min; p <= p_max; ++p) {
        lx.push_back(std::log(static_cast<double>(p)));
        ly.push_back(log_mpz(count_melonic(D, p)) + p * log_zc);
    }
    r.fit = fit_power_logs(lx, ly);
    for (std::size_t i = 0; i < lx.size(); ++i) {
        r.fit.x.push_back(std::exp(lx[i]));
        r.fit.y.push_back(std::exp(ly[i]));
    }
    r.prefactor_exact = std::exp(ly.back() + 1.5 * lx.back());
    return r;
}

DistanceEstimator parse_estimator(const std::string& name) {
    if (name == "ball") return DistanceEstimator::ball;
    if (name == "colored") return DistanceEstimator::colored;
    if (name == "word") return DistanceEstimator::word;
    throw std::invalid_argument("unknown distance estimator '" + name + "' (ball, colored, word)");
}

std::string estimator_name(DistanceEstimator e) {
    switch (e) {
        case DistanceEstimator::ball: return "ball";
        case DistanceEstimator::colored: return "colored";
        case DistanceEstimator::word: return "word";
    }
    return "?";
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 10);
    return std::string(buf, res.ptr);
}

HausdorffResult hausdorff_estimate(const HausdorffOptions& o) {
    if (o.sizes.empty() || o.samples < 1 || o.sources < 1) throw std::invalid_argument("hausdorff_estimate: need sizes, samples and sources");
    for (int p : o.sizes)
        if (p < 1) throw std::invalid_argument("hausdorff_estimate: sizes must be positive");
    HausdorffResult r;
    r.dimension = o.dimension;
    r.seed = o.seed;
    r.estimator = o.estimator;
    const double lambda = lambda_delta(o.dimension).get_d();
    const std::size_t S = static_cast<std::size_t>(o.samples);
    std::vector<double> means(o.sizes.size() * S);
    parallel_for(means.size(), o.jobs, [&](std::size_t task) {
        const std::size_t k = task / S, i = task % S;
        const int p = o.sizes[k];
        Rng rng = make_rng(o.seed, (static_cast<std::uint64_t>(k) << 32) | i);
        MelonTree t = sample_uniform(o.dimension, p, rng);
        double total = 0;
        std::unique_ptr<BallMetric> ball;
        if (o.estimator == DistanceEstimator::ball) ball = std::make_unique<BallMetric>(t);
        for (int s = 0; s < o.sources; ++s) {
            int a = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(p)));
            std::vector<int> d;
            if (o.estimator == DistanceEstimator::ball) {
                d = ball->distances_from(a);
            } else if (o.estimator == DistanceEstimator::colored) {
                d = graph_distances_from(t, a);
            } else {
                d.resize(static_cast<std::size_t>(p));
                for (int b = 0; b < p; ++b) d[static_cast<std::size_t>(b)] = pair_distance_estimate(t, a, b).estimate;
            }
            total += std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(p);
        }
        means[task] = total / o.sources;
    });
    std::vector<double> xs, ys, sig;
    for (std::size_t k = 0; k < o.sizes.size(); ++k) {
        std::vector<double> v(means.begin() + static_cast<std::ptrdiff_t>(k * S), means.begin() + static_cast<std::ptrdiff_t>((k + 1) * S));
        HausdorffRow row;
        row.p = o.sizes[k];
        row.samples = o.samples;
        row.mean = mean_of(v);
        row.stderr_ = stderr_of(v);
        row.rescaled = row.mean / (lambda * std::sqrt((o.dimension + 1.0) * row.p / o.dimension));
        r.rows.push_back(row);
        if (row.mean > 0) {
            xs.push_back(row.p);
            ys.push_back(row.mean);
            sig.push_back(row.stderr_);
        }
    }
    if (xs.size() >= 2) r.power = fit_power(xs, ys);
    if (xs.size() >= 4) r.offset = fit_power_offset(xs, ys, sig);
    int pmax = 0;
    for (auto& row : r.rows) pmax = std::max(pmax, row.p);
    double lo = INFINITY, hi = -INFINITY;
    for (auto& row : r.rows)
        if (row.p * 10 >= pmax) lo = std::min(lo, row.rescaled), hi = std::max(hi, row.rescaled);
    r.top_decade_variation = hi > 0 ? (hi - lo) / hi : 0;
    return r;
}

std::string HausdorffResult::to_csv() const {
    std::string out = "p,samples,estimate,stderr,rescaled\n";
    for (const auto& row : rows)
        out += std::to_string(row.p) + "," + std::to_string(row.samples) + "," + format_double(row.mean) + "," +
               format_double(row.stderr_) + "," + format_double(row.rescaled) + "\n";
    return out;
}

SpectralResult spectral_estimate(const SpectralOptions& o) {
    if (o.p < 1 || o.samples < 1 || o.t_min < 2 || o.t_max <= o.t_min)
        throw std::invalid_argument("spectral_estimate: need p >= 1, samples >= 1 and 2 <= t_min < t_max");
    SpectralResult r;
    r.options = o;
    const std::size_t T = static_cast<std::size_t>(o.t_max + 2);
    std::vector<std::vector<double>> per(static_cast<std::size_t>(o.samples));
    parallel_for(per.size(), o.jobs, [&](std::size_t i) {
        Rng rng = make_rng(o.seed, i);
        MelonTree t = sample_uniform(o.dimension, o.p, rng);
        per[i] = walk_return_exact(tree_to_graph(t), true, static_cast<int>(T) - 1);
    });
    for (std::size_t t = 1; t < T; t += 2)
        for (const auto& v : per) r.odd_mass += v[t];
    std::vector<double> wx, wy;
    for (int t = 0; t <= o.t_max; t += 2) {
        std::vector<double> v;
        for (const auto& s : per) v.push_back(s[static_cast<std::size_t>(t)] + s[static_cast<std::size_t>(t + 1)]);
        SpectralRow row{t, mean_of(v), stderr_of(v)};
        r.rows.push_back(row);
        if (t >= o.t_min && row.probability > 0) {
            wx.push_back(t);
            wy.push_back(row.probability);
        }
    }
    if (wx.size() < 2) throw std::invalid_argument("spectral_estimate: window holds fewer than two even times");
    r.fit = fit_power(wx, wy);
    r.ds = -2 * r.fit.exponent;
    r.ds_stderr = 2 * r.fit.stderr_;
    // Delete-one-group jackknife over the sampled graphs: the pooled curve's
    // points are correlated, so the regression error understates the spread.
    const std::size_t groups = std::min<std::size_t>(20, per.size());
    if (groups >= 2) {
        std::vector<double> ds_g;
        for (std::size_t g = 0; g < groups; ++g) {
            std::vector<double> x, y;
            for (int t = o.t_min + (o.t_min % 2); t <= o.t_max; t += 2) {
                double sum = 0;
                std::size_t n = 0;
                for (std::size_t i = 0; i < per.size(); ++i)
                    if (i % groups != g) sum += per[i][static_cast<std::size_t>(t)] + per[i][static_cast<std::size_t>(t + 1)], ++n;
                if (sum > 0) x.push_back(t), y.push_back(sum / static_cast<double>(n));
            }
            if (x.size() >= 2) ds_g.push_back(-2 * fit_power(x, y).exponent);
        }
        if (ds_g.size() == groups) {
            double m = mean_of(ds_g), ss = 0;
            for (double d : ds_g) ss += (d - m) * (d - m);
            r.ds_stderr = std::sqrt(ss * static_cast<double>(groups - 1) / static_cast<double>(groups));
        }
    }
    for (int t = 2; 2 * t <= o.t_max; t *= 2) {
        std::vector<double> x, y;
        for (const auto& row : r.rows)
            if (row.t >= t && row.t <= 2 * t && row.probability > 0) {
                x.push_back(row.t);
                y.push_back(row.probability);
            }
        if (x.size() >= 2) r.effective.push_back({t, -2 * fit_power(x, y).exponent});
    }
    if (o.t_min < 10) r.warnings.push_back("window starts below 10 steps; short-time lattice effects dominate");
    if (10.0 * o.t_max > std::pow(static_cast<double>(o.p), 1.5))
        r.warnings.push_back("window reaches the finite-size mixing scale p^(3/2)/10");
    double lo = INFINITY, hi = -INFINITY;
    for (auto [t, e] : r.effective)
        if (t >= o.t_min && 2 * t <= o.t_max) lo = std::min(lo, e), hi = std::max(hi, e);
    if (hi - lo > 0.2) r.warnings.push_back("effective exponent drifts by more than 0.2 across the window");
    return r;
}

std::string SpectralResult::to_csv() const {
    std::string out = "t,estimate,stderr\n";
    for (const auto& row : rows) out += std::to_string(row.t) + "," + format_double(row.probability) + "," + format_double(row.stderr_) + "\n";
    return out;
}

LambdaEstimate lambda_monte_carlo(int D, std::int64_t letters, int repeats, std::uint64_t seed) {
    if (letters < 1 || repeats < 1) throw std::invalid_argument("lambda_monte_carlo: need letters and repeats");
    std::vector<double> v;
    for (int i = 0; i < repeats; ++i) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
        v.push_back(lambda_ratio_sample(D, letters, rng));
    }
    return {mean_of(v), stderr_of(v), lambda_delta(D).get_d()};
}

}  // namespace cgraph
