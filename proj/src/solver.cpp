#include "arch_resonance/solver.hpp"

#include "arch_resonance/errors.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace arch_resonance {

namespace {

constexpr double kDipDecades = 6.0;
constexpr double kRankDeficientPivot = 1e-7;
constexpr int kMaxBisections = 400;
constexpr int kSuspectSamples = 64;
constexpr int kSuspectLevels = 3;

DeterminantResult determinant_at(const ArchProblem& problem, double K) {
    return det_sign_logmag(assemble(problem, K));
}

std::vector<double> search_grid(const ArchProblem& problem, const SearchConfig& cfg,
                                double k_max) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(cfg.grid_points) + 32);
    const double step = (k_max - cfg.k_min) / (cfg.grid_points - 1);
    for (int i = 0; i < cfg.grid_points; ++i) grid.push_back(cfg.k_min + step * i);
    grid.back() = k_max;

    // Uncracked eigenvalues and the midpoints between them as extra nodes.
    // Cracked roots interlace with the uncracked ones, and the midpoints keep
    // clustered uncracked roots (beta > pi) in separate intervals.
    std::vector<double> guides;
    for (int n = 1; n < 100000; ++n) {
        const double lambda = n * kPi / problem.beta();
        const double K = uncracked_K_closed_form(n, problem.beta(), problem.eta_nd());
        if (lambda > 1.0 && K > k_max) break;
        guides.push_back(K);
    }
    std::sort(guides.begin(), guides.end());
    for (std::size_t i = 0; i < guides.size(); ++i) {
        if (guides[i] > cfg.k_min && guides[i] < k_max) grid.push_back(guides[i]);
        if (i + 1 < guides.size()) {
            const double mid = 0.5 * (guides[i] + guides[i + 1]);
            if (mid > cfg.k_min && mid < k_max) grid.push_back(mid);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

double golden_minimum(const ArchProblem& problem, Bracket window, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    const auto f = [&](double K) { return determinant_at(problem, K).normalized_log_magnitude; };
    double a = window.lo;
    double b = window.hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < kMaxBisections && (b - a) > tol * std::max(1.0, std::abs(c)); ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Looks for a hidden pair of sign changes inside a suspect window by
// repeated uniform subdivision around the smallest sample.
void resolve_suspect(const ArchProblem& problem, const SuspectedDouble& suspect,
                     ScanResult& out) {
    Bracket window = suspect.window;
    for (int level = 0; level < kSuspectLevels; ++level) {
        const double step = (window.hi - window.lo) / kSuspectSamples;
        std::vector<double> K(kSuspectSamples + 1);
        std::vector<DeterminantResult> det(K.size());
        for (int i = 0; i <= kSuspectSamples; ++i) {
            K[i] = i == kSuspectSamples ? window.hi : window.lo + step * i;
            det[i] = determinant_at(problem, K[i]);
        }
        std::vector<Bracket> found;
        std::size_t prev = K.size();
        std::size_t lowest = 0;
        for (std::size_t i = 0; i < K.size(); ++i) {
            if (det[i].normalized_log_magnitude < det[lowest].normalized_log_magnitude) lowest = i;
            if (det[i].sign == 0) continue;
            if (prev != K.size() && det[i].sign != det[prev].sign) found.push_back({K[prev], K[i]});
            prev = i;
        }
        if (!found.empty()) {
            out.brackets.insert(out.brackets.end(), found.begin(), found.end());
            return;
        }
        window = {K[lowest == 0 ? 0 : lowest - 1], K[std::min(lowest + 1, K.size() - 1)]};
    }
    out.suspects.push_back({0.5 * (window.lo + window.hi), window});
}

}  // namespace

void SearchConfig::validate() const {
    if (!(k_min >= 0.0)) throw InvalidArgument("k_min must be >= 0");
    if (k_max && !(*k_max > k_min)) throw InvalidArgument("k_max must exceed k_min");
    if (grid_points < 16) throw InvalidArgument("grid_points must be >= 16");
    if (!(refine_tol > 0.0 && refine_tol < 1e-3)) {
        throw InvalidArgument("refine_tol must lie in (0, 1e-3)");
    }
    if (max_modes < 1) throw InvalidArgument("max_modes must be >= 1");
}

std::string_view to_string(RootQuality quality) {
    switch (quality) {
        case RootQuality::Bracketed: return "bracketed";
        case RootQuality::SuspectedDouble: return "suspected-double";
        case RootQuality::LostBracket: return "lost-bracket";
    }
    return "unknown";
}

double resolved_k_max(const ArchProblem& problem, const SearchConfig& cfg) {
    if (cfg.k_max) return *cfg.k_max;
    const int n = std::max(5, cfg.max_modes);
    return std::max(10.0 * uncracked_K_closed_form(n, problem.beta(), problem.eta_nd()),
                    cfg.k_min + 1.0);
}

ScanResult scan_and_bracket(const ArchProblem& problem, const SearchConfig& cfg) {
    cfg.validate();
    const double k_max = resolved_k_max(problem, cfg);
    const std::vector<double> grid = search_grid(problem, cfg, k_max);

    std::vector<DeterminantResult> det(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) det[i] = determinant_at(problem, grid[i]);

    ScanResult out;
    // Sign changes between consecutive nonzero-sign nodes. Exact zeros in
    // between either sit inside a bracket or mark an even-multiplicity touch.
    std::size_t prev = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (det[i].sign == 0) continue;
        if (prev != grid.size()) {
            if (det[i].sign != det[prev].sign) {
                out.brackets.push_back({grid[prev], grid[i]});
            } else if (i - prev > 1) {
                const std::size_t mid = prev + (i - prev) / 2;
                out.suspects.push_back({grid[mid], {grid[prev], grid[i]}});
            }
        }
        prev = i;
    }
    const double dip = kDipDecades * std::log(10.0);
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const int s = det[i].sign;
        if (s == 0 || det[i - 1].sign != s || det[i + 1].sign != s) continue;
        const double here = det[i].normalized_log_magnitude;
        if (here <= det[i - 1].normalized_log_magnitude - dip &&
            here <= det[i + 1].normalized_log_magnitude - dip) {
            out.suspects.push_back({grid[i], {grid[i - 1], grid[i + 1]}});
        }
    }
    std::vector<SuspectedDouble> suspects;
    suspects.swap(out.suspects);
    for (const SuspectedDouble& s : suspects) resolve_suspect(problem, s, out);
    std::sort(out.brackets.begin(), out.brackets.end(),
              [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
    std::sort(out.suspects.begin(), out.suspects.end(),
              [](const SuspectedDouble& a, const SuspectedDouble& b) { return a.K < b.K; });

    if (out.brackets.empty() && out.suspects.empty()) {
        throw NoRootsInRange("no determinant roots in K range [" + std::to_string(cfg.k_min) +
                             ", " + std::to_string(k_max) + "]");
    }
    return out;
}

RefinedRoot refine_root(const Bracket& bracket, const ArchProblem& problem,
                        const SearchConfig& cfg) {
    double lo = bracket.lo;
    double hi = bracket.hi;
    const int sign_lo = determinant_at(problem, lo).sign;
    if (sign_lo == 0) return {lo, true};
    const int sign_hi = determinant_at(problem, hi).sign;
    if (sign_hi == 0) return {hi, true};
    if (sign_lo == sign_hi) {
        throw InvalidArgument("refine_root needs a bracket with opposite determinant signs");
    }
    for (int i = 0; i < kMaxBisections; ++i) {
        const double mid = lo + 0.5 * (hi - lo);
        if (hi - lo <= cfg.refine_tol * std::max(1.0, std::abs(mid))) break;
        if (mid <= lo || mid >= hi) break;
        const int s = determinant_at(problem, mid).sign;
        if (s == 0) return {mid, false};
        if (s == sign_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo + 0.5 * (hi - lo), false};
}

std::vector<double> null_vector(const BoundaryMatrix& matrix) {
    const RowScaledLu f = lu_factorize(matrix.entries);
    const int n = matrix.order();
    int k = 0;
    for (int i = 1; i < n; ++i) {
        if (std::abs(f.lu(i, i)) < std::abs(f.lu(k, k))) k = i;
    }
    const auto guarded_pivot = [&](int i) {
        const double p = f.lu(i, i);
        constexpr double kFloor = 1e-200;
        if (std::abs(p) >= kFloor) return p;
        return p < 0.0 ? -kFloor : kFloor;
    };

    // U x = 0 with x_k = 1 and x_j = 0 beyond k.
    Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 8, 1> x =
        Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 8, 1>::Zero(n);
    x(k) = 1.0;
    for (int i = k - 1; i >= 0; --i) {
        double sum = 0.0;
        for (int j = i + 1; j <= k; ++j) sum += f.lu(i, j) * x(j);
        x(i) = -sum / guarded_pivot(i);
    }
    x /= x.cwiseAbs().maxCoeff();

    // One inverse-iteration step on the scaled matrix: L U y = P x.
    Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 8, 1> y(n);
    for (int i = 0; i < n; ++i) {
        double sum = x(f.permutation[i]);
        for (int j = 0; j < i; ++j) sum -= f.lu(i, j) * y(j);
        y(i) = sum;
    }
    for (int i = n - 1; i >= 0; --i) {
        double sum = y(i);
        for (int j = i + 1; j < n; ++j) sum -= f.lu(i, j) * y(j);
        y(i) = sum / guarded_pivot(i);
    }
    const double norm = y.cwiseAbs().maxCoeff();
    if (std::isfinite(norm) && norm > 0.0) {
        x = y / norm;
    }
    // Fix the overall sign: largest component positive.
    Eigen::Index largest = 0;
    x.cwiseAbs().maxCoeff(&largest);
    if (x(largest) < 0.0) x = -x;
    return std::vector<double>(x.data(), x.data() + n);
}

Spectrum find_frequencies(const ArchProblem& problem, const SearchConfig& cfg) {
    const ScanResult scan = scan_and_bracket(problem, cfg);

    std::vector<SpectrumEntry> roots;
    for (const Bracket& b : scan.brackets) {
        const RefinedRoot r = refine_root(b, problem, cfg);
        SpectrumEntry e;
        e.K = r.K;
        e.quality = r.lost_bracket ? RootQuality::LostBracket : RootQuality::Bracketed;
        roots.push_back(std::move(e));
    }
    for (const SuspectedDouble& s : scan.suspects) {
        const double K = golden_minimum(problem, s.window, cfg.refine_tol);
        const DeterminantResult det = determinant_at(problem, K);
        if (det.min_pivot > kRankDeficientPivot) {
            spdlog::debug("determinant dip at K = {} is not rank deficient (pivot {}), skipped",
                          K, det.min_pivot);
            continue;
        }
        spdlog::warn("possible double root near K = {} (no sign change)", K);
        SpectrumEntry e;
        e.K = K;
        e.quality = RootQuality::SuspectedDouble;
        roots.push_back(std::move(e));
    }
    std::sort(roots.begin(), roots.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.K < b.K; });

    Spectrum spectrum;
    for (SpectrumEntry& e : roots) {
        if (!(e.K > cfg.k_min)) continue;
        if (!spectrum.modes.empty()) {
            const double last = spectrum.modes.back().K;
            if (e.K - last <= 10.0 * cfg.refine_tol * std::max(1.0, e.K)) continue;
        }
        const BoundaryMatrix m = assemble(problem, e.K);
        e.coefficients = null_vector(m);
        e.min_pivot = det_sign_logmag(m).min_pivot;
        spectrum.modes.push_back(std::move(e));
        if (static_cast<int>(spectrum.modes.size()) == cfg.max_modes) break;
    }
    if (spectrum.modes.empty()) {
        throw NoRootsInRange("no eigenvalues above k_min");
    }
    return spectrum;
}

ModeShape::ModeShape(const ArchProblem& problem, const SpectrumEntry& root)
    : problem_(problem), coefficients_(root.coefficients) {
    const ModeBasis basis = quartic_roots(characteristic_coefficients(root.K, problem.eta_nd()));
    const std::size_t expected = problem.crack() ? 8 : 4;
    if (coefficients_.size() != expected) {
        throw InvalidArgument("mode coefficients do not match the problem's segment count");
    }
    if (problem.crack()) {
        segments_.emplace_back(basis, 0.0, problem.crack()->alpha);
        segments_.emplace_back(basis, problem.crack()->alpha, problem.beta());
    } else {
        segments_.emplace_back(basis, 0.0, problem.beta());
    }
}

double ModeShape::evaluate(double phi, int order, Side side) const {
    std::size_t seg = 0;
    if (segments_.size() == 2) {
        const double alpha = segments_[1].lo();
        seg = (phi > alpha || (phi == alpha && side == Side::Right)) ? 1 : 0;
    }
    return segments_[seg].combine(coefficients_.data() + 4 * seg, phi, order);
}

std::vector<ShapeSample> mode_shape(const ArchProblem& problem, const SpectrumEntry& root,
                                    int samples) {
    if (samples < 2) throw InvalidArgument("mode shape needs at least 2 samples");
    const ModeShape shape(problem, root);
    std::vector<ShapeSample> out(static_cast<std::size_t>(samples));
    std::size_t largest = 0;
    for (int i = 0; i < samples; ++i) {
        const double phi = i == samples - 1 ? problem.beta()
                                            : problem.beta() * i / (samples - 1);
        out[i] = {phi, shape.evaluate(phi)};
        if (std::abs(out[i].X) > std::abs(out[largest].X)) largest = i;
    }
    const double peak = out[largest].X;
    if (peak == 0.0) throw InvalidArgument("mode shape vanishes on every sample");
    for (auto& s : out) s.X /= peak;
    out[largest].X = 1.0;
    return out;
}

}  // namespace arch_resonance
