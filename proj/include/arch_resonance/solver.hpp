#pragma once

#include "arch_resonance/kernel.hpp"
#include "arch_resonance/model.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace arch_resonance {

struct SearchConfig {
    double k_min = 1e-6;
    // Unset: 10 x the closed-form uncracked K of mode max(5, max_modes).
    std::optional<double> k_max;
    int grid_points = 2000;
    double refine_tol = 1e-10;
    int max_modes = 3;

    // Throws InvalidArgument when the invariants on the fields do not hold.
    void validate() const;
};

double resolved_k_max(const ArchProblem& problem, const SearchConfig& cfg);

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

// A grid point where the determinant nearly touches zero without changing sign.
struct SuspectedDouble {
    double K = 0.0;
    Bracket window;
};

struct ScanResult {
    std::vector<Bracket> brackets;
    std::vector<SuspectedDouble> suspects;
};

/// Evaluates the boundary determinant on a uniform K grid merged with the
/// uncracked closed-form eigenvalues and reports sign-change brackets in
/// increasing order. Throws NoRootsInRange when nothing is found.
ScanResult scan_and_bracket(const ArchProblem& problem, const SearchConfig& cfg);

struct RefinedRoot {
    double K = 0.0;
    // True when an input endpoint already evaluated to an exact zero.
    bool lost_bracket = false;
};

RefinedRoot refine_root(const Bracket& bracket, const ArchProblem& problem,
                        const SearchConfig& cfg);

enum class RootQuality { Bracketed, SuspectedDouble, LostBracket };

std::string_view to_string(RootQuality quality);

struct SpectrumEntry {
    double K = 0.0;
    RootQuality quality = RootQuality::Bracketed;
    // Null vector of the boundary matrix: 4 coefficients, or 8 when cracked
    // (left segment first), normalized to unit max-abs.
    std::vector<double> coefficients;
    // Smallest normalized LU pivot at K.
    double min_pivot = 0.0;
};

struct Spectrum {
    std::vector<SpectrumEntry> modes;
};

Spectrum find_frequencies(const ArchProblem& problem, const SearchConfig& cfg);

// Null vector from the smallest pivot of the row-scaled LU, followed by one
// inverse-iteration step.
std::vector<double> null_vector(const BoundaryMatrix& matrix);

enum class Side { Left, Right };

/// Evaluates the (unnormalized) mode shape built from a spectrum entry's
/// coefficients. At the crack the side selects which segment is used.
class ModeShape {
public:
    ModeShape(const ArchProblem& problem, const SpectrumEntry& root);

    double evaluate(double phi, int order = 0, Side side = Side::Left) const;

private:
    ArchProblem problem_;
    std::vector<double> coefficients_;
    std::vector<SegmentBasis> segments_;
};

struct ShapeSample {
    double phi = 0.0;
    double X = 0.0;
};

// `samples` uniform points over [0, beta] inclusive, scaled so the largest
// |X| is exactly 1 and positive.
std::vector<ShapeSample> mode_shape(const ArchProblem& problem, const SpectrumEntry& root,
                                    int samples);

}  // namespace arch_resonance
