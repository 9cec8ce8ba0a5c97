#pragma once

#include <string>
#include <vector>

#include "exittime/catalog.hpp"

namespace exittime::properties {

/// A catalog map normalized to f(0) = 0, f'(0) = 1.
struct SchlichtEntry {
    std::string label;
    CoefficientStream coeffs;
    bool is_identity = false;
    bool is_koebe = false;
};

/// Normalized streams of every conformal catalog entry (the B-proper annulus
/// is excluded since it is not injective).
std::vector<SchlichtEntry> schlicht_catalog();

/// r^2 / 2 and r^2 (1 + r^2) / (2 (1 - r^2)^3).
double identity_exit_time(double r);
double koebe_exit_time(double r);

struct ExtremalReport {
    double r = 0.0;
    std::size_t checked = 0;
    std::size_t violations = 0;
    /// Smallest distance to either bound among the non-extremal entries.
    double min_gap = 0.0;
    std::vector<std::string> failures;
};

/// Sandwich r^2/2 <= E(f, r) <= Koebe for every Schlicht entry, with equality
/// only for the identity (left) and Koebe (right); strict entries must clear
/// each bound by ten times the combined tolerance.
ExtremalReport check_extremal(double r);

/// E(Koebe, r) - E(f, r) must be non-decreasing over `radii` (sorted).
ExtremalReport check_koebe_gap_monotone(const std::vector<double>& radii);

/// Largest |b_n| / n over n in [2, n_max] across the Schlicht catalog.
double max_de_branges_ratio(std::size_t n_max);

struct ParsevalReport {
    double s = 0.0;
    double max_discrepancy = 0.0;
    std::string worst;
    std::size_t checked = 0;
};

/// Parseval discrepancy over every catalog map with an evaluator.
ParsevalReport check_parseval(double s, std::size_t n_samples = 8192);

/// All catalog entries with a map evaluator (parameterized ones at default
/// parameters plus a few extra instances).
std::vector<DomainSpec> catalog_with_maps();

}  // namespace exittime::properties
