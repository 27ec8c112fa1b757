#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "msnake/newton.hpp"
#include "msnake/poly.hpp"
#include "msnake/words.hpp"

namespace msnake {

// Constructive result for one lattice point.
struct PointResult {
    LatticePoint point;
    std::size_t op_count = 0;
    ExpTriple monomial;
    bool ok = false;
    std::string error;
};

// Per-rho verdict: numerator support vs polygon lattice set, plus one
// constructed matching per lattice point.
struct SaturationReport {
    RationalIndex rho;
    std::array<LatticePoint, 4> vertices;
    std::size_t lattice_count = 0;
    std::size_t support_count = 0;
    std::vector<LatticePoint> support_minus_polygon;
    std::vector<LatticePoint> polygon_minus_support;
    std::vector<PointResult> points;
    bool pass = false;
};

SaturationReport saturation_report(RationalIndex rho);

Json report_to_json(const SaturationReport& r);

// Aggregate outcome of a sweep over every coprime a/b with a+b <= max_sum.
struct SweepSummary {
    int max_sum = 0;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t reused = 0;  // loaded from an existing passing report file
    std::vector<std::string> failures;
    double seconds = 0.0;
};

// Runs reports in a worker pool (jobs = 0 picks hardware_concurrency) and
// persists each as <dir>/a_b.json via atomic rename.  Existing passing
// report files are trusted and skipped, which makes sweeps resumable.
// Failures are collected, never thrown.
SweepSummary sweep(int max_sum, const std::filesystem::path& dir, unsigned jobs = 0);

Json sweep_to_json(const SweepSummary& s);

// MARKOV_SNAKE_RESULTS when set, else "results".
std::filesystem::path default_results_dir();

}  // namespace msnake
