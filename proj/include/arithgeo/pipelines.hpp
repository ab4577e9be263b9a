#pragma once

/**
 * @file pipelines.hpp
 * @brief End-to-end runs behind the command-line tool: the algebra census,
 * the surface demo and ramification recovery. Each returns plain data; the
 * CLI decides how to print it.
 */

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arithgeo/census.hpp"
#include "arithgeo/fieldforge.hpp"
#include "arithgeo/primeforge.hpp"
#include "arithgeo/quatalg.hpp"
#include "arithgeo/volumes.hpp"

namespace arithgeo {

using Progress = std::function<void(const std::string&)>;

struct CensusRun {
    i64 delta_k = 0;
    std::optional<FieldConstruction> fields;  ///< absent for n = 0
    std::vector<u64> checkpoints;
    std::vector<DensityRow> density;
    std::vector<u64> squarefree;       ///< N(X) at each checkpoint
    std::optional<MeanValueFit> fit;   ///< over checkpoints >= 10^4, when they span two decades
    std::size_t fit_offset = 0;        ///< index of the first fitted checkpoint
    AlgebraCensus algebras;
};

/// Empty checkpoints means powers of ten from 100 up to x, then x.
CensusRun run_census(i64 delta_k, std::size_t n, u64 x, std::vector<u64> checkpoints = {},
                     unsigned shards = 1, const Progress& progress = {});

struct SurfaceRow {
    std::size_t index = 0;  ///< 1-based
    u64 p = 0;
    u64 q = 0;
    QuatAlgQ algebra;
    ExactMultiple coarea;
    double length = 0.0;        ///< geodesic length from the unit of Q(sqrt(p))
    double length_ratio = 0.0;  ///< length / (n log 2n)^2
};

struct SurfaceDemo {
    std::size_t n = 0;
    QPrimeSelection selection;
    SplittingMatrix splitting;
    std::vector<std::vector<bool>> embedding;  ///< [i][j]: B_i admits Q(sqrt(p_j))
    std::vector<SurfaceRow> rows;
    double length_scale = 0.0;  ///< (n log 2n)^2
    double max_length_ratio = 0.0;
    WoodStats wood;
    std::vector<ApPrime> linnik;  ///< p_j as the j-th prime = 1 mod 4, when requested
};

/// Throws VerificationFailure if the embedding matrix is not diagonal.
SurfaceDemo run_surface_demo(std::size_t n, u64 disc_bound, bool linnik_report);

struct RecoveryRun {
    QuatAlgK algebra;
    Recovery result;
};

/// B over k ramified at both primes above each rational prime in `pairs`.
RecoveryRun run_recovery(i64 delta_k, const std::vector<u64>& pairs, u64 d_bound, u64 p_bound);

}  // namespace arithgeo
