#include "arithgeo/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "arithgeo/errors.hpp"
#include "arithgeo/geodesics.hpp"

namespace arithgeo {

CensusRun run_census(i64 delta_k, std::size_t n, u64 x, std::vector<u64> checkpoints, unsigned shards,
                     const Progress& progress) {
    auto say = [&](const std::string& msg) {
        if (progress) progress(msg);
    };
    if (x < 2) throw PreconditionError("census bound must be at least 2");
    CensusRun run;
    run.delta_k = delta_k;
    std::vector<RelQuadExt> exts;
    if (n > 0) {
        say("constructing " + std::to_string(n) + " extensions");
        run.fields = construct_fields(delta_k, n);
        exts = run.fields->extensions();
    }
    const PrimePredicate pred(delta_k, exts);

    run.checkpoints = checkpoints.empty() ? decade_checkpoints(100, x) : std::move(checkpoints);
    std::sort(run.checkpoints.begin(), run.checkpoints.end());
    run.checkpoints.erase(std::unique(run.checkpoints.begin(), run.checkpoints.end()), run.checkpoints.end());
    if (run.checkpoints.empty() || run.checkpoints.back() > x || run.checkpoints.front() < 2)
        throw PreconditionError("checkpoints must lie in [2, x]");

    say("classifying primes up to " + std::to_string(x));
    const MemberTable table(pred, x);
    run.density = prime_density_report(table, run.checkpoints);

    say("sieving squarefree integers up to " + std::to_string(x));
    run.squarefree = squarefree_counts(table, run.checkpoints, CountMode::Sieve, shards);

    std::vector<std::pair<u64, u64>> fit_points;
    for (std::size_t i = 0; i < run.checkpoints.size(); ++i) {
        if (run.checkpoints[i] < 10'000) continue;
        if (fit_points.empty()) run.fit_offset = i;
        fit_points.emplace_back(run.checkpoints[i], run.squarefree[i]);
    }
    if (fit_points.size() >= 3 && fit_points.back().first >= 100 * fit_points.front().first)
        run.fit = mean_value_fit(fit_points, pred.tau());

    say("building algebra census");
    run.algebras = algebra_census(delta_k, exts, x);
    return run;
}

SurfaceDemo run_surface_demo(std::size_t n, u64 disc_bound, bool linnik_report) {
    if (n == 0) throw PreconditionError("n must be >= 1");
    SurfaceDemo demo;
    demo.n = n;
    demo.selection = select_q_primes(n);
    const auto& p = demo.selection.p;
    const auto& q = demo.selection.q;
    demo.splitting = verify_splitting_matrix(p, q);
    if (!has_selection_pattern(demo.splitting))
        throw VerificationFailure("selected primes do not have the required splitting pattern");

    const double nd = static_cast<double>(n);
    demo.length_scale = std::pow(nd * std::log(2.0 * nd), 2.0);

    std::vector<QuadraticField> fields;
    for (u64 pj : p) fields.emplace_back(discriminant_of_sqrt_prime(pj));

    for (std::size_t i = 0; i < n; ++i) {
        QuatAlgQ b({q[n], q[i]}, false);
        std::vector<bool> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(embeds(b, fields[j]));
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] != (i == j))
                throw VerificationFailure("B_" + std::to_string(i + 1) + " embedding pattern broken at column " +
                                          std::to_string(j + 1));
        demo.embedding.push_back(row);

        SurfaceRow r{i + 1, p[i], q[i], b, fuchsian_coarea(b), 0.0, 0.0};
        r.length = geodesic_length_real_quadratic(fields[i].delta()).length;
        r.length_ratio = r.length / demo.length_scale;
        demo.max_length_ratio = std::max(demo.max_length_ratio, r.length_ratio);
        demo.rows.push_back(std::move(r));
    }

    const std::vector<u64> inert(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(n));
    demo.wood = wood_stats(q[n], inert, disc_bound);

    if (linnik_report)
        for (std::size_t j = 1; j <= n; ++j) demo.linnik.push_back(nth_prime_in_ap(1, 4, j));
    return demo;
}

RecoveryRun run_recovery(i64 delta_k, const std::vector<u64>& pairs, u64 d_bound, u64 p_bound) {
    const QuadraticField k(delta_k);
    std::set<PrimeOfK> ram;
    for (u64 p : pairs) {
        if (splitting(k, p) != SplitType::Split || p == 2)
            throw PreconditionError(std::to_string(p) + " is not an odd prime split in k");
        for (const auto& prime : primes_above(k, p)) ram.insert(prime);
    }
    RecoveryRun run{QuatAlgK(delta_k, std::move(ram)), {}};
    run.result = recover_ramification(run.algebra, d_bound, p_bound);
    return run;
}

}  // namespace arithgeo
