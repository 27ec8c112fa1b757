#include "msnake/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "msnake/constructor.hpp"
#include "msnake/matchings.hpp"

namespace msnake {

SaturationReport saturation_report(RationalIndex rho) {
    SaturationReport r{.rho = rho};
    r.vertices = newton_vertices(rho);

    TriPoly numerator = numerator_dp(build_snake(rho));
    std::set<LatticePoint> support;
    for (const ExpTriple& e : poly_support(numerator)) support.insert({e.ex, e.ey});
    std::vector<LatticePoint> lattice = lattice_points(rho);
    std::set<LatticePoint> polygon(lattice.begin(), lattice.end());

    r.lattice_count = polygon.size();
    r.support_count = support.size();
    std::set_difference(support.begin(), support.end(), polygon.begin(), polygon.end(),
                        std::back_inserter(r.support_minus_polygon));
    std::set_difference(polygon.begin(), polygon.end(), support.begin(), support.end(),
                        std::back_inserter(r.polygon_minus_support));

    bool all_ok = true;
    for (const LatticePoint& p : lattice) {
        PointResult pr{.point = p};
        try {
            ConstructionState s = match_for_point(rho, p);
            pr.monomial = matching_monomial(s.graph, s.matching);
            pr.op_count = s.ops.size();
            pr.ok = pr.monomial.ex == 2 * p.i && pr.monomial.ey == 2 * p.j;
            if (!pr.ok) pr.error = "constructed monomial maps to a different point";
        } catch (const std::exception& ex) {
            pr.ok = false;
            pr.error = ex.what();
        }
        all_ok = all_ok && pr.ok;
        r.points.push_back(std::move(pr));
    }

    r.pass = all_ok && r.support_minus_polygon.empty() && r.polygon_minus_support.empty();
    return r;
}

Json report_to_json(const SaturationReport& r) {
    auto points_json = [](const std::vector<LatticePoint>& pts) {
        Json a = Json::array();
        for (const LatticePoint& p : pts) a.push_back({p.i, p.j});
        return a;
    };
    Json vertices = Json::array();
    for (const LatticePoint& v : r.vertices) vertices.push_back({v.i, v.j});
    Json points = Json::array();
    for (const PointResult& pr : r.points) {
        Json p{{"point", {pr.point.i, pr.point.j}},
               {"ops", pr.op_count},
               {"monomial", {pr.monomial.ex, pr.monomial.ey, pr.monomial.ez}},
               {"ok", pr.ok}};
        if (!pr.ok) p["error"] = pr.error;
        points.push_back(std::move(p));
    }
    return Json{{"rho", r.rho.str()},
                {"vertices", std::move(vertices)},
                {"lattice_count", r.lattice_count},
                {"support_count", r.support_count},
                {"support_minus_polygon", points_json(r.support_minus_polygon)},
                {"polygon_minus_support", points_json(r.polygon_minus_support)},
                {"points", std::move(points)},
                {"pass", r.pass}};
}

namespace {

std::vector<RationalIndex> sweep_indices(int max_sum) {
    std::vector<RationalIndex> rhos;
    for (int sum = 2; sum <= max_sum; ++sum)
        for (int a = 1; 2 * a <= sum; ++a)
            if (std::gcd(a, sum - a) == 1) rhos.emplace_back(a, sum - a);
    return rhos;
}

// A previously written report can be reused only if it parses and passed.
bool existing_report_passes(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return false;
    try {
        Json j = Json::parse(in);
        return j.at("pass").get<bool>();
    } catch (const std::exception&) {
        return false;
    }
}

void write_atomically(const std::filesystem::path& file, const Json& j) {
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(2) << '\n';
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

}  // namespace

SweepSummary sweep(int max_sum, const std::filesystem::path& dir, unsigned jobs) {
    auto start = std::chrono::steady_clock::now();
    if (max_sum < 2) throw std::invalid_argument("sweep needs max_sum >= 2");
    std::filesystem::create_directories(dir);

    std::vector<RationalIndex> rhos = sweep_indices(max_sum);
    SweepSummary summary;
    summary.max_sum = max_sum;
    summary.total = rhos.size();

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(rhos.size()));

    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::vector<std::thread> pool;
    auto worker = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= rhos.size()) return;
            RationalIndex rho = rhos[k];
            std::filesystem::path file =
                dir / (std::to_string(rho.a) + "_" + std::to_string(rho.b) + ".json");
            if (existing_report_passes(file)) {
                std::lock_guard<std::mutex> lock(mu);
                ++summary.reused;
                ++summary.passed;
                continue;
            }
            SaturationReport report = saturation_report(rho);
            write_atomically(file, report_to_json(report));
            std::lock_guard<std::mutex> lock(mu);
            if (report.pass)
                ++summary.passed;
            else
                summary.failures.push_back(rho.str());
        }
    };
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::sort(summary.failures.begin(), summary.failures.end());

    summary.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

Json sweep_to_json(const SweepSummary& s) {
    return Json{{"max_sum", s.max_sum}, {"total", s.total},   {"passed", s.passed},
                {"reused", s.reused},   {"failures", s.failures}, {"seconds", s.seconds}};
}

std::filesystem::path default_results_dir() {
    if (const char* env = std::getenv("MARKOV_SNAKE_RESULTS"); env && *env)
        return std::filesystem::path(env);
    return "results";
}

}  // namespace msnake
