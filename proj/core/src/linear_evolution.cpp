#include "swbesov/linear_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "swbesov/error.hpp"

namespace swbesov {

std::vector<double> geometric_times(double T, double t_first, double ratio) {
    if (!(T > 0.0) || !(t_first > 0.0) || !(ratio > 1.0))
        throw Error(ErrorKind::invalid_params, "geometric_times needs T > 0, t_first > 0, ratio > 1");
    std::vector<double> out;
    for (double t = t_first; t < T; t *= ratio) out.push_back(t);
    out.push_back(T);
    return out;
}

namespace {

std::vector<double> output_times(const LinearEvolveOptions& o) {
    if (!o.sample_times.empty()) {
        std::vector<double> ts;
        for (double t : o.sample_times) {
            if (!(t > 0.0) || t > o.T * (1.0 + 1e-14)) continue;
            if (!ts.empty() && !(t > ts.back())) throw Error(ErrorKind::invalid_params, "sample_times must increase");
            ts.push_back(t);
        }
        return ts;
    }
    const double every = o.dt * std::max(1, o.record_every);
    std::vector<double> ts;
    const long count = static_cast<long>(std::floor(o.T / every + 1e-9));
    for (long k = 1; k <= count; ++k) ts.push_back(static_cast<double>(k) * every);
    if (ts.empty() || ts.back() < o.T * (1.0 - 1e-12)) ts.push_back(o.T);
    else ts.back() = o.T;
    return ts;
}

Field advect(const Field& v, const Field& f) {
    // v·∇f, dealiased
    Field grad = gradient(f);
    Field out(f.grid_ptr(), 1);
    for (int c = 0; c < v.components(); ++c) out += dealiased_product(v.component(c), grad.component(c));
    return out;
}

void check_cfl(const Field& v, double dt, double cfl) {
    auto phys = v.physical_all();
    double vmax = 0.0;
    for (std::size_t i = 0; i < phys[0].size(); ++i) {
        double s = 0.0;
        for (const auto& comp : phys) s += std::abs(comp[i]);
        vmax = std::max(vmax, s);
    }
    const double c = dt * vmax / v.grid().spacing();
    if (c > cfl)
        throw Error(ErrorKind::cfl_violation, "advective CFL number " + std::to_string(c) + " exceeds " + std::to_string(cfl));
}

class StepCache {
public:
    StepCache(GridPtr g, const LinearParams& p) : g_(std::move(g)), p_(p) {}
    const AcousticPropagator& get(double h) {
        auto it = cache_.find(h);
        if (it == cache_.end()) {
            if (cache_.size() > 8) cache_.clear();
            it = cache_.emplace(h, std::make_unique<AcousticPropagator>(g_, p_, h)).first;
        }
        return *it->second;
    }

private:
    GridPtr g_;
    LinearParams p_;
    std::map<double, std::unique_ptr<AcousticPropagator>> cache_;
};

}  // namespace

AcousticTrajectory evolve_linear(const AcousticState& init, const LinearParams& params, const LinearEvolveOptions& opts,
                                 const LinearForcing& forcing, const Field& advection) {
    if (!(opts.T > 0.0)) throw Error(ErrorKind::invalid_params, "T must be positive");
    const bool explicit_part = static_cast<bool>(forcing) || !advection.empty();
    if (explicit_part && !(opts.dt > 0.0)) throw Error(ErrorKind::invalid_params, "dt must be positive");
    const GridPtr& g = init.q.grid_ptr();
    if (!advection.empty()) {
        require_same_grid(*g, advection.grid());
        if (advection.components() != g->dims()) throw Error(ErrorKind::invalid_params, "advection must be a vector field");
        check_cfl(advection, opts.dt, opts.cfl);
    }

    AcousticTrajectory traj;
    auto emit = [&](double t, const AcousticState& s) {
        if (opts.observer) opts.observer(t, s);
        if (opts.store) traj.push(t, s);
    };

    AcousticState w = init;
    emit(0.0, w);
    const auto outs = output_times(opts);
    StepCache cache(g, params);

    auto rhs = [&](double t, const AcousticState& s) {
        AcousticState n = AcousticState::zeros(g);
        if (forcing) {
            auto [F, G] = forcing(t);
            n.q += F;
            n.d += G;
        }
        if (!advection.empty()) {
            n.q -= advect(advection, s.q);
            n.d -= advect(advection, s.d);
        }
        return n;
    };

    double t = 0.0;
    for (double target : outs) {
        if (!explicit_part) {
            cache.get(target - t).apply(w);
            t = target;
        } else {
            while (t < target * (1.0 - 1e-13)) {
                double h = std::min(opts.dt, target - t);
                if (target - (t + h) < 1e-12 * opts.dt) h = target - t;
                const auto& full = cache.get(h);
                const auto& half = cache.get(0.5 * h);
                AcousticState n0 = rhs(t, w);
                AcousticState mid = w;
                mid.axpy(0.5 * h, n0);
                half.apply(mid);
                AcousticState n1 = rhs(t + 0.5 * h, mid);
                half.apply(n1);
                full.apply(w);
                w.q.axpy(h, n1.q);
                w.d.axpy(h, n1.d);
                t += h;
            }
            t = target;
        }
        emit(t, w);
    }
    return traj;
}

}  // namespace swbesov
