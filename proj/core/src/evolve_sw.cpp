#include "swbesov/evolve_sw.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swbesov/error.hpp"

namespace swbesov {

namespace {

Field project_keep_mean(const Field& f, const FriedrichsLevel& level) {
    Field out = friedrichs_project(f, level);
    apply_dealias(out);
    for (int c = 0; c < f.components(); ++c) out.coefficients(c)[0] = Complex(f.mean(c), 0.0);
    return out;
}

struct Stage {
    AcousticState w;
    std::vector<double> umean;
};

SolutionState to_solution(const Stage& s, double t) {
    SolutionState out;
    out.q = s.w.q;
    out.u = hodge_reconstruct(s.w.d, s.w.omega, s.umean);
    out.t = t;
    return out;
}

Stage to_stage(const SolutionState& s) {
    Stage st;
    st.w = s.acoustic();
    st.umean = s.velocity_mean();
    return st;
}

}  // namespace

std::pair<Field, Field> project_initial(const Field& q0, const Field& u0, const FriedrichsLevel& level) {
    return {project_keep_mean(q0, level), project_keep_mean(u0, level)};
}

EvolveResult evolve_sw(const Field& q0, const Field& u0, const PhysicalLaws& laws, const FriedrichsLevel& level,
                       const EvolveOptions& opts) {
    if (!(opts.T > 0.0) || !(opts.dt > 0.0)) throw Error(ErrorKind::invalid_params, "evolve_sw needs T > 0 and dt > 0");
    if (opts.record_every < 1) throw Error(ErrorKind::invalid_params, "record_every must be ≥ 1");
    const GridPtr& grid = q0.grid_ptr();
    require_same_grid(*grid, u0.grid());
    require_same_grid(*grid, *level.grid);

    LinearParams lp = laws.linear_params();
    lp.kappa_reg = opts.kappa_reg;
    const int steps = static_cast<int>(std::ceil(opts.T / opts.dt - 1e-9));
    const double h = opts.T / steps;
    const AcousticPropagator full(grid, lp, h), half(grid, lp, 0.5 * h);
    const double dx = grid->spacing();

    auto [q, u] = project_initial(q0, u0, level);
    SolutionState s0{q, u, 0.0};
    Stage cur = to_stage(s0);
    const double mean0 = q.mean(0);

    EvolveResult res;
    res.step = h;
    res.density_min = kInf;
    res.density_max = -kInf;

    auto eval = [&](const Stage& st) { return nonlinear_rhs(st.w.q, to_solution(st, 0.0).u, laws, level); };
    auto note = [&](const NonlinearTerms& n) {
        res.density_min = std::min(res.density_min, n.density_min);
        res.density_max = std::max(res.density_max, n.density_max);
        res.cfl_max = std::max(res.cfl_max, n.speed_max * h / dx);
    };
    auto admissible = [&](const NonlinearTerms& n, std::string& why) {
        if (n.density_min < opts.guard_lo || n.density_max > opts.guard_hi) {
            why = "vacuum_guard";
            return false;
        }
        if (n.speed_max * h / dx > opts.cfl) {
            why = "cfl_violation";
            return false;
        }
        return true;
    };

    NonlinearTerms n0 = eval(cur);
    note(n0);
    {
        std::string why;
        if (!admissible(n0, why)) {
            std::ostringstream os;
            os << "initial data: 1+q in [" << n0.density_min << ", " << n0.density_max << "], CFL "
               << n0.speed_max * h / dx;
            throw Error(why == "cfl_violation" ? ErrorKind::cfl_violation : ErrorKind::vacuum_guard, os.str());
        }
    }

    auto record = [&](const SolutionState& s, bool force) {
        if (opts.observer) opts.observer(s);
        if (opts.store && (force || res.steps % opts.record_every == 0)) res.trajectory.push(s.t, s);
    };
    record(to_solution(cur, 0.0), true);

    auto add_terms = [](Stage& st, double a, const NonlinearTerms& n) {
        st.w.q.axpy(a, n.F1);
        st.w.d.axpy(a, n.G1);
        if (!n.H1.empty()) st.w.omega.axpy(a, n.H1);
        for (std::size_t c = 0; c < st.umean.size(); ++c) st.umean[c] += a * n.mean_u_rate[c];
    };

    double t = 0.0;
    for (int k = 0; k < steps; ++k) {
        Stage mid = cur;
        add_terms(mid, 0.5 * h, n0);
        half.apply(mid.w);
        NonlinearTerms n1;
        try {
            n1 = eval(mid);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::vacuum_guard) throw;
            res.halted = true;
            res.halt_reason = "vacuum_guard";
            res.halt_time = t + 0.5 * h;
            break;
        }
        Stage incr;
        incr.w = AcousticState::zeros(grid, true);
        incr.umean.assign(cur.umean.size(), 0.0);
        add_terms(incr, h, n1);
        half.apply(incr.w);
        full.apply(cur.w);
        cur.w.axpy(1.0, incr.w);
        for (std::size_t c = 0; c < cur.umean.size(); ++c) cur.umean[c] += incr.umean[c];
        t = (k + 1 == steps) ? opts.T : (k + 1) * h;
        ++res.steps;

        SolutionState s = to_solution(cur, t);
        res.mass_drift = std::max(res.mass_drift, std::abs(s.q.mean(0) - mean0) / (1.0 + mean0));
        try {
            n0 = eval(cur);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::vacuum_guard) throw;
            record(s, true);
            res.halted = true;
            res.halt_reason = "vacuum_guard";
            res.halt_time = t;
            break;
        }
        note(n0);
        std::string why;
        const bool ok = admissible(n0, why);
        record(s, !ok || k + 1 == steps);
        if (!ok) {
            res.halted = true;
            res.halt_reason = why;
            res.halt_time = t;
            break;
        }
    }
    res.final_state = to_solution(cur, t);
    return res;
}

}  // namespace swbesov
