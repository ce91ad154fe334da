#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "swbesov/acoustic.hpp"
#include "swbesov/trajectory.hpp"

namespace swbesov {

using AcousticTrajectory = Trajectory<AcousticState>;

// (F, G) at time t, both scalar fields.
using LinearForcing = std::function<std::pair<Field, Field>(double t)>;
using AcousticObserver = std::function<void(double t, const AcousticState& s)>;

struct LinearEvolveOptions {
    double T = 1.0;
    double dt = 0.01;
    int record_every = 1;              // used when sample_times is empty
    std::vector<double> sample_times;  // explicit output times in (0, T]; t = 0 is always recorded
    double cfl = 0.5;                  // advective bound on dt·max|v|/Δx
    bool store = true;
    AcousticObserver observer;
};

// Without forcing and advection every mode is propagated exactly between output
// times. Otherwise the integrating-factor midpoint scheme is used with steps of dt
// (shortened to land on output times).
AcousticTrajectory evolve_linear(const AcousticState& init, const LinearParams& params, const LinearEvolveOptions& opts,
                                 const LinearForcing& forcing = {}, const Field& advection = {});

// t_first, t_first·ratio, ... capped at T (T always included). Resolves the early
// fast decay of high blocks with few samples.
std::vector<double> geometric_times(double T, double t_first, double ratio);

}  // namespace swbesov
