// quadrature.hpp — adaptive Gauss-Kronrod (G7/K15) integration
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace resint::quadrature {

// One G7/K15 panel on [a,b]; err is the |G7 - K15| based estimate.
template <class Func>
double gauss_kronrod_15(const Func& f, double a, double b, double& err) {
    // abscissa, Gauss-7 weight, Kronrod-15 weight
    static constexpr double nodes[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715525},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.0, 0.204432940075298},
        {0.586087235467691, 0.0, 0.169004726639267},
        {0.864864423359769, 0.0, 0.104790010322250},
        {0.991455371120813, 0.0, 0.022935322010529}};

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(mid);
    double g7 = nodes[0][1] * f0;
    double k15 = nodes[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * nodes[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += nodes[i][1] * fi;
        k15 += nodes[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    err = std::abs(g7 - k15);
    return k15;
}

// Adaptive bisection to an absolute tolerance on the whole interval.
// Throws on panel exhaustion (non-converging integrand).
template <class Func>
double integrate(const Func& f, double a, double b, double abs_tol,
                 std::size_t max_panels = 20000) {
    struct Panel {
        double a, b, value, err;
    };

    std::vector<Panel> stack;
    double err0;
    const double v0 = gauss_kronrod_15(f, a, b, err0);
    stack.push_back({a, b, v0, err0});

    double sum = 0.0;
    double budget = abs_tol;
    std::size_t panels = 1;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double width_fraction = (p.b - p.a) / (b - a);
        if (p.err <= budget * width_fraction || (p.b - p.a) < 1e-14 * (b - a)) {
            sum += p.value;
            continue;
        }
        if (++panels > max_panels)
            throw std::runtime_error("quadrature::integrate: panel budget exhausted");
        const double mid = 0.5 * (p.a + p.b);
        double e1, e2;
        const double v1 = gauss_kronrod_15(f, p.a, mid, e1);
        const double v2 = gauss_kronrod_15(f, mid, p.b, e2);
        stack.push_back({p.a, mid, v1, e1});
        stack.push_back({mid, p.b, v2, e2});
    }
    return sum;
}

} // namespace resint::quadrature
