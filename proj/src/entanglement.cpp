#include "jc/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace jc {

namespace {

std::array<int, 4> factor_dims(int n_max) {
    return {n_max + 1, 2, n_max + 1, 2};
}

struct TraceLayout {
    std::vector<long> kept_offsets;    // composite offset of each kept multi-index
    std::vector<long> traced_offsets;  // composite offset of each traced multi-index
    std::vector<int> kept_dims;
};

// The composite index is row-major over (mode A, atom A, mode B, atom B), so
// it splits into a kept part and a traced part by stride bookkeeping.
TraceLayout trace_layout(int n_max, const Bipartition& bp) {
    const int kept = bp.kept_count();
    if (kept == 0 || kept == 4) {
        throw std::invalid_argument("bipartition must keep a non-empty proper subset");
    }
    const std::array<int, 4> dims = factor_dims(n_max);
    std::array<long, 4> strides{};
    strides[3] = 1;
    for (int f = 2; f >= 0; --f) strides[f] = strides[f + 1] * dims[f + 1];

    TraceLayout layout;
    layout.kept_offsets = {0};
    layout.traced_offsets = {0};
    for (int f = 0; f < 4; ++f) {
        auto& offsets = bp.keep[f] ? layout.kept_offsets : layout.traced_offsets;
        std::vector<long> expanded;
        expanded.reserve(offsets.size() * dims[f]);
        for (long base : offsets) {
            for (int d = 0; d < dims[f]; ++d) expanded.push_back(base + d * strides[f]);
        }
        offsets = std::move(expanded);
        if (bp.keep[f]) layout.kept_dims.push_back(dims[f]);
    }
    return layout;
}

std::vector<double> reduced_eigenvalues(const DensityOperator& rho) {
    Eigen::SelfAdjointEigenSolver<MatrixOperator> solver;
    solver.compute(rho.mat, Eigen::EigenvaluesOnly);
    std::vector<double> vals(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
    // Rounding from the trace contraction can leave tiny negative weights.
    for (double& v : vals) {
        if (v < 0.0 && v > -1e-10) v = 0.0;
    }
    return vals;
}

double entropy_bits_of(const DensityOperator& rho) {
    double s = 0.0;
    for (double v : reduced_eigenvalues(rho)) {
        if (v > 0.0) s -= v * std::log2(v);
    }
    return s;
}

}  // namespace

int Bipartition::kept_count() const {
    int c = 0;
    for (bool k : keep) c += k ? 1 : 0;
    return c;
}

DensityOperator partial_trace(const StateVector& state, const Bipartition& keep) {
    const TraceLayout layout = trace_layout(state.n_max, keep);
    const long dk = long(layout.kept_offsets.size());
    DensityOperator out{MatrixOperator::Zero(dk, dk), layout.kept_dims};
    for (long i = 0; i < dk; ++i) {
        for (long j = 0; j <= i; ++j) {
            Complex acc = 0.0;
            for (long t : layout.traced_offsets) {
                acc += state.amps(layout.kept_offsets[i] + t) *
                       std::conj(state.amps(layout.kept_offsets[j] + t));
            }
            out.mat(i, j) = acc;
            out.mat(j, i) = std::conj(acc);
        }
    }
    return out;
}

DensityOperator partial_trace(const MatrixOperator& rho, int n_max, const Bipartition& keep) {
    if (rho.rows() != basis_dim(n_max) || rho.cols() != basis_dim(n_max)) {
        throw std::invalid_argument("density operator dimension does not match truncation");
    }
    const TraceLayout layout = trace_layout(n_max, keep);
    const long dk = long(layout.kept_offsets.size());
    DensityOperator out{MatrixOperator::Zero(dk, dk), layout.kept_dims};
    for (long i = 0; i < dk; ++i) {
        for (long j = 0; j < dk; ++j) {
            Complex acc = 0.0;
            for (long t : layout.traced_offsets) {
                acc += rho(layout.kept_offsets[i] + t, layout.kept_offsets[j] + t);
            }
            out.mat(i, j) = acc;
        }
    }
    return out;
}

double concurrence(const DensityOperator& rho) {
    if (rho.mat.rows() != 4 || rho.mat.cols() != 4) {
        throw std::invalid_argument("concurrence requires a two-qubit density operator");
    }
    // Spin flip sigma_y x sigma_y, anti-diagonal (-1, 1, 1, -1).
    MatrixOperator yy = MatrixOperator::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const MatrixOperator product = rho.mat * yy * rho.mat.conjugate() * yy;

    Eigen::ComplexEigenSolver<MatrixOperator> solver(product, false);
    std::array<double, 4> roots{};
    for (int k = 0; k < 4; ++k) {
        roots[k] = std::sqrt(std::max(0.0, solver.eigenvalues()(k).real()));
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    const double c = roots[0] - roots[1] - roots[2] - roots[3];
    return std::clamp(c, 0.0, 1.0);
}

double entanglement_entropy(const StateVector& state, const Bipartition& cut) {
    return entropy_bits_of(partial_trace(state, cut));
}

double entanglement_entropy(const MatrixOperator& rho, int n_max, const Bipartition& cut) {
    const double purity = (rho * rho).trace().real();
    if (purity < 1.0 - 1e-9) {
        throw NotPureError("entanglement entropy requires a pure state");
    }
    return entropy_bits_of(partial_trace(rho, n_max, cut));
}

double joint_ground_probability(const StateVector& state) {
    double p = 0.0;
    for (int na = 0; na <= state.n_max; ++na) {
        for (int nb = 0; nb <= state.n_max; ++nb) {
            p += std::norm(state.amplitude({na, false, nb, false}));
        }
    }
    return p;
}

double joint_ground_probability(const MatrixOperator& rho, int n_max) {
    if (rho.rows() != basis_dim(n_max)) {
        throw std::invalid_argument("density operator dimension does not match truncation");
    }
    double p = 0.0;
    for (int na = 0; na <= n_max; ++na) {
        for (int nb = 0; nb <= n_max; ++nb) {
            p += rho(basis_index({na, false, nb, false}, n_max),
                     basis_index({na, false, nb, false}, n_max))
                     .real();
        }
    }
    return p;
}

EntanglementReport entanglement_report(const StateVector& state, double t) {
    return EntanglementReport{
        t,
        concurrence(partial_trace(state, Bipartition::atoms())),
        entanglement_entropy(state, Bipartition::pair(Subsystem::A)),
        joint_ground_probability(state),
    };
}

PeakPeriod find_peak_and_period(const TimeSeries& series) {
    const long n = long(series.values.size());
    if (n != long(series.times.size())) {
        throw std::invalid_argument("time series has mismatched lengths");
    }
    if (n < 8) {
        throw std::invalid_argument("time series too short");
    }
    const double dt = (series.times.back() - series.times.front()) / double(n - 1);
    if (!(dt > 0.0)) {
        throw std::invalid_argument("time series must be increasing");
    }

    const auto& v = series.values;
    const double vmax = *std::max_element(v.begin(), v.end());
    const double vmin = *std::min_element(v.begin(), v.end());
    if (vmax - vmin <= 1e-12 * std::max(1.0, std::abs(vmax))) {
        throw NoPeakError("series is constant");
    }

    // First local maximum that attains the global one (periodic series repeat
    // the peak; the quantity of interest is when it is reached first), with
    // parabolic refinement through the three samples around it.
    const double peak_tol = 1e-6 * (vmax - vmin);
    long imax = n - 1;
    for (long i = 0; i < n; ++i) {
        const bool local_max = (i == 0 || v[i] >= v[i - 1]) && (i == n - 1 || v[i] >= v[i + 1]);
        if (local_max && v[i] >= vmax - peak_tol) {
            imax = i;
            break;
        }
    }
    double t_peak = series.times[imax];
    if (imax > 0 && imax < n - 1) {
        const double denom = v[imax - 1] - 2.0 * v[imax] + v[imax + 1];
        if (denom < 0.0) {
            const double shift = 0.5 * (v[imax - 1] - v[imax + 1]) / denom;
            t_peak += std::clamp(shift, -1.0, 1.0) * dt;
        }
    }

    // Coarse period from the mean-removed autocorrelation: its first local
    // maximum past the zero crossing. The window edges bias this estimate by
    // several samples, so it is only used to pick the right cycle.
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= double(n);
    std::vector<double> w(v.size());
    for (long i = 0; i < n; ++i) w[i] = v[i] - mean;

    const long max_lag = std::min(n - 2, (3 * n) / 4);
    std::vector<double> acf(max_lag + 1, 0.0);
    for (long k = 0; k <= max_lag; ++k) {
        double acc = 0.0;
        for (long i = 0; i + k < n; ++i) acc += w[i] * w[i + k];
        acf[k] = acc / double(n);
    }
    long k0 = -1;
    for (long k = 1; k <= max_lag; ++k) {
        if (acf[k] < 0.0) {
            k0 = k;
            break;
        }
    }
    if (k0 < 0) {
        throw NoPeakError("series does not oscillate within the sampled window");
    }
    long kbest = -1;
    for (long k = k0 + 1; k < max_lag; ++k) {
        if (acf[k] > 0.0 && acf[k] >= acf[k - 1] && acf[k] >= acf[k + 1]) {
            kbest = k;
            break;
        }
    }
    if (kbest < 0) {
        kbest = k0;
        for (long k = k0; k <= max_lag; ++k) {
            if (acf[k] > acf[kbest]) kbest = k;
        }
    }
    double period = double(kbest) * dt;
    if (kbest > 0 && kbest < max_lag) {
        const double denom = acf[kbest - 1] - 2.0 * acf[kbest] + acf[kbest + 1];
        if (denom < 0.0) {
            const double shift = 0.5 * (acf[kbest - 1] - acf[kbest + 1]) / denom;
            period += std::clamp(shift, -1.0, 1.0) * dt;
        }
    }

    // Refine with interpolated upward mean crossings, which pin the period to
    // O(dt^2) when they recur once per cycle.
    std::vector<double> crossings;
    for (long i = 0; i + 1 < n; ++i) {
        if (w[i] < 0.0 && w[i + 1] >= 0.0) {
            crossings.push_back(series.times[i] + dt * (-w[i]) / (w[i + 1] - w[i]));
        }
    }
    if (crossings.size() >= 2) {
        bool regular = true;
        for (size_t c = 1; c < crossings.size(); ++c) {
            if (std::abs(crossings[c] - crossings[c - 1] - period) > 0.25 * period) {
                regular = false;
                break;
            }
        }
        if (regular) {
            period = (crossings.back() - crossings.front()) / double(crossings.size() - 1);
        }
    }
    return PeakPeriod{t_peak, period};
}

}  // namespace jc
