#include "patternctl/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace patternctl {

namespace {

void append_sample(TrajectoryRecord& record, double t, const Eigen::VectorXd& w) {
    record.times.push_back(t);
    record.states.push_back(w);
}

}  // namespace

TrajectoryRecord simulate_lti(const Eigen::MatrixXd& m, const Eigen::VectorXd& w0,
                              const SimulateOptions& options) {
    if (m.rows() != m.cols() || m.rows() != w0.size()) {
        throw std::invalid_argument("simulate_lti: dimension mismatch");
    }
    if (!m.allFinite() || !w0.allFinite()) {
        throw std::invalid_argument("simulate_lti: non-finite input");
    }
    if (!(options.dt > 0.0) || !(options.t_end >= options.dt)) {
        throw std::invalid_argument("simulate_lti: need dt > 0 and t_end >= dt");
    }
    if (options.store_every < 1) {
        throw std::invalid_argument("simulate_lti: store_every must be >= 1");
    }

    const auto steps = static_cast<long>(std::llround(options.t_end / options.dt));
    const Eigen::MatrixXd propagator = (m * options.dt).exp();

    TrajectoryRecord record;
    Eigen::VectorXd w = w0;
    append_sample(record, 0.0, w);
    for (long k = 1; k <= steps; ++k) {
        w = propagator * w;
        if (w.lpNorm<Eigen::Infinity>() > 1e12) {
            throw std::runtime_error("simulate_lti: state exceeded 1e12 at t = " +
                                     std::to_string(k * options.dt) +
                                     " (unstable system)");
        }
        if (k % options.store_every == 0 || k == steps) {
            append_sample(record, k * options.dt, w);
        }
    }
    record.limit_estimate = w;
    if (record.states.size() >= 2) {
        const Eigen::VectorXd& last = record.states.back();
        const Eigen::VectorXd& prev = record.states[record.states.size() - 2];
        record.converged =
            (last - prev).norm() <= options.convergence_tol * (1.0 + last.norm());
    }
    return record;
}

TrajectoryRecord simulate_centralized(const CentralizedDesign& design,
                                      const Eigen::VectorXd& xbar0,
                                      const SimulateOptions& options) {
    TrajectoryRecord record = simulate_lti(design.closed_loop, xbar0, options);
    const SpectralCertificate cert = certify_spectrum(design);
    if (cert.max_other_real_part < 0.0) {
        record.recommended_t_end = 3.0 / std::abs(cert.max_other_real_part);
        record.horizon_warning = options.t_end < record.recommended_t_end;
    }
    return record;
}

TrajectoryRecord simulate_distributed(const ErrorSystem& es, const CentralizedDesign& design,
                                      const Eigen::VectorXd& xbar0, const Eigen::VectorXd& e0,
                                      const SimulateOptions& options) {
    const int size = design.sys.size();
    if (xbar0.size() != size || e0.size() != es.error_matrix.rows()) {
        throw std::invalid_argument("simulate_distributed: initial state length mismatch");
    }
    Eigen::VectorXd joint0(size + e0.size());
    joint0 << xbar0, e0;
    TrajectoryRecord record = simulate_lti(es.joint_matrix, joint0, options);

    record.error_norms.reserve(record.states.size());
    for (const auto& state : record.states) {
        Eigen::VectorXd norms(es.m);
        for (int j = 0; j < es.m; ++j) {
            norms(j) = state.segment(size + j * size, size).norm();
        }
        record.error_norms.push_back(std::move(norms));
    }

    const SpectralCertificate cert = certify_spectrum(design);
    const double slowest = std::max(cert.max_other_real_part, es.max_error_real_part);
    if (slowest < 0.0) {
        record.recommended_t_end = 3.0 / std::abs(slowest);
        record.horizon_warning = options.t_end < record.recommended_t_end;
    }
    return record;
}

void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& record, int n, int m) {
    out << "t";
    for (int i = 1; i <= n; ++i) out << ",x_" << i;
    for (int j = 1; j <= m; ++j) out << ",z_" << j;
    const bool with_errors = !record.error_norms.empty();
    if (with_errors) {
        for (int j = 1; j <= m; ++j) out << ",e_norm_" << j;
    }
    out << "\n";

    char buffer[32];
    const auto put = [&](double v) {
        std::snprintf(buffer, sizeof(buffer), "%.17g", v);
        out << buffer;
    };
    for (std::size_t k = 0; k < record.states.size(); ++k) {
        put(record.times[k]);
        for (int i = 0; i < n + m; ++i) {
            out << ',';
            put(record.states[k](i));
        }
        if (with_errors) {
            for (int j = 0; j < m; ++j) {
                out << ',';
                put(record.error_norms[k](j));
            }
        }
        out << "\n";
    }
}

void write_trajectory_csv(const std::string& path, const TrajectoryRecord& record, int n,
                          int m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_trajectory_csv: cannot open " + path);
    write_trajectory_csv(out, record, n, m);
}

}  // namespace patternctl
