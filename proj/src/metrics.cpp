#include "sketchbench/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "sketchbench/ground_truth.hpp"

namespace sketchbench {

namespace {

struct ErrorSums {
    double sqrt_sq = 0.0;  // sum of sqrt((est - truth)^2), kept as written
    double abs_err = 0.0;
    double rel_err = 0.0;
    double sq_err = 0.0;
    std::uint64_t terms = 0;

    void add(double est, double truth) {
        const double err = est - truth;
        sqrt_sq += std::sqrt(err * err);
        abs_err += std::fabs(err);
        rel_err += std::fabs(err) / truth;
        sq_err += err * err;
        ++terms;
    }

    ErrorReport report(Protocol protocol) const {
        const double n = static_cast<double>(terms);
        return ErrorReport{protocol, sqrt_sq / n, abs_err / n, rel_err / n,
                           std::sqrt(sq_err / n)};
    }
};

void require_stream(const std::vector<FlowKey>& stream) {
    if (stream.empty()) {
        throw std::invalid_argument("metrics: stream must be non-empty");
    }
}

}  // namespace

const char* protocol_name(Protocol protocol) {
    switch (protocol) {
    case Protocol::on_arrival: return "on_arrival";
    case Protocol::per_flow: return "per_flow";
    case Protocol::postmortem: return "postmortem";
    }
    return "on_arrival";
}

ErrorReport run_on_arrival(const std::vector<FlowKey>& stream,
                           FrequencyEstimator& estimator) {
    require_stream(stream);
    GroundTruth truth;
    ErrorSums sums;
    for (const FlowKey& key : stream) {
        estimator.record(key);
        truth.record(key);
        sums.add(estimator.estimate(key), static_cast<double>(truth.count(key)));
    }
    return sums.report(Protocol::on_arrival);
}

ErrorReport run_per_flow(const std::vector<FlowKey>& stream,
                         FrequencyEstimator& estimator) {
    require_stream(stream);
    GroundTruth truth;
    for (const FlowKey& key : stream) {
        estimator.record(key);
        truth.record(key);
    }
    ErrorSums sums;
    for (const auto& [key, count] : truth.counts()) {
        sums.add(estimator.estimate(key), static_cast<double>(count));
    }
    return sums.report(Protocol::per_flow);
}

ErrorReport run_postmortem(const std::vector<FlowKey>& stream,
                           FrequencyEstimator& estimator) {
    require_stream(stream);
    GroundTruth truth;
    for (const FlowKey& key : stream) {
        estimator.record(key);
        truth.record(key);
    }
    ErrorSums sums;
    for (const FlowKey& key : stream) {
        sums.add(estimator.estimate(key), static_cast<double>(truth.count(key)));
    }
    return sums.report(Protocol::postmortem);
}

ErrorReport run_protocol(Protocol protocol, const std::vector<FlowKey>& stream,
                         FrequencyEstimator& estimator) {
    switch (protocol) {
    case Protocol::on_arrival: return run_on_arrival(stream, estimator);
    case Protocol::per_flow: return run_per_flow(stream, estimator);
    case Protocol::postmortem: return run_postmortem(stream, estimator);
    }
    throw std::invalid_argument("run_protocol: unknown protocol");
}

}  // namespace sketchbench
