#pragma once
// Error metrics over a stream under three query schedules:
//   on_arrival  - record each item, query it immediately; the true
//                 frequency is the running count including the current
//                 occurrence, so relative error is always defined,
//   per_flow    - record everything, then query each distinct flow once;
//                 means are taken over the M flows,
//   postmortem  - record everything, then replay the stream querying
//                 every occurrence against final true frequencies; means
//                 over the N items, so heavy flows dominate.
//
// Four figures per run: msre_as_written applies sqrt to each squared
// error term before averaging, which collapses to the mean absolute
// error and is kept under its own name on purpose; avgerr is that mean
// absolute error computed directly; avgrelerr divides each absolute
// error by the true frequency; rmse is the conventional root of the mean
// squared error, reported as a supplement.

#include <vector>

#include "sketchbench/estimator.hpp"
#include "sketchbench/flow_key.hpp"

namespace sketchbench {

enum class Protocol { on_arrival, per_flow, postmortem };

const char* protocol_name(Protocol protocol);

struct ErrorReport {
    Protocol protocol;
    double msre_as_written;
    double avgerr;
    double avgrelerr;
    double rmse;
};

// Each runner drives a fresh estimator over the stream and rejects an
// empty stream.
ErrorReport run_on_arrival(const std::vector<FlowKey>& stream, FrequencyEstimator& estimator);
ErrorReport run_per_flow(const std::vector<FlowKey>& stream, FrequencyEstimator& estimator);
ErrorReport run_postmortem(const std::vector<FlowKey>& stream, FrequencyEstimator& estimator);
ErrorReport run_protocol(Protocol protocol, const std::vector<FlowKey>& stream,
                         FrequencyEstimator& estimator);

}  // namespace sketchbench
