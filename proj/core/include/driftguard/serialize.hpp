#pragma once

#include <string>

#include "driftguard/drift_model.hpp"
#include "driftguard/guardband.hpp"
#include "driftguard/simulate.hpp"
#include "driftguard/types.hpp"

namespace driftguard {

// JSON forms for every shared data type (schemas documented in the README).
// Strings in, strings out: the library keeps its public surface free of a
// specific JSON implementation.

std::string to_json(const ReadoutSchedule& schedule, int indent = -1);
std::string to_json(const TrajectoryPanel& panel, int indent = -1);
std::string to_json(const NormalizationMeta& meta, int indent = -1);
std::string to_json(const StateSpace& states, int indent = -1);
std::string to_json(const StepFit& fit, int indent = -1);
std::string to_json(const KernelSpec& kernel, int indent = -1);
std::string to_json(const TransitionMatrix& matrix, int indent = -1);
std::string to_json(const DriftChain& chain, int indent = -1);
std::string to_json(const GuardBandResult& result, int indent = -1);
std::string to_json(const RoundTripReport& report, int indent = -1);

ReadoutSchedule schedule_from_json(const std::string& text);
TrajectoryPanel panel_from_json(const std::string& text);
NormalizationMeta meta_from_json(const std::string& text);
StateSpace states_from_json(const std::string& text);
StepFit step_fit_from_json(const std::string& text);
KernelSpec kernel_from_json(const std::string& text);
TransitionMatrix matrix_from_json(const std::string& text);
DriftChain chain_from_json(const std::string& text);
GuardBandResult guardband_from_json(const std::string& text);

std::string pooling_name(PoolingMode mode);
PoolingMode pooling_from_name(const std::string& name);
std::string kernel_shape_name(KernelShape shape);
KernelShape kernel_shape_from_name(const std::string& name);

}  // namespace driftguard
