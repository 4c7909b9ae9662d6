#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/model.hpp"

namespace expd::core {

enum class TaskState {
  queued,
  assigned,
  preparing,
  running,
  succeeded,
  failed,
  canceled,
};

enum class FailurePhase { prepare, run, executor_lost };

bool is_terminal(TaskState s);
const char* task_state_name(TaskState s);
std::optional<TaskState> task_state_from_name(std::string_view name);
const char* failure_phase_name(FailurePhase p);
std::optional<FailurePhase> failure_phase_from_name(std::string_view name);

// A scheduled run's lifecycle state plus provenance.
struct TaskRecord {
  std::string task_id;
  RunConfig run_config;
  TaskState state = TaskState::queued;
  std::optional<std::string> executor_id;
  int64_t submit_time = 0;
  std::optional<int64_t> start_time;
  std::optional<int64_t> end_time;
  std::optional<int> exit_code;
  uint32_t retries_used = 0;
  std::optional<FailurePhase> failure_phase;
};

struct LifecycleEvent {
  enum class Kind {
    assign,
    begin_prepare,
    begin_run,
    finish,
    fail,
    cancel,
    executor_lost,
  };

  Kind kind;
  std::string executor_id;          // assign
  std::optional<int> exit_code;     // finish, fail(RUN)
  std::optional<FailurePhase> phase;  // fail

  static LifecycleEvent assign(std::string executor_id);
  static LifecycleEvent begin_prepare();
  static LifecycleEvent begin_run();
  static LifecycleEvent finish(int exit_code);
  static LifecycleEvent fail_prepare();
  static LifecycleEvent fail_run(int exit_code);
  static LifecycleEvent cancel();
  static LifecycleEvent executor_lost();
};

// Pure transition per the lifecycle table; returns the updated record and
// throws IllegalTransition for any edge not in the table (terminal states
// are absorbing). `now_ms` stamps first entry to RUNNING and entry to any
// terminal state. ExecutorLost consumes the retry budget: the task goes back
// to QUEUED with its original submit_time while retries_used <= max_retries,
// otherwise FAILED with phase EXECUTOR_LOST.
TaskRecord transition(const TaskRecord& task, const LifecycleEvent& event,
                      int64_t now_ms, uint32_t max_retries);

json to_json(const TaskRecord& t);
TaskRecord task_record_from_json(const json& j);

}  // namespace expd::core
