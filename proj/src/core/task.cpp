#include "core/task.hpp"

#include "util/err.hpp"

namespace expd::core {

bool is_terminal(TaskState s) {
  return s == TaskState::succeeded || s == TaskState::failed ||
         s == TaskState::canceled;
}

const char* task_state_name(TaskState s) {
  switch (s) {
    case TaskState::queued: return "QUEUED";
    case TaskState::assigned: return "ASSIGNED";
    case TaskState::preparing: return "PREPARING";
    case TaskState::running: return "RUNNING";
    case TaskState::succeeded: return "SUCCEEDED";
    case TaskState::failed: return "FAILED";
    case TaskState::canceled: return "CANCELED";
  }
  return "?";
}

std::optional<TaskState> task_state_from_name(std::string_view name) {
  for (TaskState s : {TaskState::queued, TaskState::assigned,
                      TaskState::preparing, TaskState::running,
                      TaskState::succeeded, TaskState::failed,
                      TaskState::canceled}) {
    if (name == task_state_name(s)) return s;
  }
  return std::nullopt;
}

const char* failure_phase_name(FailurePhase p) {
  switch (p) {
    case FailurePhase::prepare: return "PREPARE";
    case FailurePhase::run: return "RUN";
    case FailurePhase::executor_lost: return "EXECUTOR_LOST";
  }
  return "?";
}

std::optional<FailurePhase> failure_phase_from_name(std::string_view name) {
  for (FailurePhase p : {FailurePhase::prepare, FailurePhase::run,
                         FailurePhase::executor_lost}) {
    if (name == failure_phase_name(p)) return p;
  }
  return std::nullopt;
}

LifecycleEvent LifecycleEvent::assign(std::string executor_id) {
  return {Kind::assign, std::move(executor_id), std::nullopt, std::nullopt};
}
LifecycleEvent LifecycleEvent::begin_prepare() {
  return {Kind::begin_prepare, {}, std::nullopt, std::nullopt};
}
LifecycleEvent LifecycleEvent::begin_run() {
  return {Kind::begin_run, {}, std::nullopt, std::nullopt};
}
LifecycleEvent LifecycleEvent::finish(int exit_code) {
  return {Kind::finish, {}, exit_code, std::nullopt};
}
LifecycleEvent LifecycleEvent::fail_prepare() {
  return {Kind::fail, {}, std::nullopt, FailurePhase::prepare};
}
LifecycleEvent LifecycleEvent::fail_run(int exit_code) {
  return {Kind::fail, {}, exit_code, FailurePhase::run};
}
LifecycleEvent LifecycleEvent::cancel() {
  return {Kind::cancel, {}, std::nullopt, std::nullopt};
}
LifecycleEvent LifecycleEvent::executor_lost() {
  return {Kind::executor_lost, {}, std::nullopt, std::nullopt};
}

namespace {

[[noreturn]] void illegal(const TaskRecord& t, const char* what) {
  fail(Errc::illegal_transition,
       std::string("illegal transition: ") + what + " in state " +
           task_state_name(t.state) + " (task " + t.task_id + ")");
}

}  // namespace

TaskRecord transition(const TaskRecord& task, const LifecycleEvent& event,
                      int64_t now_ms, uint32_t max_retries) {
  using Kind = LifecycleEvent::Kind;
  TaskRecord next = task;

  auto enter_terminal = [&](TaskState s) {
    next.state = s;
    next.end_time = now_ms;
  };

  switch (event.kind) {
    case Kind::assign:
      if (task.state != TaskState::queued) illegal(task, "Assign");
      next.state = TaskState::assigned;
      next.executor_id = event.executor_id;
      return next;

    case Kind::begin_prepare:
      if (task.state != TaskState::assigned) illegal(task, "BeginPrepare");
      next.state = TaskState::preparing;
      return next;

    case Kind::begin_run:
      if (task.state != TaskState::preparing) illegal(task, "BeginRun");
      next.state = TaskState::running;
      if (!next.start_time) next.start_time = now_ms;
      return next;

    case Kind::finish: {
      if (task.state != TaskState::running) illegal(task, "Finish");
      int code = event.exit_code.value();
      next.exit_code = code;
      if (code == 0) {
        enter_terminal(TaskState::succeeded);
      } else {
        enter_terminal(TaskState::failed);
        next.failure_phase = FailurePhase::run;
      }
      return next;
    }

    case Kind::fail:
      switch (event.phase.value()) {
        case FailurePhase::prepare:
          if (task.state != TaskState::preparing) illegal(task, "Fail(PREPARE)");
          break;
        case FailurePhase::run:
          if (task.state != TaskState::running) illegal(task, "Fail(RUN)");
          next.exit_code = event.exit_code.value();
          break;
        case FailurePhase::executor_lost:
          illegal(task, "Fail(EXECUTOR_LOST)");  // only via ExecutorLost
      }
      enter_terminal(TaskState::failed);
      next.failure_phase = event.phase;
      return next;

    case Kind::cancel:
      if (is_terminal(task.state)) illegal(task, "Cancel");
      enter_terminal(TaskState::canceled);
      return next;

    case Kind::executor_lost:
      if (task.state != TaskState::assigned &&
          task.state != TaskState::preparing &&
          task.state != TaskState::running) {
        illegal(task, "ExecutorLost");
      }
      next.retries_used = task.retries_used + 1;
      if (next.retries_used <= max_retries) {
        next.state = TaskState::queued;  // keeps the original submit_time
        next.executor_id.reset();
      } else {
        enter_terminal(TaskState::failed);
        next.failure_phase = FailurePhase::executor_lost;
      }
      return next;
  }
  illegal(task, "unknown event");
}

json to_json(const TaskRecord& t) {
  return json{
      {"end_time", t.end_time ? json(*t.end_time) : json()},
      {"executor_id", t.executor_id ? json(*t.executor_id) : json()},
      {"exit_code", t.exit_code ? json(*t.exit_code) : json()},
      {"failure_phase",
       t.failure_phase ? json(failure_phase_name(*t.failure_phase)) : json()},
      {"retries_used", t.retries_used},
      {"run_config", to_json(t.run_config)},
      {"start_time", t.start_time ? json(*t.start_time) : json()},
      {"state", task_state_name(t.state)},
      {"submit_time", t.submit_time},
      {"task_id", t.task_id},
  };
}

TaskRecord task_record_from_json(const json& j) {
  TaskRecord t;
  t.task_id = j.at("task_id").get<std::string>();
  t.run_config = run_config_from_json(j.at("run_config"));
  auto state = task_state_from_name(j.at("state").get<std::string>());
  if (!state) fail(Errc::protocol_error, "unknown task state");
  t.state = *state;
  if (!j.at("executor_id").is_null()) {
    t.executor_id = j.at("executor_id").get<std::string>();
  }
  t.submit_time = j.at("submit_time").get<int64_t>();
  if (!j.at("start_time").is_null()) t.start_time = j.at("start_time").get<int64_t>();
  if (!j.at("end_time").is_null()) t.end_time = j.at("end_time").get<int64_t>();
  if (!j.at("exit_code").is_null()) t.exit_code = j.at("exit_code").get<int>();
  t.retries_used = j.at("retries_used").get<uint32_t>();
  if (!j.at("failure_phase").is_null()) {
    auto phase =
        failure_phase_from_name(j.at("failure_phase").get<std::string>());
    if (!phase) fail(Errc::protocol_error, "unknown failure phase");
    t.failure_phase = phase;
  }
  return t;
}

}  // namespace expd::core
