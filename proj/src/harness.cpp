#include "oasis2/harness.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "oasis2/builder.hpp"
#include "oasis2/matcher.hpp"
#include "oasis2/validator.hpp"

namespace oasis2 {

std::string to_string(const TaskState& s) {
    switch (s.kind) {
        case TaskStateKind::Submitted: return "Submitted";
        case TaskStateKind::Matched: return "Matched";
        case TaskStateKind::Entrusted: return "Entrusted";
        case TaskStateKind::Executed: return "Executed";
        case TaskStateKind::Failed: return "Failed(" + s.reason + ")";
    }
    return {};
}

std::string format_event_log(const std::vector<LifecycleEvent>& events) {
    std::ostringstream out;
    for (const auto& e : events) {
        out << e.tick << "\t" << e.task.value << "\t" << (e.from ? to_string(*e.from) : "-")
            << "\t" << to_string(e.to) << "\t" << e.cause << "\n";
    }
    return out.str();
}

namespace {

bool legal_transition(const std::optional<TaskState>& from, const TaskState& to) {
    if (to.kind == TaskStateKind::Failed) return true;
    if (!from) return to.kind == TaskStateKind::Submitted;
    switch (from->kind) {
        case TaskStateKind::Submitted: return to.kind == TaskStateKind::Matched;
        case TaskStateKind::Matched: return to.kind == TaskStateKind::Entrusted;
        case TaskStateKind::Entrusted: return to.kind == TaskStateKind::Executed;
        default: return false;
    }
}

struct PlanProgress {
    Graph plan;
    Iri root;
    std::map<Iri, Iri> assignment;       // plan task -> behaviour task
    std::map<Iri, Iri> task_performer;   // plan task -> performer agent
    Graph entrustment;
    bool entrusted = false;
};

class Simulation {
public:
    Simulation(const World& world, const std::vector<Graph>& plans,
               const SerializeOptions& wire_opts)
        : world_(world), wire_opts_(wire_opts) {
        for (const auto& p : world.performers) {
            auto violations = validate(p.knowledge);
            if (!violations.empty())
                throw WorldInvalid("performer " + p.agent.value +
                                   " knowledge does not validate: " + violations.front().message);
            kb_.merge(p.knowledge);
        }
        for (const auto& plan : plans) {
            auto violations = validate(plan);
            if (!violations.empty())
                throw WorldInvalid("plan does not validate: " + violations.front().message);
        }
        plans_ = plans;
    }

    ScenarioResult run() {
        for (const auto& plan : plans_)
            send(Message::Kind::PlanSubmission, world_.requester, world_.entruster,
                 serialize(plan, wire_opts_));

        while (!queue_.empty()) {
            Message msg = queue_.front();
            queue_.pop_front();
            ++tick_;
            result_.messages.push_back(msg);
            deliver(msg);
        }

        result_.final_graph.merge(kb_);
        for (const auto& plan : plans_) result_.final_graph.merge(plan);
        for (auto& [root, progress] : progress_) {
            if (progress.entrusted) result_.final_graph.merge(progress.entrustment);
        }
        for (const auto& [root, g] : result_.linked) result_.final_graph.merge(g);
        result_.task_states = states_;
        return std::move(result_);
    }

private:
    void send(Message::Kind kind, const Iri& sender, const Iri& receiver, std::string fragment) {
        queue_.push_back(Message{kind, sender, receiver, std::move(fragment), next_seq_++});
    }

    void transition(const Iri& task, TaskState to, const std::string& cause) {
        std::optional<TaskState> from;
        auto it = states_.find(task);
        if (it != states_.end()) from = it->second;
        if (from && from->kind == TaskStateKind::Failed) return;  // failures are terminal
        if (!legal_transition(from, to))
            throw Error("illegal lifecycle transition for " + task.value);
        states_[task] = to;
        result_.events.push_back(LifecycleEvent{tick_, task, from, to, cause});
    }

    std::vector<Iri> plan_tasks(const Graph& plan) const {
        std::vector<Iri> out;
        for (const auto& bv : view_layer(plan, LayerTag::Planning))
            for (const auto& gv : bv.goals)
                for (const auto& tv : gv.tasks) out.push_back(tv.task);
        std::sort(out.begin(), out.end());
        return out;
    }

    const PerformerDef* performer_owning(const Iri& behaviour_task) const {
        for (const auto& p : world_.performers) {
            for (const auto& bv : view_layer(p.knowledge, LayerTag::Behaviour))
                for (const auto& gv : bv.goals)
                    for (const auto& tv : gv.tasks)
                        if (tv.task == behaviour_task) return &p;
        }
        return nullptr;
    }

    void deliver(const Message& msg) {
        switch (msg.kind) {
            case Message::Kind::PlanSubmission: on_plan_submission(msg); break;
            case Message::Kind::EntrustmentNotice: on_entrustment_notice(msg); break;
            case Message::Kind::ExecutionReport: on_execution_report(msg); break;
        }
    }

    void on_plan_submission(const Message& msg) {
        std::string cause = "msg:" + std::to_string(msg.seq);
        Graph plan = parse(msg.fragment, wire_opts_.oasis_ns);
        auto tasks = plan_tasks(plan);
        for (const auto& t : tasks) transition(t, {TaskStateKind::Submitted, {}}, cause);

        CandidateAssignment found = discover(plan, kb_);
        // the plan fragment may embed the behaviour it was targeted at; only
        // behaviours owned by a live performer are eligible
        for (auto& [task, candidates] : found.choices)
            std::erase_if(candidates, [&](const Candidate& c) {
                const PerformerDef* owner = performer_owning(c.task);
                return !owner || owner->agent != c.agent;
            });
        PlanProgress progress;
        progress.plan = plan;
        progress.root = found.plan;

        bool complete = true;
        for (const auto& t : tasks) {
            auto it = found.choices.find(t);
            if (it == found.choices.end() || it->second.empty()) {
                transition(t, TaskState::failed("NoCandidate"), "internal");
                complete = false;
                continue;
            }
            const Candidate& chosen = it->second.front();
            progress.assignment[t] = chosen.task;
            progress.task_performer[t] = chosen.agent;
            transition(t, {TaskStateKind::Matched, {}}, "internal");
        }
        if (!complete) {
            // a plan is entrusted as a whole; remaining tasks cannot proceed
            for (const auto& t : tasks)
                if (states_[t].kind == TaskStateKind::Matched)
                    transition(t, TaskState::failed("IncompletePlan"), "internal");
            return;
        }

        progress.entrustment = build_entrustment(plan, kb_, progress.assignment);
        progress.entrusted = true;
        std::set<Iri> performers;
        for (const auto& [t, agent] : progress.task_performer) performers.insert(agent);
        progress_[progress.root] = progress;
        for (const auto& agent : performers)
            send(Message::Kind::EntrustmentNotice, world_.entruster, agent,
                 serialize(progress_[progress.root].entrustment, wire_opts_));
    }

    void on_entrustment_notice(const Message& msg) {
        std::string cause = "msg:" + std::to_string(msg.seq);
        const PerformerDef* self = nullptr;
        for (const auto& p : world_.performers)
            if (p.agent == msg.receiver) self = &p;
        if (!self) return;

        Graph fragment = parse(msg.fragment, wire_opts_.oasis_ns);

        // my share of the assignment: entrustment task -> behaviour task I own
        std::map<Iri, Iri> my_assignment;  // plan task -> my behaviour task
        for (const auto& edge : fragment.edges(Property::TaskEntrustedFrom)) {
            const PerformerDef* owner = performer_owning(edge.object);
            if (!owner || owner->agent != self->agent) continue;
            auto plan_tasks_of = fragment.objects(edge.subject, Property::TaskEntrustedBy);
            if (plan_tasks_of.empty()) continue;
            my_assignment[plan_tasks_of.front()] = edge.object;
        }
        if (my_assignment.empty()) return;
        for (const auto& [p, b] : my_assignment)
            transition(p, {TaskStateKind::Entrusted, {}}, cause);

        Graph execution = record_execution(self->knowledge, self->agent, self->bindings,
                                           PlanLink{fragment, my_assignment});
        send(Message::Kind::ExecutionReport, self->agent, world_.entruster,
             serialize(execution, wire_opts_));
    }

    void on_execution_report(const Message& msg) {
        std::string cause = "msg:" + std::to_string(msg.seq);
        Graph execution = parse(msg.fragment, wire_opts_.oasis_ns);
        for (auto& [root, progress] : progress_) {
            if (!progress.entrusted) continue;
            std::vector<Iri> done;
            for (const auto& [p_task, agent] : progress.task_performer) {
                if (agent != msg.sender) continue;
                if (!execution.objects(p_task, Property::HasTaskExecution).empty())
                    done.push_back(p_task);
            }
            if (done.empty()) continue;
            Graph linked =
                link_entrustment_execution(progress.entrustment, execution, msg.sender);
            auto it = result_.linked.find(root);
            if (it == result_.linked.end()) {
                result_.linked[root] = linked;
            } else {
                it->second.merge(linked);
            }
            result_.entrustments[root] = progress.entrustment;
            for (const auto& t : done) transition(t, {TaskStateKind::Executed, {}}, cause);
        }
    }

    const World& world_;
    SerializeOptions wire_opts_;
    std::vector<Graph> plans_;
    Graph kb_;
    std::deque<Message> queue_;
    uint64_t next_seq_ = 1;
    uint64_t tick_ = 0;
    std::map<Iri, TaskState> states_;
    std::map<Iri, PlanProgress> progress_;
    ScenarioResult result_;
};

}  // namespace

ScenarioResult run_scenario(const World& world, const std::vector<Graph>& plans, uint64_t seed,
                            const SerializeOptions& wire_opts) {
    (void)seed;  // selection policy is fixed to lexicographic-first
    return Simulation(world, plans, wire_opts).run();
}

ProvenanceChain trace(const Graph& g, const Iri& execution_task) {
    const NodeInfo* info = g.node(execution_task);
    if (!info || !info->classes.count(ElementClass(CoreClass::TaskDescription)) ||
        !info->layers.count(LayerTag::Execution))
        throw NotAnExecution(execution_task.value + " is not an Execution-layer task");

    ProvenanceChain chain;
    chain.execution_task = execution_task;
    auto drawn = g.objects(execution_task, Property::TaskExecutionDrawnBy);
    if (drawn.empty()) throw BrokenChain("taskExecutionDrawnBy");
    chain.behaviour_task = drawn.front();

    auto tmpl = g.objects(chain.behaviour_task, Property::OverloadsTaskDescription);
    if (!tmpl.empty()) chain.template_task = tmpl.front();

    auto plan = g.subjects(Property::HasTaskExecution, execution_task);
    if (!plan.empty()) {
        chain.plan_task = plan.front();
        auto ent = g.subjects(Property::TaskEntrustedBy, *chain.plan_task);
        if (!ent.empty()) {
            chain.entrustment_task = ent.front();
            auto agents = g.objects(*chain.entrustment_task, Property::Entrusts);
            if (agents.empty()) throw BrokenChain("entrusts");
            chain.performer = agents.front();
        }
    }
    return chain;
}

}  // namespace oasis2
