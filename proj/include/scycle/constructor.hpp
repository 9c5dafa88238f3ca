#pragma once

#include "scycle/subdivision.hpp"

#include <string>
#include <variant>
#include <vector>

namespace scycle {

enum class Mode { strict, fallback };

struct TraceStep {
    std::string step;
    std::string pattern;
    std::vector<VertexId> t;
    std::string result;  // upgrade | hit | pack | violation
};

using Trace = std::vector<TraceStep>;

std::string format_step(const RootedGraph& g, const TraceStep& s);
std::vector<std::string> format_trace(const RootedGraph& g, const Trace& trace);

using StageResult = std::variant<Certificate, SubdivisionModel>;

StageResult build_base(const RootedGraph& g, Trace* trace = nullptr);
StageResult upgrade_k4(const RootedGraph& g, const SubdivisionModel& w, Trace* trace = nullptr);
StageResult upgrade_w4(const RootedGraph& g, const SubdivisionModel& w, Trace* trace = nullptr);

Certificate terminal_k3ppp(const RootedGraph& g, const SubdivisionModel& w, Trace* trace = nullptr);
Certificate terminal_k4pp(const RootedGraph& g, const SubdivisionModel& w, Trace* trace = nullptr);
StageResult terminal_k4ppp(const RootedGraph& g, const SubdivisionModel& w, Trace* trace = nullptr);
StageResult terminal_w4p(const RootedGraph& g, const SubdivisionModel& w, Trace* trace = nullptr);
Certificate terminal_w4star(const RootedGraph& g, const SubdivisionModel& w, Trace* trace = nullptr);
Certificate terminal_w5(const RootedGraph& g, const SubdivisionModel& w, Trace* trace = nullptr);
Certificate terminal_k33p(const RootedGraph& g, const SubdivisionModel& w, Trace* trace = nullptr);

// the hitting set each terminal tries, before verification
std::vector<VertexId> recipe_k4pp(const RootedGraph& g, const SubdivisionModel& w);
std::vector<VertexId> recipe_w4p(const RootedGraph& g, const SubdivisionModel& w);
std::vector<VertexId> recipe_w5(const RootedGraph& g, const SubdivisionModel& w);
std::vector<VertexId> recipe_k33p(const RootedGraph& g, const SubdivisionModel& w);

struct Hit4Result {
    Certificate certificate;
    Trace trace;
    PatternKind terminal = PatternKind::loop1;  // last model reached
    bool used_oracle = false;
};

// Strict mode throws StructureViolation where the case analysis has no answer;
// fallback mode then asks the exact oracles, and also replaces a hitting set by a
// disjoint pair whenever one exists.
Hit4Result hit4(const RootedGraph& g, Mode mode = Mode::fallback);

}  // namespace scycle
