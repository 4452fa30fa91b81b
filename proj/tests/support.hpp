#pragma once

// Shared corpus graphs for the test suites. These mirror the files shipped
// under corpus/; tests build them from source text so they exercise the
// parser as well.

#include <string>

#include "leavitt/graph.hpp"

namespace testsupport {

inline const char* kPt = "vertex u\n";

inline const char* kLoop =
    "vertex u\n"
    "edge c u u\n";

inline const char* kToep =
    "vertex u\n"
    "vertex w\n"
    "edge c u u\n"
    "edge f u w\n";

inline const char* kTwoChain =
    "vertex u\n"
    "vertex v\n"
    "edge a u u\n"
    "edge g u v\n"
    "edge b v v\n";

inline const char* kTwoCycle =
    "vertex u\n"
    "vertex v\n"
    "edge e1 u v\n"
    "edge e2 v u\n";

inline const char* kSinkFan =
    "vertex v\n"
    "vertex w1\n"
    "vertex w2\n"
    "edge e1 v w1\n"
    "edge e2 v w2\n"
    "edge f w2 w2\n";

inline const char* kBalloon =
    "vertex u\n"
    "vertex v\n"
    "edge p u u\n"
    "edge q u u\n"
    "edge C v v\n"
    "edge g v u\n";

inline const char* kComet3 =
    "vertex v1\n"
    "vertex v2\n"
    "vertex v3\n"
    "vertex t\n"
    "edge e1 v1 v2\n"
    "edge e2 v2 v3\n"
    "edge e3 v3 v1\n"
    "edge t1 t v1\n";

inline const char* kTwoSink =
    "vertex v\n"
    "vertex w1\n"
    "vertex w2\n"
    "edge e1 v w1\n"
    "edge e2 v w2\n";

inline const char* kTwoLoops =
    "vertex u1\n"
    "vertex u2\n"
    "edge c1 u1 u1\n"
    "edge c2 u2 u2\n";

inline const char* kPtPlusLoop =
    "vertex u\n"
    "vertex w\n"
    "edge c u u\n";

inline leavitt::Graph pt() { return leavitt::parse_graph(kPt); }
inline leavitt::Graph loop() { return leavitt::parse_graph(kLoop); }
inline leavitt::Graph toep() { return leavitt::parse_graph(kToep); }
inline leavitt::Graph two_chain() { return leavitt::parse_graph(kTwoChain); }
inline leavitt::Graph two_cycle() { return leavitt::parse_graph(kTwoCycle); }
inline leavitt::Graph sink_fan() { return leavitt::parse_graph(kSinkFan); }
inline leavitt::Graph balloon() { return leavitt::parse_graph(kBalloon); }
inline leavitt::Graph comet3() { return leavitt::parse_graph(kComet3); }
inline leavitt::Graph two_sink() { return leavitt::parse_graph(kTwoSink); }
inline leavitt::Graph two_loops() { return leavitt::parse_graph(kTwoLoops); }
inline leavitt::Graph pt_plus_loop() { return leavitt::parse_graph(kPtPlusLoop); }

// u with n parallel loops p1..pn.
inline leavitt::Graph rose(int n) {
    std::string text = "vertex u\n";
    for (int i = 1; i <= n; ++i) text += "edge p" + std::to_string(i) + " u u\n";
    return leavitt::parse_graph(text);
}

inline leavitt::VertexSet set_of(const leavitt::Graph& g, std::initializer_list<const char*> ids) {
    leavitt::VertexSet s(g.order());
    for (const char* id : ids) s.add(g.require_vertex(id));
    return s;
}

}  // namespace testsupport
