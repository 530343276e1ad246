#pragma once

#include <iosfwd>
#include <string>

#include "locgame/design.hpp"
#include "locgame/graph.hpp"
#include "locgame/game.hpp"
#include "locgame/solver.hpp"
#include "locgame/strategies.hpp"

namespace locgame {

inline constexpr const char* kFormatLine = "# locgame-format 1";

/// Block-list design file: "v b" then one block per line. An alternative
/// column layout is accepted on input: a "#cols" directive followed by k
/// label rows, one column per block; labels map to point indices in order of
/// first appearance (row-major). Rows that are single unseparated strings of
/// equal length are split into one-character labels.
void write_design(std::ostream& os, const Design& d);
Design read_design(std::istream& is);

/// Adjacency-list graph file: "graph n" then per vertex "id side neighbors".
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

/// Reads either a design file or a graph file and returns the graph (the
/// incidence graph in the design case).
Graph read_graph_or_design(std::istream& is, std::string* kind = nullptr);

void write_transcript(std::ostream& os, const GameTranscript& t);
GameTranscript read_transcript(std::istream& is);

void write_certificate(std::ostream& os, const Certificate& c);
Certificate read_certificate(std::istream& is);

std::string render_bounds_text(const BoundReport& report);
std::string render_bounds_json(const BoundReport& report);

std::string render_solve_text(const SolveResult& r);
std::string render_solve_json(const SolveResult& r);

}  // namespace locgame
