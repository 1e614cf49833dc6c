#ifndef MCS_IO_HPP
#define MCS_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "mcs/brute_force.hpp"
#include "mcs/colored_graph.hpp"
#include "mcs/reductions.hpp"

namespace mcs {

// Instance file: {"colors":[int,...],"edges":[[int,int],...]}
ColoredGraph parse_instance(const std::string& path);
void write_instance(const std::string& path, const ColoredGraph& g);

// Subset file: {"subset":[int,...]}
VertexSubset parse_subset(const std::string& path);
void write_subset(const std::string& path, const VertexSubset& s);

// Interval file: {"intervals":[{"lo":int,"hi":int,"color":int},...]}
IntervalFamily parse_intervals(const std::string& path);
void write_intervals(const std::string& path, const IntervalFamily& f);

// DIMACS CNF, two literals per clause.
Max2SatInstance parse_dimacs_2cnf(const std::string& path);

// Edge-list file: {"n":int (optional),"edges":[[int,int],...]}
std::pair<int, std::vector<std::pair<int, int>>> parse_edge_list(const std::string& path);

std::string solve_result_to_json(const SolveResult& r, const std::string& algorithm);
void write_solve_result(const std::string& path, const SolveResult& r,
                        const std::string& algorithm);

void write_tree_roles(const std::string& path, const TreeReductionArtifact& art);
void write_interval_roles(const std::string& path, const IntervalReductionArtifact& art);

} // namespace mcs

#endif
