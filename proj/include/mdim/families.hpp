#pragma once

#include "mdim/graph.hpp"
#include "mdim/vertex_set.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

// A generated graph together with the family tag and the parameters it was
// built from. Vertex labels live on the graph itself.
struct LabeledGraph {
    Graph graph;
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;
};

// Numbering used by the hypercube-code families:
//   ids 0..2^t-1   binary codes, id = code value, coordinate 1 is the most
//                  significant bit (leftmost label character);
//   ids 2^t..      apex vertices v_1..v_t, or v_{i,j} row-major by (i, j).
std::size_t code_bit(std::size_t t, std::size_t coordinate); // coordinate is 1-based
std::string code_label(std::size_t t, std::size_t code);

// Clique on the 2^t codes plus apexes v_i joined to the codes with 1 at coordinate i.
LabeledGraph gen_mt(std::size_t t);

// As gen_mt, with the apexes replaced by K_t □ K_k; v_{i,j} joined to the
// codes with 1 at coordinate i.
LabeledGraph gen_mtk(std::size_t t, std::size_t k);

LabeledGraph gen_complete_multipartite(const std::vector<std::size_t>& parts);

LabeledGraph gen_path(std::size_t n);

// Path on leaf_counts.size() spine vertices; spine vertex i gets
// leaf_counts[i] >= 2 pendant leaves.
LabeledGraph gen_spine_tree(const std::vector<std::size_t>& leaf_counts);

// Apexes of gen_mt(t) plus every even-weight code.
VertexSet parity_ft_set(std::size_t t);

// Apex block V_2 of gen_mt(t) / gen_mtk(t,k).
VertexSet apex_set(std::size_t t, std::size_t copies = 1);

} // namespace mdim
