#include "tsgen/big.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tsgen {

int intersection_size(const Block& a, const Block& b) {
    int count = 0;
    for (Point p : a)
        if (block_contains(b, p)) ++count;
    return count;
}

BigGraph build_kbig(const std::vector<Block>& blocks, int k) {
    if (k < 0 || k > 2) throw InvalidParams("build_kbig: k must be 0, 1 or 2");
    std::set<Block> seen;
    for (const Block& b : blocks)
        if (!seen.insert(b).second)
            throw DuplicateBlocks("build_kbig: duplicate block " + point_name(b[0]) +
                                  " " + point_name(b[1]) + " " + point_name(b[2]));

    BigGraph graph;
    graph.k = k;
    graph.blocks = blocks;
    int n = static_cast<int>(blocks.size());
    graph.adj.assign(n, {});
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (intersection_size(blocks[i], blocks[j]) == k) {
                graph.edges.emplace_back(i, j);
                graph.adj[i].push_back(j);
                graph.adj[j].push_back(i);
            }
        }
    }
    return graph;
}

std::string render_dot(const std::string& name,
                       const std::vector<std::string>& node_labels,
                       const std::vector<std::pair<int, int>>& edges,
                       bool directed) {
    std::ostringstream out;
    out << (directed ? "digraph " : "graph ") << name << " {\n";
    for (std::size_t i = 0; i < node_labels.size(); ++i)
        out << "  n" << i << " [label=\"" << node_labels[i] << "\"];\n";
    const char* sep = directed ? " -> " : " -- ";
    for (const auto& [a, b] : edges)
        out << "  n" << a << sep << "n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_dot(const BigGraph& graph, const std::string& name) {
    std::vector<std::string> labels;
    labels.reserve(graph.blocks.size());
    for (const Block& b : graph.blocks)
        labels.push_back(point_name(b[0]) + " " + point_name(b[1]) + " " +
                         point_name(b[2]));
    return render_dot(name, labels, graph.edges, false);
}

} // namespace tsgen
