#include "structmap/layout.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <vector>

namespace structmap {

namespace {

using layout_units::kBaseWidth;
using layout_units::kGutter;
using layout_units::kLabelOffsetX;
using layout_units::kLayerGap;
using layout_units::kLineHeight;
using layout_units::kMargin;
using layout_units::kNameHeight;
using layout_units::kPadding;
using layout_units::kWrapColumns;

std::vector<std::string> wrap_text(const std::string& text, int columns) {
    std::vector<std::string> lines;
    std::string word, line;
    auto flush_word = [&] {
        if (word.empty()) return;
        if (line.empty()) {
            line = word;
        } else if (static_cast<int>(line.size() + 1 + word.size()) <= columns) {
            line += ' ';
            line += word;
        } else {
            lines.push_back(line);
            line = "  " + word;  // continuation indent
        }
        word.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\t') {
            flush_word();
        } else {
            word.push_back(c);
        }
    }
    flush_word();
    if (!line.empty()) lines.push_back(line);
    return lines;
}

void append_category(std::vector<std::string>& lines, const char* header,
                     const std::vector<std::string>& items) {
    if (items.empty()) return;
    std::string text = header;
    text += ": ";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) text += "; ";
        text += items[i];
    }
    for (auto& line : wrap_text(text, kWrapColumns)) {
        lines.push_back(std::move(line));
    }
}

// Layered ordering state: layers[k] lists node indices, position[v] is the
// index of v within its layer.
struct Ordering {
    std::vector<std::vector<int>> layers;
    std::vector<int> position;

    void refresh_positions() {
        for (const auto& layer : layers) {
            for (std::size_t i = 0; i < layer.size(); ++i) {
                position[layer[i]] = static_cast<int>(i);
            }
        }
    }
};

long count_crossings(const ResolvedGraph& graph, const Ordering& ordering) {
    long total = 0;
    const auto& level_of = [&](int v) { return graph.nodes[v].level; };
    // Only edges between adjacent layers take part in the ordering metric;
    // longer edges are drawn straight through and are not optimized.
    std::vector<std::pair<int, int>> spans;
    for (std::size_t k = 0; k + 1 < ordering.layers.size(); ++k) {
        spans.clear();
        for (const auto& e : graph.edges) {
            if (level_of(e.from) == static_cast<int>(k) &&
                level_of(e.to) == static_cast<int>(k) + 1) {
                spans.emplace_back(ordering.position[e.from], ordering.position[e.to]);
            }
        }
        for (std::size_t i = 0; i < spans.size(); ++i) {
            for (std::size_t j = i + 1; j < spans.size(); ++j) {
                bool crossed = (spans[i].first < spans[j].first &&
                                spans[i].second > spans[j].second) ||
                               (spans[i].first > spans[j].first &&
                                spans[i].second < spans[j].second);
                if (crossed) ++total;
            }
        }
    }
    return total;
}

// One barycenter pass. Down sweeps reorder each layer by the mean position
// of neighbors in the layer above; up sweeps use the layer below. Nodes
// without neighbors in the reference layer keep their current position as
// their barycenter. Ties break lexicographically, then by node index.
void barycenter_sweep(const ResolvedGraph& graph, Ordering& ordering, bool down) {
    const int layer_count = static_cast<int>(ordering.layers.size());
    std::vector<std::vector<int>> up_neighbors(graph.nodes.size());
    std::vector<std::vector<int>> down_neighbors(graph.nodes.size());
    for (const auto& e : graph.edges) {
        if (graph.nodes[e.to].level == graph.nodes[e.from].level + 1) {
            up_neighbors[e.to].push_back(e.from);
            down_neighbors[e.from].push_back(e.to);
        }
    }

    auto reorder = [&](int k, const std::vector<std::vector<int>>& neighbors) {
        auto& layer = ordering.layers[k];
        std::vector<std::pair<double, int>> keyed;
        keyed.reserve(layer.size());
        for (int v : layer) {
            double bary = ordering.position[v];
            if (!neighbors[v].empty()) {
                double sum = 0;
                for (int u : neighbors[v]) sum += ordering.position[u];
                bary = sum / static_cast<double>(neighbors[v].size());
            }
            keyed.emplace_back(bary, v);
        }
        std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            const auto& na = graph.nodes[a.second].structure.name;
            const auto& nb = graph.nodes[b.second].structure.name;
            if (na != nb) return na < nb;
            return a.second < b.second;
        });
        for (std::size_t i = 0; i < keyed.size(); ++i) layer[i] = keyed[i].second;
        ordering.refresh_positions();
    };

    if (down) {
        for (int k = 1; k < layer_count; ++k) reorder(k, up_neighbors);
    } else {
        for (int k = layer_count - 2; k >= 0; --k) reorder(k, down_neighbors);
    }
}

}  // namespace

double size_scale_for_level(int level) {
    return std::max(std::pow(0.85, level), 0.5);
}

void size_nodes(ResolvedGraph& graph) {
    for (auto& node : graph.nodes) {
        node.size_scale = size_scale_for_level(node.level);
    }
}

std::vector<std::string> node_body_lines(const StructureDef& structure) {
    std::vector<std::string> lines;
    std::vector<std::string> type_names;
    type_names.reserve(structure.types.size());
    for (const auto& ref : structure.types) type_names.push_back(ref.target);
    append_category(lines, "Types", type_names);
    append_category(lines, "Functions", structure.functions);
    append_category(lines, "Relations", structure.relations);
    append_category(lines, "Properties", structure.properties);
    return lines;
}

RenderPlan layout(const ResolvedGraph& graph, const LayoutOptions& options) {
    RenderPlan plan;
    const int n = static_cast<int>(graph.nodes.size());
    if (n == 0) return plan;

    int max_level = 0;
    for (const auto& node : graph.nodes) max_level = std::max(max_level, node.level);

    Ordering ordering;
    ordering.layers.resize(max_level + 1);
    ordering.position.resize(n, 0);
    for (int v = 0; v < n; ++v) ordering.layers[graph.nodes[v].level].push_back(v);
    for (auto& layer : ordering.layers) {
        std::sort(layer.begin(), layer.end(), [&](int a, int b) {
            const auto& na = graph.nodes[a].structure.name;
            const auto& nb = graph.nodes[b].structure.name;
            if (na != nb) return na < nb;
            return a < b;
        });
    }
    ordering.refresh_positions();

    // 4 alternating down/up sweeps; a sweep is kept only when it does not
    // increase the crossing count of the accepted ordering.
    long best = count_crossings(graph, ordering);
    for (int sweep = 0; sweep < 4; ++sweep) {
        Ordering candidate = ordering;
        barycenter_sweep(graph, candidate, sweep % 2 == 0);
        long crossings = count_crossings(graph, candidate);
        if (crossings <= best) {
            ordering = std::move(candidate);
            best = crossings;
        }
    }

    // Box geometry.
    std::vector<std::vector<std::string>> bodies(n);
    std::vector<double> width(n), height(n);
    for (int v = 0; v < n; ++v) {
        const auto& node = graph.nodes[v];
        if (options.include_body) bodies[v] = node_body_lines(node.structure);
        double base_height = 2 * kPadding + kNameHeight +
                             kLineHeight * static_cast<double>(bodies[v].size());
        width[v] = kBaseWidth * node.size_scale;
        height[v] = base_height * node.size_scale;
    }

    // Layer bands: widest layer centers the rest; a fixed gutter separates
    // boxes; every box is vertically centered within its band.
    std::vector<double> layer_width(ordering.layers.size(), 0);
    std::vector<double> band_height(ordering.layers.size(), 0);
    double max_layer_width = 0;
    for (std::size_t k = 0; k < ordering.layers.size(); ++k) {
        const auto& layer = ordering.layers[k];
        double w = 0;
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (i > 0) w += kGutter;
            w += width[layer[i]];
            band_height[k] = std::max(band_height[k], height[layer[i]]);
        }
        layer_width[k] = w;
        max_layer_width = std::max(max_layer_width, w);
    }
    plan.width = max_layer_width + 2 * kMargin;

    plan.node_boxes.resize(n);
    double y = kMargin;
    for (std::size_t k = 0; k < ordering.layers.size(); ++k) {
        const auto& layer = ordering.layers[k];
        double x = (plan.width - layer_width[k]) / 2;
        for (int v : layer) {
            NodeBox box;
            box.node = v;
            box.width = width[v];
            box.height = height[v];
            box.cx = x + width[v] / 2;
            box.cy = y + band_height[k] / 2;
            box.fill_stops = graph.nodes[v].fill_stops;
            box.name = graph.nodes[v].structure.name;
            box.wikipedia = graph.nodes[v].structure.wikipedia;
            box.body_lines = bodies[v];
            box.focal = v == options.focal_node;
            plan.node_boxes[v] = std::move(box);
            x += width[v] + kGutter;
        }
        y += band_height[k] + kLayerGap;
    }
    plan.height = y - kLayerGap + kMargin;

    plan.edge_paths.reserve(graph.edges.size());
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const auto& e = graph.edges[i];
        const auto& src = plan.node_boxes[e.from];
        const auto& dst = plan.node_boxes[e.to];
        EdgePath path;
        path.edge = static_cast<int>(i);
        path.from_node = e.from;
        path.to_node = e.to;
        path.source = {src.cx, src.cy + src.height / 2};
        path.target = {dst.cx, dst.cy - dst.height / 2};
        path.label = e.label;
        path.label_pos = {(path.source.x + path.target.x) / 2 + kLabelOffsetX,
                          (path.source.y + path.target.y) / 2};
        plan.edge_paths.push_back(std::move(path));
    }
    return plan;
}

}  // namespace structmap
