#pragma once

#include <optional>
#include <string>
#include <vector>

#include "structmap/resolve.hpp"

namespace structmap {

/// Abstract layout units; emitters treat one unit as 1 pt.
namespace layout_units {
inline constexpr double kBaseWidth = 220.0;
inline constexpr double kPadding = 8.0;
inline constexpr double kNameHeight = 16.0;
inline constexpr double kLineHeight = 11.0;
inline constexpr double kGutter = 0.25 * kBaseWidth;  // min gap between boxes in a layer
inline constexpr double kLayerGap = 70.0;
inline constexpr double kMargin = 24.0;
inline constexpr double kLabelOffsetX = 5.0;
inline constexpr int kWrapColumns = 46;
}  // namespace layout_units

struct Point {
    double x = 0;
    double y = 0;
};

/// Placed node box. cy grows downward; level-0 boxes sit topmost.
struct NodeBox {
    int node = 0;  // index into the laid-out graph's node list
    double cx = 0;
    double cy = 0;
    double width = 0;
    double height = 0;
    std::vector<RgbColor> fill_stops;
    std::string name;
    std::string wikipedia;
    std::vector<std::string> body_lines;
    bool focal = false;
};

/// Routed edge: straight segment from the bottom edge of the source box to
/// the top edge of the target box. waypoints is empty for straight edges.
struct EdgePath {
    int edge = 0;
    int from_node = 0;
    int to_node = 0;
    Point source;
    Point target;
    std::vector<Point> waypoints;
    std::optional<std::string> label;
    Point label_pos;  // segment midpoint, offset to the right
};

struct RenderPlan {
    double width = 0;
    double height = 0;
    std::vector<NodeBox> node_boxes;  // graph node order
    std::vector<EdgePath> edge_paths;  // graph edge order
};

struct LayoutOptions {
    bool include_body = true;  // false: name-only outline boxes
    int focal_node = -1;       // marks one box (neighborhood queries)
};

/// Fills NodeInfo::size_scale = max(0.85^level, 0.5). Levels must be
/// computed first.
void size_nodes(ResolvedGraph& graph);

double size_scale_for_level(int level);

/// The category text rendered inside a node, prefixed with category headers
/// and wrapped to the layout column width.
std::vector<std::string> node_body_lines(const StructureDef& structure);

/// Deterministic layered layout: nodes grouped into horizontal layers by
/// level, within-layer order chosen by 4 alternating down/up barycenter
/// sweeps seeded by lexicographic name order (a sweep is kept only if it
/// does not increase crossings), layers centered with a fixed gutter.
/// An empty graph yields an empty plan with a zero-size canvas.
RenderPlan layout(const ResolvedGraph& graph, const LayoutOptions& options = {});

}  // namespace structmap
