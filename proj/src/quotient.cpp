#include "warpspace/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "warpspace/metric_core.hpp"
#include "warpspace/util.hpp"

namespace warpspace {

namespace {

double apply_map_axis(const MapDescriptor& f, const ChartAxis& dom,
                      const ChartAxis& cod, double x) {
    switch (f.kind) {
        case MapDescriptor::Kind::Affine:
            return f.a * x + f.b;
        case MapDescriptor::Kind::CircleCover: {
            if (dom.kind != ChartAxis::Kind::Circle || cod.kind != ChartAxis::Kind::Circle)
                throw SchemaError("identifications.map", "circle cover needs circle axes");
            if (std::fabs(dom.circumference - cod.circumference) > 1e-12)
                throw SchemaError("identifications.map",
                                  "circle cover needs matching coordinate ranges");
            return wrap_coord(static_cast<double>(f.k) * x, cod.circumference);
        }
        case MapDescriptor::Kind::ScaledIdentity:
            return x;
    }
    return x;
}

struct ResolvedChart {
    int piece = -1;
    const ChartPlan* plan = nullptr;
    std::optional<int> fix_axis;
    double value = 0.0;
    std::optional<MapDescriptor> map;
    std::vector<int> param_axes;
};

ResolvedChart resolve_chart(const ChartRef& ref, int piece_idx, const ChartPlan& plan) {
    ResolvedChart ch;
    ch.piece = piece_idx;
    ch.plan = &plan;
    ch.fix_axis = ref.fix_axis;
    ch.value = ref.value;
    ch.map = ref.map;
    if (ch.fix_axis && (*ch.fix_axis < 0 || *ch.fix_axis >= static_cast<int>(plan.dim())))
        throw SchemaError("identifications.fix_axis", "axis out of range");
    for (int i = 0; i < static_cast<int>(plan.dim()); ++i)
        if (!ch.fix_axis || i != *ch.fix_axis) ch.param_axes.push_back(i);
    return ch;
}

// Fills a full piece coordinate vector from chart parameters. `src` supplies
// the parameter axis types when a map must be applied to the leading slot.
std::vector<double> chart_point(const ResolvedChart& ch, const ResolvedChart& src,
                                const std::vector<double>& params) {
    std::vector<double> x(ch.plan->dim(), 0.0);
    if (ch.fix_axis) x[*ch.fix_axis] = ch.value;
    for (std::size_t i = 0; i < ch.param_axes.size(); ++i) {
        double v = params[i];
        if (i == 0 && ch.map)
            v = apply_map_axis(*ch.map, src.plan->axes()[src.param_axes[0]],
                               ch.plan->axes()[ch.param_axes[0]], v);
        x[ch.param_axes[i]] = v;
    }
    return x;
}

} // namespace

QuotientVariant as_quotient(const SpaceDescriptor& space) {
    if (auto* q = space.as<QuotientVariant>()) return *q;
    if (auto* cyl = space.as<CylinderVariant>()) {
        QuotientVariant q;
        q.pieces.push_back({"dom", cyl->dom_piece, {}});
        q.pieces.push_back({"cod", cyl->cod_piece, {}});
        ChartPlan dplan(cyl->dom_piece);
        ChartPlan cplan(cyl->cod_piece);
        Identification seam;
        seam.source = {"dom", static_cast<int>(dplan.dim()) - 1, 0.5, std::nullopt};
        seam.target = {"cod", static_cast<int>(cplan.dim()) - 1, 1.5, cyl->cert.map};
        seam.pairing = {Pairing::Kind::Identity, ""};
        q.identifications.push_back(std::move(seam));
        q.marks.emplace_back("X_0", ChartRef{"dom", static_cast<int>(dplan.dim()) - 1, 0.0,
                                             std::nullopt});
        q.marks.emplace_back("Y_1", ChartRef{"cod", static_cast<int>(cplan.dim()) - 1, 2.0,
                                             std::nullopt});
        return q;
    }
    throw NonPrimitiveSpace("space has no quotient form");
}

std::vector<std::pair<PointCoord, PointCoord>> sample_identification(
    const std::vector<QuotientPiece>& pieces, const Identification& ident,
    double step) {
    int src_idx = -1, tgt_idx = -1;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].id == ident.source.piece) src_idx = static_cast<int>(i);
        if (pieces[i].id == ident.target.piece) tgt_idx = static_cast<int>(i);
    }
    if (src_idx < 0) throw SchemaError("identifications.source.piece", "unknown piece");
    if (tgt_idx < 0) throw SchemaError("identifications.target.piece", "unknown piece");
    if (ident.source.map)
        throw SchemaError("identifications.source.map",
                          "maps belong on the target chart");

    ChartPlan src_plan(pieces[src_idx].space);
    ChartPlan tgt_plan(pieces[tgt_idx].space);
    ResolvedChart src = resolve_chart(ident.source, src_idx, src_plan);
    ResolvedChart tgt = resolve_chart(ident.target, tgt_idx, tgt_plan);
    if (src.param_axes.size() != tgt.param_axes.size())
        throw SchemaError("identifications", "chart parameter arities differ");

    auto src_window = src_plan.resolve_window(pieces[src_idx].window);
    auto tgt_window = tgt_plan.resolve_window(pieces[tgt_idx].window);
    auto src_cost = src_plan.axis_cost_upper(src_window);

    // Which parameter slot the pairing shifts.
    int shift_slot = -1;
    if (ident.pairing.kind == Pairing::Kind::Shift) {
        for (std::size_t i = 0; i < src.param_axes.size(); ++i) {
            const ChartAxis& ax = src_plan.axes()[src.param_axes[i]];
            if (ax.is_fiber && ax.fiber_edge == ident.pairing.edge)
                shift_slot = static_cast<int>(i);
        }
        if (shift_slot < 0)
            throw SchemaError("identifications.pairing.edge",
                              "no fiber axis for edge '" + ident.pairing.edge + "'");
    }

    // Per-slot sample coordinates, clipped so both endpoints stay inside
    // their windows.
    struct Slot {
        std::vector<double> values;
        bool cyclic = false;
    };
    std::vector<Slot> slots(src.param_axes.size());
    for (std::size_t i = 0; i < src.param_axes.size(); ++i) {
        const ChartAxis& sax = src_plan.axes()[src.param_axes[i]];
        const ChartAxis& tax = tgt_plan.axes()[tgt.param_axes[i]];
        AxisRange range = src_window[src.param_axes[i]];
        bool mapped = (i == 0 && tgt.map);
        if (!mapped) {
            double shift = (static_cast<int>(i) == shift_slot) ? 1.0 : 0.0;
            const AxisRange& tw = tgt_window[tgt.param_axes[i]];
            if (tax.kind != ChartAxis::Kind::Circle) {
                range.lo = std::max(range.lo, tw.lo - shift);
                range.hi = std::min(range.hi, tw.hi - shift);
            }
        } else if (tgt.map->kind == MapDescriptor::Kind::Affine) {
            const AxisRange& tw = tgt_window[tgt.param_axes[i]];
            double lo = (tw.lo - tgt.map->b) / tgt.map->a;
            double hi = (tw.hi - tgt.map->b) / tgt.map->a;
            if (lo > hi) std::swap(lo, hi);
            range.lo = std::max(range.lo, lo);
            range.hi = std::min(range.hi, hi);
        }
        if (range.lo > range.hi + 1e-12)
            throw SchemaError("identifications", "chart lies outside the sampling window");

        double cost = std::max(src_cost[src.param_axes[i]], 1e-12);
        if (sax.kind == ChartAxis::Kind::Circle &&
            std::fabs(range.hi - range.lo - sax.circumference) < 1e-12) {
            std::size_t n = std::max<std::size_t>(
                1, static_cast<std::size_t>(
                       std::ceil(sax.circumference * cost / step - 1e-9)));
            for (std::size_t j = 0; j < n; ++j)
                slots[i].values.push_back(range.lo + sax.circumference *
                                                         static_cast<double>(j) /
                                                         static_cast<double>(n));
            slots[i].cyclic = true;
        } else {
            double len = range.hi - range.lo;
            std::size_t n = len <= 1e-15
                                ? 1
                                : static_cast<std::size_t>(
                                      std::ceil(len * cost / step - 1e-9)) + 1;
            for (std::size_t j = 0; j < n; ++j)
                slots[i].values.push_back(
                    n == 1 ? range.lo
                           : range.lo + len * static_cast<double>(j) /
                                            static_cast<double>(n - 1));
        }
    }

    std::vector<std::pair<PointCoord, PointCoord>> out;
    std::vector<std::size_t> idx(slots.size(), 0);
    std::vector<double> params(slots.size());
    while (true) {
        for (std::size_t i = 0; i < slots.size(); ++i) params[i] = slots[i].values[idx[i]];
        std::vector<double> tparams = params;
        if (shift_slot >= 0) tparams[shift_slot] += 1.0;
        std::vector<double> sx = chart_point(src, src, params);
        std::vector<double> tx = chart_point(tgt, src, tparams);
        out.emplace_back(PointCoord{pieces[src_idx].id, src_plan.unflatten(sx)},
                         PointCoord{pieces[tgt_idx].id, tgt_plan.unflatten(tx)});
        // odometer
        std::size_t k = 0;
        while (k < slots.size() && ++idx[k] == slots[k].values.size()) idx[k++] = 0;
        if (k == slots.size()) break;
        if (slots.empty()) break;
    }
    if (slots.empty() && out.empty()) {
        std::vector<double> sx = chart_point(src, src, {});
        std::vector<double> tx = chart_point(tgt, src, {});
        out.emplace_back(PointCoord{pieces[src_idx].id, src_plan.unflatten(sx)},
                         PointCoord{pieces[tgt_idx].id, tgt_plan.unflatten(tx)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// NetGraph
// ---------------------------------------------------------------------------

int NetGraph::piece_index(const std::string& id) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        if (pieces_[i].id == id) return static_cast<int>(i);
    throw ShapeMismatch("unknown piece '" + id + "'");
}

PointCoord NetGraph::point_of(int node) const {
    const NetNode& n = nodes_[node];
    return PointCoord{pieces_[n.piece].id, plans_[n.piece]->unflatten(n.x)};
}

int NetGraph::find_node(int piece, const std::vector<double>& x, double tol) const {
    for (int i : piece_nodes_[piece]) {
        const auto& y = nodes_[i].x;
        bool same = true;
        for (std::size_t a = 0; a < x.size(); ++a)
            if (std::fabs(x[a] - y[a]) > tol) { same = false; break; }
        if (same) return i;
    }
    return -1;
}

int NetGraph::add_node(NetNode n) {
    int id = static_cast<int>(nodes_.size());
    piece_nodes_[n.piece].push_back(id);
    nodes_.push_back(std::move(n));
    adj_.emplace_back();
    return id;
}

double NetGraph::edge_weight(int piece, const double* a, const double* b) const {
    const ChartPlan& plan = *plans_[piece];
    if (!plan.has_warp()) return plan.chord(a, b);
    return segment_length(plan, a, b, cfg_.weight_tol);
}

void NetGraph::connect_within_piece(int node) {
    const NetNode& n = nodes_[node];
    const ChartPlan& plan = *plans_[n.piece];
    double radius = cfg_.edge_radius_factor * epsilon;
    for (int other : piece_nodes_[n.piece]) {
        if (other == node) continue;
        double chord = plan.chord(nodes_[other].x.data(), n.x.data());
        if (chord <= radius + 1e-12) {
            double w = edge_weight(n.piece, nodes_[other].x.data(), n.x.data());
            adj_[node].emplace_back(other, w);
            adj_[other].emplace_back(node, w);
        }
    }
}

int NetGraph::insert_point(const PointCoord& p) {
    int piece = piece_index(p.piece);
    std::vector<double> x = plans_[piece]->flatten(p.value);
    int existing = find_node(piece, x);
    if (existing >= 0) return existing;
    int id = add_node({piece, std::move(x), NetNode::Origin::Query});
    connect_within_piece(id);
    return id;
}

double NetGraph::distance(int from, int to) const {
    return from == to ? 0.0 : shortest_path(from, to), dist_cache_;
}

std::vector<int> NetGraph::shortest_path(int from, int to) const {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(nodes_.size(), inf);
    std::vector<int> prev(nodes_.size(), -1);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    dist[from] = 0.0;
    pq.push({0.0, from});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        if (u == to) break;
        for (const auto& [v, w] : adj_[u]) {
            if (dist[u] + w < dist[v]) {
                dist[v] = dist[u] + w;
                prev[v] = u;
                pq.push({dist[v], v});
            }
        }
    }
    if (dist[to] == inf) throw DisconnectedError("no path between query points in the net");
    dist_cache_ = dist[to];
    std::vector<int> path;
    for (int v = to; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

NetGraph::Query NetGraph::query(const PointCoord& p, const PointCoord& q) {
    int a = insert_point(p);
    int b = insert_point(q);
    Query out;
    out.epsilon = epsilon;
    if (a == b) {
        out.dist = 0.0;
        out.path = {point_of(a)};
        return out;
    }
    std::vector<int> nodes = shortest_path(a, b);
    out.dist = dist_cache_;
    for (int n : nodes) out.path.push_back(point_of(n));
    return out;
}

double quotient_distance(const NetGraph& net, int p, int q) {
    return net.distance(p, q);
}

NetGraph build_net(const std::vector<QuotientPiece>& pieces,
                   const std::vector<Identification>& identifications,
                   double epsilon, const NetConfig& cfg) {
    if (!(epsilon > 0.0)) throw SchemaError("net.epsilon", "must be positive");
    NetGraph net;
    net.epsilon = epsilon;
    net.cfg_ = cfg;
    net.cfg_.epsilon = epsilon;
    net.pieces_ = pieces;
    net.piece_nodes_.resize(pieces.size());

    struct AxisSamples {
        std::vector<double> values;
        bool cyclic = false;
        double spacing = 0.0;
    };

    std::size_t total_nodes = 0;
    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        auto plan = std::make_shared<ChartPlan>(pieces[pi].space);
        auto window = plan->resolve_window(pieces[pi].window);
        net.plans_.push_back(plan);
        net.windows_.push_back(window);

        auto cost_ub = plan->axis_cost_upper(window);
        std::vector<AxisSamples> axes(plan->dim());
        std::size_t count = 1;
        for (std::size_t a = 0; a < plan->dim(); ++a) {
            const ChartAxis& ax = plan->axes()[a];
            const AxisRange& r = window[a];
            double cost = std::max(cost_ub[a], 1e-12);
            if (ax.kind == ChartAxis::Kind::Circle &&
                std::fabs(r.hi - r.lo - ax.circumference) < 1e-12) {
                std::size_t n = std::max<std::size_t>(
                    1, static_cast<std::size_t>(
                           std::ceil(ax.circumference * cost / epsilon - 1e-9)));
                axes[a].cyclic = true;
                axes[a].spacing = ax.circumference / static_cast<double>(n);
                for (std::size_t j = 0; j < n; ++j)
                    axes[a].values.push_back(wrap_coord(
                        r.lo + axes[a].spacing * static_cast<double>(j), ax.circumference));
            } else {
                double len = r.hi - r.lo;
                std::size_t n =
                    len <= 1e-15 ? 1 : static_cast<std::size_t>(
                                           std::ceil(len * cost / epsilon - 1e-9)) + 1;
                axes[a].spacing = n <= 1 ? 0.0 : len / static_cast<double>(n - 1);
                for (std::size_t j = 0; j < n; ++j)
                    axes[a].values.push_back(
                        n == 1 ? r.lo : r.lo + len * static_cast<double>(j) /
                                                    static_cast<double>(n - 1));
            }
            count *= axes[a].values.size();
        }
        total_nodes += count;
        if (total_nodes > cfg.max_nodes)
            throw Error("net would exceed max_nodes; raise epsilon or shrink windows");

        // Grid nodes by odometer.
        std::vector<std::size_t> idx(plan->dim(), 0);
        std::vector<double> x(plan->dim());
        std::vector<int> first_node;
        while (true) {
            for (std::size_t a = 0; a < plan->dim(); ++a) x[a] = axes[a].values[idx[a]];
            net.add_node({static_cast<int>(pi), x, NetNode::Origin::Grid});
            std::size_t k = 0;
            while (k < plan->dim() && ++idx[k] == axes[k].values.size()) idx[k++] = 0;
            if (plan->dim() == 0 || k == plan->dim()) break;
        }

        // Candidate neighbor pairs within the edge radius, then weights
        // (parallel; slots are disjoint).
        double radius = cfg.edge_radius_factor * epsilon;
        auto cost_lb = plan->axis_cost_lower(window);
        const auto& nodes_here = net.piece_nodes_[pi];
        std::vector<long> index_radius(plan->dim());
        std::vector<long> strides(plan->dim());
        long stride = 1;
        for (std::size_t a = 0; a < plan->dim(); ++a) {
            strides[a] = stride;
            stride *= static_cast<long>(axes[a].values.size());
            double unit = axes[a].spacing * std::max(cost_lb[a], 1e-12);
            index_radius[a] =
                axes[a].values.size() <= 1 || unit <= 0.0
                    ? 0
                    : std::min<long>(static_cast<long>(axes[a].values.size()) - 1,
                                     static_cast<long>(std::ceil(radius / unit + 1e-9)));
            if (axes[a].cyclic)
                index_radius[a] = std::min<long>(index_radius[a],
                                                 static_cast<long>(axes[a].values.size()) / 2);
        }

        std::vector<std::pair<int, int>> cand;
        std::vector<std::size_t> off_idx(plan->dim());
        for (std::size_t local = 0; local < nodes_here.size(); ++local) {
            // decompose local into per-axis indices
            long rem = static_cast<long>(local);
            std::vector<long> me(plan->dim());
            for (std::size_t a = 0; a < plan->dim(); ++a) {
                me[a] = rem % static_cast<long>(axes[a].values.size());
                rem /= static_cast<long>(axes[a].values.size());
            }
            // enumerate offsets
            std::vector<long> off(plan->dim(), 0);
            std::size_t ax0 = 0;
            for (std::size_t a = 0; a < plan->dim(); ++a) off[a] = -index_radius[a];
            while (true) {
                long neighbor = 0;
                bool valid = true;
                for (std::size_t a = 0; a < plan->dim() && valid; ++a) {
                    long j = me[a] + off[a];
                    long n = static_cast<long>(axes[a].values.size());
                    if (axes[a].cyclic) {
                        j = ((j % n) + n) % n;
                    } else if (j < 0 || j >= n) {
                        valid = false;
                    }
                    neighbor += j * strides[a];
                }
                if (valid && neighbor > static_cast<long>(local)) {
                    int u = nodes_here[local], v = nodes_here[neighbor];
                    double chord = plan->chord(net.nodes_[u].x.data(), net.nodes_[v].x.data());
                    if (chord <= radius + 1e-12) cand.emplace_back(u, v);
                }
                std::size_t a = 0;
                while (a < plan->dim() && ++off[a] > index_radius[a])
                    off[a++] = -index_radius[a - 1 < plan->dim() ? a - 1 : 0], void();
                // fix: reset uses the axis being wrapped, handled below
                if (a == plan->dim() || plan->dim() == 0) break;
            }
            (void)ax0;
            if (plan->dim() == 0) break;
        }

        if (cand.size() + net_edge_count(net) > cfg.max_edges)
            throw Error("net would exceed max_edges; raise epsilon or shrink windows");
        std::vector<double> weights(cand.size());
        parallel_for(cand.size(), [&](std::size_t i) {
            weights[i] = net.edge_weight(static_cast<int>(pi),
                                         net.nodes_[cand[i].first].x.data(),
                                         net.nodes_[cand[i].second].x.data());
        });
        for (std::size_t i = 0; i < cand.size(); ++i) {
            net.adj_[cand[i].first].emplace_back(cand[i].second, weights[i]);
            net.adj_[cand[i].second].emplace_back(cand[i].first, weights[i]);
        }
    }

    // Identification pairs: sampled points become zero-weight edges.
    for (const auto& ident : identifications) {
        auto pairs = sample_identification(pieces, ident, epsilon);
        validate_pairing(net, ident, pairs);
        for (const auto& [sp, tp] : pairs) {
            int a = net.insert_point(sp);
            int b = net.insert_point(tp);
            if (a == b) continue;
            bool dup = false;
            for (const auto& [v, w] : net.adj_[a])
                if (v == b && w == 0.0) { dup = true; break; }
            if (!dup) {
                net.adj_[a].emplace_back(b, 0.0);
                net.adj_[b].emplace_back(a, 0.0);
            }
        }
    }

    // Net connectivity: every node of a multi-node piece must have a close
    // neighbor.
    for (std::size_t i = 0; i < net.nodes_.size(); ++i) {
        if (net.piece_nodes_[net.nodes_[i].piece].size() <= 1) continue;
        bool ok = false;
        for (const auto& [v, w] : net.adj_[i])
            if (w <= 2.0 * epsilon + 1e-12) { ok = true; break; }
        if (!ok)
            throw Error("net node " + std::to_string(i) +
                        " has no neighbor within 2*epsilon; epsilon too small for the window");
    }
    return net;
}

NetGraph build_net(const SpaceDescriptor& space, double epsilon, const NetConfig& cfg) {
    QuotientVariant q = as_quotient(space);
    return build_net(q.pieces, q.identifications, epsilon, cfg);
}

double chain_infimum_bruteforce(const std::vector<QuotientPiece>& pieces,
                                const std::vector<Identification>& identifications,
                                const PointCoord& p, const PointCoord& q,
                                int max_chain_len,
                                const std::vector<PointCoord>& sample_set) {
    // Node set: endpoints, identification pair endpoints, extra samples.
    struct Node {
        int piece;
        std::vector<double> x;
    };
    std::vector<std::shared_ptr<ChartPlan>> plans;
    for (const auto& piece : pieces) plans.push_back(std::make_shared<ChartPlan>(piece.space));
    auto piece_of = [&](const std::string& id) {
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (pieces[i].id == id) return static_cast<int>(i);
        throw ShapeMismatch("unknown piece '" + id + "'");
    };

    std::vector<Node> nodes;
    auto add = [&](const PointCoord& pt) {
        int piece = piece_of(pt.piece);
        std::vector<double> x = plans[piece]->flatten(pt.value);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i].piece != piece) continue;
            bool same = true;
            for (std::size_t a = 0; a < x.size(); ++a)
                if (std::fabs(x[a] - nodes[i].x[a]) > 1e-12) { same = false; break; }
            if (same) return static_cast<int>(i);
        }
        nodes.push_back({piece, std::move(x)});
        return static_cast<int>(nodes.size()) - 1;
    };

    int start = add(p);
    int goal = add(q);
    std::vector<std::pair<int, int>> links;
    for (const auto& ident : identifications) {
        for (const auto& [sp, tp] : sample_identification(pieces, ident, 0.05)) {
            int a = add(sp), b = add(tp);
            links.emplace_back(a, b);
        }
    }
    for (const auto& s : sample_set) add(s);
    if (nodes.size() > 450)
        throw Error("brute-force chain search sample set too large");

    auto leg = [&](int u, int v) {
        const ChartPlan& plan = *plans[nodes[u].piece];
        if (!plan.has_warp()) return plan.chord(nodes[u].x.data(), nodes[v].x.data());
        return segment_length(plan, nodes[u].x.data(), nodes[v].x.data(), 1e-9);
    };

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cost(nodes.size(), inf);
    cost[start] = 0.0;
    auto closure = [&](std::vector<double>& c) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [a, b] : links) {
                if (c[a] < c[b]) { c[b] = c[a]; changed = true; }
                if (c[b] < c[a]) { c[a] = c[b]; changed = true; }
            }
        }
    };
    closure(cost);
    for (int step = 0; step < max_chain_len; ++step) {
        std::vector<double> next = cost;
        for (std::size_t u = 0; u < nodes.size(); ++u) {
            if (cost[u] == inf) continue;
            for (std::size_t v = 0; v < nodes.size(); ++v) {
                if (nodes[u].piece != nodes[v].piece) continue;
                double c = cost[u] + leg(static_cast<int>(u), static_cast<int>(v));
                if (c < next[v]) next[v] = c;
            }
        }
        closure(next);
        cost = std::move(next);
    }
    return cost[goal];
}

} // namespace warpspace
