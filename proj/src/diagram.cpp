#include "knotcol/diagram.hpp"

#include "knotcol/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace knotcol {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

void skip_separators(std::string_view s, std::size_t& i) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
}

std::int64_t parse_label(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc{}) throw ParseError("PD parse error: expected an integer at offset " + std::to_string(i));
    i = static_cast<std::size_t>(ptr - s.data());
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return v;
}

PDCode parse_x_form(std::string_view s) {
    std::size_t i = 0;
    skip_separators(s, i);
    bool wrapped = false;
    if (s.substr(i, 3) == "PD[") {
        wrapped = true;
        i += 3;
    }
    PDCode pd;
    for (;;) {
        skip_separators(s, i);
        if (i >= s.size()) break;
        if (wrapped && s[i] == ']') {
            ++i;
            skip_separators(s, i);
            if (i != s.size()) throw ParseError("PD parse error: trailing input after PD[...]");
            wrapped = false;
            break;
        }
        if (s[i] != 'X') throw ParseError("PD parse error: expected X[...] at offset " + std::to_string(i));
        ++i;
        if (i >= s.size() || s[i] != '[') throw ParseError("PD parse error: expected '[' after X");
        ++i;
        std::vector<std::int64_t> labels;
        for (;;) {
            labels.push_back(parse_label(s, i));
            if (i >= s.size()) throw ParseError("PD parse error: unterminated X[...]");
            if (s[i] == ']') {
                ++i;
                break;
            }
            if (s[i] != ',') throw ParseError("PD parse error: expected ',' or ']' at offset " + std::to_string(i));
            ++i;
        }
        if (labels.size() != 4)
            throw ParseError("PD parse error: crossing has " + std::to_string(labels.size()) + " labels, expected 4");
        pd.crossings.push_back({labels[0], labels[1], labels[2], labels[3]});
    }
    if (wrapped) throw ParseError("PD parse error: unterminated PD[...]");
    return pd;
}

PDCode parse_json_form(std::string_view s) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("PD parse error: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("PD parse error: expected a JSON array");
    PDCode pd;
    for (const auto& x : doc) {
        if (!x.is_array() || x.size() != 4)
            throw ParseError("PD parse error: every crossing must be an array of 4 integers");
        std::array<std::int64_t, 4> q{};
        for (std::size_t k = 0; k < 4; ++k) {
            if (!x[k].is_number_integer()) throw ParseError("PD parse error: non-integer label");
            q[k] = x[k].get<std::int64_t>();
        }
        pd.crossings.push_back(q);
    }
    return pd;
}

void validate(const PDCode& pd) {
    if (pd.crossings.empty()) throw InvalidArgument("invalid PD code: no crossings");
    std::map<std::int64_t, int> seen;
    for (const auto& x : pd.crossings)
        for (auto label : x) ++seen[label];
    for (const auto& [label, count] : seen)
        if (count != 2)
            throw InvalidArgument("invalid PD code: label " + std::to_string(label) + " appears " +
                                  std::to_string(count) + " time(s)");
}

}  // namespace

std::string PDCode::to_string() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        const auto& x = crossings[c];
        os << (c ? " " : "") << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
    }
    return os.str();
}

PDCode parse_pd(std::string_view text) {
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    PDCode pd = (first < text.size() && text[first] == '[') ? parse_json_form(text) : parse_x_form(text);
    validate(pd);
    return pd;
}

Diagram build_diagram(const PDCode& pd) {
    validate(pd);
    Diagram d;
    d.pd_ = pd;
    const std::size_t n = pd.crossings.size();

    for (const auto& x : pd.crossings) d.semiarc_labels_.insert(d.semiarc_labels_.end(), x.begin(), x.end());
    std::sort(d.semiarc_labels_.begin(), d.semiarc_labels_.end());
    d.semiarc_labels_.erase(std::unique(d.semiarc_labels_.begin(), d.semiarc_labels_.end()),
                            d.semiarc_labels_.end());
    const std::size_t m = d.semiarc_labels_.size();

    auto index_of = [&](std::int64_t label) {
        return static_cast<std::size_t>(
            std::lower_bound(d.semiarc_labels_.begin(), d.semiarc_labels_.end(), label) -
            d.semiarc_labels_.begin());
    };

    // Each semiarc label occurs at two ports 4c + pos, recorded in crossing order.
    std::vector<std::array<std::size_t, 2>> ports(m);
    std::vector<int> filled(m, 0);
    d.crossing_semiarcs_.resize(n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < 4; ++k) {
            const std::size_t s = index_of(pd.crossings[c][k]);
            d.crossing_semiarcs_[c][k] = s;
            ports[s][filled[s]++] = 4 * c + k;
        }

    auto other_port = [&](std::size_t port) {
        const auto& pr = ports[d.crossing_semiarcs_[port / 4][port % 4]];
        return pr[0] == port ? pr[1] : pr[0];
    };
    auto side_of = [&](std::size_t port) {
        return ports[d.crossing_semiarcs_[port / 4][port % 4]][0] == port ? 0 : 1;
    };

    // Corner 4c + i sits between positions i and i+1. Walking a face, leave the
    // corner along the semiarc at position i+1; at its other end the face
    // continues in the corner counterclockwise after that port.
    const std::size_t corners = 4 * n;
    auto exit_port = [](std::size_t corner) { return 4 * (corner / 4) + (corner % 4 + 1) % 4; };

    std::vector<std::size_t> face_of(corners, SIZE_MAX);
    std::vector<std::vector<Slot>> faces;
    for (std::size_t start = 0; start < corners; ++start) {
        if (face_of[start] != SIZE_MAX) continue;
        std::vector<Slot> slots;
        std::size_t corner = start;
        do {
            if (face_of[corner] != SIZE_MAX)
                throw InvalidArgument("non-planar or corrupt PD code: face walk does not close");
            face_of[corner] = faces.size();
            const std::size_t out = exit_port(corner);
            slots.push_back({d.crossing_semiarcs_[out / 4][out % 4], side_of(out)});
            corner = other_port(out);
        } while (corner != start);
        faces.push_back(std::move(slots));
    }
    if (faces.size() != n + 2)
        throw InvalidArgument("non-planar or corrupt PD code: " + std::to_string(faces.size()) +
                              " faces, expected " + std::to_string(n + 2));

    // Sort faces by minimal slot and rotate each boundary to start there.
    std::vector<std::size_t> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    auto min_slot = [&](std::size_t f) { return *std::min_element(faces[f].begin(), faces[f].end()); };
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return min_slot(a) < min_slot(b); });
    std::vector<std::size_t> rank(faces.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
    for (std::size_t r = 0; r < order.size(); ++r) {
        auto slots = faces[order[r]];
        std::rotate(slots.begin(), std::min_element(slots.begin(), slots.end()), slots.end());
        d.region_slots_.push_back(std::move(slots));
    }

    d.quadrants_.resize(n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < 4; ++i) d.quadrants_[c][i] = rank[face_of[4 * c + i]];

    d.semiarc_regions_.resize(m);
    for (std::size_t s = 0; s < m; ++s)
        for (int side = 0; side < 2; ++side) {
            const std::size_t port = ports[s][side];
            const std::size_t corner = 4 * (port / 4) + (port % 4 + 3) % 4;
            d.semiarc_regions_[s][side] = rank[face_of[corner]];
        }

    UnionFind strands(m), arcs(m);
    for (std::size_t c = 0; c < n; ++c) {
        const auto& x = d.crossing_semiarcs_[c];
        strands.unite(x[0], x[2]);
        strands.unite(x[1], x[3]);
        arcs.unite(x[1], x[3]);
    }
    for (std::size_t s = 0; s < m; ++s)
        if (strands.find(s) != 0) throw InvalidArgument("multi-component links are not supported");

    std::vector<std::size_t> arc_index(m, SIZE_MAX);
    d.arc_of_.resize(m);
    for (std::size_t s = 0; s < m; ++s) {
        const std::size_t root = arcs.find(s);
        if (arc_index[root] == SIZE_MAX) arc_index[root] = d.arc_count_++;
        d.arc_of_[s] = arc_index[root];
    }
    return d;
}

Checkerboard checkerboard(const Diagram& d) {
    const std::size_t r = d.region_count();
    std::vector<std::vector<std::size_t>> adj(r);
    for (std::size_t s = 0; s < d.semiarc_count(); ++s) {
        const auto [a, b] = d.semiarc_regions(s);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    Checkerboard cb{std::vector<int>(r, -1)};
    std::queue<std::size_t> todo;
    cb.shade[0] = 0;
    todo.push(0);
    while (!todo.empty()) {
        const std::size_t u = todo.front();
        todo.pop();
        for (auto v : adj[u]) {
            if (cb.shade[v] < 0) {
                cb.shade[v] = 1 - cb.shade[u];
                todo.push(v);
            } else if (cb.shade[v] == cb.shade[u]) {
                throw InvalidArgument("diagram not checkerboard-colorable");
            }
        }
    }
    for (auto s : cb.shade)
        if (s < 0) throw InvalidArgument("diagram not checkerboard-colorable");
    return cb;
}

}  // namespace knotcol
