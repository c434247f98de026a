#include "frieze/triangulate.hpp"

#include <algorithm>
#include <stdexcept>

namespace frieze {

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

bool is_valid_triangulation(const Triangulation& t) {
    if (t.n_gon < 3) return false;
    if (static_cast<int>(t.diagonals.size()) != t.n_gon - 3) return false;
    for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
        auto [u, v] = t.diagonals[i];
        if (u < 0 || v >= t.n_gon || u >= v) return false;
        if (v - u < 2 || (u == 0 && v == t.n_gon - 1)) return false;  // must not be a side
        for (std::size_t j = i + 1; j < t.diagonals.size(); ++j) {
            if (t.diagonals[i] == t.diagonals[j]) return false;
            if (chords_cross(t.diagonals[i], t.diagonals[j])) return false;
        }
    }
    return true;
}

namespace {

using DiagSet = std::vector<std::pair<int, int>>;

// All diagonal sets triangulating the convex sub-polygon on verts: the edge
// verts[0]..verts.back() picks each possible apex verts[m], splitting into
// two independent fans. Each triangulation arises from exactly one apex.
std::vector<DiagSet> triangulation_sets(const std::vector<int>& verts, int n_gon) {
    const std::size_t k = verts.size();
    if (k < 3) return {DiagSet{}};
    auto is_side = [n_gon](int u, int v) { return v - u == 1 || (u == 0 && v == n_gon - 1); };
    std::vector<DiagSet> out;
    for (std::size_t m = 1; m + 1 < k; ++m) {
        DiagSet base;
        int a = verts[0], b = verts[m], c = verts[k - 1];
        if (!is_side(std::min(a, b), std::max(a, b))) base.emplace_back(std::min(a, b), std::max(a, b));
        if (!is_side(std::min(b, c), std::max(b, c))) base.emplace_back(std::min(b, c), std::max(b, c));
        std::vector<int> left(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(m) + 1);
        std::vector<int> right(verts.begin() + static_cast<std::ptrdiff_t>(m), verts.end());
        for (const DiagSet& l : triangulation_sets(left, n_gon)) {
            for (const DiagSet& r : triangulation_sets(right, n_gon)) {
                DiagSet full = base;
                full.insert(full.end(), l.begin(), l.end());
                full.insert(full.end(), r.begin(), r.end());
                out.push_back(std::move(full));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n_gon) {
    if (n_gon < 3 || n_gon > 14)
        throw std::invalid_argument("enumerate_triangulations: need 3 <= N <= 14");
    std::vector<int> verts(static_cast<std::size_t>(n_gon));
    for (int i = 0; i < n_gon; ++i) verts[static_cast<std::size_t>(i)] = i;
    std::vector<Triangulation> out;
    for (DiagSet& d : triangulation_sets(verts, n_gon)) {
        std::sort(d.begin(), d.end());
        out.push_back(Triangulation{n_gon, std::move(d)});
    }
    std::sort(out.begin(), out.end(), [](const Triangulation& a, const Triangulation& b) {
        return a.diagonals < b.diagonals;
    });
    return out;
}

QuiddityCycle quiddity_of_triangulation(const Triangulation& t) {
    if (!is_valid_triangulation(t))
        throw std::invalid_argument("quiddity_of_triangulation: invalid triangulation");
    // triangles at a vertex = incident diagonals + 1
    std::vector<long> q(static_cast<std::size_t>(t.n_gon), 1);
    for (auto [u, v] : t.diagonals) {
        ++q[static_cast<std::size_t>(u)];
        ++q[static_cast<std::size_t>(v)];
    }
    return make_integer_cycle(q);
}

Triangulation triangulation_of_cc_frieze(const FriezePattern& f) {
    if (classify(f).cls != FriezeClass::ConwayCoxeter)
        throw std::invalid_argument("triangulation_of_cc_frieze: not a Conway-Coxeter frieze");
    QuiddityCycle cycle = extract_quiddity(f);
    const int n_gon = static_cast<int>(cycle.size());

    std::vector<int> labels(static_cast<std::size_t>(n_gon));
    std::vector<long> q(static_cast<std::size_t>(n_gon));
    for (int i = 0; i < n_gon; ++i) {
        labels[static_cast<std::size_t>(i)] = i;
        q[static_cast<std::size_t>(i)] = num(cycle.entries[static_cast<std::size_t>(i)].x()).get_si();
    }

    auto is_side = [n_gon](int u, int v) {
        return v - u == 1 || (u == 0 && v == n_gon - 1);
    };

    Triangulation t{n_gon, {}};
    while (labels.size() > 3) {
        const std::size_t k = labels.size();
        std::size_t ear = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (q[i] == 1 && (ear == k || labels[i] < labels[ear])) ear = i;
        }
        if (ear == k) throw std::logic_error("triangulation_of_cc_frieze: no ear found");
        std::size_t prev = (ear + k - 1) % k, next = (ear + 1) % k;
        int u = std::min(labels[prev], labels[next]);
        int v = std::max(labels[prev], labels[next]);
        if (!is_side(u, v)) t.diagonals.emplace_back(u, v);
        --q[prev];
        --q[next];
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(ear));
        q.erase(q.begin() + static_cast<std::ptrdiff_t>(ear));
    }
    std::sort(t.diagonals.begin(), t.diagonals.end());
    return t;
}

}  // namespace frieze
