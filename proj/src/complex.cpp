#include "sap/complex.hpp"

#include <algorithm>

namespace sap {

SimplicialComplex SimplicialComplex::from_simplices(
    const std::vector<std::vector<int>>& simps) {
    std::set<std::vector<int>> closed;
    std::vector<std::vector<int>> work;
    for (const std::vector<int>& s : simps) {
        if (s.empty()) throw input_error("empty simplex");
        std::vector<int> v = s;
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw input_error("repeated vertex in a simplex");
        if (closed.insert(v).second) work.push_back(std::move(v));
    }
    while (!work.empty()) {
        std::vector<int> s = std::move(work.back());
        work.pop_back();
        if (s.size() == 1) continue;
        for (size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            if (closed.insert(face).second) work.push_back(std::move(face));
        }
    }
    SimplicialComplex out;
    for (const std::vector<int>& s : closed) {
        const size_t d = s.size() - 1;
        if (out.by_dim_.size() <= d) out.by_dim_.resize(d + 1);
        out.by_dim_[d].push_back(s);
    }
    for (auto& level : out.by_dim_) std::sort(level.begin(), level.end());
    return out;
}

size_t SimplicialComplex::count(int d) const {
    if (d < 0 || d > dim()) return 0;
    return by_dim_[static_cast<size_t>(d)].size();
}

const std::vector<std::vector<int>>& SimplicialComplex::simplices(int d) const {
    static const std::vector<std::vector<int>> empty;
    if (d < 0 || d > dim()) return empty;
    return by_dim_[static_cast<size_t>(d)];
}

bool SimplicialComplex::contains(const std::vector<int>& s) const {
    if (s.empty()) return false;
    std::vector<int> v = s;
    std::sort(v.begin(), v.end());
    const int d = static_cast<int>(v.size()) - 1;
    const auto& level = simplices(d);
    return std::binary_search(level.begin(), level.end(), v);
}

size_t SimplicialComplex::index_of(const std::vector<int>& s) const {
    std::vector<int> v = s;
    std::sort(v.begin(), v.end());
    const int d = static_cast<int>(v.size()) - 1;
    const auto& level = simplices(d);
    const auto it = std::lower_bound(level.begin(), level.end(), v);
    if (it == level.end() || *it != v)
        throw input_error("simplex is not in the complex");
    return static_cast<size_t>(it - level.begin());
}

std::vector<int> SimplicialComplex::vertices() const {
    std::vector<int> out;
    for (const auto& s : simplices(0)) out.push_back(s[0]);
    return out;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int d = 0; d <= dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(count(d));
    return chi;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
    SimplicialComplex out;
    if (k < 0) return out;
    const size_t keep = std::min(by_dim_.size(), static_cast<size_t>(k) + 1);
    out.by_dim_.assign(by_dim_.begin(), by_dim_.begin() + static_cast<long>(keep));
    return out;
}

Mat SimplicialComplex::boundary(int d) const {
    const size_t rows = count(d - 1);
    Mat out;
    out.reserve(count(d));
    if (d <= 0) {
        out.assign(count(d), Vec{});
        return out;
    }
    for (const std::vector<int>& s : simplices(d)) {
        Vec col(rows, Q(0));
        for (size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            col[index_of(face)] = Q(i % 2 == 0 ? 1 : -1);
        }
        out.push_back(std::move(col));
    }
    return out;
}

HomologyBasis homology(const SimplicialComplex& k, int d, const Field& f) {
    HomologyBasis out;
    if (d < 0 || d > k.dim()) return out;
    const Mat bd = k.boundary(d);
    const Mat bd1 = k.boundary(d + 1);
    Mat cycles;
    if (d == 0) {
        cycles = identity_mat(k.count(0));
    } else {
        cycles = kernel_basis(f, bd);
    }
    const Mat bdry = column_echelon(f, bd1);
    // homology basis: cycle columns that add a pivot beyond the
    // boundary space, echelon-reduced for determinism
    Mat combined = bdry;
    Mat reps;
    for (const Vec& z : cycles) {
        combined.push_back(z);
        if (column_echelon(f, combined).size() >
            column_echelon(f, Mat(combined.begin(), combined.end() - 1)).size())
            reps.push_back(z);
        else
            combined.pop_back();
    }
    out.betti = reps.size();
    out.cycles = std::move(reps);
    out.boundaries = bdry;
    return out;
}

std::vector<size_t> betti_numbers(const SimplicialComplex& k, const Field& f) {
    std::vector<size_t> out;
    const int top = std::max(k.dim(), 0);
    for (int d = 0; d <= top; ++d) {
        const size_t zd = d == 0 ? k.count(0) : kernel_basis(f, k.boundary(d)).size();
        const size_t bd = mat_rank(f, k.boundary(d + 1));
        out.push_back(zd - bd);
    }
    return out;
}

Mat chain_matrix(const SimplicialComplex& src, const SimplicialComplex& dst,
                 int d, const std::map<int, int>& vmap, const Field& f) {
    (void)f;
    const size_t rows = dst.count(d);
    Mat out;
    out.reserve(src.count(d));
    for (const std::vector<int>& s : src.simplices(d)) {
        Vec col(rows, Q(0));
        std::vector<int> img;
        img.reserve(s.size());
        for (int v : s) {
            const auto it = vmap.find(v);
            if (it == vmap.end())
                throw input_error("vertex map misses a source vertex");
            img.push_back(it->second);
        }
        // sign of the sorting permutation; degenerate images drop out
        int sign = 1;
        bool degenerate = false;
        for (size_t i = 1; i < img.size() && !degenerate; ++i) {
            for (size_t j = i; j > 0 && img[j] <= img[j - 1]; --j) {
                if (img[j] == img[j - 1]) {
                    degenerate = true;
                    break;
                }
                std::swap(img[j], img[j - 1]);
                sign = -sign;
            }
        }
        if (!degenerate) {
            if (!dst.contains(img))
                throw input_error("vertex map is not simplicial");
            col[dst.index_of(img)] = Q(sign);
        }
        out.push_back(std::move(col));
    }
    return out;
}

Mat induced_homology_map(const SimplicialComplex& src,
                         const SimplicialComplex& dst, int d,
                         const std::map<int, int>& vmap, const Field& f) {
    const HomologyBasis hs = homology(src, d, f);
    const HomologyBasis hd = homology(dst, d, f);
    const Mat cm = chain_matrix(src, dst, d, vmap, f);
    // express each image cycle over [boundaries | representatives]
    Mat frame = hd.boundaries;
    frame.insert(frame.end(), hd.cycles.begin(), hd.cycles.end());
    Mat out;
    out.reserve(hs.betti);
    for (const Vec& z : hs.cycles) {
        const Vec w = mat_vec(f, cm, z);
        const auto x = solve(f, frame, w);
        if (!x)
            throw internal_error("image cycle escapes the target cycle space");
        Vec cls(hd.betti, Q(0));
        for (size_t i = 0; i < hd.betti; ++i)
            cls[i] = f.reduce((*x)[hd.boundaries.size() + i]);
        out.push_back(std::move(cls));
    }
    return out;
}

SimplicialComplex nerve(const std::vector<std::set<int>>& cover,
                        int max_dim) {
    std::vector<std::vector<int>> simps;
    // grow simplices by largest member index; only live intersections
    // survive, so the search stays near the nerve's actual size
    struct Node {
        std::vector<int> verts;
        std::set<int> inter;
    };
    std::vector<Node> frontier;
    for (size_t i = 0; i < cover.size(); ++i) {
        if (cover[i].empty()) continue;
        frontier.push_back({{static_cast<int>(i)}, cover[i]});
        simps.push_back({static_cast<int>(i)});
    }
    while (!frontier.empty()) {
        if (max_dim >= 0 &&
            frontier.front().verts.size() > static_cast<size_t>(max_dim))
            break;
        std::vector<Node> next;
        for (const Node& nd : frontier) {
            for (size_t j = static_cast<size_t>(nd.verts.back()) + 1;
                 j < cover.size(); ++j) {
                std::set<int> inter;
                std::set_intersection(nd.inter.begin(), nd.inter.end(),
                                      cover[j].begin(), cover[j].end(),
                                      std::inserter(inter, inter.begin()));
                if (inter.empty()) continue;
                Node child{nd.verts, std::move(inter)};
                child.verts.push_back(static_cast<int>(j));
                simps.push_back(child.verts);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return SimplicialComplex::from_simplices(simps);
}

}  // namespace sap
