// Abstract simplicial complexes given by their facets. Faces are sorted
// vertex-index vectors; the complex holding only the empty face is
// represented by an empty facet list.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "strata/numbers.hpp"

namespace strata {

using Face = std::vector<int>;  // strictly increasing vertex indices

class SimplicialComplexData {
public:
    SimplicialComplexData() = default;

    SimplicialComplexData(std::vector<std::string> vertices, std::vector<Face> facets)
        : vertices_(std::move(vertices)) {
        for (Face& f : facets) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (int v : f)
                if (v < 0 || v >= static_cast<int>(vertices_.size()))
                    throw Error("SimplicialComplexData: vertex index out of range");
        }
        // keep inclusion-maximal faces only
        std::sort(facets.begin(), facets.end(), [](const Face& a, const Face& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        for (const Face& f : facets) {
            if (f.empty()) continue;
            bool dominated = false;
            for (const Face& g : facets_)
                if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    dominated = true;
                    break;
                }
            if (!dominated) facets_.push_back(f);
        }
        std::sort(facets_.begin(), facets_.end(), face_less);
    }

    static bool face_less(const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }

    // dimension; -1 for the complex {empty face}
    int dim() const {
        int d = -1;
        for (const Face& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    bool is_pure() const {
        if (facets_.empty()) return true;
        size_t k = facets_.front().size();
        for (const Face& f : facets_)
            if (f.size() != k) return false;
        return true;
    }

    bool contains(Face f) const {
        std::sort(f.begin(), f.end());
        if (f.empty()) return true;
        for (const Face& g : facets_)
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) return true;
        return false;
    }

    // All faces including the empty one, sorted by (size, lex).
    std::vector<Face> all_faces() const {
        std::set<Face> seen;
        seen.insert(Face{});
        for (const Face& f : facets_) {
            // subsets of f
            int k = static_cast<int>(f.size());
            for (unsigned mask = 1; mask < (1u << k); ++mask) {
                Face sub;
                for (int i = 0; i < k; ++i)
                    if (mask & (1u << i)) sub.push_back(f[i]);
                seen.insert(std::move(sub));
            }
        }
        std::vector<Face> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end(), face_less);
        return out;
    }

    // lk(sigma) = { tau : tau disjoint from sigma, tau U sigma is a face }
    SimplicialComplexData link(Face sigma) const {
        std::sort(sigma.begin(), sigma.end());
        if (!contains(sigma)) throw Error("link: not a face");
        std::vector<Face> lk_facets;
        for (const Face& f : facets_) {
            if (!std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) continue;
            Face rest;
            std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(),
                                std::back_inserter(rest));
            lk_facets.push_back(std::move(rest));
        }
        return SimplicialComplexData(vertices_, std::move(lk_facets));
    }

    bool operator==(const SimplicialComplexData& o) const {
        return vertices_ == o.vertices_ && facets_ == o.facets_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Face> facets_;  // sorted, inclusion-maximal, nonempty
};

}  // namespace strata
