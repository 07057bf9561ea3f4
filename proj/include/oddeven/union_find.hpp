#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace oddeven {

class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return;
        parent_[y] = x;
        --components_;
    }

    bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

    std::size_t components() const { return components_; }

   private:
    std::vector<std::size_t> parent_;
    std::size_t components_;
};

}  // namespace oddeven
