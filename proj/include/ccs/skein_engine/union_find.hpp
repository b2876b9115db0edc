#pragma once

#include <numeric>
#include <vector>

namespace ccs {

// Disjoint sets over 0..n-1. Used for circle counting in the bracket
// state sum and for the Seifert-circle decomposition.
class DisjointSets {
public:
    explicit DisjointSets(int n = 0) : parent_(n) { reset(); }

    void reset() { std::iota(parent_.begin(), parent_.end(), 0); }

    int add() {
        int v = (int)parent_.size();
        parent_.push_back(v);
        return v;
    }

    int size() const { return (int)parent_.size(); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent_[ra] = rb;
    }

private:
    std::vector<int> parent_;
};

}  // namespace ccs
