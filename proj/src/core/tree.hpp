#pragma once

#include <cstddef>
#include <vector>

namespace haorcast {

// Flat binary tree; node 0 is the root. Leaves have feature = -1 and carry
// either a class-1 probability (forest) or a boosting score (stages).
struct TreeNode {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;

    bool is_leaf() const { return feature < 0; }
};

struct Tree {
    std::vector<TreeNode> nodes;

    double predict(const double* x) const {
        int i = 0;
        while (!nodes[i].is_leaf())
            i = (x[nodes[i].feature] <= nodes[i].threshold) ? nodes[i].left : nodes[i].right;
        return nodes[i].value;
    }

    int depth() const { return depth_from(0); }

private:
    int depth_from(int i) const {
        if (nodes[i].is_leaf()) return 0;
        const int l = depth_from(nodes[i].left);
        const int r = depth_from(nodes[i].right);
        return 1 + (l > r ? l : r);
    }
};

// Midpoint between consecutive sorted unique values. The split rule sends
// x <= threshold left, so the midpoint must stay strictly below hi; if
// rounding collapses it upward, the low value itself still separates.
inline bool split_midpoint(double lo, double hi, double& mid) {
    mid = lo + (hi - lo) / 2.0;
    if (!(mid < hi)) mid = lo;
    return lo <= mid && mid < hi;
}

}  // namespace haorcast
