#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fedhgn/matrix.hpp"

namespace fedhgn {

// Per-destination in-neighbor lists for one edge type. Index v holds the
// ascending source ids of N_v^r.
using NeighborLists = std::vector<std::vector<int32_t>>;

// Reverse-mode tape over dense matrices. Values are computed eagerly as
// operations are recorded; backward() visits the record in strict reverse
// order. Reductions accumulate in input order so that replaying a tape is
// bit-exact, which the federated equivalence tests rely on.
//
// The op set is deliberately small: matmul (plus a variant whose rhs is a
// flattened weight), add (with row-broadcast for biases), scale by a
// constant, relu, row-gather-mean over neighbor lists, masked softmax
// cross-entropy, and squared distance to a constant.
class Tape {
public:
    using Id = int32_t;

    enum class Op : uint8_t {
        leaf,
        matmul,
        matmul_flat_rhs,  // rhs node stores a 1 x (r*c) row, used as an r x c weight
        add,
        scale,
        relu,
        row_gather_mean,
        softmax_cross_entropy,
        squared_distance,
    };

    Id leaf(Matrix value);

    Id matmul(Id a, Id b);
    // b holds a flattened weight of logical shape (rhs_rows x rhs_cols).
    Id matmul_flat_rhs(Id a, Id b, int32_t rhs_rows, int32_t rhs_cols);
    // Same-shape addition, or broadcast when b is a 1 x n bias row.
    Id add(Id a, Id b);
    Id scale(Id a, double factor);
    Id relu(Id a);
    // Mean of src rows per destination; empty lists yield exact zero rows.
    // `lists` must outlive the tape.
    Id row_gather_mean(Id src, const NeighborLists& lists);
    // Mean softmax cross-entropy over the selected logit rows.
    Id softmax_cross_entropy(Id logits, std::span<const int32_t> rows,
                             std::span<const int32_t> labels);
    // Squared L2 distance between node a and a constant target.
    Id squared_distance(Id a, Matrix target);

    const Matrix& value(Id id) const { return nodes_[size_t(id)].value; }
    const Matrix& grad(Id id) const { return nodes_[size_t(id)].grad; }

    // Accumulates gradients of a scalar (1x1) node into every node's grad.
    void backward(Id loss);

    // Recomputes all non-leaf values from the leaves, in record order.
    void replay_forward();

    size_t node_count() const { return nodes_.size(); }

    // Test hook: perturbs one adjoint during backward to prove the
    // finite-difference checker catches a broken gradient.
    void corrupt_next_backward(double amount) { corruption_ = amount; }

private:
    struct Node {
        Op op = Op::leaf;
        Id a = -1;
        Id b = -1;
        Matrix value;
        Matrix grad;
        double factor = 0.0;                    // scale
        int32_t rhs_rows = 0, rhs_cols = 0;     // matmul_flat_rhs
        const NeighborLists* lists = nullptr;   // row_gather_mean
        std::vector<int32_t> sel_rows, labels;  // softmax_cross_entropy
        Matrix target;                          // squared_distance
    };

    Id push(Node n);
    void compute(Node& n) const;
    const Matrix& val(Id id) const { return nodes_[size_t(id)].value; }

    std::vector<Node> nodes_;
    double corruption_ = 0.0;
};

}  // namespace fedhgn
