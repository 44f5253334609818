#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pinfix/tensor.hpp"

namespace pinfix {

// Handle to a node on a Graph.
struct Var {
  int id = -1;
};

// Target marker for cross_entropy positions that carry no loss.
inline constexpr int kIgnoreTarget = -1;

enum class Reduction { kMean, kSum };

// Reverse-mode tape. Ops append nodes during the forward pass; backward()
// walks the tape once in reverse creation order (a topological order), so
// gradient accumulation order is fixed and runs are bit-reproducible.
class Graph {
 public:
  Graph() = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  // Leaf with no gradient tracking.
  Var constant(Tensor value);
  // Leaf bound to a store parameter. Frozen parameters enter as constants:
  // gradient neither reaches them nor is accumulated into the store.
  Var param(ParameterStore& store, const std::string& name);

  Var matmul(Var a, Var b);     // [n,k]x[k,m]
  Var matmul_nt(Var a, Var b);  // [n,k]x[m,k]^T -> [n,m]
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var mul(Var a, Var b);               // elementwise
  Var add_rowvec(Var x, Var bias);     // [n,d] + [1,d]
  Var affine(Var x, double k, double c);  // k*x + c
  Var scale_rows(Var x, std::vector<double> row_scales);
  Var sigmoid(Var x);
  Var tanh(Var x);
  Var relu(Var x);
  Var layer_norm(Var x, Var gamma, Var beta);  // per row, eps 1e-5
  Var softmax_rows(Var x);
  // Masked softmax: disallowed columns get probability zero. A row with no
  // allowed column yields all zeros.
  Var softmax_rows_masked(Var x, std::vector<char> allowed_cols);
  Var embedding_rows(Var table, std::vector<int> ids);
  Var slice_cols(Var x, int start, int len);
  Var concat_cols(const std::vector<Var>& xs);
  Var concat_rows(const std::vector<Var>& xs);
  Var sum_rows(Var x);                 // [n,d] -> [1,d]
  Var tile_rows(Var x, int n);         // [1,d] -> [n,d]
  // Mean negative log-likelihood over non-ignored rows (kMean), or the plain
  // sum (kSum). All-ignored input yields loss 0 with zero gradient.
  Var cross_entropy(Var logits, std::vector<int> targets,
                    Reduction reduction = Reduction::kMean);

  const Tensor& value(Var v) const;
  // Gradient of the last backward() w.r.t. this node (zeros if unreached).
  Tensor grad(Var v) const;

  // Populates gradients for every reachable non-frozen store parameter.
  // Requires a freshly recorded forward pass; calling twice throws.
  void backward(Var loss);

  size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor value;
    std::vector<double> grad;  // lazily allocated
    bool needs_grad = false;
    std::function<void(Graph&)> back;
  };

  struct ParamBinding {
    int node;
    ParameterStore* store;
    std::string name;
  };

  Var push(Tensor value, bool needs_grad, std::function<void(Graph&)> back);
  Node& node(Var v);
  const Node& node(Var v) const;
  std::vector<double>& grad_buf(int id);
  void add_grad(int id, const std::vector<double>& g);

  std::vector<Node> nodes_;
  std::vector<ParamBinding> bindings_;
  bool backward_done_ = false;

  friend struct GraphTestPeer;
};

}  // namespace pinfix
