// Copyright (c) 2026 The mftts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MFTTS_AUTODIFF_HPP_
#define MFTTS_AUTODIFF_HPP_

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "mftts/rng.hpp"

namespace mftts::ad {

using Mat = Eigen::MatrixXd;

class Tape;

// Handle into a tape. Cheap to copy; valid until the tape is destroyed or
// reset.
struct Val {
  Tape* tape = nullptr;
  int id = -1;

  bool valid() const { return tape != nullptr && id >= 0; }
  const Mat& value() const;
  long rows() const { return value().rows(); }
  long cols() const { return value().cols(); }
};

// Dynamic reverse-mode tape over double matrices. The graph is rebuilt per
// step; node creation order is a topological order, so backward() is a
// single reverse sweep. With recording disabled the same ops run
// forward-only (used at inference).
class Tape {
 public:
  explicit Tape(bool recording = true) : recording_(recording) {}

  bool recording() const { return recording_; }
  size_t size() const { return nodes_.size(); }

  Val constant(Mat m);
  Val zeros(long rows, long cols);
  // Trainable input: participates in backward().
  Val leaf(const Mat& m);

  Val add(Val a, Val b);
  Val addn(const std::vector<Val>& xs);
  // a [R x C] + broadcast row b [1 x C]
  Val add_rowvec(Val a, Val b);
  Val sub(Val a, Val b);
  Val scale(Val a, double s);
  Val mul(Val a, Val b);  // elementwise
  Val matmul(Val a, Val b);
  Val transpose(Val a);
  Val relu(Val a);
  Val tanh_(Val a);
  Val sigmoid_(Val a);
  // Softmax over all entries (rows*cols treated as one distribution).
  Val softmax_all(Val a);
  Val concat_cols(const std::vector<Val>& xs);
  Val concat_rows(const std::vector<Val>& xs);
  Val slice_cols(Val a, long col0, long n);
  Val slice_rows(Val a, long row0, long n);
  // 1-D convolution along rows (time) with zero 'same' padding.
  // x [T x Cin], w [(K*Cin) x Cout] (tap k occupies rows [k*Cin, (k+1)*Cin)),
  // b [1 x Cout]; output [T x Cout].
  Val conv1d_same(Val x, Val w, Val b, int kernel);
  // Embedding lookup: out[i] = table.row(ids[i]); scatter-add backward.
  Val gather_rows(Val table, const std::vector<int>& ids);
  // Inverted dropout with a mask drawn from rng; identity when p == 0.
  Val dropout(Val a, double p, Rng& rng);
  Val sum_all(Val a);
  Val mean_all(Val a);
  // sum((a - target)^2) as a 1x1 value; target is a plain constant.
  Val sum_sq_diff(Val a, const Mat& target);
  // Numerically stable weighted binary cross-entropy with logits, summed
  // over entries. Positive-class entries are weighted by pos_weight.
  Val bce_with_logits(Val logits, const Mat& targets, double pos_weight);

  void backward(Val loss);

  const Mat& value(Val v) const;
  // Gradient of the last backward() w.r.t. v; zero matrix if v was not
  // reached.
  Mat grad(Val v) const;

 private:
  friend struct Val;

  struct Node {
    Mat value;
    Mat grad;  // empty until touched by backward
    bool needs_grad = false;
    std::function<void(Tape&, const Mat&)> back;  // own grad -> parents
  };

  Val push(Mat value, bool needs_grad,
           std::function<void(Tape&, const Mat&)> back);
  Mat& grad_ref(int id);

  std::vector<Node> nodes_;
  bool recording_;
};

// Central finite-difference derivative of f at x(i,j), step h.
double finite_difference(const std::function<double(const Mat&)>& f, Mat x,
                         long i, long j, double h = 1e-4);

}  // namespace mftts::ad

#endif  // MFTTS_AUTODIFF_HPP_
