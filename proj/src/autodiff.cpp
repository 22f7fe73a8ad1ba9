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

#include "mftts/autodiff.hpp"

#include <cmath>

#include "mftts/error.hpp"

namespace mftts::ad {

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::ShapeError, what);
}

}  // namespace

const Mat& Val::value() const { return tape->value(*this); }

Val Tape::push(Mat value, bool needs_grad,
               std::function<void(Tape&, const Mat&)> back) {
  Node node;
  node.value = std::move(value);
  if (recording_) {
    node.needs_grad = needs_grad;
    node.back = std::move(back);
  }
  nodes_.push_back(std::move(node));
  return Val{this, int(nodes_.size()) - 1};
}

Mat& Tape::grad_ref(int id) {
  Node& n = nodes_[size_t(id)];
  if (n.grad.size() == 0) n.grad = Mat::Zero(n.value.rows(), n.value.cols());
  return n.grad;
}

const Mat& Tape::value(Val v) const { return nodes_[size_t(v.id)].value; }

Mat Tape::grad(Val v) const {
  const Node& n = nodes_[size_t(v.id)];
  if (n.grad.size() == 0) return Mat::Zero(n.value.rows(), n.value.cols());
  return n.grad;
}

Val Tape::constant(Mat m) { return push(std::move(m), false, nullptr); }

Val Tape::zeros(long rows, long cols) {
  return constant(Mat::Zero(rows, cols));
}

Val Tape::leaf(const Mat& m) { return push(m, true, nullptr); }

Val Tape::add(Val a, Val b) {
  check(a.rows() == b.rows() && a.cols() == b.cols(), "add: shape mismatch");
  int ia = a.id, ib = b.id;
  return push(a.value() + b.value(), true, [ia, ib](Tape& t, const Mat& g) {
    t.grad_ref(ia) += g;
    t.grad_ref(ib) += g;
  });
}

Val Tape::addn(const std::vector<Val>& xs) {
  check(!xs.empty(), "addn: empty");
  Mat sum = xs[0].value();
  std::vector<int> ids{xs[0].id};
  for (size_t i = 1; i < xs.size(); ++i) {
    check(xs[i].rows() == sum.rows() && xs[i].cols() == sum.cols(),
          "addn: shape mismatch");
    sum += xs[i].value();
    ids.push_back(xs[i].id);
  }
  return push(std::move(sum), true, [ids](Tape& t, const Mat& g) {
    for (int id : ids) t.grad_ref(id) += g;
  });
}

Val Tape::add_rowvec(Val a, Val b) {
  check(b.rows() == 1 && a.cols() == b.cols(), "add_rowvec: shape mismatch");
  int ia = a.id, ib = b.id;
  Mat out = a.value();
  out.rowwise() += b.value().row(0);
  return push(std::move(out), true, [ia, ib](Tape& t, const Mat& g) {
    t.grad_ref(ia) += g;
    t.grad_ref(ib) += g.colwise().sum();
  });
}

Val Tape::sub(Val a, Val b) { return add(a, scale(b, -1.0)); }

Val Tape::scale(Val a, double s) {
  int ia = a.id;
  return push(a.value() * s, true, [ia, s](Tape& t, const Mat& g) {
    t.grad_ref(ia) += s * g;
  });
}

Val Tape::mul(Val a, Val b) {
  check(a.rows() == b.rows() && a.cols() == b.cols(), "mul: shape mismatch");
  int ia = a.id, ib = b.id;
  return push(a.value().cwiseProduct(b.value()), true,
              [ia, ib](Tape& t, const Mat& g) {
                t.grad_ref(ia) += g.cwiseProduct(t.nodes_[size_t(ib)].value);
                t.grad_ref(ib) += g.cwiseProduct(t.nodes_[size_t(ia)].value);
              });
}

Val Tape::matmul(Val a, Val b) {
  check(a.cols() == b.rows(), "matmul: inner dims disagree");
  int ia = a.id, ib = b.id;
  return push(a.value() * b.value(), true, [ia, ib](Tape& t, const Mat& g) {
    t.grad_ref(ia) += g * t.nodes_[size_t(ib)].value.transpose();
    t.grad_ref(ib) += t.nodes_[size_t(ia)].value.transpose() * g;
  });
}

Val Tape::transpose(Val a) {
  int ia = a.id;
  return push(a.value().transpose(), true, [ia](Tape& t, const Mat& g) {
    t.grad_ref(ia) += g.transpose();
  });
}

Val Tape::relu(Val a) {
  int ia = a.id;
  return push(a.value().cwiseMax(0.0), true, [ia](Tape& t, const Mat& g) {
    const Mat& x = t.nodes_[size_t(ia)].value;
    t.grad_ref(ia) += g.cwiseProduct(
        (x.array() > 0.0).cast<double>().matrix());
  });
}

Val Tape::tanh_(Val a) {
  int ia = a.id;
  Mat y = a.value().array().tanh();
  Val out = push(std::move(y), true, nullptr);
  int io = out.id;
  nodes_[size_t(io)].back = [ia, io](Tape& t, const Mat& g) {
    const Mat& y2 = t.nodes_[size_t(io)].value;
    t.grad_ref(ia) +=
        g.cwiseProduct((1.0 - y2.array().square()).matrix());
  };
  return out;
}

Val Tape::sigmoid_(Val a) {
  int ia = a.id;
  Mat y = (1.0 / (1.0 + (-a.value().array()).exp())).matrix();
  Val out = push(std::move(y), true, nullptr);
  int io = out.id;
  nodes_[size_t(io)].back = [ia, io](Tape& t, const Mat& g) {
    const Mat& y2 = t.nodes_[size_t(io)].value;
    t.grad_ref(ia) +=
        g.cwiseProduct((y2.array() * (1.0 - y2.array())).matrix());
  };
  return out;
}

Val Tape::softmax_all(Val a) {
  int ia = a.id;
  Eigen::ArrayXXd x = a.value().array();
  double m = x.maxCoeff();
  Eigen::ArrayXXd e = (x - m).exp();
  Mat y = (e / e.sum()).matrix();
  Val out = push(std::move(y), true, nullptr);
  int io = out.id;
  nodes_[size_t(io)].back = [ia, io](Tape& t, const Mat& g) {
    const Mat& y2 = t.nodes_[size_t(io)].value;
    double dot = (g.array() * y2.array()).sum();
    t.grad_ref(ia) += (y2.array() * (g.array() - dot)).matrix();
  };
  return out;
}

Val Tape::concat_cols(const std::vector<Val>& xs) {
  check(!xs.empty(), "concat_cols: empty");
  long rows = xs[0].rows();
  long cols = 0;
  for (const Val& v : xs) {
    check(v.rows() == rows, "concat_cols: row mismatch");
    cols += v.cols();
  }
  Mat out(rows, cols);
  std::vector<int> ids;
  std::vector<long> widths;
  long c = 0;
  for (const Val& v : xs) {
    out.middleCols(c, v.cols()) = v.value();
    ids.push_back(v.id);
    widths.push_back(v.cols());
    c += v.cols();
  }
  return push(std::move(out), true, [ids, widths](Tape& t, const Mat& g) {
    long c2 = 0;
    for (size_t i = 0; i < ids.size(); ++i) {
      t.grad_ref(ids[i]) += g.middleCols(c2, widths[i]);
      c2 += widths[i];
    }
  });
}

Val Tape::concat_rows(const std::vector<Val>& xs) {
  check(!xs.empty(), "concat_rows: empty");
  long cols = xs[0].cols();
  long rows = 0;
  for (const Val& v : xs) {
    check(v.cols() == cols, "concat_rows: col mismatch");
    rows += v.rows();
  }
  Mat out(rows, cols);
  std::vector<int> ids;
  std::vector<long> heights;
  long r = 0;
  for (const Val& v : xs) {
    out.middleRows(r, v.rows()) = v.value();
    ids.push_back(v.id);
    heights.push_back(v.rows());
    r += v.rows();
  }
  return push(std::move(out), true, [ids, heights](Tape& t, const Mat& g) {
    long r2 = 0;
    for (size_t i = 0; i < ids.size(); ++i) {
      t.grad_ref(ids[i]) += g.middleRows(r2, heights[i]);
      r2 += heights[i];
    }
  });
}

Val Tape::slice_cols(Val a, long col0, long n) {
  check(col0 >= 0 && col0 + n <= a.cols(), "slice_cols: out of range");
  int ia = a.id;
  return push(a.value().middleCols(col0, n), true,
              [ia, col0, n](Tape& t, const Mat& g) {
                t.grad_ref(ia).middleCols(col0, n) += g;
              });
}

Val Tape::slice_rows(Val a, long row0, long n) {
  check(row0 >= 0 && row0 + n <= a.rows(), "slice_rows: out of range");
  int ia = a.id;
  return push(a.value().middleRows(row0, n), true,
              [ia, row0, n](Tape& t, const Mat& g) {
                t.grad_ref(ia).middleRows(row0, n) += g;
              });
}

Val Tape::conv1d_same(Val x, Val w, Val b, int kernel) {
  long T = x.rows();
  long cin = x.cols();
  check(w.rows() == kernel * cin, "conv1d: weight rows != K*Cin");
  long cout = w.cols();
  check(b.rows() == 1 && b.cols() == cout, "conv1d: bad bias shape");
  int ix = x.id, iw = w.id, ib = b.id;
  int half = kernel / 2;

  Mat out = Mat::Zero(T, cout);
  const Mat& xv = x.value();
  const Mat& wv = w.value();
  for (int k = 0; k < kernel; ++k) {
    long shift = k - half;  // input row t+shift feeds output row t
    long t0 = std::max(0L, -shift);
    long t1 = std::min(T, T - shift);
    if (t1 <= t0) continue;
    out.middleRows(t0, t1 - t0).noalias() +=
        xv.middleRows(t0 + shift, t1 - t0) * wv.middleRows(k * cin, cin);
  }
  out.rowwise() += b.value().row(0);

  return push(std::move(out), true,
              [ix, iw, ib, kernel, cin, half](Tape& t, const Mat& g) {
                const Mat& xv2 = t.nodes_[size_t(ix)].value;
                const Mat& wv2 = t.nodes_[size_t(iw)].value;
                long T2 = xv2.rows();
                Mat& gx = t.grad_ref(ix);
                Mat& gw = t.grad_ref(iw);
                for (int k = 0; k < kernel; ++k) {
                  long shift = k - half;
                  long t0 = std::max(0L, -shift);
                  long t1 = std::min(T2, T2 - shift);
                  if (t1 <= t0) continue;
                  gx.middleRows(t0 + shift, t1 - t0).noalias() +=
                      g.middleRows(t0, t1 - t0) *
                      wv2.middleRows(k * cin, cin).transpose();
                  gw.middleRows(k * cin, cin).noalias() +=
                      xv2.middleRows(t0 + shift, t1 - t0).transpose() *
                      g.middleRows(t0, t1 - t0);
                }
                t.grad_ref(ib) += g.colwise().sum();
              });
}

Val Tape::gather_rows(Val table, const std::vector<int>& ids) {
  long V = table.rows();
  for (int id : ids) {
    if (id < 0 || id >= V) {
      throw Error(ErrorCode::IndexError,
                  "embedding id " + std::to_string(id) +
                      " out of range for inventory of " + std::to_string(V));
    }
  }
  int it = table.id;
  Mat out(long(ids.size()), table.cols());
  for (size_t i = 0; i < ids.size(); ++i) {
    out.row(long(i)) = table.value().row(ids[i]);
  }
  std::vector<int> ids_copy = ids;
  return push(std::move(out), true, [it, ids_copy](Tape& t, const Mat& g) {
    Mat& gt = t.grad_ref(it);
    for (size_t i = 0; i < ids_copy.size(); ++i) {
      gt.row(ids_copy[i]) += g.row(long(i));
    }
  });
}

Val Tape::dropout(Val a, double p, Rng& rng) {
  if (p <= 0.0) return a;
  check(p < 1.0, "dropout: p must be < 1");
  double keep = 1.0 - p;
  Mat mask(a.rows(), a.cols());
  for (long i = 0; i < mask.rows(); ++i) {
    for (long j = 0; j < mask.cols(); ++j) {
      mask(i, j) = rng.uniform() < p ? 0.0 : 1.0 / keep;
    }
  }
  int ia = a.id;
  return push(a.value().cwiseProduct(mask), true,
              [ia, mask](Tape& t, const Mat& g) {
                t.grad_ref(ia) += g.cwiseProduct(mask);
              });
}

Val Tape::sum_all(Val a) {
  int ia = a.id;
  Mat out(1, 1);
  out(0, 0) = a.value().sum();
  return push(std::move(out), true, [ia](Tape& t, const Mat& g) {
    const Mat& x = t.nodes_[size_t(ia)].value;
    t.grad_ref(ia).array() += g(0, 0);
    (void)x;
  });
}

Val Tape::mean_all(Val a) {
  double n = double(a.rows() * a.cols());
  return scale(sum_all(a), 1.0 / n);
}

Val Tape::sum_sq_diff(Val a, const Mat& target) {
  check(a.rows() == target.rows() && a.cols() == target.cols(),
        "sum_sq_diff: shape mismatch");
  int ia = a.id;
  Mat diff = a.value() - target;
  Mat out(1, 1);
  out(0, 0) = diff.squaredNorm();
  Mat diff_copy = diff;
  return push(std::move(out), true, [ia, diff_copy](Tape& t, const Mat& g) {
    t.grad_ref(ia) += 2.0 * g(0, 0) * diff_copy;
  });
}

Val Tape::bce_with_logits(Val logits, const Mat& targets, double pos_weight) {
  check(logits.rows() == targets.rows() && logits.cols() == targets.cols(),
        "bce_with_logits: shape mismatch");
  int ia = logits.id;
  const Mat& x = logits.value();
  double total = 0.0;
  for (long i = 0; i < x.rows(); ++i) {
    for (long j = 0; j < x.cols(); ++j) {
      double xi = x(i, j);
      double ti = targets(i, j);
      double w = ti > 0.5 ? pos_weight : 1.0;
      // max(x,0) - x*t + log(1 + exp(-|x|))
      total += w * (std::max(xi, 0.0) - xi * ti +
                    std::log1p(std::exp(-std::abs(xi))));
    }
  }
  Mat out(1, 1);
  out(0, 0) = total;
  Mat targets_copy = targets;
  return push(std::move(out), true,
              [ia, targets_copy, pos_weight](Tape& t, const Mat& g) {
                const Mat& x2 = t.nodes_[size_t(ia)].value;
                Mat& gx = t.grad_ref(ia);
                for (long i = 0; i < x2.rows(); ++i) {
                  for (long j = 0; j < x2.cols(); ++j) {
                    double sig = 1.0 / (1.0 + std::exp(-x2(i, j)));
                    double ti = targets_copy(i, j);
                    double w = ti > 0.5 ? pos_weight : 1.0;
                    gx(i, j) += g(0, 0) * w * (sig - ti);
                  }
                }
              });
}

void Tape::backward(Val loss) {
  check(recording_, "backward on a non-recording tape");
  check(loss.rows() == 1 && loss.cols() == 1, "loss must be 1x1");
  grad_ref(loss.id)(0, 0) = 1.0;
  for (int i = loss.id; i >= 0; --i) {
    Node& n = nodes_[size_t(i)];
    if (n.grad.size() == 0 || !n.back) continue;
    n.back(*this, n.grad);
  }
}

double finite_difference(const std::function<double(const Mat&)>& f, Mat x,
                         long i, long j, double h) {
  double orig = x(i, j);
  x(i, j) = orig + h;
  double fp = f(x);
  x(i, j) = orig - h;
  double fm = f(x);
  x(i, j) = orig;
  return (fp - fm) / (2.0 * h);
}

}  // namespace mftts::ad
