// Copyright 2026 The smpec Authors
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

#include <utility>

#include "smpec/error.hpp"
#include "smpec/model.hpp"

namespace smpec {

MonotoneMap MonotoneMap::affine(Matrix M, Vector q) {
  if (M.rows() != M.cols() || M.rows() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "affine map: M must be n x n and q of length n");
  }
  MonotoneMap map;
  map.kind_ = Kind::kAffine;
  map.n_ = q.size();
  map.mat_ = std::move(M);
  map.vec_ = std::move(q);
  return map;
}

MonotoneMap MonotoneMap::quadratic_gradient(Matrix A, Vector b) {
  if (A.rows() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "gradient-of-quadratic map: A must have as many rows as b");
  }
  MonotoneMap map;
  map.kind_ = Kind::kQuadraticGradient;
  map.n_ = A.cols();
  map.mat_ = std::move(A);
  map.vec_ = std::move(b);
  return map;
}

MonotoneMap MonotoneMap::black_box(Index n, Evaluator fn) {
  if (!fn) {
    throw Error(ErrorCode::kInvalidArgument, "black-box map without evaluator");
  }
  MonotoneMap map;
  map.kind_ = Kind::kBlackBox;
  map.n_ = n;
  map.fn_ = std::make_shared<const Evaluator>(std::move(fn));
  return map;
}

Vector MonotoneMap::operator()(const Vector& x) const {
  if (x.size() != n_) {
    throw Error(ErrorCode::kDimensionMismatch, "map evaluated at wrong size");
  }
  switch (kind_) {
    case Kind::kAffine:
      return mat_ * x + vec_;
    case Kind::kQuadraticGradient:
      return 2.0 * (mat_.transpose() * (mat_ * x - vec_));
    case Kind::kBlackBox: {
      Vector y = (*fn_)(x);
      if (y.size() != n_) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "black-box map returned a vector of the wrong size");
      }
      return y;
    }
  }
  return Vector();
}

std::optional<MonotoneMap::AffineForm> MonotoneMap::affine_form() const {
  switch (kind_) {
    case Kind::kAffine:
      return AffineForm{mat_, vec_};
    case Kind::kQuadraticGradient:
      return AffineForm{2.0 * mat_.transpose() * mat_,
                        -2.0 * mat_.transpose() * vec_};
    case Kind::kBlackBox:
      break;
  }
  return std::nullopt;
}

}  // namespace smpec
