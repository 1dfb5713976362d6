// Copyright 2026 The Impulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMPULSE_METRICS_H_
#define IMPULSE_METRICS_H_

#include "impulse/image.h"

namespace impulse {

// 10 log10(255^2 / MSE) in dB; +infinity for identical images. Throws
// InvalidArgument on a shape mismatch.
double psnr(const GrayImage& a, const GrayImage& b);

// 3x3 median filter. Border windows are clipped to the image and an even
// count takes the lower of the two middle values.
GrayImage median3x3(const GrayImage& img);

}  // namespace impulse

#endif  // IMPULSE_METRICS_H_
