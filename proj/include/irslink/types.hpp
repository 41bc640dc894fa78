// SPDX-License-Identifier: Apache-2.0
//
// irslink — uplink rate toolkit for reflector-aided mmWave links with coarse ADCs
// Copyright (C) 2026 irslink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#ifndef IRSLINK_TYPES_HPP
#define IRSLINK_TYPES_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace irslink
{

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Dense row-major complex matrix. Only small matrices appear here (the
// reflector-to-receiver channel and diagnostics), so no BLAS backing.
struct CMatrix
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    cvec data;

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    cplx &operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

} // namespace irslink

#endif
