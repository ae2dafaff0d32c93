#pragma once

#include <cstddef>
#include <cstdint>

namespace streetshift::kernels {

// Geometry of a 2D cross-correlation in CHW layout with a square kernel.
// ho = (hi + 2*pad - k) / stride + 1, likewise wo.
struct ConvGeom {
    int ci, hi, wi;
    int co, ho, wo;
    int k, stride, pad;
};

// Function table for the data-parallel inner loops. Two implementations
// exist: a scalar reference and an AVX2 variant selected at runtime.
//
// Bit-exactness contract between backends:
//   - elementwise ops (add, mul, affine, leaky_relu, leaky_relu_grad,
//     acc_affine2, axpy) and conv2d_fwd are bit-identical to the scalar
//     reference: each output element is accumulated in the same order with
//     the same mul/add sequence (no FMA contraction).
//   - reductions (sum, sum_abs, sum_sq, dot, conv2d_bwd_w) use partial
//     accumulators and may differ in the last ulps; equivalence tests bound
//     the relative error instead.
//   - integer kernels (ssd_u8, sad_u8, count_changed_u8) are exact.
struct Ops {
    const char* name;

    void (*add)(const float* a, const float* b, float* dst, std::size_t n);
    void (*mul)(const float* a, const float* b, float* dst, std::size_t n);
    // dst[i] = a * x[i] + b
    void (*affine)(const float* x, float a, float b, float* dst, std::size_t n);
    // dst[i] += a * x[i]
    void (*axpy)(float a, const float* x, float* dst, std::size_t n);
    // dst[i] += a[i] * b[i]
    void (*madd)(const float* a, const float* b, float* dst, std::size_t n);
    // dst[i] += a * p[i] + b * q[i] + c
    void (*acc_affine2)(const float* p, const float* q, float a, float b, float c,
                        float* dst, std::size_t n);
    void (*leaky_relu)(const float* x, float slope, float* dst, std::size_t n);
    // gx[i] += gy[i] * (x[i] > 0 ? 1 : slope)
    void (*leaky_relu_grad)(const float* x, const float* gy, float slope, float* gx,
                            std::size_t n);

    double (*sum)(const float* x, std::size_t n);
    double (*sum_abs)(const float* x, std::size_t n);
    double (*sum_sq)(const float* x, std::size_t n);
    double (*dot)(const float* a, const float* b, std::size_t n);

    // y[co,oy,ox] = bias[co] + sum_{ci,ky,kx} x[ci, oy*s+ky-p, ox*s+kx-p] * w[co,ci,ky,kx]
    // (out-of-range input treated as zero). bias may be null.
    void (*conv2d_fwd)(const float* x, const float* w, const float* bias, float* y,
                       const ConvGeom& g);
    // gw[co,ci,ky,kx] += sum_{oy,ox} gy[co,oy,ox] * x[ci, oy*s+ky-p, ox*s+kx-p]
    // gb[co] += sum_{oy,ox} gy[co,oy,ox]; gb may be null.
    void (*conv2d_bwd_w)(const float* x, const float* gy, float* gw, float* gb,
                         const ConvGeom& g);

    std::uint64_t (*ssd_u8)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
    std::uint64_t (*sad_u8)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
    // Pixels are interleaved RGB triples; a pixel counts as changed when
    // (dr*dr + dg*dg + db*db) > thr_sq.
    std::size_t (*count_changed_u8)(const std::uint8_t* a, const std::uint8_t* b,
                                    std::size_t pixels, double thr_sq);
};

enum class Backend { scalar, avx2 };

bool cpu_has_avx2();

// Active table, auto-detected on first use (AVX2 when available).
const Ops& ops();
Backend active_backend();

// Table for a specific backend; nullptr when unsupported on this CPU.
const Ops* ops_for(Backend b);

// Test hook. Throws Error if the backend is unavailable.
void force_backend(Backend b);

}  // namespace streetshift::kernels
